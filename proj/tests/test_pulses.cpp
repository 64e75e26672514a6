#include <cmath>
#include <complex>

#include "doctest.h"
#include "homsim/pulses.hpp"
#include "homsim/quadrature.hpp"

using namespace homsim;

namespace {
EnvelopePtr default_envelope() {
    static EnvelopePtr env = make_envelope(PulseParams{});
    return env;
}
}  // namespace

TEST_CASE("bessel_j matches frozen reference values") {
    struct Ref {
        int m;
        double x;
        double j;
    };
    // Reference values computed with an independent arbitrary-precision
    // implementation and frozen here.
    const Ref refs[] = {
        {0, 1.0, 0.76519768655796661},   {1, 1.0, 0.44005058574493355},
        {2, 5.0, 0.04656511627775229},   {5, 5.0, 0.26114054612017007},
        {0, 10.0, -0.24593576445134832}, {3, 2.5, 0.21660039103911358},
        {10, 12.0, 0.3004760352712692},  {7, 0.5, 1.2015867327763047e-08},
        {4, 40.0, -0.017856747643515084},
    };
    for (const Ref& r : refs)
        CHECK(bessel_j(r.m, r.x) == doctest::Approx(r.j).epsilon(1e-12));
    CHECK(bessel_j(64, 30.0) == doctest::Approx(4.175075352440462e-16).epsilon(1e-9));
    CHECK(bessel_j(0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel_j(3, 0.0) == 0.0);
}

TEST_CASE("bessel_j negative-order and recurrence identities") {
    for (int m = 1; m <= 6; ++m)
        for (double x : {0.3, 1.7, 8.0, 23.5})
            CHECK(bessel_j(-m, x) ==
                  doctest::Approx((m % 2 == 0 ? 1.0 : -1.0) * bessel_j(m, x)));
    // J_{m-1}(x) + J_{m+1}(x) = (2m/x) J_m(x)
    for (int m = 1; m <= 8; ++m)
        for (double x : {0.5, 2.0, 7.3, 15.0}) {
            const double lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
            const double rhs = 2.0 * m / x * bessel_j(m, x);
            CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(rhs)));
        }
}

TEST_CASE("envelope normalization is unit and idempotent") {
    BesselGaussEnvelope env{PulseParams{}};
    const double scale = env.normalize();
    CHECK(scale > 0.0);
    CHECK(env.normalize() == doctest::Approx(1.0));  // idempotent

    // Re-integrate |eta|^2 with an independent grid.
    const auto kz = gauss_legendre(300, env.kz_lo(), env.kz_hi());
    const auto rt = gauss_legendre(300, env.rho_t_lo(), env.rho_t_hi());
    double total = 0.0;
    for (size_t i = 0; i < kz.nodes.size(); ++i)
        for (size_t j = 0; j < rt.nodes.size(); ++j) {
            const double a = env.spectral_amplitude(kz.nodes[i], rt.nodes[j]);
            total += kz.weights[i] * rt.weights[j] * rt.nodes[j] * a * a;
        }
    CHECK(kTwoPi * total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("unnormalized envelope refuses to evaluate") {
    BesselGaussEnvelope env{PulseParams{}};
    CHECK_THROWS_WITH_AS(env.spectral_amplitude(env.k_zc(), env.rho_tc()),
                         "unnormalized envelope", std::logic_error);
}

TEST_CASE("cone leak is rejected for wide transverse spectra") {
    PulseParams p;
    p.sigma_rho = 1e-7;  // sigma_rho ~ lambda/5: Gaussian mass leaks below 0
    BesselGaussEnvelope env{p};
    CHECK_THROWS_WITH_AS(env.normalize(), "cone approximation invalid",
                         std::domain_error);
}

TEST_CASE("longitudinal visibility has Gaussian magnitude and unit peak") {
    const auto& env = *default_envelope();
    const double sz = env.params().sigma_z;
    CHECK(std::abs(longitudinal_visibility(env, 0.0)) == doctest::Approx(1.0));
    for (double u : {0.5, 1.0, 2.0, 4.0}) {
        const double expected = std::exp(-u * u / 8.0);
        CHECK(std::abs(longitudinal_visibility(env, u * sz)) ==
              doctest::Approx(expected).epsilon(1e-9));
        // Even in z0.
        CHECK(std::abs(longitudinal_visibility(env, -u * sz)) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("closed-form wave packet agrees with the quadrature route") {
    const auto& env = *default_envelope();
    const double rho1 = 1.0 / env.rho_tc();
    for (int m : {0, 1, 3}) {
        const auto approx = wavepacket_approx(env, m, rho1, 0.0, 0.0);
        const auto brute = wavepacket(env, m, rho1, 0.0, 0.0);
        CHECK(std::abs(approx - brute) <= 1e-2 * std::abs(brute));
    }
    // At the pulse center with the default (narrowband) parameters the two
    // routes agree far better than the documented 1% envelope; the residual
    // is the quadrature discretization of the reference itself.
    const auto a0 = wavepacket_approx(env, 0, rho1, 0.0, 0.0);
    const auto b0 = wavepacket(env, 0, rho1, 0.0, 0.0);
    CHECK(std::abs(a0 - b0) <= 1e-5 * std::abs(b0));
}

TEST_CASE("radial profiles are normalized and the grid converges") {
    auto env = default_envelope();
    for (int m : {0, 1, 4}) {
        const auto prof = get_radial_profile(env, m);
        CHECK(radial_cross_overlap(*prof, *prof) == doctest::Approx(1.0).epsilon(1e-9));
    }
    // Halving the panel width (doubling the order) leaves overlaps unchanged.
    const auto a16 = get_radial_profile(env, 0, 16);
    const auto b16 = get_radial_profile(env, 2, 16);
    const auto a32 = get_radial_profile(env, 0, 32);
    const auto b32 = get_radial_profile(env, 2, 32);
    CHECK(radial_cross_overlap(*a16, *b16) ==
          doctest::Approx(radial_cross_overlap(*a32, *b32)).epsilon(1e-6));
}

TEST_CASE("radial overlap rejects mismatched envelopes") {
    auto env1 = default_envelope();
    PulseParams p;
    p.sigma_rho = 2e-4;
    auto env2 = make_envelope(p);
    const auto w1 = get_radial_profile(env1, 0);
    const auto w2 = get_radial_profile(env2, 0);
    CHECK_THROWS_AS(radial_cross_overlap(*w1, *w2), std::logic_error);
}

TEST_CASE("quadrature rules integrate polynomials exactly") {
    const auto rule = gauss_legendre(8, -1.0, 3.0);
    double s3 = 0.0, s0 = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        s0 += rule.weights[i];
        s3 += rule.weights[i] * std::pow(rule.nodes[i], 3);
    }
    CHECK(s0 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(s3 == doctest::Approx(20.0).epsilon(1e-13));  // x^4/4 from -1 to 3

    // Composite rule convergence on an oscillatory integrand:
    // integral of cos(20x) over [0, pi] = 0.
    auto osc = [](const QuadratureRule& r) {
        double s = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::cos(20.0 * r.nodes[i]);
        return s;
    };
    const double coarse = osc(composite_gauss_legendre(8, 16, 0.0, kPi));
    const double fine = osc(composite_gauss_legendre(8, 32, 0.0, kPi));
    CHECK(std::fabs(coarse) <= 1e-9);
    CHECK(std::fabs(fine - coarse) <= 1e-6);
}

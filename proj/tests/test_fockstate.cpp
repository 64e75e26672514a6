#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "homsim/fockstate.hpp"
#include "oracles.hpp"

using namespace homsim;
using cplx = std::complex<double>;

namespace {
EnvelopePtr default_envelope() {
    static EnvelopePtr env = make_envelope(PulseParams{});
    return env;
}

SinglePhotonMode mode(Port port, Pol pol, int oam, MaskPtr mask = nullptr,
                      double delay = 0.0) {
    return {port, pol, default_envelope(), oam, std::move(mask), delay};
}
}  // namespace

TEST_CASE("polarization projection amplitudes") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(projection_amplitude(PolProjection::lin(Pol::H), Pol::H) == cplx{1.0, 0.0});
    CHECK(projection_amplitude(PolProjection::lin(Pol::H), Pol::V) == cplx{0.0, 0.0});
    CHECK(std::abs(projection_amplitude(PolProjection::left(), Pol::H) - cplx{s, 0.0}) <=
          1e-15);
    CHECK(std::abs(projection_amplitude(PolProjection::left(), Pol::V) - cplx{0.0, s}) <=
          1e-15);
    CHECK(std::abs(projection_amplitude(PolProjection::right(), Pol::V) - cplx{0.0, -s}) <=
          1e-15);
    CHECK_THROWS_AS(projection_amplitude(PolProjection::sum(), Pol::H),
                    std::logic_error);
}

TEST_CASE("permanent agrees with the Ryser oracle") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n));
            for (auto& row : m)
                for (auto& e : row) e = cplx{u(rng), u(rng)};
            const cplx lib = permanent(m);
            const cplx ref = oracles::ryser_permanent(m);
            CHECK(std::abs(lib - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        }
    CHECK(permanent({}) == cplx{1.0, 0.0});
}

TEST_CASE("mode overlaps: selection rules and delay factor") {
    EvalContext ctx;
    // Port and polarization mismatches vanish identically.
    CHECK(mode_overlap(mode(Port::A, Pol::H, 0), mode(Port::B, Pol::H, 0), ctx) ==
          cplx{0.0, 0.0});
    CHECK(mode_overlap(mode(Port::A, Pol::H, 0), mode(Port::A, Pol::V, 0), ctx) ==
          cplx{0.0, 0.0});
    // Orthogonal OAM charges.
    CHECK(std::abs(mode_overlap(mode(Port::A, Pol::H, 1), mode(Port::A, Pol::H, 2),
                                ctx)) <= 1e-12);
    // Unit self-overlap.
    CHECK(std::abs(mode_overlap(mode(Port::A, Pol::H, 3), mode(Port::A, Pol::H, 3),
                                ctx) -
                   1.0) <= 1e-9);
    // Delay difference enters through the longitudinal visibility.
    const double sz = default_envelope()->params().sigma_z;
    const auto delayed = mode_overlap(mode(Port::A, Pol::H, 0, nullptr, 2.0 * sz),
                                      mode(Port::A, Pol::H, 0), ctx);
    CHECK(std::abs(delayed) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
    // Distinct envelopes are a usage error, not a zero.
    auto other = make_envelope(PulseParams{});
    SinglePhotonMode foreign{Port::A, Pol::H, other, 0, nullptr, 0.0};
    CHECK_THROWS_AS(mode_overlap(mode(Port::A, Pol::H, 0), foreign, ctx),
                    std::logic_error);
}

TEST_CASE("masked overlaps: closed-form angular route equals forced quadrature") {
    EvalContext fast;
    EvalContext forced;
    forced.quad().force_angular_quadrature = true;
    struct Case {
        SinglePhotonMode a, b;
    };
    const Case cases[] = {
        {mode(Port::A, Pol::H, 0, sector_a_mask(2)),
         mode(Port::A, Pol::H, 0, sector_b_mask(2, 0.3))},
        {mode(Port::A, Pol::H, 1, helical_mask(1)),
         mode(Port::A, Pol::H, 0, sector_a_mask(1))},
        {mode(Port::A, Pol::H, -2, nullptr), mode(Port::A, Pol::H, 0, helical_mask(-2))},
    };
    for (const auto& c : cases) {
        const auto exact = mode_overlap(c.a, c.b, fast);
        const auto quad = mode_overlap(c.a, c.b, forced);
        CHECK(std::abs(exact - quad) <= 1e-9);
    }
    CHECK_FALSE(fast.used_slow_path());
}

TEST_CASE("inner products are Hermitian and compaction preserves them") {
    EvalContext ctx;
    PhotonState s1 = make_state({{cplx{0.6, 0.2},
                                  {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::V, -1)}},
                                 {cplx{0.0, -0.7},
                                  {mode(Port::A, Pol::V, 0), mode(Port::B, Pol::H, 2)}}});
    PhotonState s2 = make_state({{cplx{1.0, 0.0},
                                  {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::V, -1)}},
                                 {cplx{0.3, 0.3},
                                  {mode(Port::B, Pol::H, 2), mode(Port::A, Pol::V, 0)}}});
    const cplx fwd = inner_product(s1, s2, ctx);
    const cplx bwd = inner_product(s2, s1, ctx);
    CHECK(std::abs(fwd - std::conj(bwd)) <= 1e-12);

    // Duplicated monomials merge without changing the physics.
    PhotonState dup = s1;
    for (auto& t : s1.terms) {
        t.coeff *= 0.5;
        dup.terms.push_back(t);
    }
    const PhotonState merged = compacted(dup);
    CHECK(merged.terms.size() == s1.terms.size());
    CHECK(std::abs(inner_product(merged, s2, ctx) - fwd * 1.5) <= 1e-12);
}

TEST_CASE("normalization and its failure modes") {
    EvalContext ctx;
    PhotonState s = make_state(
        {{cplx{2.0, 1.0}, {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::H, -1)}}});
    const PhotonState n = normalized(s, ctx);
    CHECK(std::abs(inner_product(n, n, ctx) - 1.0) <= 1e-9);

    PhotonState null_state = make_state(
        {{cplx{1.0, 0.0}, {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::H, -1)}},
         {cplx{-1.0, 0.0}, {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::H, -1)}}});
    CHECK_THROWS_WITH_AS(normalized(null_state, ctx), "null state", std::domain_error);

    CHECK_THROWS_AS(make_state({{cplx{1.0, 0.0}, {mode(Port::A, Pol::H, 0)}},
                                {cplx{1.0, 0.0},
                                 {mode(Port::A, Pol::H, 0), mode(Port::B, Pol::H, 0)}}}),
                    std::invalid_argument);
}

TEST_CASE("correlate: detector count, sum expansion, densities") {
    EvalContext ctx;
    PhotonState s = normalized(
        make_state(
            {{cplx{1.0, 0.0}, {mode(Port::A, Pol::H, 1), mode(Port::B, Pol::V, -1)}}}),
        ctx);
    const TransversePoint p{2e-6, 1e-6};
    CHECK_THROWS_AS(
        correlate(s, {{Port::A, PolProjection::sum(), p},
                      {Port::A, PolProjection::sum(), p},
                      {Port::B, PolProjection::sum(), p}},
                  ctx),
        std::invalid_argument);

    // Sum-over-lambda equals the sum of the two linear projections here.
    const double both = correlate(s, {{Port::A, PolProjection::sum(), p}}, ctx);
    const double h = correlate(s, {{Port::A, PolProjection::lin(Pol::H), p}}, ctx);
    const double v = correlate(s, {{Port::A, PolProjection::lin(Pol::V), p}}, ctx);
    CHECK(both == doctest::Approx(h + v).epsilon(1e-12));
    CHECK(number_density(s, Port::A, p, ctx) == doctest::Approx(both).epsilon(1e-12));

    // Total photon count on port A: integrate the density over the plane.
    // (Spot check: density is nonnegative and azimuthally symmetric.)
    const double d0 = number_density(s, Port::A, {2e-6, 1e-6}, ctx);
    const double d1 = number_density(
        s, Port::A, {std::hypot(2e-6, 1e-6), 0.0}, ctx);
    CHECK(d0 >= 0.0);
    CHECK(d0 == doctest::Approx(d1).epsilon(1e-9));
}

TEST_CASE("evaluation context caches deterministically") {
    EvalContext ctx;
    const auto a = mode(Port::A, Pol::H, 1);
    const auto b = mode(Port::A, Pol::H, 1, sector_b_mask(3, 0.1));
    const cplx first = mode_overlap(a, b, ctx);
    const cplx second = mode_overlap(a, b, ctx);  // cache hit
    CHECK(first == second);
    // The angular factor against a flat mode is m*phi0/pi, so this pair pins
    // the value, and a fresh instance with different content must not alias.
    CHECK(std::abs(first) == doctest::Approx(3.0 * 0.1 / kPi).epsilon(1e-9));
    const auto b2 = mode(Port::A, Pol::H, 1, sector_b_mask(3, 0.25));
    CHECK(std::abs(mode_overlap(a, b2, ctx)) ==
          doctest::Approx(3.0 * 0.25 / kPi).epsilon(1e-9));
}

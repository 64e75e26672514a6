#include "homsim/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {
namespace {

using cplx = std::complex<double>;

constexpr double kBesselFirstZero = 2.404825557695773;

double mask_at(const MaskPtr& m, const TransversePoint& p) { return eval_mask(m, p); }

DetectorSpec det(Port port, PolProjection proj, const TransversePoint& p) {
    DetectorSpec d;
    d.port = port;
    d.proj = proj;
    d.point = p;
    return d;
}

SinglePhotonMode mode(Port port, Pol pol, const EnvelopePtr& env, MaskPtr mask = nullptr) {
    SinglePhotonMode m;
    m.port = port;
    m.pol = pol;
    m.envelope = env;
    m.mask = std::move(mask);
    return m;
}

// Expands a product of two-way factors into monomials.
std::vector<Monomial> expand_product(
    cplx scale, const std::vector<std::array<std::pair<cplx, SinglePhotonMode>, 2>>& factors) {
    std::vector<Monomial> partial{Monomial{scale, {}}};
    for (const auto& f : factors) {
        std::vector<Monomial> next;
        next.reserve(partial.size() * 2);
        for (const Monomial& p : partial) {
            for (const auto& [amp, m] : f) {
                Monomial grown = p;
                grown.coeff *= amp;
                grown.modes.push_back(m);
                next.push_back(std::move(grown));
            }
        }
        partial = std::move(next);
    }
    return partial;
}

}  // namespace

double default_map_extent(const BesselGaussEnvelope& env) {
    return 4.0 * kBesselFirstZero / env.rho_tc();
}

double g2_hom_value(const MaskPtr& mask_a, const MaskPtr& mask_b, const TransversePoint& r,
                    const TransversePoint& r_prime) {
    const double arg = mask_at(mask_a, r) - mask_at(mask_b, r.reflected()) +
                       mask_at(mask_b, r_prime) - mask_at(mask_a, r_prime.reflected());
    return 0.5 * (1.0 - std::cos(arg));
}

double g2_dove(int m, double phi0, double phi, double phi_prime) {
    return 0.5 * (1.0 - std::cos(2.0 * m * (phi + phi_prime))) *
           (1.0 - std::cos(4.0 * m * phi0));
}

double g2_entangled_value(const MaskPtr& mask_a, const MaskPtr& mask_b,
                          const TransversePoint& r, const TransversePoint& r_prime) {
    return 1.0 + std::cos(2.0 * mask_at(mask_a, r) + 2.0 * mask_at(mask_b, r_prime));
}

double four_photon_correlation(const std::vector<Port>& ports,
                               const std::vector<TransversePoint>& points,
                               const EnvelopePtr& env, const EvalContext& ctx) {
    if (ports.size() != points.size() || ports.size() < 2 || ports.size() > 4)
        throw std::invalid_argument("invalid port multiset");
    const auto profile = get_radial_profile(env, 0, ctx.quad().radial_panel_order);
    double dens = 1.0;
    for (const TransversePoint& p : points) {
        const double w = profile->value(p.rho());
        dens *= w * w;
    }
    auto d = [](Port a, Port b) { return a == b ? 1.0 : 0.0; };
    auto distinct = [](const std::vector<Port>& ps) {
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                if (ps[i] == ps[j]) return 0.0;
        return 1.0;
    };
    if (ports.size() == 2) {
        const Port i = ports[0], j = ports[1];
        const double bracket = d(i, j) + d(i, Port::A) * d(j, Port::B) +
                               d(i, Port::C) * d(j, Port::D) +
                               2.0 * (d(i, Port::A) + d(i, Port::B)) *
                                   (d(j, Port::C) + d(j, Port::D));
        return 0.5 * dens * bracket;
    }
    if (ports.size() == 3) {
        const Port i = ports[0], j = ports[1], k = ports[2];
        const double excl = 1.0 - d(j, Port::A) * d(k, Port::B) -
                            d(j, Port::B) * d(k, Port::A) - d(j, Port::C) * d(k, Port::D) -
                            d(j, Port::D) * d(k, Port::C);
        const double bracket = d(i, j) * (1.0 - d(j, k)) * excl + distinct(ports);
        return 0.5 * dens * bracket;
    }
    return 0.25 * dens * distinct(ports);
}

double g4_value(const std::array<MaskPtr, 4>& masks,
                const std::array<TransversePoint, 4>& points, bool conj_on_v) {
    double arg = mask_at(masks[0], points[0]) + mask_at(masks[1], points[1]) -
                 mask_at(masks[2], points[2]) - mask_at(masks[3], points[3]);
    if (conj_on_v) arg *= 2.0;
    return 0.25 * (1.0 + std::cos(arg));
}

PhotonState masked_product_pair(const EnvelopePtr& env, const MaskPtr& mask_a,
                                const MaskPtr& mask_b) {
    return make_state({Monomial{1.0,
                                {mode(Port::A, Pol::H, env, mask_a),
                                 mode(Port::B, Pol::H, env, mask_b)}}});
}

PhotonState entangled_masked_pair(const EnvelopePtr& env, const MaskPtr& mask_a,
                                  const MaskPtr& mask_b) {
    const double norm = 1.0 / std::sqrt(2.0);
    return make_state(
        {Monomial{norm,
                  {mode(Port::A, Pol::H, env, mask_a), mode(Port::B, Pol::V, env, mask_b)}},
         Monomial{norm,
                  {mode(Port::A, Pol::V, env, negate_mask(mask_a)),
                   mode(Port::B, Pol::H, env, negate_mask(mask_b))}}});
}

PhotonState four_photon_state(const EnvelopePtr& env, const std::array<MaskPtr, 4>& masks,
                              bool conj_on_v) {
    const cplx i{0.0, 1.0};
    const cplx scale = 1.0 / (8.0 * std::sqrt(2.0));
    const MaskPtr& ma = masks[0];
    const MaskPtr& mb = masks[1];
    const MaskPtr& mc = masks[2];
    const MaskPtr& md = masks[3];
    auto vmask = [&](const MaskPtr& m) -> MaskPtr {
        return conj_on_v ? negate_mask(m) : nullptr;
    };

    // First group: the A/B photons are H (masked), the C/D photons are V.
    const std::array<std::pair<cplx, SinglePhotonMode>, 2> in_h = {
        std::make_pair(i, mode(Port::A, Pol::H, env, ma)),
        std::make_pair(cplx{1.0}, mode(Port::B, Pol::H, env, mb))};
    const std::array<std::pair<cplx, SinglePhotonMode>, 2> out_v = {
        std::make_pair(cplx{1.0}, mode(Port::C, Pol::V, env, vmask(mc))),
        std::make_pair(i, mode(Port::D, Pol::V, env, vmask(md)))};
    // Swapped group: A/B photons are V, C/D photons are H (masked).
    const std::array<std::pair<cplx, SinglePhotonMode>, 2> in_v = {
        std::make_pair(i, mode(Port::A, Pol::V, env, vmask(ma))),
        std::make_pair(cplx{1.0}, mode(Port::B, Pol::V, env, vmask(mb)))};
    const std::array<std::pair<cplx, SinglePhotonMode>, 2> out_h = {
        std::make_pair(cplx{1.0}, mode(Port::C, Pol::H, env, mc)),
        std::make_pair(i, mode(Port::D, Pol::H, env, md))};

    std::vector<Monomial> terms = expand_product(scale, {in_h, in_h, out_v, out_v});
    std::vector<Monomial> swapped = expand_product(scale, {in_v, in_v, out_h, out_h});
    terms.insert(terms.end(), swapped.begin(), swapped.end());
    return compacted(make_state(std::move(terms)));
}

double g2_engine(const PhotonState& state, Port port1, const TransversePoint& r1, Port port2,
                 const TransversePoint& r2, const EvalContext& ctx) {
    const double num = correlate(state, {det(port1, PolProjection::sum(), r1),
                                         det(port2, PolProjection::sum(), r2)},
                                 ctx);
    const double den = number_density(state, port1, r1, ctx) *
                       number_density(state, port2, r2, ctx);
    if (den < 1e-300) throw std::domain_error("undefined ratio");
    return num / den;
}

double g2_engine_circular(const PhotonState& state, Port port1, const TransversePoint& r1,
                          Port port2, const TransversePoint& r2, const EvalContext& ctx) {
    const double num = correlate(state, {det(port1, PolProjection::left(), r1),
                                         det(port2, PolProjection::left(), r2)},
                                 ctx);
    const double den = correlate(state, {det(port1, PolProjection::left(), r1)}, ctx) *
                       correlate(state, {det(port2, PolProjection::left(), r2)}, ctx);
    if (den < 1e-300) throw std::domain_error("undefined ratio");
    return num / den;
}

double g4_engine(const PhotonState& state, const std::array<TransversePoint, 4>& points,
                 const EvalContext& ctx) {
    const Port ports[4] = {Port::A, Port::B, Port::C, Port::D};
    std::vector<DetectorSpec> dets;
    double den = 1.0;
    for (int k = 0; k < 4; ++k) {
        dets.push_back(det(ports[k], PolProjection::left(), points[k]));
        den *= correlate(state, {dets.back()}, ctx);
    }
    if (den < 1e-300) throw std::domain_error("undefined ratio");
    return correlate(state, dets, ctx) / den;
}

CoherenceMap density_map(const PhotonState& state, Port port, const MapGrid& grid,
                         const EvalContext& ctx) {
    CoherenceMap map;
    map.grid = grid;
    map.values.reserve(static_cast<size_t>(grid.n) * grid.n);
    double peak = 0.0;
    for (int row = 0; row < grid.n; ++row) {
        for (int col = 0; col < grid.n; ++col) {
            const double v = number_density(state, port, grid.point(row, col), ctx);
            peak = std::max(peak, v);
            map.values.push_back(v);
        }
    }
    map.theoretical_max = peak;
    map.note = "photon number density";
    return map;
}

CoherenceMap g2_hom_map(const EnvelopePtr& env, const MaskPtr& mask_a, const MaskPtr& mask_b,
                        const MapGrid& grid, const TransversePoint& r_prime) {
    const auto profile = get_radial_profile(env, 0);
    const double w = profile->value(r_prime.rho());
    if (w * w < 1e-30) throw std::domain_error("undefined ratio");
    CoherenceMap map;
    map.grid = grid;
    map.theoretical_max = 1.0;
    map.note = "two-port g2 after HOM (equal pulse shapes)";
    map.values.reserve(static_cast<size_t>(grid.n) * grid.n);
    for (int row = 0; row < grid.n; ++row)
        for (int col = 0; col < grid.n; ++col)
            map.values.push_back(g2_hom_value(mask_a, mask_b, grid.point(row, col), r_prime));
    return map;
}

CoherenceMap g2_sector_map(int m, double phi0, const MapGrid& grid, double phi_prime) {
    const MaskPtr a = sector_a_mask(m);
    const MaskPtr b = sector_b_mask(m, phi0);
    const TransversePoint r_prime{std::cos(phi_prime), std::sin(phi_prime)};
    CoherenceMap map;
    map.grid = grid;
    map.theoretical_max = 1.0;
    map.note = "two-port g2, sector masks";
    map.values.reserve(static_cast<size_t>(grid.n) * grid.n);
    for (int row = 0; row < grid.n; ++row)
        for (int col = 0; col < grid.n; ++col)
            map.values.push_back(g2_hom_value(a, b, grid.point(row, col), r_prime));
    return map;
}

CoherenceMap g2_entangled_map(const EnvelopePtr& env, const MaskPtr& mask_a,
                              const MaskPtr& mask_b, const MapGrid& grid,
                              const TransversePoint& r_prime) {
    const auto profile = get_radial_profile(env, 0);
    const double w = profile->value(r_prime.rho());
    if (w * w < 1e-30) throw std::domain_error("undefined ratio");
    CoherenceMap map;
    map.grid = grid;
    map.theoretical_max = 2.0;
    map.note = "entangled-pair g2 without HOM";
    map.values.reserve(static_cast<size_t>(grid.n) * grid.n);
    for (int row = 0; row < grid.n; ++row)
        for (int col = 0; col < grid.n; ++col)
            map.values.push_back(
                g2_entangled_value(mask_a, mask_b, grid.point(row, col), r_prime));
    return map;
}

CoherenceMap g4_map(const std::array<MaskPtr, 4>& masks, const MapGrid& grid,
                    const std::array<TransversePoint, 3>& fixed, bool conj_on_v) {
    CoherenceMap map;
    map.grid = grid;
    map.theoretical_max = 0.5;
    map.note = "four-port g4, left-circular projections";
    map.values.reserve(static_cast<size_t>(grid.n) * grid.n);
    for (int row = 0; row < grid.n; ++row)
        for (int col = 0; col < grid.n; ++col)
            map.values.push_back(g4_value(
                masks, {grid.point(row, col), fixed[0], fixed[1], fixed[2]}, conj_on_v));
    return map;
}

}  // namespace homsim

#include "homsim/interference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homsim {
namespace {

SinglePhotonMode make_mode(Port port, const EnvelopePtr& env, int oam,
                           Pol pol = Pol::H, MaskPtr mask = nullptr) {
    SinglePhotonMode m;
    m.port = port;
    m.pol = pol;
    m.envelope = env;
    m.oam = oam;
    m.mask = std::move(mask);
    return m;
}

Monomial pair_term(std::complex<double> coeff, SinglePhotonMode a, SinglePhotonMode b) {
    return Monomial{coeff, {std::move(a), std::move(b)}};
}

}  // namespace

PhotonState build_scenario(const ScenarioSpec& spec) {
    if (!spec.envelope) throw std::invalid_argument("scenario needs an envelope");
    const EnvelopePtr& env = spec.envelope;
    const int m = spec.m;

    switch (spec.kind) {
        case ScenarioKind::ProductOppositeOam:
            return make_state({pair_term(1.0, make_mode(Port::A, env, m),
                                         make_mode(Port::B, env, -m))});
        case ScenarioKind::ProductSameOam:
            return make_state({pair_term(1.0, make_mode(Port::A, env, m),
                                         make_mode(Port::B, env, m))});
        case ScenarioKind::EntangledSymSameOam: {
            const double norm = 1.0 / std::sqrt(2.0 * (1.0 + (m == 0 ? 1.0 : 0.0)));
            return make_state(
                {pair_term(norm, make_mode(Port::A, env, m), make_mode(Port::B, env, m)),
                 pair_term(norm, make_mode(Port::A, env, -m), make_mode(Port::B, env, -m))});
        }
        case ScenarioKind::EntangledAntisymSameOam: {
            if (m == 0) throw std::domain_error("null state");
            const double norm = 1.0 / std::sqrt(2.0);
            return make_state(
                {pair_term(norm, make_mode(Port::A, env, m), make_mode(Port::B, env, m)),
                 pair_term(-norm, make_mode(Port::A, env, -m), make_mode(Port::B, env, -m))});
        }
        case ScenarioKind::EntangledOppositeOamPlus: {
            const double norm = 1.0 / std::sqrt(2.0 * (1.0 + (m == 0 ? 1.0 : 0.0)));
            return make_state(
                {pair_term(norm, make_mode(Port::A, env, m), make_mode(Port::B, env, -m)),
                 pair_term(norm, make_mode(Port::A, env, -m), make_mode(Port::B, env, m))});
        }
        case ScenarioKind::EntangledOppositeOamMinus: {
            if (m == 0) throw std::domain_error("null state");
            const double norm = 1.0 / std::sqrt(2.0);
            return make_state(
                {pair_term(norm, make_mode(Port::A, env, m), make_mode(Port::B, env, -m)),
                 pair_term(-norm, make_mode(Port::A, env, -m), make_mode(Port::B, env, m))});
        }
        case ScenarioKind::Polarization:
            // Exchange-reflection-symmetric spatial part; the mixing angle
            // lives entirely in the polarization indices.
            return make_state({pair_term(std::cos(spec.theta),
                                         make_mode(Port::A, env, 0, Pol::H),
                                         make_mode(Port::B, env, 0, Pol::V)),
                               pair_term(std::sin(spec.theta),
                                         make_mode(Port::A, env, 0, Pol::V),
                                         make_mode(Port::B, env, 0, Pol::H))});
        case ScenarioKind::SectorMasked:
            return make_state({pair_term(
                1.0, make_mode(Port::A, env, 0, Pol::H, sector_a_mask(m)),
                make_mode(Port::B, env, 0, Pol::H, sector_b_mask(m, spec.phi0)))});
        case ScenarioKind::DovePrism: {
            ScenarioSpec base = spec;
            base.kind = ScenarioKind::EntangledSymSameOam;
            return dove_prism(build_scenario(base), Port::A, spec.phi0);
        }
        case ScenarioKind::ImageMasked:
            return make_state({pair_term(1.0,
                                         make_mode(Port::A, env, 0, Pol::H, spec.mask_a),
                                         make_mode(Port::B, env, 0, Pol::H, spec.mask_b))});
    }
    throw std::invalid_argument("unknown scenario");
}

double coincidence_probability(const PhotonState& state, double z0, const EvalContext& ctx) {
    const PhotonState delayed = apply_delay(state, Port::A, z0);
    const PhotonState out = beam_splitter(delayed);
    const double p = sector_probability(out, {Port::C, Port::D}, ctx);
    return std::clamp(p, 0.0, 1.0);
}

ScanResult scan(const ScenarioSpec& spec, const std::vector<double>& z0_grid,
                const EvalContext& ctx) {
    const PhotonState state = build_scenario(spec);
    ScanResult result;
    result.spec = spec;
    result.z0 = z0_grid;
    result.p.reserve(z0_grid.size());
    for (double z0 : z0_grid) result.p.push_back(coincidence_probability(state, z0, ctx));
    return result;
}

double coincidence_sector(int m, double phi0) {
    if (m < 1) throw std::invalid_argument("sector scenario requires m >= 1");
    if (phi0 < 0.0 || phi0 >= kPi / m)
        throw std::invalid_argument("sector offset must lie in [0, pi/m)");
    const double u = 1.0 - m * phi0 / kPi;
    return 0.5 * (1.0 - u * u);
}

std::string scenario_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::ProductOppositeOam: return "product-opposite-oam";
        case ScenarioKind::ProductSameOam: return "product-same-oam";
        case ScenarioKind::EntangledSymSameOam: return "entangled-sym-same-oam";
        case ScenarioKind::EntangledAntisymSameOam: return "entangled-antisym-same-oam";
        case ScenarioKind::EntangledOppositeOamPlus: return "entangled-opposite-oam-plus";
        case ScenarioKind::EntangledOppositeOamMinus: return "entangled-opposite-oam-minus";
        case ScenarioKind::Polarization: return "polarization";
        case ScenarioKind::SectorMasked: return "sector-masked";
        case ScenarioKind::DovePrism: return "dove-prism";
        case ScenarioKind::ImageMasked: return "image-masked";
    }
    return "unknown";
}

}  // namespace homsim

#pragma once

#include <string>
#include <vector>

#include "homsim/optics.hpp"

namespace homsim {

enum class ScenarioKind {
    ProductOppositeOam,        // a_{+m} on A, a_{-m} on B (product pair)
    ProductSameOam,            // a_{+m} on both paths
    EntangledSymSameOam,       // (+m,+m) + (-m,-m)
    EntangledAntisymSameOam,   // (+m,+m) - (-m,-m)
    EntangledOppositeOamPlus,  // (+m,-m) + (-m,+m)
    EntangledOppositeOamMinus, // (+m,-m) - (-m,+m)
    Polarization,              // cos(theta)|HV> + sin(theta)|VH>
    SectorMasked,              // product pair with the two sector masks
    DovePrism,                 // symmetric entangled pair + Dove prism at phi0
    ImageMasked,               // product pair with caller-supplied masks
};

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::ProductOppositeOam;
    int m = 1;
    double theta = 0.0;  // polarization mixing angle (rad)
    double phi0 = 0.0;   // sector offset / Dove prism angle (rad)
    EnvelopePtr envelope;
    MaskPtr mask_a;      // ImageMasked only
    MaskPtr mask_b;
};

struct ScanResult {
    std::vector<double> z0;  // meters
    std::vector<double> p;
    ScenarioSpec spec;
};

/// Normalized two-photon input state on ports A and B for the given
/// scenario. The antisymmetric combinations vanish identically at m = 0 and
/// are reported as "null state".
PhotonState build_scenario(const ScenarioSpec& spec);

/// P_cd(z0): delay path A by z0, pass both photons through the 50:50
/// splitter, and take the squared norm of the coincidence (one photon per
/// output port) sector.
double coincidence_probability(const PhotonState& state, double z0, const EvalContext& ctx);

ScanResult scan(const ScenarioSpec& spec, const std::vector<double>& z0_grid,
                const EvalContext& ctx);

/// Closed-form zero-delay coincidence of the two sector masks:
/// (1/2)[1 - (1 - m phi0 / pi)^2], valid for phi0 in [0, pi/m).
double coincidence_sector(int m, double phi0);

std::string scenario_name(ScenarioKind kind);

}  // namespace homsim

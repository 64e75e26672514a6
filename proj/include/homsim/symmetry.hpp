#pragma once

#include <string>
#include <vector>

#include "homsim/fockstate.hpp"

namespace homsim {

enum class HomPrediction { Dip, Peak, None };

/// Outcome of the exchange-reflection test: s = +1 (symmetric), -1
/// (antisymmetric) or 0 (neither), with the relative residual norms of the
/// symmetric and antisymmetric combinations.
struct SymmetryReport {
    int s = 0;
    double residual_plus = 0.0;
    double residual_minus = 0.0;
    HomPrediction prediction = HomPrediction::None;
};

struct ClassifyOptions {
    int grid = 12;          // samples per axis per photon; must be >= 8
    double extent = 0.0;    // half-width of the sample square (m); 0 = auto
    double accept = 1e-6;   // residual at or below this counts as symmetric
    double reject = 1e-3;   // the opposite residual must exceed this
};

/// Samples the two-photon amplitude and its exchange-reflected partner
/// (polarization indices swapped, points swapped and mirrored) on a grid
/// and reports the symmetry index. The state must have exactly one photon
/// on port A and one on port B per monomial.
SymmetryReport classify(const PhotonState& state, const ClassifyOptions& opts,
                        const EvalContext& ctx);

HomPrediction predict_hom(const SymmetryReport& report);

std::string prediction_name(HomPrediction p);

/// One catalogued polarization-OAM hyperentangled Bell state with the
/// expected symmetry index and interference outcome.
struct HyperBellState {
    std::string pol_label;  // phi+, phi-, psi+, psi-
    std::string oam_label;  // mu+, mu-, nu+, nu-
    PhotonState state;
    int expected_s = 0;
    HomPrediction expected = HomPrediction::None;
};

/// All 16 tensor products of the polarization Bell states with the OAM Bell
/// states mu+- = (|+m,-m> +- |-m,+m>)/sqrt(2), nu+- = (|+m,+m> +- |-m,-m>)/
/// sqrt(2), photon 1 on port A, photon 2 on port B.
std::vector<HyperBellState> bell_catalog(const EnvelopePtr& env, int m = 1);

}  // namespace homsim

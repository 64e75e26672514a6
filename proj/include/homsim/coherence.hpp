#pragma once

#include <array>
#include <string>
#include <vector>

#include "homsim/optics.hpp"

namespace homsim {

/// Square transverse sample grid, centered on the axis.
struct MapGrid {
    int n = 256;
    double extent = 0.0;  // half-width (m)

    TransversePoint point(int row, int col) const {
        const double step = 2.0 * extent / n;
        return {-extent + (col + 0.5) * step, extent - (row + 0.5) * step};
    }
};

/// 4x the Bessel main-lobe radius (first J0 zero over the cone radius).
double default_map_extent(const BesselGaussEnvelope& env);

struct CoherenceMap {
    MapGrid grid;
    std::vector<double> values;  // row-major, n*n
    double theoretical_max = 1.0;
    std::string note;
};

/// --- closed forms -------------------------------------------------------

/// Two-port g2 after HOM for equal pulse shapes:
/// (1/2){1 - cos[PhiA(r) - PhiB(rbar) + PhiB(r') - PhiA(rbar')]}.
/// With the beam-splitter convention used here (the port-A photon transmits
/// to D), r is the detector point on port D and r' the one on port C.
double g2_hom_value(const MaskPtr& mask_a, const MaskPtr& mask_b, const TransversePoint& r,
                    const TransversePoint& r_prime);

/// Dove-prism modulated variant: (1/2){1 - cos[2m(phi+phi')]}[1 - cos(4 m phi0)].
double g2_dove(int m, double phi0, double phi, double phi_prime);

/// Entangled-pair g2 without HOM (left-circular projections):
/// 1 + cos[2 PhiA(r) + 2 PhiB(r')].
double g2_entangled_value(const MaskPtr& mask_a, const MaskPtr& mask_b,
                          const TransversePoint& r, const TransversePoint& r_prime);

/// Printed four-photon correlators (Kronecker/Levi-Civita closed forms with
/// the shared |eta|^2 factors). ports and points must have equal size 2-4.
double four_photon_correlation(const std::vector<Port>& ports,
                               const std::vector<TransversePoint>& points,
                               const EnvelopePtr& env, const EvalContext& ctx);

/// g4 over ports A,B,C,D with left-circular projections:
/// (1/4){1 + cos[arg]}, arg = PhiA(r1)+PhiB(r2)-PhiC(r3)-PhiD(r4), doubled
/// when the V photons carry the conjugate phases.
double g4_value(const std::array<MaskPtr, 4>& masks,
                const std::array<TransversePoint, 4>& points, bool conj_on_v = false);

/// --- state builders for the contraction engine --------------------------

/// H-polarized product pair on A/B with the two masks applied (HOM input).
PhotonState masked_product_pair(const EnvelopePtr& env, const MaskPtr& mask_a,
                                const MaskPtr& mask_b);

/// Polarization-entangled pair (|HV> + |VH>)/sqrt(2) with polarization-
/// sensitive masks: photon A carries +PhiA on H and -PhiA on V, photon B
/// carries +PhiB on V and -PhiB on H, the convention under which the
/// left-circular g2 is 1 + cos[2 PhiA + 2 PhiB].
PhotonState entangled_masked_pair(const EnvelopePtr& env, const MaskPtr& mask_a,
                                  const MaskPtr& mask_b);

/// Path-entangled four-photon output state with per-port masks on the
/// H-polarized photons (and optionally the conjugate phases on V).
PhotonState four_photon_state(const EnvelopePtr& env, const std::array<MaskPtr, 4>& masks,
                              bool conj_on_v = false);

/// --- engine-route ratios (verification oracles) -------------------------

/// G2/(n n) with polarization-summed detectors on the two ports.
double g2_engine(const PhotonState& state, Port port1, const TransversePoint& r1, Port port2,
                 const TransversePoint& r2, const EvalContext& ctx);

/// Same with left-circular projections on both detectors.
double g2_engine_circular(const PhotonState& state, Port port1, const TransversePoint& r1,
                          Port port2, const TransversePoint& r2, const EvalContext& ctx);

/// G4 with left-circular projections on A,B,C,D over the L-projected
/// densities.
double g4_engine(const PhotonState& state, const std::array<TransversePoint, 4>& points,
                 const EvalContext& ctx);

/// --- maps ----------------------------------------------------------------

CoherenceMap density_map(const PhotonState& state, Port port, const MapGrid& grid,
                         const EvalContext& ctx);

/// Closed-form Eq.-42-style map over r with r' fixed; errors with
/// "undefined ratio" if the shared-shape density vanishes at r'.
CoherenceMap g2_hom_map(const EnvelopePtr& env, const MaskPtr& mask_a, const MaskPtr& mask_b,
                        const MapGrid& grid, const TransversePoint& r_prime);

/// Sector-mask special case parameterized by the azimuth of r'.
CoherenceMap g2_sector_map(int m, double phi0, const MapGrid& grid, double phi_prime);

/// Entangled-pair map (no HOM), values in [0, 2].
CoherenceMap g2_entangled_map(const EnvelopePtr& env, const MaskPtr& mask_a,
                              const MaskPtr& mask_b, const MapGrid& grid,
                              const TransversePoint& r_prime);

/// g4 map over r1 with r2, r3, r4 fixed; values in [0, 1/2].
CoherenceMap g4_map(const std::array<MaskPtr, 4>& masks, const MapGrid& grid,
                    const std::array<TransversePoint, 3>& fixed, bool conj_on_v = false);

}  // namespace homsim

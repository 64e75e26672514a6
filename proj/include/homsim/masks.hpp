#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "homsim/geometry.hpp"
#include "homsim/pgm.hpp"

namespace homsim {

/// Azimuth-only phase profile: a term linear in phi plus a piecewise-constant
/// part on [0, 2*pi). `values[i]` holds on [breaks[i], breaks[i+1]), the last
/// segment wraps around to breaks[0] + 2*pi.
struct AzimuthalPhase {
    double linear = 0.0;
    std::vector<double> breaks{0.0};
    std::vector<double> values{0.0};

    double piecewise_at(double phi) const;
    double at(double phi) const { return linear * phi + piecewise_at(phi); }
    bool trivial() const;
};

AzimuthalPhase azimuthal_sum(const AzimuthalPhase& a, const AzimuthalPhase& b);
AzimuthalPhase azimuthal_negate(const AzimuthalPhase& a);
AzimuthalPhase azimuthal_mirror(const AzimuthalPhase& a);

/// (1/2pi) * Integral over [0, 2pi) of exp(i * [(oam_diff + ket.linear -
/// bra.linear) * phi + ket.pw(phi) - bra.pw(phi)]), evaluated segment by
/// segment in closed form.
std::complex<double> angular_overlap(const AzimuthalPhase& bra, const AzimuthalPhase& ket,
                                     int oam_diff);

/// Same integral by breakpoint-aware midpoint quadrature with roughly
/// `total_nodes` nodes; independent evaluation route for cross-checks.
std::complex<double> angular_overlap_quadrature(const AzimuthalPhase& bra,
                                                const AzimuthalPhase& ket, int oam_diff,
                                                int total_nodes);

class PhaseMask;
using MaskPtr = std::shared_ptr<const PhaseMask>;

/// Split of a mask into an azimuth-only component and a finite-support
/// remainder (image-derived content). `finite` is null when the mask is a
/// pure function of the azimuth.
struct MaskDecomposition {
    AzimuthalPhase azimuthal;
    MaskPtr finite;               // evaluates to 0 outside finite_radius
    double finite_radius = 0.0;   // meters
};

/// Immutable transverse-plane phase function Phi(x, y) in radians.
class PhaseMask : public std::enable_shared_from_this<PhaseMask> {
public:
    PhaseMask();
    virtual ~PhaseMask() = default;
    virtual double eval(double x, double y) const = 0;
    virtual MaskDecomposition decompose() const = 0;

    double eval(const TransversePoint& p) const { return eval(p.x, p.y); }

    /// Process-unique instance id (nonzero). Cache keys use it instead of
    /// the object address, which the allocator may reuse after destruction.
    uint64_t id() const { return id_; }

private:
    uint64_t id_;
};

double eval_mask(const MaskPtr& mask, double x, double y);                 // null -> 0
double eval_mask(const MaskPtr& mask, const TransversePoint& p);
MaskDecomposition decompose_mask(const MaskPtr& mask);                     // null -> trivial
bool azimuthal_only(const MaskPtr& mask);

MaskPtr constant_mask(double phase);
MaskPtr helical_mask(int m);
/// 2m sectors, pi on [(2j-2)pi/m, (2j-1)pi/m), 0 on the complement.
MaskPtr sector_a_mask(int m);
/// Complement of sector_a_mask with mismatch angle phi0 in [0, pi/m):
/// 0 on [(2j-2)pi/m, (2j-1)pi/m + phi0), pi on the complement.
MaskPtr sector_b_mask(int m, double phi0);
MaskPtr sum_mask(std::vector<MaskPtr> parts);
MaskPtr mirror_mask(MaskPtr inner);   // Phi(x, y) -> Phi(x, -y); collapses double mirrors
MaskPtr negate_mask(MaskPtr inner);   // -Phi; collapses double negations

/// Partner mask Mirror(Negate(mask_a)), i.e. Phi_B(x, y) = -Phi_A(x, -y).
MaskPtr conjugate_pair(const MaskPtr& mask_a);

/// Pixel-to-phase mapping phase = gain * value + offset (defaults pi/255, 0).
struct PhaseMapping {
    double gain = kPi / 255.0;
    double offset = 0.0;
};

/// Image-derived mask: nearest-neighbor lookup, image center on the optical
/// axis, phase 0 outside the image extent. `width` is the physical width in
/// meters; pixels are square.
MaskPtr image_mask(GrayImage image, double width, PhaseMapping mapping = {});
MaskPtr image_mask_from_file(const std::string& path, double width, PhaseMapping mapping = {});

/// Rasterize a mask to an 8-bit image over a centered square of side
/// `width`, inverting the given mapping (values clamped to [0, 255]).
GrayImage render_mask(const MaskPtr& mask, double width, int pixels, PhaseMapping mapping = {});

}  // namespace homsim

#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "homsim/masks.hpp"
#include "homsim/pulses.hpp"

namespace homsim {

enum class Pol { H, V };
enum class Port { A, B, C, D };

/// Detector polarization analyzer: a linear basis element, a circular
/// projection psi_L/R = (psi_H +- i psi_V)/sqrt(2), or an unanalyzed sum
/// over both linear components.
struct PolProjection {
    enum Kind { Linear, CircularL, CircularR, SumOverLambda } kind = SumOverLambda;
    Pol linear = Pol::H;  // used when kind == Linear

    static PolProjection lin(Pol p) { return {Linear, p}; }
    static PolProjection left() { return {CircularL, Pol::H}; }
    static PolProjection right() { return {CircularR, Pol::H}; }
    static PolProjection sum() { return {SumOverLambda, Pol::H}; }
};

/// Amplitude with which a photon of linear polarization `pol` feeds the
/// analyzed field component. SumOverLambda has no single amplitude and must
/// be expanded before calling this.
std::complex<double> projection_amplitude(const PolProjection& proj, Pol pol);

/// One photon's labels: which beam-splitter port it occupies, its linear
/// polarization, the shared spectral envelope, OAM charge m, an optional
/// transverse phase mask and a longitudinal delay z0 (meters).
struct SinglePhotonMode {
    Port port = Port::A;
    Pol pol = Pol::H;
    EnvelopePtr envelope;
    int oam = 0;
    MaskPtr mask;        // null = no imposed phase
    double delay = 0.0;  // z0 (meters)
};

bool same_mode_labels(const SinglePhotonMode& a, const SinglePhotonMode& b);

struct Monomial {
    std::complex<double> coeff{1.0, 0.0};
    std::vector<SinglePhotonMode> modes;
};

/// Fixed-photon-number state: a sum of complex-weighted mode monomials.
/// Kept unnormalized internally; normalization is applied explicitly.
struct PhotonState {
    std::vector<Monomial> terms;

    int photons() const { return terms.empty() ? 0 : static_cast<int>(terms[0].modes.size()); }
};

PhotonState make_state(std::vector<Monomial> terms);  // checks equal mode counts

struct DetectorSpec {
    Port port = Port::C;
    PolProjection proj = PolProjection::sum();
    TransversePoint point;
};

struct QuadratureConfig {
    int kz_nodes = 200;                   // longitudinal visibility window
    int angular_nodes = 8192;             // azimuthal midpoint nodes (slow path)
    int radial_panel_order = 16;          // Gauss-Legendre order per radial panel
    bool force_angular_quadrature = false;  // skip the closed-form angular route
};

/// Shared evaluation context: quadrature knobs plus a memoized mode-overlap
/// table. Safe for concurrent use; all operations are pure given a context.
class EvalContext {
public:
    EvalContext() = default;
    explicit EvalContext(const QuadratureConfig& quad) : quad_(quad) {}

    const QuadratureConfig& quad() const { return quad_; }
    QuadratureConfig& quad() { return quad_; }

    bool used_slow_path() const { return used_slow_path_; }
    void note_slow_path() const { used_slow_path_ = true; }

    bool cache_lookup(const std::string& key, std::complex<double>& out) const;
    void cache_store(const std::string& key, std::complex<double> value) const;

private:
    QuadratureConfig quad_;
    mutable std::map<std::string, std::complex<double>> cache_;
    mutable std::mutex mtx_;
    mutable bool used_slow_path_ = false;
};

/// Transverse mode function at a detector point: radial profile times
/// exp(i m phi) times the mask phase. The longitudinal factor at the pulse
/// center is common to all modes of one envelope and cancels in every
/// normalized quantity, so it is omitted.
std::complex<double> mode_value(const SinglePhotonMode& mode, const TransversePoint& p,
                                const EvalContext& ctx);

/// <a|b>: delta_port delta_pol times the longitudinal visibility of the
/// delay difference times the transverse overlap (closed-form angular
/// integral when both masks are azimuth-only, 2D quadrature correction over
/// the finite-support remainder otherwise).
std::complex<double> mode_overlap(const SinglePhotonMode& a, const SinglePhotonMode& b,
                                  const EvalContext& ctx);

/// Permanent of an n x n complex matrix by exact permutation enumeration
/// (n <= 4 in every caller; no approximation).
std::complex<double> permanent(const std::vector<std::vector<std::complex<double>>>& m);

/// <s1|s2> as a sum of Gram permanents over monomial pairs.
std::complex<double> inner_product(const PhotonState& s1, const PhotonState& s2,
                                   const EvalContext& ctx);

/// Merge monomials with identical mode labels, drop negligible terms.
PhotonState compacted(const PhotonState& state);

/// Rescaled copy with <s|s> = 1. A vanishing norm is reported as an error
/// ("null state").
PhotonState normalized(const PhotonState& state, const EvalContext& ctx);

/// G^(k): apply one field annihilation per detector, then contract the
/// reduced (n-k)-photon state with itself. SumOverLambda detectors are
/// expanded over the linear basis and summed.
double correlate(const PhotonState& state, const std::vector<DetectorSpec>& detectors,
                 const EvalContext& ctx);

/// <n(r)> on one port: correlate with a single polarization-summed detector.
double number_density(const PhotonState& state, Port port, const TransversePoint& point,
                      const EvalContext& ctx);

}  // namespace homsim

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "homsim/geometry.hpp"
#include "homsim/quadrature.hpp"

namespace homsim {

/// Bessel function of the first kind J_m(x), |m| <= 64, x >= 0, by Miller's
/// backward recurrence with the J0 + 2*sum(J_2k) = 1 normalization.
double bessel_j(int m, double x);

struct PulseParams {
    double lambda_c = 5e-7;     // center wavelength (m)
    double theta_c = 0.1;       // Bessel cone polar angle (rad)
    double sigma_z = 5e-4;      // longitudinal width (m)
    double sigma_rho = 5e-4;    // transverse spectral width (m)
};

/// Bessel-Gauss spectral envelope: a Gaussian in k_z centered on
/// k_{z,c} = k_c cos(theta_c) times a Gaussian in the transverse wavenumber
/// rho_t centered on the cone radius rho_tc = k_c sin(theta_c). Normalized so
/// that Integral dk_z Integral rho_t drho_t Integral dphi_t |eta|^2 = 1.
class BesselGaussEnvelope {
public:
    explicit BesselGaussEnvelope(const PulseParams& params);

    const PulseParams& params() const { return params_; }
    double k_c() const { return kTwoPi / params_.lambda_c; }
    double k_zc() const { return k_c() * std::cos(params_.theta_c); }
    double rho_tc() const { return k_c() * std::sin(params_.theta_c); }
    double omega_c() const { return kSpeedOfLight * k_c(); }

    /// Rescales the amplitude so the squared norm is 1 (within 1e-6 by
    /// quadrature); returns the applied scale. Idempotent: a second call
    /// returns 1. Throws if the cone Gaussian leaks below rho_t = 0 with
    /// mass above 1e-3 ("cone approximation invalid").
    double normalize();
    bool normalized() const { return normalized_; }

    /// eta(k_z, rho_t); requires a normalized envelope, rho_t >= 0.
    double spectral_amplitude(double k_z, double rho_t) const;

    /// Integration windows covering the envelope support (10 sigma).
    double kz_lo() const { return k_zc() - 10.0 / params_.sigma_z; }
    double kz_hi() const { return k_zc() + 10.0 / params_.sigma_z; }
    double rho_t_lo() const { return std::max(0.0, rho_tc() - 10.0 / params_.sigma_rho); }
    double rho_t_hi() const { return rho_tc() + 10.0 / params_.sigma_rho; }

    /// Process-unique id shared by copies (same parameters); used for cache
    /// keys in place of the object address.
    uint64_t id() const { return id_; }

private:
    PulseParams params_;
    double scale_ = 1.0;
    bool normalized_ = false;
    uint64_t id_;
};

using EnvelopePtr = std::shared_ptr<const BesselGaussEnvelope>;

/// Normalized envelope, ready to attach to photon modes.
EnvelopePtr make_envelope(const PulseParams& params);

/// F(z0) = Integral dk_z |eta_z(k_z)|^2 exp(i k_z z0), normalized so that
/// F(0) = 1. |F(z0)| = exp(-z0^2 / (8 sigma_z^2)) up to quadrature error.
std::complex<double> longitudinal_visibility(const BesselGaussEnvelope& env, double z0);

/// Real-space wave packet eta_m(rho, z, t): the k-space envelope transformed
/// with the Bessel kernel, evaluated by quadrature. Azimuth-independent and
/// even in m.
std::complex<double> wavepacket(const BesselGaussEnvelope& env, int m, double rho, double z,
                                double t);

/// Closed-form approximation of the same wave packet: i^|m| C
/// J_|m|(rho rho_tc) exp[-(ct - z cos)^2/(4 sigma_z^2 cos^2)] exp[i(k_zc z -
/// omega_c t)], with C fixed by the normalized k-space convention. Agrees
/// with the quadrature route within 1% at the pulse center.
std::complex<double> wavepacket_approx(const BesselGaussEnvelope& env, int m, double rho,
                                       double z, double t);

/// Normalized equal-time radial profile W_m(rho) = N J_|m|(rho rho_tc)
/// exp(-rho^2/(4 sigma_rho^2)) with 2 pi Integral |W|^2 rho drho = 1, shared
/// by every mode of a given envelope and |m|. Carries a Bessel-period-aware
/// quadrature grid for radial overlap integrals.
class RadialProfile {
public:
    RadialProfile(EnvelopePtr env, int abs_m, int panel_order = 16);

    double value(double rho) const;
    int abs_m() const { return abs_m_; }
    double max_radius() const { return rule_.nodes.empty() ? 0.0 : r_max_; }
    const EnvelopePtr& envelope() const { return env_; }
    const QuadratureRule& rule() const { return rule_; }
    const std::vector<double>& node_values() const { return node_values_; }

private:
    EnvelopePtr env_;
    int abs_m_;
    double r_max_;
    double norm_ = 1.0;
    QuadratureRule rule_;
    std::vector<double> node_values_;
};

using RadialProfilePtr = std::shared_ptr<const RadialProfile>;

/// Process-wide cache keyed by (envelope identity, |m|).
RadialProfilePtr get_radial_profile(const EnvelopePtr& env, int m, int panel_order = 16);

/// 2 pi Integral W_a(rho) W_b(rho) rho drho over the shared grid; the two
/// profiles must reference the same envelope.
double radial_cross_overlap(const RadialProfile& a, const RadialProfile& b);

}  // namespace homsim

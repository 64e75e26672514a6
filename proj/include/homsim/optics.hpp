#pragma once

#include "homsim/fockstate.hpp"

namespace homsim {

/// Lossless 50:50 splitter amplitudes (k-independent).
struct BeamSplitterCoefficients {
    std::complex<double> t{1.0 / std::sqrt(2.0), 0.0};
    std::complex<double> r{0.0, 1.0 / std::sqrt(2.0)};
};

/// Mirror map on one photon: the OAM charge flips sign and the mask is
/// replaced by its mirror image; port, polarization, envelope and delay are
/// untouched. An involution (double mirrors collapse structurally).
SinglePhotonMode reflect_mode(const SinglePhotonMode& mode);

/// Monomial rewrite of the input-output relations: a photon entering port A
/// leaves as t x (port D) + r x (reflected, port C); a photon entering port
/// B leaves as t x (port C) + r x (reflected, port D). Photons already on
/// C/D are rejected ("unsupported port layout").
PhotonState beam_splitter(const PhotonState& input, const BeamSplitterCoefficients& bs = {});

/// Accumulates a longitudinal delay z0 (meters) on every mode of the port.
PhotonState apply_delay(const PhotonState& state, Port port, double z0);

/// Dove prism on one path: each OAM-m mode gains the phase exp(i 2 m phi0).
PhotonState dove_prism(const PhotonState& state, Port port, double phi0);

/// Composes an extra transverse phase onto every mode of the port.
PhotonState apply_mask(const PhotonState& state, Port port, const MaskPtr& mask);

/// Sub-state of monomials whose port multiset matches `ports` exactly.
PhotonState port_sector(const PhotonState& state, std::vector<Port> ports);

/// <sector|sector> for the given port multiset: e.g. the coincidence
/// probability of a two-photon output is the {C, D} sector norm.
double sector_probability(const PhotonState& state, std::vector<Port> ports,
                          const EvalContext& ctx);

}  // namespace homsim

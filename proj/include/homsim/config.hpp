#pragma once

#include <string>

#include "homsim/fockstate.hpp"

namespace homsim {

/// Envelope parameters as they appear in the JSON config; widths in units
/// of the center wavelength.
struct PulseConfig {
    double lambda_c_m = 5e-7;
    double theta_c_rad = 0.1;
    double sigma_z_in_lambda = 1000.0;
    double sigma_rho_in_lambda = 1000.0;
};

struct NumericsConfig {
    int kz_nodes = 200;
    int angular_nodes = 8192;
    int radial_panel_order = 16;
    double accept_residual = 1e-6;
    double reject_residual = 1e-3;
};

struct OutputConfig {
    std::string directory = ".";
    std::string map_format = "pgm";  // "pgm" or "csv"
};

struct RunConfig {
    PulseConfig pulse;
    NumericsConfig numerics;
    OutputConfig output;
};

RunConfig parse_config(const std::string& json_text);
std::string serialize_config(const RunConfig& config);
RunConfig load_config(const std::string& path);

PulseParams pulse_params(const PulseConfig& pulse);
EnvelopePtr envelope_from(const RunConfig& config);
QuadratureConfig quadrature_from(const RunConfig& config);

}  // namespace homsim

#include "homsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace homsim {
namespace {

using json = nlohmann::ordered_json;

template <typename T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    RunConfig cfg;
    if (j.contains("pulse")) {
        const json& p = j.at("pulse");
        read_if(p, "lambda_c_m", cfg.pulse.lambda_c_m);
        read_if(p, "theta_c_rad", cfg.pulse.theta_c_rad);
        read_if(p, "sigma_z_in_lambda", cfg.pulse.sigma_z_in_lambda);
        read_if(p, "sigma_rho_in_lambda", cfg.pulse.sigma_rho_in_lambda);
    }
    if (j.contains("numerics")) {
        const json& n = j.at("numerics");
        read_if(n, "kz_nodes", cfg.numerics.kz_nodes);
        read_if(n, "angular_nodes", cfg.numerics.angular_nodes);
        read_if(n, "radial_panel_order", cfg.numerics.radial_panel_order);
        read_if(n, "accept_residual", cfg.numerics.accept_residual);
        read_if(n, "reject_residual", cfg.numerics.reject_residual);
    }
    if (j.contains("output")) {
        const json& o = j.at("output");
        read_if(o, "directory", cfg.output.directory);
        read_if(o, "map_format", cfg.output.map_format);
    }
    if (cfg.pulse.lambda_c_m <= 0.0 || cfg.pulse.sigma_z_in_lambda <= 0.0 ||
        cfg.pulse.sigma_rho_in_lambda <= 0.0)
        throw std::runtime_error("config: pulse parameters must be positive");
    if (cfg.numerics.accept_residual <= 0.0 || cfg.numerics.reject_residual <= 0.0)
        throw std::runtime_error("config: tolerances must be positive");
    return cfg;
}

std::string serialize_config(const RunConfig& config) {
    json j;
    j["pulse"] = {{"lambda_c_m", config.pulse.lambda_c_m},
                  {"theta_c_rad", config.pulse.theta_c_rad},
                  {"sigma_z_in_lambda", config.pulse.sigma_z_in_lambda},
                  {"sigma_rho_in_lambda", config.pulse.sigma_rho_in_lambda}};
    j["numerics"] = {{"kz_nodes", config.numerics.kz_nodes},
                     {"angular_nodes", config.numerics.angular_nodes},
                     {"radial_panel_order", config.numerics.radial_panel_order},
                     {"accept_residual", config.numerics.accept_residual},
                     {"reject_residual", config.numerics.reject_residual}};
    j["output"] = {{"directory", config.output.directory},
                   {"map_format", config.output.map_format}};
    return j.dump(2) + "\n";
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

PulseParams pulse_params(const PulseConfig& pulse) {
    PulseParams p;
    p.lambda_c = pulse.lambda_c_m;
    p.theta_c = pulse.theta_c_rad;
    p.sigma_z = pulse.sigma_z_in_lambda * pulse.lambda_c_m;
    p.sigma_rho = pulse.sigma_rho_in_lambda * pulse.lambda_c_m;
    return p;
}

EnvelopePtr envelope_from(const RunConfig& config) {
    return make_envelope(pulse_params(config.pulse));
}

QuadratureConfig quadrature_from(const RunConfig& config) {
    QuadratureConfig q;
    q.kz_nodes = config.numerics.kz_nodes;
    q.angular_nodes = config.numerics.angular_nodes;
    q.radial_panel_order = config.numerics.radial_panel_order;
    return q;
}

}  // namespace homsim

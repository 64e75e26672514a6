#include <cmath>

#include "doctest.h"
#include "homsim/config.hpp"

using namespace homsim;

TEST_CASE("defaults match the reference pulse parameters") {
    const RunConfig cfg;
    CHECK(cfg.pulse.lambda_c_m == doctest::Approx(5e-7));
    CHECK(cfg.pulse.sigma_z_in_lambda == doctest::Approx(1000.0));
    CHECK(cfg.pulse.sigma_rho_in_lambda == doctest::Approx(1000.0));

    const PulseParams p = pulse_params(cfg.pulse);
    CHECK(p.sigma_z == doctest::Approx(5e-4));
    CHECK(p.sigma_rho == doctest::Approx(5e-4));
    // Pulse duration sigma_z / c of about 1.67 ps.
    CHECK(p.sigma_z / kSpeedOfLight == doctest::Approx(1.67e-12).epsilon(0.01));
}

TEST_CASE("config parse -> serialize -> parse is the identity") {
    RunConfig cfg;
    cfg.pulse.theta_c_rad = 0.07;
    cfg.pulse.sigma_z_in_lambda = 250.0;
    cfg.numerics.angular_nodes = 4096;
    cfg.numerics.accept_residual = 1e-7;
    cfg.output.directory = "out";
    cfg.output.map_format = "csv";

    const std::string text = serialize_config(cfg);
    const RunConfig back = parse_config(text);
    CHECK(serialize_config(back) == text);
    CHECK(back.pulse.theta_c_rad == doctest::Approx(0.07));
    CHECK(back.numerics.angular_nodes == 4096);
    CHECK(back.output.map_format == "csv");
}

TEST_CASE("partial configs keep the remaining defaults") {
    const RunConfig cfg = parse_config(R"({"pulse": {"theta_c_rad": 0.2}})");
    CHECK(cfg.pulse.theta_c_rad == doctest::Approx(0.2));
    CHECK(cfg.pulse.lambda_c_m == doctest::Approx(5e-7));
    CHECK(cfg.numerics.kz_nodes == 200);
}

TEST_CASE("invalid configs are rejected") {
    CHECK_THROWS_AS(parse_config("{nope"), std::runtime_error);
    CHECK_THROWS_AS(parse_config(R"({"pulse": {"lambda_c_m": -1.0}})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_config(R"({"numerics": {"accept_residual": 0.0}})"),
                    std::runtime_error);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST_CASE("derived helpers hand the parameters through") {
    RunConfig cfg;
    cfg.numerics.angular_nodes = 1234;
    const QuadratureConfig q = quadrature_from(cfg);
    CHECK(q.angular_nodes == 1234);
    CHECK_FALSE(q.force_angular_quadrature);

    const EnvelopePtr env = envelope_from(cfg);
    CHECK(env->normalized());
    CHECK(env->k_c() == doctest::Approx(kTwoPi / 5e-7));
}

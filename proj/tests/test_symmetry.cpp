#include <cmath>
#include <complex>

#include "doctest.h"
#include "homsim/interference.hpp"
#include "homsim/symmetry.hpp"

using namespace homsim;
using cplx = std::complex<double>;

namespace {
EnvelopePtr default_envelope() {
    static EnvelopePtr env = make_envelope(PulseParams{});
    return env;
}

PhotonState scenario(ScenarioKind kind, int m) {
    ScenarioSpec spec;
    spec.kind = kind;
    spec.m = m;
    spec.envelope = default_envelope();
    return build_scenario(spec);
}
}  // namespace

TEST_CASE("exchange-reflection classification of the catalog scenarios") {
    EvalContext ctx;
    ClassifyOptions opts;

    // Opposite charges in a product pair: symmetric.
    auto rep = classify(scenario(ScenarioKind::ProductOppositeOam, 1), opts, ctx);
    CHECK(rep.s == +1);
    CHECK(rep.prediction == HomPrediction::Dip);
    CHECK(rep.residual_plus <= opts.accept);
    CHECK(rep.residual_minus > opts.reject);

    // Equal charges in a product pair: neither for m != 0.
    rep = classify(scenario(ScenarioKind::ProductSameOam, 1), opts, ctx);
    CHECK(rep.s == 0);
    CHECK(rep.prediction == HomPrediction::None);

    // ... but symmetric in the degenerate m = 0 case.
    rep = classify(scenario(ScenarioKind::ProductSameOam, 0), opts, ctx);
    CHECK(rep.s == +1);

    // Antisymmetric entangled combination.
    rep = classify(scenario(ScenarioKind::EntangledAntisymSameOam, 1), opts, ctx);
    CHECK(rep.s == -1);
    CHECK(rep.prediction == HomPrediction::Peak);
    CHECK(rep.residual_minus <= opts.accept);

    // Both "+/-" opposite-charge combinations are symmetric.
    CHECK(classify(scenario(ScenarioKind::EntangledOppositeOamPlus, 1), opts, ctx).s ==
          +1);
    CHECK(classify(scenario(ScenarioKind::EntangledOppositeOamMinus, 1), opts, ctx).s ==
          +1);
}

TEST_CASE("classification guards") {
    EvalContext ctx;
    ClassifyOptions opts;
    opts.grid = 4;
    CHECK_THROWS_WITH_AS(
        classify(scenario(ScenarioKind::ProductOppositeOam, 1), opts, ctx),
        "classification grid too small", std::invalid_argument);

    // One photon per input port is required.
    PhotonState both_a = beam_splitter(scenario(ScenarioKind::ProductOppositeOam, 1));
    CHECK_THROWS_AS(classify(both_a, ClassifyOptions{}, ctx), std::invalid_argument);
}

TEST_CASE("the 16 hyperentangled Bell states classify as catalogued") {
    EvalContext ctx;
    ClassifyOptions opts;
    const auto catalog = bell_catalog(default_envelope(), 1);
    REQUIRE(catalog.size() == 16);

    int dips = 0, peaks = 0;
    for (const auto& entry : catalog) {
        CAPTURE(entry.pol_label);
        CAPTURE(entry.oam_label);
        const auto rep = classify(entry.state, opts, ctx);
        CHECK(rep.s == entry.expected_s);
        CHECK(rep.prediction == entry.expected);
        CHECK(predict_hom(rep) == entry.expected);
        dips += entry.expected == HomPrediction::Dip;
        peaks += entry.expected == HomPrediction::Peak;

        // End-to-end: the coincidence at zero delay obeys the dichotomy.
        const double p0 = coincidence_probability(entry.state, 0.0, ctx);
        if (entry.expected == HomPrediction::Dip)
            CHECK(p0 <= 0.01);
        else
            CHECK(p0 >= 0.99);
    }
    CHECK(dips == 10);
    CHECK(peaks == 6);

    CHECK_THROWS_AS(bell_catalog(default_envelope(), 0), std::invalid_argument);
}

TEST_CASE("prediction names are stable") {
    CHECK(prediction_name(HomPrediction::Dip) == "dip");
    CHECK(prediction_name(HomPrediction::Peak) == "peak");
    CHECK(prediction_name(HomPrediction::None) == "none");
}

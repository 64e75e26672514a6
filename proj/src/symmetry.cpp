#include "homsim/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {
namespace {

using cplx = std::complex<double>;

struct PairTerm {
    cplx coeff;
    const SinglePhotonMode* a;
    const SinglePhotonMode* b;
};

// Two-photon amplitude with photon (lambda, r) on A and (lambda', r') on B.
cplx amplitude(const std::vector<PairTerm>& terms, Pol la, Pol lb,
               const TransversePoint& ra, const TransversePoint& rb,
               const EvalContext& ctx) {
    cplx sum{0.0, 0.0};
    for (const PairTerm& t : terms) {
        if (t.a->pol != la || t.b->pol != lb) continue;
        sum += t.coeff * mode_value(*t.a, ra, ctx) * mode_value(*t.b, rb, ctx);
    }
    return sum;
}

}  // namespace

SymmetryReport classify(const PhotonState& state, const ClassifyOptions& opts,
                        const EvalContext& ctx) {
    if (opts.grid < 8) throw std::invalid_argument("classification grid too small");
    if (state.photons() != 2) throw std::invalid_argument("classify needs a two-photon state");

    std::vector<PairTerm> terms;
    const BesselGaussEnvelope* env = nullptr;
    for (const Monomial& t : state.terms) {
        const SinglePhotonMode* a = nullptr;
        const SinglePhotonMode* b = nullptr;
        for (const SinglePhotonMode& m : t.modes) {
            if (m.port == Port::A && !a) a = &m;
            else if (m.port == Port::B && !b) b = &m;
        }
        if (!a || !b)
            throw std::invalid_argument("classify needs one photon on port A and one on B");
        terms.push_back({t.coeff, a, b});
        env = a->envelope.get();
    }

    double extent = opts.extent;
    if (extent <= 0.0) extent = 3.0 * 2.404826 / env->rho_tc();  // a few Bessel main lobes

    std::vector<TransversePoint> pts;
    pts.reserve(static_cast<size_t>(opts.grid) * opts.grid);
    for (int i = 0; i < opts.grid; ++i)
        for (int j = 0; j < opts.grid; ++j)
            pts.push_back({-extent + (i + 0.5) * 2.0 * extent / opts.grid,
                           -extent + (j + 0.5) * 2.0 * extent / opts.grid});

    const Pol pols[2] = {Pol::H, Pol::V};
    double norm2 = 0.0, plus2 = 0.0, minus2 = 0.0;
    for (Pol la : pols) {
        for (Pol lb : pols) {
            for (const TransversePoint& ra : pts) {
                for (const TransversePoint& rb : pts) {
                    const cplx xi = amplitude(terms, la, lb, ra, rb, ctx);
                    // Partner: indices swapped, points swapped and mirrored.
                    const cplx partner =
                        amplitude(terms, lb, la, rb.reflected(), ra.reflected(), ctx);
                    norm2 += std::norm(xi);
                    plus2 += std::norm(xi - partner);
                    minus2 += std::norm(xi + partner);
                }
            }
        }
    }
    if (norm2 <= 0.0) throw std::domain_error("null state");

    SymmetryReport report;
    report.residual_plus = std::sqrt(plus2 / norm2);
    report.residual_minus = std::sqrt(minus2 / norm2);
    if (report.residual_plus <= opts.accept && report.residual_minus > opts.reject)
        report.s = 1;
    else if (report.residual_minus <= opts.accept && report.residual_plus > opts.reject)
        report.s = -1;
    report.prediction = predict_hom(report);
    return report;
}

HomPrediction predict_hom(const SymmetryReport& report) {
    if (report.s > 0) return HomPrediction::Dip;
    if (report.s < 0) return HomPrediction::Peak;
    return HomPrediction::None;
}

std::string prediction_name(HomPrediction p) {
    switch (p) {
        case HomPrediction::Dip: return "dip";
        case HomPrediction::Peak: return "peak";
        case HomPrediction::None: return "none";
    }
    return "none";
}

std::vector<HyperBellState> bell_catalog(const EnvelopePtr& env, int m) {
    if (m == 0) throw std::invalid_argument("OAM Bell states need m != 0");

    struct PolPart {
        const char* label;
        Pol a1, b1, a2, b2;
        double sign;
        int s;  // exchange symmetry of the polarization part
    };
    struct OamPart {
        const char* label;
        int a1, b1, a2, b2;
        double sign;
        int s;  // exchange-reflection symmetry of the OAM part
    };
    const PolPart pol_parts[] = {
        {"phi+", Pol::H, Pol::H, Pol::V, Pol::V, +1.0, +1},
        {"phi-", Pol::H, Pol::H, Pol::V, Pol::V, -1.0, +1},
        {"psi+", Pol::H, Pol::V, Pol::V, Pol::H, +1.0, +1},
        {"psi-", Pol::H, Pol::V, Pol::V, Pol::H, -1.0, -1},
    };
    const OamPart oam_parts[] = {
        {"mu+", m, -m, -m, m, +1.0, +1},
        {"mu-", m, -m, -m, m, -1.0, +1},
        {"nu+", m, m, -m, -m, +1.0, +1},
        {"nu-", m, m, -m, -m, -1.0, -1},
    };

    std::vector<HyperBellState> out;
    out.reserve(16);
    for (const PolPart& pp : pol_parts) {
        for (const OamPart& op : oam_parts) {
            HyperBellState row;
            row.pol_label = pp.label;
            row.oam_label = op.label;
            row.expected_s = pp.s * op.s;
            row.expected = row.expected_s > 0 ? HomPrediction::Dip : HomPrediction::Peak;

            auto mode = [&](Port port, Pol pol, int oam) {
                SinglePhotonMode md;
                md.port = port;
                md.pol = pol;
                md.envelope = env;
                md.oam = oam;
                return md;
            };
            const struct { Pol pa, pb; double ps; } pol_terms[] = {
                {pp.a1, pp.b1, 1.0}, {pp.a2, pp.b2, pp.sign}};
            const struct { int ma, mb; double os; } oam_terms[] = {
                {op.a1, op.b1, 1.0}, {op.a2, op.b2, op.sign}};
            std::vector<Monomial> terms;
            for (const auto& pt : pol_terms)
                for (const auto& ot : oam_terms)
                    terms.push_back(Monomial{0.5 * pt.ps * ot.os,
                                             {mode(Port::A, pt.pa, ot.ma),
                                              mode(Port::B, pt.pb, ot.mb)}});
            row.state = make_state(std::move(terms));
            out.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace homsim

#include "homsim/fockstate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace homsim {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

const double kSqrtHalf = std::sqrt(0.5);

std::string overlap_key(const SinglePhotonMode& a, const SinglePhotonMode& b) {
    char buf[256];
    const unsigned long long ea = a.envelope ? a.envelope->id() : 0;
    const unsigned long long eb = b.envelope ? b.envelope->id() : 0;
    const unsigned long long ma = a.mask ? a.mask->id() : 0;
    const unsigned long long mb = b.mask ? b.mask->id() : 0;
    std::snprintf(buf, sizeof(buf), "%llu|%d|%d|%d|%a|%llu#%llu|%d|%d|%d|%a|%llu", ea,
                  static_cast<int>(a.port), static_cast<int>(a.pol), a.oam, a.delay, ma,
                  eb, static_cast<int>(b.port), static_cast<int>(b.pol), b.oam, b.delay,
                  mb);
    return buf;
}

}  // namespace

std::complex<double> projection_amplitude(const PolProjection& proj, Pol pol) {
    switch (proj.kind) {
        case PolProjection::Linear:
            return proj.linear == pol ? 1.0 : 0.0;
        case PolProjection::CircularL:
            return pol == Pol::H ? cplx{kSqrtHalf, 0.0} : cplx{0.0, kSqrtHalf};
        case PolProjection::CircularR:
            return pol == Pol::H ? cplx{kSqrtHalf, 0.0} : cplx{0.0, -kSqrtHalf};
        case PolProjection::SumOverLambda:
            throw std::logic_error("sum-over-lambda projection has no single amplitude");
    }
    return 0.0;
}

bool same_mode_labels(const SinglePhotonMode& a, const SinglePhotonMode& b) {
    return a.port == b.port && a.pol == b.pol && a.envelope.get() == b.envelope.get() &&
           a.oam == b.oam && a.mask.get() == b.mask.get() && a.delay == b.delay;
}

PhotonState make_state(std::vector<Monomial> terms) {
    for (const Monomial& t : terms)
        if (t.modes.size() != terms[0].modes.size())
            throw std::invalid_argument("all monomials must carry the same photon number");
    return PhotonState{std::move(terms)};
}

bool EvalContext::cache_lookup(const std::string& key, std::complex<double>& out) const {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return false;
    out = it->second;
    return true;
}

void EvalContext::cache_store(const std::string& key, std::complex<double> value) const {
    std::lock_guard<std::mutex> lock(mtx_);
    cache_.emplace(key, value);
}

std::complex<double> mode_value(const SinglePhotonMode& mode, const TransversePoint& p,
                                const EvalContext& ctx) {
    if (!mode.envelope || !mode.envelope->normalized())
        throw std::logic_error("unnormalized envelope");
    const auto profile =
        get_radial_profile(mode.envelope, mode.oam, ctx.quad().radial_panel_order);
    const double phase = mode.oam * p.phi() + eval_mask(mode.mask, p);
    return profile->value(p.rho()) * std::exp(kI * phase);
}

std::complex<double> mode_overlap(const SinglePhotonMode& a, const SinglePhotonMode& b,
                                  const EvalContext& ctx) {
    if (!a.envelope || !b.envelope || !a.envelope->normalized() || !b.envelope->normalized())
        throw std::logic_error("unnormalized envelope");
    if (a.port != b.port || a.pol != b.pol) return 0.0;
    if (a.envelope.get() != b.envelope.get())
        throw std::logic_error("modes in one overlap must share an envelope");

    const std::string key = overlap_key(a, b);
    cplx cached;
    if (ctx.cache_lookup(key, cached)) return cached;

    const BesselGaussEnvelope& env = *a.envelope;
    const cplx longi = longitudinal_visibility(env, a.delay - b.delay);

    const MaskDecomposition da = decompose_mask(a.mask);
    const MaskDecomposition db = decompose_mask(b.mask);
    const int dm = b.oam - a.oam;

    const auto wa = get_radial_profile(a.envelope, a.oam, ctx.quad().radial_panel_order);
    const auto wb = get_radial_profile(b.envelope, b.oam, ctx.quad().radial_panel_order);
    const double radial = radial_cross_overlap(*wa, *wb);

    const cplx angular =
        ctx.quad().force_angular_quadrature
            ? angular_overlap_quadrature(da.azimuthal, db.azimuthal, dm,
                                         ctx.quad().angular_nodes)
            : angular_overlap(da.azimuthal, db.azimuthal, dm);
    cplx transverse = radial * angular;

    if (da.finite || db.finite) {
        // The azimuth-only part above pretends the finite-support phase is
        // zero everywhere; add the difference, which lives only inside the
        // finite radius.
        ctx.note_slow_path();
        const double r_fin = std::max(da.finite_radius, db.finite_radius);
        const int panels = std::max(
            32, static_cast<int>(std::ceil(r_fin * env.rho_tc() / kPi)) + 8);
        const auto rad_rule = composite_gauss_legendre(ctx.quad().radial_panel_order, panels,
                                                       0.0, std::min(r_fin, wa->max_radius()));
        const int n_phi = std::max(256, ctx.quad().angular_nodes);
        const double h_phi = kTwoPi / n_phi;
        cplx corr{0.0, 0.0};
        for (size_t ir = 0; ir < rad_rule.nodes.size(); ++ir) {
            const double rho = rad_rule.nodes[ir];
            const double wr = rad_rule.weights[ir] * rho * wa->value(rho) * wb->value(rho);
            if (wr == 0.0) continue;
            cplx ring{0.0, 0.0};
            for (int ip = 0; ip < n_phi; ++ip) {
                const double phi = (ip + 0.5) * h_phi;
                const double x = rho * std::cos(phi);
                const double y = rho * std::sin(phi);
                const double d_fin = eval_mask(db.finite, x, y) - eval_mask(da.finite, x, y);
                if (d_fin == 0.0) continue;
                const double d_az = dm * phi + db.azimuthal.at(phi) - da.azimuthal.at(phi);
                ring += std::exp(kI * d_az) * (std::exp(kI * d_fin) - 1.0);
            }
            corr += wr * h_phi * ring;
        }
        transverse += corr;
    }

    const cplx result = longi * transverse;
    ctx.cache_store(key, result);
    return result;
}

std::complex<double> permanent(const std::vector<std::vector<std::complex<double>>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1.0;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("permanent needs a square matrix");
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    cplx sum{0.0, 0.0};
    do {
        cplx prod{1.0, 0.0};
        for (size_t i = 0; i < n; ++i) prod *= m[i][idx[i]];
        sum += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

std::complex<double> inner_product(const PhotonState& s1, const PhotonState& s2,
                                   const EvalContext& ctx) {
    if (s1.photons() != s2.photons())
        throw std::invalid_argument("mismatched photon number");
    const size_t n = static_cast<size_t>(s1.photons());
    cplx total{0.0, 0.0};
    std::vector<std::vector<cplx>> gram(n, std::vector<cplx>(n));
    for (const Monomial& t1 : s1.terms) {
        for (const Monomial& t2 : s2.terms) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)  // <bra mode i | ket mode j>
                    gram[i][j] = mode_overlap(t1.modes[i], t2.modes[j], ctx);
            total += std::conj(t1.coeff) * t2.coeff * permanent(gram);
        }
    }
    return total;
}

namespace {

bool mode_label_less(const SinglePhotonMode& a, const SinglePhotonMode& b) {
    auto key = [](const SinglePhotonMode& m) {
        return std::make_tuple(static_cast<int>(m.port), static_cast<int>(m.pol), m.oam,
                               m.delay, static_cast<const void*>(m.mask.get()),
                               static_cast<const void*>(m.envelope.get()));
    };
    return key(a) < key(b);
}

}  // namespace

PhotonState compacted(const PhotonState& state) {
    std::vector<Monomial> sorted = state.terms;
    for (Monomial& t : sorted) std::sort(t.modes.begin(), t.modes.end(), mode_label_less);

    double peak = 0.0;
    for (const Monomial& t : sorted) peak = std::max(peak, std::abs(t.coeff));

    std::vector<Monomial> merged;
    for (Monomial& t : sorted) {
        bool found = false;
        for (Monomial& u : merged) {
            if (u.modes.size() == t.modes.size() &&
                std::equal(u.modes.begin(), u.modes.end(), t.modes.begin(),
                           same_mode_labels)) {
                u.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(std::move(t));
    }
    std::vector<Monomial> kept;
    for (Monomial& t : merged)
        if (std::abs(t.coeff) > 1e-13 * std::max(peak, 1.0)) kept.push_back(std::move(t));
    return PhotonState{std::move(kept)};
}

PhotonState normalized(const PhotonState& state, const EvalContext& ctx) {
    const double norm2 = std::real(inner_product(state, state, ctx));
    if (norm2 < 1e-14) throw std::domain_error("null state");
    PhotonState out = state;
    const double scale = 1.0 / std::sqrt(norm2);
    for (Monomial& t : out.terms) t.coeff *= scale;
    return out;
}

namespace {

PhotonState annihilate(const PhotonState& state, const DetectorSpec& det,
                       const EvalContext& ctx) {
    PhotonState out;
    for (const Monomial& t : state.terms) {
        for (size_t j = 0; j < t.modes.size(); ++j) {
            const SinglePhotonMode& m = t.modes[j];
            if (m.port != det.port) continue;
            const cplx amp = projection_amplitude(det.proj, m.pol);
            if (amp == cplx{0.0, 0.0}) continue;
            Monomial reduced;
            reduced.coeff = t.coeff * amp * mode_value(m, det.point, ctx);
            reduced.modes.reserve(t.modes.size() - 1);
            for (size_t i = 0; i < t.modes.size(); ++i)
                if (i != j) reduced.modes.push_back(t.modes[i]);
            out.terms.push_back(std::move(reduced));
        }
    }
    return compacted(out);
}

double correlate_concrete(const PhotonState& state, const std::vector<DetectorSpec>& dets,
                          const EvalContext& ctx) {
    PhotonState reduced = state;
    for (const DetectorSpec& d : dets) {
        reduced = annihilate(reduced, d, ctx);
        if (reduced.terms.empty()) return 0.0;
    }
    return std::real(inner_product(reduced, reduced, ctx));
}

}  // namespace

double correlate(const PhotonState& state, const std::vector<DetectorSpec>& detectors,
                 const EvalContext& ctx) {
    if (static_cast<int>(detectors.size()) > state.photons())
        throw std::invalid_argument("more detectors than photons");

    // Expand every unanalyzed detector over the linear basis and sum the
    // diagonal contributions.
    std::vector<size_t> open;
    for (size_t i = 0; i < detectors.size(); ++i)
        if (detectors[i].proj.kind == PolProjection::SumOverLambda) open.push_back(i);

    double total = 0.0;
    const size_t combos = size_t{1} << open.size();
    std::vector<DetectorSpec> concrete = detectors;
    for (size_t c = 0; c < combos; ++c) {
        for (size_t b = 0; b < open.size(); ++b)
            concrete[open[b]].proj =
                PolProjection::lin((c >> b) & 1 ? Pol::V : Pol::H);
        total += correlate_concrete(state, concrete, ctx);
    }
    return std::max(total, 0.0);
}

double number_density(const PhotonState& state, Port port, const TransversePoint& point,
                      const EvalContext& ctx) {
    DetectorSpec det;
    det.port = port;
    det.proj = PolProjection::sum();
    det.point = point;
    return correlate(state, {det}, ctx);
}

}  // namespace homsim

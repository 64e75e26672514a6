#include "homsim/optics.hpp"

#include <algorithm>
#include <stdexcept>

namespace homsim {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

}  // namespace

SinglePhotonMode reflect_mode(const SinglePhotonMode& mode) {
    SinglePhotonMode out = mode;
    out.oam = -mode.oam;
    out.mask = mirror_mask(mode.mask);
    return out;
}

PhotonState beam_splitter(const PhotonState& input, const BeamSplitterCoefficients& bs) {
    std::vector<Monomial> out;
    for (const Monomial& term : input.terms) {
        // Expand the product of per-photon two-way splits.
        std::vector<Monomial> partial{Monomial{term.coeff, {}}};
        for (const SinglePhotonMode& mode : term.modes) {
            SinglePhotonMode straight = mode;
            SinglePhotonMode reflected = reflect_mode(mode);
            cplx amp_straight, amp_reflected;
            if (mode.port == Port::A) {
                straight.port = Port::D;
                reflected.port = Port::C;
                amp_straight = bs.t;
                amp_reflected = bs.r;
            } else if (mode.port == Port::B) {
                straight.port = Port::C;
                reflected.port = Port::D;
                amp_straight = bs.t;
                amp_reflected = bs.r;
            } else {
                throw std::invalid_argument("unsupported port layout");
            }
            std::vector<Monomial> next;
            next.reserve(partial.size() * 2);
            for (const Monomial& p : partial) {
                Monomial m1 = p;
                m1.coeff *= amp_straight;
                m1.modes.push_back(straight);
                next.push_back(std::move(m1));
                Monomial m2 = p;
                m2.coeff *= amp_reflected;
                m2.modes.push_back(reflected);
                next.push_back(std::move(m2));
            }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return compacted(PhotonState{std::move(out)});
}

PhotonState apply_delay(const PhotonState& state, Port port, double z0) {
    PhotonState out = state;
    for (Monomial& t : out.terms)
        for (SinglePhotonMode& m : t.modes)
            if (m.port == port) m.delay += z0;
    return out;
}

PhotonState dove_prism(const PhotonState& state, Port port, double phi0) {
    PhotonState out = state;
    for (Monomial& t : out.terms)
        for (SinglePhotonMode& m : t.modes)
            if (m.port == port) t.coeff *= std::exp(kI * (2.0 * m.oam * phi0));
    return out;
}

PhotonState apply_mask(const PhotonState& state, Port port, const MaskPtr& mask) {
    PhotonState out = state;
    for (Monomial& t : out.terms)
        for (SinglePhotonMode& m : t.modes)
            if (m.port == port) m.mask = sum_mask({m.mask, mask});
    return out;
}

PhotonState port_sector(const PhotonState& state, std::vector<Port> ports) {
    std::sort(ports.begin(), ports.end());
    std::vector<Monomial> kept;
    std::vector<Port> seen;
    for (const Monomial& t : state.terms) {
        seen.clear();
        for (const SinglePhotonMode& m : t.modes) seen.push_back(m.port);
        std::sort(seen.begin(), seen.end());
        if (seen == ports) kept.push_back(t);
    }
    return PhotonState{std::move(kept)};
}

double sector_probability(const PhotonState& state, std::vector<Port> ports,
                          const EvalContext& ctx) {
    const PhotonState sector = port_sector(state, std::move(ports));
    if (sector.terms.empty()) return 0.0;
    return std::real(inner_product(sector, sector, ctx));
}

}  // namespace homsim

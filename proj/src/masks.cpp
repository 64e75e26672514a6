#include "homsim/masks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace homsim {

namespace {
using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

uint64_t next_mask_id() {
    static std::atomic<uint64_t> counter{0};
    return ++counter;  // 0 is reserved for the null mask
}
}  // namespace

PhaseMask::PhaseMask() : id_(next_mask_id()) {}

double AzimuthalPhase::piecewise_at(double phi) const {
    if (values.empty()) return 0.0;
    const double w = wrap_angle(phi);
    auto it = std::upper_bound(breaks.begin(), breaks.end(), w);
    if (it == breaks.begin()) return values.back();  // before the first break: wrap segment
    return values[static_cast<size_t>(it - breaks.begin()) - 1];
}

bool AzimuthalPhase::trivial() const {
    if (linear != 0.0) return false;
    for (double v : values)
        if (v != 0.0) return false;
    return true;
}

namespace {

std::vector<double> merged_breaks(const AzimuthalPhase& a, const AzimuthalPhase& b) {
    std::vector<double> all;
    all.reserve(a.breaks.size() + b.breaks.size());
    all.insert(all.end(), a.breaks.begin(), a.breaks.end());
    all.insert(all.end(), b.breaks.begin(), b.breaks.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-14; }),
              all.end());
    return all;
}

double segment_mid(const std::vector<double>& breaks, size_t i) {
    const double lo = breaks[i];
    const double hi = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks.front() + kTwoPi;
    return 0.5 * (lo + hi);
}

AzimuthalPhase resample(double linear, std::vector<double> breaks,
                        const std::function<double(double)>& piecewise) {
    AzimuthalPhase out;
    out.linear = linear;
    out.breaks = std::move(breaks);
    out.values.resize(out.breaks.size());
    for (size_t i = 0; i < out.breaks.size(); ++i)
        out.values[i] = piecewise(segment_mid(out.breaks, i));
    return out;
}

}  // namespace

AzimuthalPhase azimuthal_sum(const AzimuthalPhase& a, const AzimuthalPhase& b) {
    return resample(a.linear + b.linear, merged_breaks(a, b),
                    [&](double phi) { return a.piecewise_at(phi) + b.piecewise_at(phi); });
}

AzimuthalPhase azimuthal_negate(const AzimuthalPhase& a) {
    AzimuthalPhase out = a;
    out.linear = -out.linear;
    for (double& v : out.values) v = -v;
    return out;
}

AzimuthalPhase azimuthal_mirror(const AzimuthalPhase& a) {
    std::vector<double> breaks;
    breaks.reserve(a.breaks.size());
    for (double b : a.breaks) breaks.push_back(wrap_angle(-b));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.empty()) breaks.push_back(0.0);
    return resample(-a.linear, std::move(breaks),
                    [&](double phi) { return a.piecewise_at(-phi); });
}

std::complex<double> angular_overlap(const AzimuthalPhase& bra, const AzimuthalPhase& ket,
                                     int oam_diff) {
    const double ell = oam_diff + ket.linear - bra.linear;
    const auto breaks = merged_breaks(bra, ket);
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks.front() + kTwoPi;
        const double mid = 0.5 * (lo + hi);
        const double c = ket.piecewise_at(mid) - bra.piecewise_at(mid);
        cplx seg;
        if (std::abs(ell) < 1e-12) {
            seg = hi - lo;
        } else {
            seg = (std::exp(kI * ell * hi) - std::exp(kI * ell * lo)) / (kI * ell);
        }
        acc += std::exp(kI * c) * seg;
    }
    return acc / kTwoPi;
}

std::complex<double> angular_overlap_quadrature(const AzimuthalPhase& bra,
                                                const AzimuthalPhase& ket, int oam_diff,
                                                int total_nodes) {
    const double ell = oam_diff + ket.linear - bra.linear;
    const auto breaks = merged_breaks(bra, ket);
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks.front() + kTwoPi;
        const int n = std::max(8, static_cast<int>(std::lround(total_nodes * (hi - lo) / kTwoPi)));
        const double h = (hi - lo) / n;
        for (int j = 0; j < n; ++j) {
            const double phi = lo + (j + 0.5) * h;
            const double c = ket.piecewise_at(phi) - bra.piecewise_at(phi);
            acc += h * std::exp(kI * (ell * phi + c));
        }
    }
    return acc / kTwoPi;
}

double eval_mask(const MaskPtr& mask, double x, double y) {
    return mask ? mask->eval(x, y) : 0.0;
}

double eval_mask(const MaskPtr& mask, const TransversePoint& p) {
    return eval_mask(mask, p.x, p.y);
}

MaskDecomposition decompose_mask(const MaskPtr& mask) {
    if (!mask) return {};
    return mask->decompose();
}

bool azimuthal_only(const MaskPtr& mask) {
    return !mask || !mask->decompose().finite;
}

namespace {

class ConstantMask final : public PhaseMask {
public:
    explicit ConstantMask(double phase) : phase_(phase) {}
    double eval(double, double) const override { return phase_; }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        d.azimuthal.values = {phase_};
        return d;
    }

private:
    double phase_;
};

class HelicalMask final : public PhaseMask {
public:
    explicit HelicalMask(int m) : m_(m) {}
    double eval(double x, double y) const override { return m_ * std::atan2(y, x); }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        d.azimuthal.linear = m_;
        return d;
    }

private:
    int m_;
};

// 2m same-sized circular sectors, half-open boundaries.
class SectorAMask final : public PhaseMask {
public:
    explicit SectorAMask(int m) : m_(m) {}
    double eval(double x, double y) const override {
        const double phi = wrap_angle(std::atan2(y, x));
        const double u = std::fmod(phi, kTwoPi / m_);
        return u < kPi / m_ ? kPi : 0.0;
    }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        d.azimuthal.breaks.clear();
        d.azimuthal.values.clear();
        for (int k = 0; k < 2 * m_; ++k) {
            d.azimuthal.breaks.push_back(k * kPi / m_);
            d.azimuthal.values.push_back(k % 2 == 0 ? kPi : 0.0);
        }
        return d;
    }

private:
    int m_;
};

// Complement of SectorA with the 0 -> pi boundary dragged by the mismatch
// angle phi0: 0 on [(2j-2)pi/m, (2j-1)pi/m + phi0), pi on the rest.
class SectorBMask final : public PhaseMask {
public:
    SectorBMask(int m, double phi0) : m_(m), phi0_(phi0) {}
    double eval(double x, double y) const override {
        const double phi = wrap_angle(std::atan2(y, x));
        const double u = std::fmod(phi, kTwoPi / m_);
        return u < kPi / m_ + phi0_ ? 0.0 : kPi;
    }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        d.azimuthal.breaks.clear();
        d.azimuthal.values.clear();
        for (int k = 0; k < m_; ++k) {
            d.azimuthal.breaks.push_back(k * kTwoPi / m_);
            d.azimuthal.values.push_back(0.0);
            d.azimuthal.breaks.push_back(k * kTwoPi / m_ + kPi / m_ + phi0_);
            d.azimuthal.values.push_back(kPi);
        }
        return d;
    }

private:
    int m_;
    double phi0_;
};

class ImageMask final : public PhaseMask {
public:
    ImageMask(GrayImage image, double width, PhaseMapping mapping)
        : img_(std::move(image)), width_(width), mapping_(mapping) {
        if (width_ <= 0.0) throw std::invalid_argument("image mask width must be positive");
        pixel_ = width_ / img_.width;
        height_ = pixel_ * img_.height;
    }
    double eval(double x, double y) const override {
        const int col = static_cast<int>(std::floor((x + 0.5 * width_) / pixel_));
        const int row = static_cast<int>(std::floor((0.5 * height_ - y) / pixel_));
        if (col < 0 || col >= img_.width || row < 0 || row >= img_.height) return 0.0;
        return mapping_.gain * img_.at(row, col) + mapping_.offset;
    }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        d.finite = shared_from_this();
        d.finite_radius = 0.5 * std::hypot(width_, height_);
        return d;
    }

private:
    GrayImage img_;
    double width_;
    PhaseMapping mapping_;
    double pixel_;
    double height_;
};

class SumMask final : public PhaseMask {
public:
    explicit SumMask(std::vector<MaskPtr> parts) : parts_(std::move(parts)) {}
    double eval(double x, double y) const override {
        double s = 0.0;
        for (const auto& p : parts_) s += eval_mask(p, x, y);
        return s;
    }
    MaskDecomposition decompose() const override {
        MaskDecomposition d;
        std::vector<MaskPtr> finite_parts;
        for (const auto& p : parts_) {
            MaskDecomposition sub = decompose_mask(p);
            d.azimuthal = azimuthal_sum(d.azimuthal, sub.azimuthal);
            if (sub.finite) {
                finite_parts.push_back(sub.finite);
                d.finite_radius = std::max(d.finite_radius, sub.finite_radius);
            }
        }
        if (finite_parts.size() == 1) {
            d.finite = finite_parts.front();
        } else if (finite_parts.size() > 1) {
            d.finite = std::make_shared<SumMask>(std::move(finite_parts));
        }
        return d;
    }

private:
    std::vector<MaskPtr> parts_;
};

class MirrorMask final : public PhaseMask {
public:
    explicit MirrorMask(MaskPtr inner) : inner_(std::move(inner)) {}
    double eval(double x, double y) const override { return inner_->eval(x, -y); }
    MaskDecomposition decompose() const override {
        MaskDecomposition sub = inner_->decompose();
        MaskDecomposition d;
        d.azimuthal = azimuthal_mirror(sub.azimuthal);
        if (sub.finite) {
            d.finite = std::make_shared<MirrorMask>(sub.finite);
            d.finite_radius = sub.finite_radius;
        }
        return d;
    }
    const MaskPtr& inner() const { return inner_; }

private:
    MaskPtr inner_;
};

class NegateMask final : public PhaseMask {
public:
    explicit NegateMask(MaskPtr inner) : inner_(std::move(inner)) {}
    double eval(double x, double y) const override { return -inner_->eval(x, y); }
    MaskDecomposition decompose() const override {
        MaskDecomposition sub = inner_->decompose();
        MaskDecomposition d;
        d.azimuthal = azimuthal_negate(sub.azimuthal);
        if (sub.finite) {
            d.finite = std::make_shared<NegateMask>(sub.finite);
            d.finite_radius = sub.finite_radius;
        }
        return d;
    }
    const MaskPtr& inner() const { return inner_; }

private:
    MaskPtr inner_;
};

}  // namespace

MaskPtr constant_mask(double phase) { return std::make_shared<ConstantMask>(phase); }

MaskPtr helical_mask(int m) { return std::make_shared<HelicalMask>(m); }

MaskPtr sector_a_mask(int m) {
    if (m < 1) throw std::invalid_argument("sector mask requires m >= 1");
    return std::make_shared<SectorAMask>(m);
}

MaskPtr sector_b_mask(int m, double phi0) {
    if (m < 1) throw std::invalid_argument("sector mask requires m >= 1");
    if (phi0 < 0.0 || phi0 >= kPi / m)
        throw std::invalid_argument("sector offset must lie in [0, pi/m)");
    return std::make_shared<SectorBMask>(m, phi0);
}

MaskPtr sum_mask(std::vector<MaskPtr> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), nullptr), parts.end());
    if (parts.empty()) return nullptr;
    if (parts.size() == 1) return parts.front();
    return std::make_shared<SumMask>(std::move(parts));
}

MaskPtr mirror_mask(MaskPtr inner) {
    if (!inner) return nullptr;
    if (auto* m = dynamic_cast<const MirrorMask*>(inner.get())) return m->inner();
    return std::make_shared<MirrorMask>(std::move(inner));
}

MaskPtr negate_mask(MaskPtr inner) {
    if (!inner) return nullptr;
    if (auto* n = dynamic_cast<const NegateMask*>(inner.get())) return n->inner();
    return std::make_shared<NegateMask>(std::move(inner));
}

MaskPtr conjugate_pair(const MaskPtr& mask_a) { return mirror_mask(negate_mask(mask_a)); }

MaskPtr image_mask(GrayImage image, double width, PhaseMapping mapping) {
    return std::make_shared<ImageMask>(std::move(image), width, mapping);
}

MaskPtr image_mask_from_file(const std::string& path, double width, PhaseMapping mapping) {
    return image_mask(read_pgm(path), width, mapping);
}

GrayImage render_mask(const MaskPtr& mask, double width, int pixels, PhaseMapping mapping) {
    if (pixels < 1) throw std::invalid_argument("render_mask: need at least one pixel");
    GrayImage img;
    img.width = pixels;
    img.height = pixels;
    img.pixels.resize(static_cast<size_t>(pixels) * pixels);
    const double step = width / pixels;
    for (int row = 0; row < pixels; ++row) {
        for (int col = 0; col < pixels; ++col) {
            const double x = -0.5 * width + (col + 0.5) * step;
            const double y = 0.5 * width - (row + 0.5) * step;
            const double phase = eval_mask(mask, x, y);
            const double v = std::round((phase - mapping.offset) / mapping.gain);
            img.pixels[static_cast<size_t>(row) * pixels + col] =
                static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
        }
    }
    return img;
}

}  // namespace homsim

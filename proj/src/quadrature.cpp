#include "homsim/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace homsim {
namespace {

// Nodes/weights on [-1, 1], computed once per order by Newton iteration on
// the Legendre recurrence.
const QuadratureRule& reference_rule(int n) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    const QuadratureRule& ref = reference_rule(n);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + hw * ref.nodes[i];
        rule.weights[i] = hw * ref.weights[i];
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(int order, int panels, double a, double b) {
    if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: need at least one panel");
    const QuadratureRule& ref = reference_rule(order);
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<size_t>(order) * panels);
    rule.weights.reserve(static_cast<size_t>(order) * panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double hw = 0.5 * h;
        for (int i = 0; i < order; ++i) {
            rule.nodes.push_back(mid + hw * ref.nodes[i]);
            rule.weights.push_back(hw * ref.weights[i]);
        }
    }
    return rule;
}

QuadratureRule midpoint_rule(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("midpoint_rule: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = a + (i + 0.5) * h;
        rule.weights[i] = h;
    }
    return rule;
}

}  // namespace homsim

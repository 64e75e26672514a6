#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace homsim {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite Gauss-Legendre rule: [a, b] split into `panels` equal panels,
/// `order` nodes per panel. Suited to oscillatory integrands when the panel
/// width is at most half an oscillation period.
QuadratureRule composite_gauss_legendre(int order, int panels, double a, double b);

/// Midpoint rule with n uniform nodes on [a, b].
QuadratureRule midpoint_rule(int n, double a, double b);

}  // namespace homsim

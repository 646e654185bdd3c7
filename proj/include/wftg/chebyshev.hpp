#ifndef WFTG_CHEBYSHEV_HPP
#define WFTG_CHEBYSHEV_HPP

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "wftg/graph.hpp"

namespace wftg {

/// Truncated Chebyshev expansion on [0, pi]:
///   T^n(xi) = c_0/2 + sum_{k=1}^{n-1} c_k T_k(xi)
/// with T_0 = 1, T_1(xi) = (xi - pi/2)/(pi/2),
/// T_k = (4/pi)(xi - pi/2) T_{k-1} - T_{k-2}.
struct ChebApprox {
    std::vector<double> coeffs; // c_0 .. c_{n-1}

    int order_count() const { return static_cast<int>(coeffs.size()); }
};

/// Coefficients c_k = (2/pi) * int_0^pi cos(k theta) g(pi/2 (cos theta + 1)) dtheta,
/// computed by composite trapezoid with quad_points uniform subintervals.
ChebApprox cheb_coeffs(const std::function<double(double)>& g, int n, int quad_points = 4096);

/// Value of the truncated series at xi. Throws DomainViolation when xi lies
/// outside [0, pi] by more than 1e-9.
double cheb_eval(const ChebApprox& approx, double xi);

/// T^n(scale * L) f via the three-term matrix recurrence; exactly n-1
/// applications of L and no dense intermediate. The caller guarantees
/// scale * lambda_max(L) <= pi (enforced upstream at plan creation).
Eigen::VectorXd cheb_apply(const ChebApprox& approx, const SparseOperator& l, double scale,
                           const Eigen::VectorXd& f);

/// Sup-error max_grid |T^n(xi) - g(xi)| over a uniform grid on [0, pi].
double cheb_sup_error(const ChebApprox& approx, const std::function<double(double)>& g,
                      int grid_size);

} // namespace wftg

#endif // WFTG_CHEBYSHEV_HPP

#include "wftg/chebyshev.hpp"

#include <cmath>

namespace wftg {

ChebApprox cheb_coeffs(const std::function<double(double)>& g, int n, int quad_points) {
    if (n < 1) throw InputError("order count n must be >= 1");
    if (quad_points < 4 * n)
        throw InputError("quad_points must be at least 4n");

    // Sample g once; the integrand for every k reuses the same values.
    const int q = quad_points;
    std::vector<double> gv(static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) {
        const double theta = M_PI * static_cast<double>(i) / static_cast<double>(q);
        gv[static_cast<std::size_t>(i)] = g(M_PI / 2 * (std::cos(theta) + 1.0));
    }

    ChebApprox approx;
    approx.coeffs.resize(static_cast<std::size_t>(n));
    const double h = M_PI / static_cast<double>(q);
    for (int k = 0; k < n; ++k) {
        double sum = 0.5 * (std::cos(0.0) * gv.front() + std::cos(k * M_PI) * gv.back());
        for (int i = 1; i < q; ++i) {
            const double theta = M_PI * static_cast<double>(i) / static_cast<double>(q);
            sum += std::cos(k * theta) * gv[static_cast<std::size_t>(i)];
        }
        approx.coeffs[static_cast<std::size_t>(k)] = (2.0 / M_PI) * h * sum;
    }
    return approx;
}

double cheb_eval(const ChebApprox& approx, double xi) {
    if (xi < -1e-9 || xi > M_PI + 1e-9)
        throw DomainViolation("argument " + std::to_string(xi) + " outside [0, pi]");
    const auto& c = approx.coeffs;
    const int n = approx.order_count();
    double acc = 0.5 * c[0];
    if (n == 1) return acc;
    double tkm2 = 1.0;
    double tkm1 = (xi - M_PI / 2) / (M_PI / 2);
    acc += c[1] * tkm1;
    for (int k = 2; k < n; ++k) {
        const double tk = (4.0 / M_PI) * (xi - M_PI / 2) * tkm1 - tkm2;
        acc += c[static_cast<std::size_t>(k)] * tk;
        tkm2 = tkm1;
        tkm1 = tk;
    }
    return acc;
}

Eigen::VectorXd cheb_apply(const ChebApprox& approx, const SparseOperator& l, double scale,
                           const Eigen::VectorXd& f) {
    if (f.size() != l.dimension())
        throw DimensionMismatch("signal length " + std::to_string(f.size()) +
                                " does not match operator dimension " +
                                std::to_string(l.dimension()));
    const auto& c = approx.coeffs;
    const int n = approx.order_count();

    Eigen::VectorXd acc = 0.5 * c[0] * f;
    if (n == 1) return acc;

    // Tbar_1 f = (2/pi)(sL - (pi/2) I) f
    Eigen::VectorXd tkm2 = f;
    Eigen::VectorXd tkm1 = (2.0 / M_PI) * (scale * l.apply(f) - (M_PI / 2) * f);
    acc += c[1] * tkm1;
    for (int k = 2; k < n; ++k) {
        Eigen::VectorXd tk =
            (4.0 / M_PI) * (scale * l.apply(tkm1) - (M_PI / 2) * tkm1) - tkm2;
        acc += c[static_cast<std::size_t>(k)] * tk;
        tkm2 = std::move(tkm1);
        tkm1 = std::move(tk);
    }
    return acc;
}

double cheb_sup_error(const ChebApprox& approx, const std::function<double(double)>& g,
                      int grid_size) {
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double xi = M_PI * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        worst = std::max(worst, std::abs(cheb_eval(approx, xi) - g(xi)));
    }
    return worst;
}

} // namespace wftg

#ifndef WFTG_MASKS_HPP
#define WFTG_MASKS_HPP

#include <functional>
#include <string>

#include "wftg/errors.hpp"

namespace wftg {

/// A family of r+1 real scalar filters a_0..a_r on [0, pi]. a_0 is the
/// low-pass mask; the family is expected to satisfy the partition identity
/// sum_j a_j(xi)^2 = 1 (checked by verify_uep, not enforced on construction).
class MaskFamily {
public:
    using EvalFn = std::function<double(int, double)>;

    MaskFamily(std::string name, int band_count, EvalFn eval);

    static MaskFamily haar();
    static MaskFamily linear();
    static MaskFamily quadratic();
    static MaskFamily bspline(int r);

    /// Accepts "haar", "linear", "quadratic", "bspline:<r>".
    static MaskFamily parse(const std::string& name);

    const std::string& name() const { return name_; }
    int band_count() const { return r_; } // r: high-pass masks are 1..r

    /// a_j(xi) for j in 0..r, xi in [0, pi].
    double eval(int j, double xi) const;

private:
    std::string name_;
    int r_;
    EvalFn eval_;
};

/// Max over a uniform grid on [0, pi] of |sum_j a_j(xi)^2 - 1|.
double verify_uep(const MaskFamily& family, int grid_size);

} // namespace wftg

#endif // WFTG_MASKS_HPP

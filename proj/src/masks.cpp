#include "wftg/masks.hpp"

#include <cmath>

namespace wftg {

MaskFamily::MaskFamily(std::string name, int band_count, EvalFn eval)
    : name_(std::move(name)), r_(band_count), eval_(std::move(eval)) {
    if (r_ < 1) throw InputError("mask family needs at least one high-pass band");
    if (!eval_) throw InputError("mask family needs an evaluation function");
}

double MaskFamily::eval(int j, double xi) const {
    if (j < 0 || j > r_)
        throw InputError("mask index " + std::to_string(j) + " outside 0.." + std::to_string(r_));
    return eval_(j, xi);
}

MaskFamily MaskFamily::haar() {
    return MaskFamily("haar", 1, [](int j, double xi) {
        return j == 0 ? std::cos(xi / 2) : std::sin(xi / 2);
    });
}

MaskFamily MaskFamily::linear() {
    return MaskFamily("linear", 2, [](int j, double xi) {
        switch (j) {
        case 0: return std::cos(xi / 2) * std::cos(xi / 2);
        case 1: return std::sin(xi) / std::sqrt(2.0);
        default: return std::sin(xi / 2) * std::sin(xi / 2);
        }
    });
}

MaskFamily MaskFamily::quadratic() {
    return MaskFamily("quadratic", 3, [](int j, double xi) {
        const double c = std::cos(xi / 2);
        const double s = std::sin(xi / 2);
        switch (j) {
        case 0: return c * c * c;
        case 1: return std::sqrt(3.0) * s * c * c;
        case 2: return std::sqrt(3.0) * s * s * c;
        default: return s * s * s;
        }
    });
}

namespace {

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return v;
}

} // namespace

MaskFamily MaskFamily::bspline(int r) {
    if (r < 1) throw InputError("bspline order must be >= 1");
    return MaskFamily("bspline:" + std::to_string(r), r, [r](int j, double xi) {
        // a_j = sqrt(C(r,j)) sin^j(xi/2) cos^{r-j}(xi/2)
        const double c = std::cos(xi / 2);
        const double s = std::sin(xi / 2);
        return std::sqrt(binomial(r, j)) * std::pow(s, j) * std::pow(c, r - j);
    });
}

MaskFamily MaskFamily::parse(const std::string& name) {
    if (name == "haar") return haar();
    if (name == "linear") return linear();
    if (name == "quadratic") return quadratic();
    if (name.rfind("bspline:", 0) == 0) {
        try {
            const int r = std::stoi(name.substr(8));
            return bspline(r);
        } catch (const std::logic_error&) {
            throw UnknownFamily("bad bspline order in '" + name + "'");
        }
    }
    throw UnknownFamily("unknown mask family '" + name + "'");
}

double verify_uep(const MaskFamily& family, int grid_size) {
    if (grid_size < 2) throw InputError("grid_size must be >= 2");
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double xi = M_PI * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        double sum = 0.0;
        for (int j = 0; j <= family.band_count(); ++j) {
            const double v = family.eval(j, xi);
            sum += v * v;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

} // namespace wftg

#include "kanids/spline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kanids/error.hpp"

namespace kanids {
namespace {

// Knot span index s with knots[s] <= x < knots[s+1], restricted to the
// interior spans [degree, degree + intervals - 1]. x must already be clamped.
int find_span(const SplineGrid& grid, double x) {
    const int lo = grid.degree;
    const int hi = grid.degree + grid.intervals - 1;
    if (x >= grid.knots[static_cast<std::size_t>(hi)]) return hi;
    if (x <= grid.knots[static_cast<std::size_t>(lo)]) return lo;
    int low = lo;
    int high = hi;
    while (low < high) {
        const int mid = (low + high + 1) / 2;
        if (grid.knots[static_cast<std::size_t>(mid)] <= x) {
            low = mid;
        } else {
            high = mid - 1;
        }
    }
    return low;
}

// Triangular Cox-de Boor scheme: writes the degree+1 nonzero basis values
// B_{span-degree..span, degree}(x) into vals.
void nonzero_basis(const SplineGrid& grid, int span, double x, int degree, double* vals) {
    const double* t = grid.knots.data();
    vals[0] = 1.0;
    double left[16];
    double right[16];
    for (int j = 1; j <= degree; ++j) {
        left[j] = x - t[span + 1 - j];
        right[j] = t[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double tmp = vals[r] / (right[r + 1] + left[j - r]);
            vals[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        vals[j] = saved;
    }
}

void check_degree_capacity(const SplineGrid& grid) {
    if (grid.degree > 15) {
        fail(ErrorCode::config, "invalid-degree: degree " + std::to_string(grid.degree) +
                                    " exceeds the supported maximum of 15");
    }
}

} // namespace

SplineGrid make_grid(double range_min, double range_max, int intervals, int degree) {
    if (!(range_min < range_max)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "invalid-range: range_min %g must be below range_max %g",
                      range_min, range_max);
        fail(ErrorCode::config, buf);
    }
    if (intervals < 1) {
        fail(ErrorCode::config, "invalid-intervals: need at least one grid interval");
    }
    if (degree < 0) {
        fail(ErrorCode::config, "invalid-degree: degree must be non-negative");
    }
    SplineGrid grid;
    grid.range_min = range_min;
    grid.range_max = range_max;
    grid.intervals = intervals;
    grid.degree = degree;
    check_degree_capacity(grid);
    const double step = (range_max - range_min) / intervals;
    grid.knots.resize(static_cast<std::size_t>(intervals + 2 * degree + 1));
    for (int i = 0; i < static_cast<int>(grid.knots.size()); ++i) {
        grid.knots[static_cast<std::size_t>(i)] = range_min + (i - degree) * step;
    }
    return grid;
}

double clamp_to_range(const SplineGrid& grid, double x) {
    return std::clamp(x, grid.range_min, grid.range_max);
}

void basis_eval_into(const SplineGrid& grid, double x, std::span<double> out) {
    check_degree_capacity(grid);
    const double xc = clamp_to_range(grid, x);
    const int span = find_span(grid, xc);
    std::fill(out.begin(), out.end(), 0.0);
    double vals[16];
    nonzero_basis(grid, span, xc, grid.degree, vals);
    const int first = span - grid.degree;
    for (int j = 0; j <= grid.degree; ++j) {
        out[static_cast<std::size_t>(first + j)] = vals[j];
    }
}

void basis_eval_deriv_into(const SplineGrid& grid, double x, std::span<double> out) {
    check_degree_capacity(grid);
    std::fill(out.begin(), out.end(), 0.0);
    if (x < grid.range_min || x > grid.range_max) {
        return; // clamped region: constant extension, zero slope
    }
    const int k = grid.degree;
    if (k == 0) {
        return; // piecewise constant
    }
    const int span = find_span(grid, x);
    // Degree k-1 bases on the same knots: B_{span-k+1..span, k-1} are the
    // nonzero ones at x.
    double lower[16];
    nonzero_basis(grid, span, x, k - 1, lower);
    const double* t = grid.knots.data();
    auto lower_at = [&](int i) -> double {
        const int offset = i - (span - k + 1);
        return (offset >= 0 && offset <= k - 1) ? lower[offset] : 0.0;
    };
    // B'_{i,k} = k * (B_{i,k-1}/(t_{i+k}-t_i) - B_{i+1,k-1}/(t_{i+k+1}-t_{i+1}))
    for (int i = span - k; i <= span; ++i) {
        const double den_left = t[i + k] - t[i];
        const double den_right = t[i + k + 1] - t[i + 1];
        out[static_cast<std::size_t>(i)] =
            k * (lower_at(i) / den_left - lower_at(i + 1) / den_right);
    }
}

std::vector<double> basis_eval(const SplineGrid& grid, double x) {
    std::vector<double> out(static_cast<std::size_t>(grid.basis_count()));
    basis_eval_into(grid, x, out);
    return out;
}

std::vector<double> basis_eval_deriv(const SplineGrid& grid, double x) {
    std::vector<double> out(static_cast<std::size_t>(grid.basis_count()));
    basis_eval_deriv_into(grid, x, out);
    return out;
}

namespace {

template <class Coeff>
double spline_eval_impl(const SplineGrid& grid, std::span<const Coeff> coeffs, double x) {
    if (static_cast<int>(coeffs.size()) != grid.basis_count()) {
        fail(ErrorCode::config,
             "length-mismatch: " + std::to_string(coeffs.size()) + " coefficients for a grid with " +
                 std::to_string(grid.basis_count()) + " basis functions");
    }
    const double xc = clamp_to_range(grid, x);
    const int span = find_span(grid, xc);
    double vals[16];
    nonzero_basis(grid, span, xc, grid.degree, vals);
    const int first = span - grid.degree;
    double acc = 0.0;
    for (int j = 0; j <= grid.degree; ++j) {
        acc += static_cast<double>(coeffs[static_cast<std::size_t>(first + j)]) * vals[j];
    }
    return acc;
}

} // namespace

double spline_eval(const SplineGrid& grid, std::span<const double> coeffs, double x) {
    return spline_eval_impl(grid, coeffs, x);
}

double spline_eval(const SplineGrid& grid, std::span<const float> coeffs, double x) {
    return spline_eval_impl(grid, coeffs, x);
}

double spline_eval_deriv(const SplineGrid& grid, std::span<const float> coeffs, double x) {
    if (static_cast<int>(coeffs.size()) != grid.basis_count()) {
        fail(ErrorCode::config,
             "length-mismatch: " + std::to_string(coeffs.size()) + " coefficients for a grid with " +
                 std::to_string(grid.basis_count()) + " basis functions");
    }
    if (x < grid.range_min || x > grid.range_max) {
        return 0.0;
    }
    const int k = grid.degree;
    if (k == 0) {
        return 0.0;
    }
    const int span = find_span(grid, x);
    double lower[16];
    nonzero_basis(grid, span, x, k - 1, lower);
    const double* t = grid.knots.data();
    auto lower_at = [&](int i) -> double {
        const int offset = i - (span - k + 1);
        return (offset >= 0 && offset <= k - 1) ? lower[offset] : 0.0;
    };
    double acc = 0.0;
    for (int i = span - k; i <= span; ++i) {
        const double deriv = k * (lower_at(i) / (t[i + k] - t[i]) - lower_at(i + 1) / (t[i + k + 1] - t[i + 1]));
        acc += static_cast<double>(coeffs[static_cast<std::size_t>(i)]) * deriv;
    }
    return acc;
}

} // namespace kanids

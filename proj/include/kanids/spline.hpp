#pragma once

#include <span>
#include <vector>

namespace kanids {

/// Uniform B-spline grid shared by every edge of a layer.
///
/// The knot vector extends the uniform interior spacing by `degree` extra
/// knots on each side, so a grid with G intervals and degree k carries
/// G + 2k + 1 knots and spans G + k basis functions. No knot is repeated,
/// which keeps every Cox-de Boor denominator positive.
struct SplineGrid {
    double range_min = -3.0;
    double range_max = 3.0;
    int intervals = 5; // G
    int degree = 3;    // k
    std::vector<double> knots;

    int basis_count() const { return intervals + degree; }
    double step() const { return (range_max - range_min) / intervals; }
};

SplineGrid make_grid(double range_min, double range_max, int intervals, int degree);

// Inputs outside [range_min, range_max] are clamped to the boundary.
double clamp_to_range(const SplineGrid& grid, double x);

/// All basis values at x (length basis_count). At most degree + 1 entries
/// are nonzero and they are contiguous; values are in [0, 1] and sum to 1
/// for x inside the range.
std::vector<double> basis_eval(const SplineGrid& grid, double x);

/// dB_i/dx at x. Zero vector for x strictly outside the range, matching the
/// clamping convention.
std::vector<double> basis_eval_deriv(const SplineGrid& grid, double x);

// Allocation-free variants; `out` must have exactly basis_count entries.
void basis_eval_into(const SplineGrid& grid, double x, std::span<double> out);
void basis_eval_deriv_into(const SplineGrid& grid, double x, std::span<double> out);

/// s(x) = sum_i coeffs[i] * B_i(x), accumulated in double.
double spline_eval(const SplineGrid& grid, std::span<const double> coeffs, double x);
double spline_eval(const SplineGrid& grid, std::span<const float> coeffs, double x);

/// ds/dx at x (zero outside the range).
double spline_eval_deriv(const SplineGrid& grid, std::span<const float> coeffs, double x);

} // namespace kanids

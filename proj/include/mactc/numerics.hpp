#pragma once

#include <functional>
#include <optional>

namespace mactc::num {

using Fn = std::function<double(double)>;

struct Extremum {
    double x = 0.0;
    double fx = 0.0;
};

// Golden-section maximization of a unimodal function on [lo, hi].
Extremum golden_max(const Fn& f, double lo, double hi, int iterations = 80);

// Bisection on a bracket with f(lo), f(hi) of opposite sign (or zero).
// Stops when the bracket is below tol or after max_iter halvings.
double bisect(const Fn& f, double lo, double hi, double tol = 1e-10, int max_iter = 200);

// Scans [lo, hi] on n uniform cells for the first sign change of f (NaN
// samples break the scan chain) and refines it by bisection.
std::optional<double> scan_root(const Fn& f, double lo, double hi, int n = 64, double tol = 1e-10,
                                int max_iter = 200);

// Maximizer of a concave function on [lo, hi] given its derivative df.
// Returns an endpoint when df does not change sign.
double concave_argmax(const Fn& df, double lo, double hi, double tol = 1e-13);

// Larger root of a x^2 - b x + c = 0; nullopt when the discriminant is negative.
std::optional<double> larger_root(double a, double b, double c);

}  // namespace mactc::num

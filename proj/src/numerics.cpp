#include "mactc/numerics.hpp"

#include <cmath>

namespace mactc::num {

namespace {
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

bool opposite(double a, double b) { return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0); }
}  // namespace

Extremum golden_max(const Fn& f, double lo, double hi, int iterations) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iterations && b - a > 0.0; ++i) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        }
    }
    // The endpoints are candidates too; golden never samples them.
    Extremum best{0.5 * (a + b), f(0.5 * (a + b))};
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx > best.fx) best = {x, fx};
    }
    return best;
}

double bisect(const Fn& f, double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<double> scan_root(const Fn& f, double lo, double hi, int n, double tol, int max_iter) {
    double px = lo, pf = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (std::isfinite(pf) && std::isfinite(fx) && opposite(pf, fx)) {
            if (pf == 0.0) return px;
            if (fx == 0.0) return x;
            return bisect(f, px, x, tol, max_iter);
        }
        px = x;
        pf = fx;
    }
    return std::nullopt;
}

double concave_argmax(const Fn& df, double lo, double hi, double tol) {
    if (!(df(lo) > 0.0)) return lo;
    if (!(df(hi) < 0.0)) return hi;
    double a = lo, b = hi;
    while (b - a > tol * (1.0 + std::abs(b))) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        if (df(m) > 0.0)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

std::optional<double> larger_root(double a, double b, double c) {
    const double disc = b * b - 4.0 * a * c;
    if (!(disc >= 0.0) || a == 0.0) return std::nullopt;
    return (b + std::sqrt(disc)) / (2.0 * a);
}

}  // namespace mactc::num

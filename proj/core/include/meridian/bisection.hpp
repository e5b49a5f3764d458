#pragma once

#include <cmath>
#include <utility>

#include "meridian/error.hpp"

namespace meridian {

struct BisectionResult {
    double root = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
};

/// Plain bisection on a sign-changing bracket. Stops when the bracket is
/// narrower than xtol, when f hits zero exactly or after max_iter halvings.
template <class Fn>
BisectionResult bisect(Fn&& f, double lo, double hi, double xtol = 1e-14, int max_iter = 200) {
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo > 0) == (f_hi > 0)) {
        if (f_lo == 0.0) return {lo, lo, lo, 0};
        if (f_hi == 0.0) return {hi, hi, hi, 0};
        throw Error(ErrorCode::Precondition, "bisect: interval does not bracket a sign change");
    }
    BisectionResult r{0.5 * (lo + hi), lo, hi, 0};
    while (r.iterations < max_iter && (r.hi - r.lo) > xtol) {
        const double mid = 0.5 * (r.lo + r.hi);
        const double f_mid = f(mid);
        ++r.iterations;
        if (f_mid == 0.0) {
            r.lo = r.hi = mid;
            break;
        }
        if ((f_mid > 0) == (f_lo > 0)) {
            r.lo = mid;
            f_lo = f_mid;
        } else {
            r.hi = mid;
        }
    }
    r.root = 0.5 * (r.lo + r.hi);
    return r;
}

}  // namespace meridian

#pragma once

#include <cmath>
#include <random>

#include <doctest.h>

#include "meridian/error.hpp"
#include "meridian/geometry.hpp"

namespace testing_support {

// distance on the circle, modulo `period`
inline double circ_dist(double u, double v, double period = meridian::two_pi) {
    const double d = std::fmod(std::abs(u - v), period);
    return std::min(d, period - d);
}

template <class Fn>
meridian::ErrorCode error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const meridian::Error& e) {
        return e.code();
    }
    FAIL("expected meridian::Error");
    return meridian::ErrorCode::Internal;
}

// Shapes with every arc at least `margin` away from 0 and pi.
inline meridian::Shape random_shape(std::mt19937_64& rng, double margin = 0.05) {
    std::uniform_real_distribution<double> u(-meridian::pi, meridian::pi);
    for (;;) {
        const meridian::Shape s{u(rng), u(rng)};
        const auto arcs = meridian::arc_angles_unchecked(s);
        bool ok = true;
        for (double v : arcs.values()) ok = ok && v > margin && v < meridian::pi - margin;
        if (ok) return s;
    }
}

}  // namespace testing_support

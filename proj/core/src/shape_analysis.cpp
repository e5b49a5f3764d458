#include "meridian/shape_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "meridian/error.hpp"

namespace meridian {

namespace {

// c_ij sin(theta_ji) U'(cos theta_ij) with the cotangent U'(cos t) = 1/|sin t|^3,
// evaluated from sin t to avoid cancellation in 1 - cos^2 near collisions.
double pair_force(const PotentialModel& model, int i, int j, double theta_ji) {
    const double c = std::cos(theta_ji);
    if (std::abs(c) >= singularity_guard) {
        throw Error(ErrorCode::Singular,
                    std::string(c > 0 ? "collision" : "antipodal pair") + " of bodies " +
                        std::to_string(i + 1) + " and " + std::to_string(j + 1));
    }
    const double s = std::sin(theta_ji);
    const double as = std::abs(s);
    double f = pair_coupling(model, i, j) * s / (as * as * as);
    if (model.variant == PotentialVariant::RepulsiveCotangent) f = -f;
    return f;
}

double signed_square(double s) { return s * std::abs(s); }

}  // namespace

double ShapeKinetics::abs_f_sum() const { return std::abs(F12) + std::abs(F23) + std::abs(F31); }

double amplitude(const Shape& shape, const PotentialModel& model) {
    const double re = model.masses[0] + model.masses[1] * std::cos(2.0 * shape.a) +
                      model.masses[2] * std::cos(2.0 * shape.x);
    const double im = model.masses[1] * std::sin(2.0 * shape.a) + model.masses[2] * std::sin(2.0 * shape.x);
    return std::hypot(re, im);
}

ShapeKinetics kinetics(const Shape& shape, const PotentialModel& model) {
    model.validate();
    const double t21 = shape.a;
    const double t32 = shape.x - shape.a;
    const double t13 = -shape.x;
    const auto& m = model.masses;

    ShapeKinetics k;
    k.F12 = pair_force(model, 0, 1, t21);
    k.F23 = pair_force(model, 1, 2, t32);
    k.F31 = pair_force(model, 2, 0, t13);
    k.G12 = m[0] * m[1] * std::sin(2.0 * t21);
    k.G23 = m[1] * m[2] * std::sin(2.0 * t32);
    k.G31 = m[2] * m[0] * std::sin(2.0 * t13);

    const double re = m[0] + m[1] * std::cos(2.0 * shape.a) + m[2] * std::cos(2.0 * shape.x);
    const double im = m[1] * std::sin(2.0 * shape.a) + m[2] * std::sin(2.0 * shape.x);
    k.A = std::hypot(re, im);
    if (k.A > 0.0) {
        k.cos_2alpha = re / k.A;
        k.sin_2alpha = im / k.A;
    }
    return k;
}

namespace {

double determinant(const ShapeKinetics& k) {
    return k.g_diff_12_23() * k.f_diff_31_12() - k.g_diff_31_12() * k.f_diff_12_23();
}

}  // namespace

double evaluate_f(const Shape& shape, const PotentialModel& model) {
    const ShapeKinetics k = kinetics(shape, model);
    if (k.A < a_zero_threshold) {
        throw Error(ErrorCode::AZero, "evaluate_f: A = 0 for this shape; use resolve_a_zero");
    }
    return determinant(k);
}

double normalized_f(const Shape& shape, const PotentialModel& model) {
    const ShapeKinetics k = kinetics(shape, model);
    if (k.A < a_zero_threshold) {
        throw Error(ErrorCode::AZero, "normalized_f: A = 0 for this shape; use resolve_a_zero");
    }
    return determinant(k) / k.abs_f_sum();
}

double evaluate_g(const Shape& shape) {
    const double a = shape.a;
    const double x = shape.x;
    const double sx = signed_square(std::sin(x));
    const double sa = signed_square(std::sin(a));
    const double sxa = signed_square(std::sin(x - a));
    return sx * (std::sin(2.0 * x) + std::sin(2.0 * a)) * (sxa - sa) -
           sxa * (std::sin(2.0 * a) - std::sin(2.0 * (x - a))) * (sa + sx);
}

double evaluate_h(double a, double y) {
    const double ca = std::cos(a);
    const double s2a = std::sin(2.0 * a);
    return -ca * std::cos(4.0 * y) + 2.0 * (2.0 * std::cos(2.0 * a) + s2a * s2a) * std::cos(2.0 * y) -
           ca * (std::cos(4.0 * a) - 5.0 * std::cos(2.0 * a) + 7.0);
}

RotationRate omega_and_s(const Shape& shape, const PotentialModel& model, double tol) {
    const ShapeKinetics k = kinetics(shape, model);
    if (k.A < a_zero_threshold) {
        throw Error(ErrorCode::AZero, "omega_and_s: A = 0 for this shape; use resolve_a_zero");
    }
    RotationRate out;
    const double f_scale = k.abs_f_sum();
    out.f_normalized = determinant(k) / f_scale;
    if (!(std::abs(out.f_normalized) < tol)) {
        out.kind = RotationKind::NotARotator;
        return out;
    }

    const std::array<double, 3> gd{k.g_diff_12_23(), k.g_diff_23_31(), k.g_diff_31_12()};
    const std::array<double, 3> fd{k.f_diff_12_23(), k.f_diff_23_31(), k.f_diff_31_12()};
    const auto best = static_cast<std::size_t>(
        std::max_element(gd.begin(), gd.end(),
                         [](double l, double r) { return std::abs(l) < std::abs(r); }) -
        gd.begin());
    const double m_max = *std::max_element(model.masses.begin(), model.masses.end());
    const double g_floor = 1e-12 * m_max * m_max;
    const double f_max = std::max({std::abs(fd[0]), std::abs(fd[1]), std::abs(fd[2])});

    if (std::abs(gd[best]) <= g_floor) {
        // Every G difference vanishes: either all forces balance (omega = 0)
        // or the ratio would need omega = infinity.
        out.kind = f_max <= 1e-12 * f_scale ? RotationKind::FixedPoint : RotationKind::NotARotator;
        return out;
    }
    out.ratio = fd[best] / gd[best];
    if (out.ratio == 0.0) {
        out.kind = RotationKind::FixedPoint;
        return out;
    }
    out.kind = RotationKind::Rotator;
    out.s = out.ratio > 0.0 ? 1 : -1;
    out.omega_sq = 2.0 * k.A * std::abs(out.ratio);
    return out;
}

}  // namespace meridian

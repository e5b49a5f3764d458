#include "meridian/translation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "meridian/error.hpp"
#include "meridian/shape_analysis.hpp"

namespace meridian {

namespace {

// Representative of theta1 mod pi in (-pi/2, pi/2].
double half_angle_canonical(double sin_2t, double cos_2t) {
    double t = 0.5 * std::atan2(sin_2t, cos_2t);
    if (t <= -0.5 * pi) t += pi;
    return t;
}

Configuration place(const Shape& shape, double theta1) {
    Configuration cfg;
    cfg.theta1 = normalize_angle(theta1);
    cfg.theta2 = normalize_angle(theta1 + shape.a);
    cfg.theta3 = normalize_angle(theta1 + shape.x);
    return cfg;
}

double weighted_sin2_sum(const Configuration& cfg, const PotentialModel& model) {
    const auto th = cfg.thetas();
    double sum = 0.0;
    for (std::size_t k = 0; k < 3; ++k) sum += model.masses[k] * std::sin(2.0 * th[k]);
    return sum;
}

bool near(double u, double v, double tol) { return std::abs(u - v) < tol; }

// A vanishes for equal masses only on the equilateral triangle and on the
// isosceles triangle with equal arcs pi/3.
bool is_enumerated_a_zero_shape(const Shape& shape, bool& equilateral) {
    auto arcs = arc_angles_unchecked(shape).values();
    std::sort(arcs.begin(), arcs.end());
    const double third = pi / 3.0;
    equilateral = near(arcs[0], 2 * third, a_zero_match_tol) &&
                  near(arcs[2], 2 * third, a_zero_match_tol);
    const bool iso = near(arcs[0], third, a_zero_match_tol) &&
                     near(arcs[1], third, a_zero_match_tol) &&
                     near(arcs[2], 2 * third, a_zero_match_tol);
    return equilateral || iso;
}

}  // namespace

AxisProjection axis_projection(const Shape& shape, const PotentialModel& model) {
    const auto& m = model.masses;
    const double re = m[0] + m[1] * std::cos(2.0 * shape.a) + m[2] * std::cos(2.0 * shape.x);
    const double im = m[1] * std::sin(2.0 * shape.a) + m[2] * std::sin(2.0 * shape.x);
    AxisProjection p;
    p.A = std::hypot(re, im);
    if (p.A > 0.0) {
        p.cos_2alpha = re / p.A;
        p.sin_2alpha = im / p.A;
    }
    return p;
}

Configuration shape_to_configuration(const Shape& shape, int s, double omega_sq,
                                     const PotentialModel& model) {
    if (s != 1 && s != -1) throw Error(ErrorCode::Precondition, "s must be +1 or -1");
    if (!(omega_sq >= 0.0) || !std::isfinite(omega_sq)) {
        throw Error(ErrorCode::Precondition, "omega_sq must be finite and non-negative");
    }
    model.validate();
    const AxisProjection p = axis_projection(shape, model);
    if (p.A < a_zero_threshold) {
        throw Error(ErrorCode::AZero, "shape_to_configuration: A = 0; use resolve_a_zero");
    }
    // 2 theta1 = -2 alpha (s = +1) or -2 alpha + pi (s = -1)
    const double cos_2t1 = s * p.cos_2alpha;
    const double sin_2t1 = -s * p.sin_2alpha;
    Configuration cfg = place(shape, half_angle_canonical(sin_2t1, cos_2t1));
    cfg.omega_sq = omega_sq;
    cfg.s = s;

    const double m_sum = model.masses[0] + model.masses[1] + model.masses[2];
    if (std::abs(weighted_sin2_sum(cfg, model)) > constraint_tol * m_sum / 3.0) {
        throw Error(ErrorCode::Internal, "translation violates the angular-momentum constraint");
    }
    return cfg;
}

Configuration resolve_a_zero(const Shape& shape, const PotentialModel& model) {
    model.validate();
    const AxisProjection p = axis_projection(shape, model);
    if (p.A >= a_zero_threshold) {
        throw Error(ErrorCode::Precondition, "resolve_a_zero: A is not zero for this shape");
    }
    if (model.equal_masses()) {
        bool equilateral = false;
        if (!is_enumerated_a_zero_shape(shape, equilateral)) {
            throw Error(ErrorCode::Internal, "A = 0 for a shape outside the enumerated cases");
        }
    }

    const ShapeKinetics k = kinetics(shape, model);
    // Net force on each body divided by its mass.
    const std::array<double, 3> rhs{(-k.F12 + k.F31) / model.masses[0],
                                    (k.F12 - k.F23) / model.masses[1],
                                    (k.F23 - k.F31) / model.masses[2]};
    const std::array<double, 3> phase{0.0, 2.0 * shape.a, 2.0 * shape.x};
    const double scale = k.abs_f_sum();

    Configuration cfg = place(shape, 0.0);
    if (std::max({std::abs(rhs[0]), std::abs(rhs[1]), std::abs(rhs[2])}) <= 1e-12 * scale) {
        cfg.omega_sq = 0.0;
        cfg.theta3_undetermined = true;
        return cfg;
    }

    // (omega^2/2) sin(2 theta1 + phase_k) = rhs_k, linear in
    // (vc, vs) = (omega^2/2)(cos 2theta1, sin 2theta1); least squares on 3 rows.
    double m11 = 0, m12 = 0, m22 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double sp = std::sin(phase[i]);
        const double cp = std::cos(phase[i]);
        m11 += sp * sp;
        m12 += sp * cp;
        m22 += cp * cp;
        b1 += sp * rhs[i];
        b2 += cp * rhs[i];
    }
    const double det = m11 * m22 - m12 * m12;
    if (std::abs(det) < 1e-12) {
        throw Error(ErrorCode::Internal, "resolve_a_zero: degenerate phase system");
    }
    const double vc = (m22 * b1 - m12 * b2) / det;
    const double vs = (m11 * b2 - m12 * b1) / det;
    for (std::size_t i = 0; i < 3; ++i) {
        const double lhs = vs * std::cos(phase[i]) + vc * std::sin(phase[i]);
        if (std::abs(lhs - rhs[i]) > 1e-9 * scale) {
            throw Error(ErrorCode::Internal, "resolve_a_zero: equations of motion are inconsistent");
        }
    }
    cfg = place(shape, half_angle_canonical(vs, vc));
    cfg.omega_sq = 2.0 * std::hypot(vc, vs);
    cfg.s = 1;
    return cfg;
}

Configuration reflect_configuration(const Configuration& cfg) {
    Configuration out = cfg;
    out.theta1 = normalize_angle(cfg.theta1 + pi);
    out.theta2 = normalize_angle(cfg.theta2 + pi);
    out.theta3 = normalize_angle(cfg.theta3 + pi);
    return out;
}

Configuration solve_shape(const Shape& shape, const PotentialModel& model) {
    model.validate();
    if (axis_projection(shape, model).A < a_zero_threshold) return resolve_a_zero(shape, model);

    const RotationRate rate = omega_and_s(shape, model);
    switch (rate.kind) {
        case RotationKind::Rotator:
            return shape_to_configuration(shape, rate.s, rate.omega_sq, model);
        case RotationKind::FixedPoint: {
            Configuration cfg = place(shape, 0.0);
            cfg.theta3_undetermined = true;
            return cfg;
        }
        case RotationKind::NotARotator:
            break;
    }
    throw Error(ErrorCode::Precondition, "shape is not a rigid rotator (f != 0)");
}

}  // namespace meridian

namespace meridian {

int translation_sign(const Configuration& cfg, const PotentialModel& model) {
    const AxisProjection p = axis_projection(cfg.shape(), model);
    if (p.A < a_zero_threshold) return 1;
    const double c = std::cos(2.0 * cfg.theta1) * p.cos_2alpha -
                     std::sin(2.0 * cfg.theta1) * p.sin_2alpha;
    return c >= 0.0 ? 1 : -1;
}

}  // namespace meridian

#pragma once

#include "meridian/geometry.hpp"
#include "meridian/potential.hpp"

namespace meridian {

/// Pair terms of a shape, indexed the way the rotation conditions use them:
///   G_ij = m_i m_j sin(2 theta_ji),   F_ij = c_ij sin(theta_ji) U'(cos theta_ij).
/// The shape fixes theta1 = 0 so theta_21 = a, theta_31 = x.
struct ShapeKinetics {
    double F12 = 0.0, F23 = 0.0, F31 = 0.0;
    double G12 = 0.0, G23 = 0.0, G31 = 0.0;
    double A = 0.0;
    // Phase of sum_k m_k exp(2i theta_k1); meaningless when A == 0.
    double cos_2alpha = 1.0;
    double sin_2alpha = 0.0;

    double g_diff_12_23() const { return G12 - G23; }
    double g_diff_23_31() const { return G23 - G31; }
    double g_diff_31_12() const { return G31 - G12; }
    double f_diff_12_23() const { return F12 - F23; }
    double f_diff_23_31() const { return F23 - F31; }
    double f_diff_31_12() const { return F31 - F12; }
    double abs_f_sum() const;
};

inline constexpr double a_zero_threshold = 1e-10;
inline constexpr double f_zero_tol = 1e-9;

/// Throws Singular (naming the pair) if any pair collides or is antipodal.
ShapeKinetics kinetics(const Shape& shape,
                       const PotentialModel& model = PotentialModel::attractive());

/// Amplitude A alone; well defined for every nondegenerate shape.
double amplitude(const Shape& shape, const PotentialModel& model = PotentialModel::attractive());

/// The 2x2 determinant (G12-G23)(F31-F12) - (G31-G12)(F12-F23).
/// Throws AZero when A < a_zero_threshold.
double evaluate_f(const Shape& shape, const PotentialModel& model = PotentialModel::attractive());

/// f divided by the sum of |F_ij|, the scale used for the f = 0 test.
double normalized_f(const Shape& shape,
                    const PotentialModel& model = PotentialModel::attractive());

/// Numerator of f for the equal-mass attractive cotangent potential:
/// f = g / (S(x) S(a) S(x - a)) with S(t) = sin t |sin t|.
double evaluate_g(const Shape& shape);

/// Scalene factor: in the region 0 < x < a, g = sin(2y)/4 * h(a, y).
double evaluate_h(double a, double y);

enum class RotationKind { Rotator, FixedPoint, NotARotator };

struct RotationRate {
    RotationKind kind = RotationKind::NotARotator;
    double omega_sq = 0.0;
    int s = 0;
    // s omega^2 / (2A), taken from the pair with the largest |G difference|
    double ratio = 0.0;
    double f_normalized = 0.0;
};

/// Angular velocity and branch sign of a shape on f = 0. Throws AZero when
/// A vanishes (see resolve_a_zero).
RotationRate omega_and_s(const Shape& shape,
                         const PotentialModel& model = PotentialModel::attractive(),
                         double tol = f_zero_tol);

}  // namespace meridian

#pragma once

#include "meridian/geometry.hpp"
#include "meridian/potential.hpp"

namespace meridian {

/// sum_k m_k exp(2i theta_k1) = A exp(2i alpha); the angular-momentum
/// constraint reads A sin(2 theta1 + 2 alpha) = 0.
struct AxisProjection {
    double A = 0.0;
    double cos_2alpha = 1.0;
    double sin_2alpha = 0.0;
};

AxisProjection axis_projection(const Shape& shape,
                               const PotentialModel& model = PotentialModel::attractive());

inline constexpr double constraint_tol = 1e-10;
inline constexpr double a_zero_match_tol = 1e-8;

/// Place a rigid-rotator shape on the meridian. theta1 is returned in
/// (-pi/2, pi/2]; the other root theta1 + pi is reflect_configuration().
/// omega_sq must come from omega_and_s together with s. Throws AZero when
/// A is below threshold.
Configuration shape_to_configuration(const Shape& shape, int s, double omega_sq,
                                     const PotentialModel& model = PotentialModel::attractive());

/// Solve the equations of motion directly for a shape with A = 0. The
/// equilateral shape is a fixed point (omega = 0, thetas undetermined).
Configuration resolve_a_zero(const Shape& shape,
                             const PotentialModel& model = PotentialModel::attractive());

/// theta_k -> theta_k + pi for every body.
Configuration reflect_configuration(const Configuration& cfg);

/// Full route for a shape: omega_and_s then translation, or resolve_a_zero.
/// Throws Precondition when the shape does not satisfy f = 0.
Configuration solve_shape(const Shape& shape,
                          const PotentialModel& model = PotentialModel::attractive());

}  // namespace meridian

namespace meridian {

/// The branch sign s = cos(2 theta1 + 2 alpha) of a placed configuration;
/// +1 when A vanishes and the sign carries no information.
int translation_sign(const Configuration& cfg,
                     const PotentialModel& model = PotentialModel::attractive());

}  // namespace meridian

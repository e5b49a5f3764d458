#pragma once

#include <array>
#include <numbers>

namespace meridian {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce `t` to the half-open interval (-pi, pi]. Throws on non-finite input.
double normalize_angle(double t);

/// Mutual angles of a three-body shape on the meridian: a = theta2 - theta1,
/// x = theta3 - theta1. Canonical range is 0 < a < pi, -pi < x < pi, but every
/// operation works modulo 2pi so relabelled shapes need not be re-folded.
struct Shape {
    double a = 0.0;
    double x = 0.0;

    /// theta3 - theta2
    double x_minus_a() const { return x - a; }
    bool is_canonical() const;
};

/// y = x - a/2, the offset of body 3 from the midpoint of bodies 1 and 2.
struct YCoordinate {
    double y = 0.0;

    static YCoordinate from_shape(const Shape& s);
    Shape to_shape(double a) const;
};

/// A relative equilibrium: colatitudes in (-pi, pi], angular velocity squared
/// and the branch sign s of the translation formula.
struct Configuration {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
    double omega_sq = 0.0;
    int s = 1;
    // Set only for the equilateral fixed point; the thetas are then one
    // representative of an arbitrary rigid rotation.
    bool theta3_undetermined = false;

    std::array<double, 3> thetas() const { return {theta1, theta2, theta3}; }
    Shape shape() const;
};

/// Arc lengths |theta21|, |theta31|, |theta32| folded into (0, pi].
struct ArcAngles {
    double a21 = 0.0;
    double a31 = 0.0;
    double a32 = 0.0;

    std::array<double, 3> values() const { return {a21, a31, a32}; }
    double largest() const;
};

/// Folded arcs of a shape. Throws ErrorCode::Singular on a collision
/// (an arc that folds to exactly zero).
ArcAngles arc_angles(const Shape& shape);

/// Same as arc_angles but never throws; collisions come back as 0.
ArcAngles arc_angles_unchecked(const Shape& shape);

enum class RotatorKind { Scalene, Isosceles, Equilateral, Degenerate };

const char* to_string(RotatorKind kind) noexcept;

struct RotatorClassification {
    RotatorKind kind = RotatorKind::Degenerate;
    double largest_arc = 0.0;
};

inline constexpr double default_classify_tol = 1e-9;

RotatorClassification classify(const Shape& shape, double tol = default_classify_tol);

}  // namespace meridian

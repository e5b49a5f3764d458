#pragma once

#include <string>
#include <vector>

#include "meridian/geometry.hpp"

namespace meridian {

struct CriticalAngle {
    double cos_ac = 0.0;
    double ac = 0.0;
    double xc = 0.0;
    // Root of 4c^3 + 12c^2 + 11c + 2 by bisection, kept for cross-checks.
    double cos_ac_bisection = 0.0;
};

/// Largest arc beyond which no scalene equilibrium exists. Computed by the
/// cube-root closed form and by bisection; throws Internal if they disagree
/// by more than 1e-12.
CriticalAngle critical_angle();

/// cos(2y) on the scalene curve h(a, y) = 0 (the admissible root).
double scalene_cos2y(double a);
/// The other root of the quadratic in cos(2y).
double scalene_cos2y_rejected(double a);

struct ScalenePair {
    Shape upper;  // y > 0
    Shape lower;  // y < 0
    double y = 0.0;
    // a == a_c: both shapes collapse to the isosceles limit (y = 0).
    bool isosceles_limit = false;
};

/// Scalene shapes whose largest arc is a = theta21. Throws Range unless
/// pi/2 < a < a_c (a == a_c returns the isosceles limit).
ScalenePair solve_scalene(double a_largest);

struct IsoscelesSpec {
    // theta = theta2 - theta3 = theta3 - theta1, body 3 in the middle
    double theta = 0.0;
};

/// Equal-mass attractive isosceles equilibrium with body 3 in the middle.
/// Throws Singular at theta = pi/2 and Precondition outside (0, pi).
Configuration solve_isosceles(IsoscelesSpec spec);

struct Equilibrium {
    Shape shape;
    Configuration config;
    RotatorKind kind = RotatorKind::Degenerate;
    double largest_arc = 0.0;
    std::string origin;  // e.g. "isosceles x=a/2", "scalene"
};

struct ArcEnumeration {
    double a = 0.0;
    std::vector<Equilibrium> equilibria;
    // Placements dropped because a pair would be antipodal.
    std::vector<std::string> excluded;
};

/// Every relative equilibrium with theta2 - theta1 = a, one canonical
/// representative per equatorial reflection.
ArcEnumeration enumerate_re_for_arc(double a);

struct FamilyRow {
    double cos_a = 0.0;
    double omega_sq = 0.0;
    int s = 0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
    double largest_arc = 0.0;
};

inline constexpr double default_family_cos_start = -1e-3;

/// Upper (y > 0) scalene branch sampled uniformly in cos a from cos_start
/// down to cos a_c inclusive.
std::vector<FamilyRow> scalene_family_table(int n, double cos_start = default_family_cos_start);

}  // namespace meridian

#pragma once

#include <array>
#include <string>
#include <vector>

#include "meridian/families.hpp"
#include "meridian/geometry.hpp"
#include "meridian/potential.hpp"

namespace meridian {

struct ResidualReport {
    std::array<double, 3> residuals{};  // per body, equations of motion
    double constraint = 0.0;            // sum_k m_k sin(2 theta_k)
    double max_abs = 0.0;
    double scale = 1.0;                 // max(1, largest |term| in any equation)
    bool pass = false;
};

inline constexpr double default_verify_tol = 1e-9;

/// Check a configuration against
///   (omega^2/2) sin(2 theta_k) = (1/m_k) sum_i c_ki sin(theta_ki) U'(cos theta_ki).
/// max_abs = max(|r_k|, |constraint| * omega^2), raw.
/// pass <=> max_abs / scale < tol. Near collisions the individual terms reach
/// 1e6 and an absolute 1e-9 is below double resolution; for O(1) terms the
/// test is the absolute one.
ResidualReport verify_configuration(const Configuration& cfg,
                                    const PotentialModel& model = PotentialModel::attractive(),
                                    double tol = default_verify_tol);

struct RegressionRow {
    std::string name;
    double expected = 0.0;   // closed radical
    double computed = 0.0;   // library route from cos a = -1/8
    double abs_err = 0.0;
};

/// Exact-value regression for the scalene equilibrium with cos a = -1/8, y > 0.
std::vector<RegressionRow> appendix_regression();

struct ShiftReport {
    bool pass = false;
    double max_shift_error = 0.0;  // |theta_rep - theta_att - pi/2| mod pi
    double omega_sq_rel_error = 0.0;
    bool s_negated = false;        // false when s is undefined (A = 0)
    Configuration attractive;
    Configuration repulsive;
};

/// Repulsive equilibrium of the same isosceles shape: every theta_k moves
/// by pi/2 mod pi, omega^2 is unchanged and s flips.
ShiftReport repulsive_shift_report(IsoscelesSpec spec, double tol = 1e-12);
bool repulsive_shift_check(IsoscelesSpec spec, double tol = 1e-12);

}  // namespace meridian

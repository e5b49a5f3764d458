#pragma once

#include <array>

namespace meridian {

enum class PotentialVariant { AttractiveCotangent, RepulsiveCotangent, Charged };

const char* to_string(PotentialVariant v) noexcept;

/// Pair potential U(cos theta) together with per-body masses and charges.
/// Charges are only read by the Charged variant, whose pair coupling is
/// -e_i e_j instead of m_i m_j.
struct PotentialModel {
    PotentialVariant variant = PotentialVariant::AttractiveCotangent;
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    std::array<double, 3> charges{0.0, 0.0, 0.0};

    static PotentialModel attractive(std::array<double, 3> masses = {1.0, 1.0, 1.0});
    static PotentialModel repulsive(std::array<double, 3> masses = {1.0, 1.0, 1.0});
    static PotentialModel charged(std::array<double, 3> charges,
                                  std::array<double, 3> masses = {1.0, 1.0, 1.0});

    /// Throws Precondition on non-positive or non-finite masses, or non-finite charges.
    void validate() const;

    bool equal_masses() const;
    double mass(int body) const { return masses.at(static_cast<std::size_t>(body)); }
};

/// |c| at or beyond this is treated as a collision or an antipodal pair.
inline constexpr double singularity_guard = 1.0 - 1e-12;

/// Throws ErrorCode::Singular when |c| >= singularity_guard.
void check_regular(double c);

/// U(c) = c / sqrt(1 - c^2) for the attractive and charged (unscaled) forms,
/// -U for the repulsive one.
double potential_value(double c, PotentialVariant v = PotentialVariant::AttractiveCotangent);

/// dU/dc = (1 - c^2)^(-3/2), negated for the repulsive variant.
double potential_derivative(double c,
                            PotentialVariant v = PotentialVariant::AttractiveCotangent);

/// Sign of dU/dtheta for 0 < theta < pi: -1 means attraction.
int attractivity_check(double theta,
                       PotentialVariant v = PotentialVariant::AttractiveCotangent);

/// Coefficient multiplying sin(theta_ji) U'(cos theta_ij) in the pair force:
/// m_i m_j, or -e_i e_j for charged particles. Bodies are 0-based.
double pair_coupling(const PotentialModel& model, int i, int j);

}  // namespace meridian

#include "meridian/potential.hpp"

#include <cmath>
#include <string>

#include "meridian/error.hpp"
#include "meridian/geometry.hpp"

namespace meridian {

const char* to_string(PotentialVariant v) noexcept {
    switch (v) {
        case PotentialVariant::AttractiveCotangent: return "attractive";
        case PotentialVariant::RepulsiveCotangent: return "repulsive";
        case PotentialVariant::Charged: return "charged";
    }
    return "attractive";
}

PotentialModel PotentialModel::attractive(std::array<double, 3> masses) {
    return PotentialModel{PotentialVariant::AttractiveCotangent, masses, {0.0, 0.0, 0.0}};
}

PotentialModel PotentialModel::repulsive(std::array<double, 3> masses) {
    return PotentialModel{PotentialVariant::RepulsiveCotangent, masses, {0.0, 0.0, 0.0}};
}

PotentialModel PotentialModel::charged(std::array<double, 3> charges,
                                       std::array<double, 3> masses) {
    return PotentialModel{PotentialVariant::Charged, masses, charges};
}

void PotentialModel::validate() const {
    for (double m : masses) {
        if (!std::isfinite(m) || m <= 0.0) {
            throw Error(ErrorCode::Precondition, "masses must be finite and positive");
        }
    }
    for (double e : charges) {
        if (!std::isfinite(e)) throw Error(ErrorCode::Precondition, "charges must be finite");
    }
}

bool PotentialModel::equal_masses() const {
    return masses[0] == masses[1] && masses[1] == masses[2];
}

void check_regular(double c) {
    if (!std::isfinite(c) || std::abs(c) >= singularity_guard) {
        throw Error(ErrorCode::Singular,
                    c > 0 ? "collision: cos(theta_ij) = 1" : "antipodal pair: cos(theta_ij) = -1");
    }
}

double potential_value(double c, PotentialVariant v) {
    check_regular(c);
    const double u = c / std::sqrt(1.0 - c * c);
    return v == PotentialVariant::RepulsiveCotangent ? -u : u;
}

double potential_derivative(double c, PotentialVariant v) {
    check_regular(c);
    const double q = 1.0 - c * c;
    const double du = 1.0 / (q * std::sqrt(q));
    return v == PotentialVariant::RepulsiveCotangent ? -du : du;
}

int attractivity_check(double theta, PotentialVariant v) {
    if (!(theta > 0.0 && theta < pi)) {
        throw Error(ErrorCode::Precondition, "attractivity_check: theta must lie in (0, pi)");
    }
    // dU/dtheta = -sin(theta) U'(cos theta)
    const double d = -std::sin(theta) * potential_derivative(std::cos(theta), v);
    return d < 0.0 ? -1 : (d > 0.0 ? 1 : 0);
}

double pair_coupling(const PotentialModel& model, int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2 || i == j) {
        throw Error(ErrorCode::Precondition, "pair_coupling: bodies must be distinct in 0..2");
    }
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    if (model.variant == PotentialVariant::Charged) {
        return -model.charges[ui] * model.charges[uj];
    }
    return model.masses[ui] * model.masses[uj];
}

}  // namespace meridian

#include "meridian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meridian/error.hpp"
#include "meridian/shape_analysis.hpp"
#include "meridian/translation.hpp"

namespace meridian {

namespace {

// Force on body k from body i, written straight from the equations of motion.
double force_on(const PotentialModel& model, int k, int i, double theta_ki) {
    const double c = std::cos(theta_ki);
    if (std::abs(c) >= singularity_guard) {
        throw Error(ErrorCode::Singular, std::string(c > 0 ? "collision" : "antipodal pair") +
                                             " of bodies " + std::to_string(std::min(i, k) + 1) +
                                             " and " + std::to_string(std::max(i, k) + 1));
    }
    const double s = std::sin(theta_ki);
    const double f = pair_coupling(model, k, i) * s / std::pow(std::abs(s), 3);
    return model.variant == PotentialVariant::RepulsiveCotangent ? -f : f;
}

}  // namespace

ResidualReport verify_configuration(const Configuration& cfg, const PotentialModel& model,
                                    double tol) {
    model.validate();
    const auto th = cfg.thetas();
    ResidualReport rep;
    for (int k = 0; k < 3; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        double net = 0.0;
        double size = 0.0;
        for (int i = 0; i < 3; ++i) {
            if (i == k) continue;
            const double f = force_on(model, k, i, th[uk] - th[static_cast<std::size_t>(i)]);
            net += f;
            size += std::abs(f);
        }
        const double lhs = 0.5 * cfg.omega_sq * std::sin(2.0 * th[uk]);
        rep.residuals[uk] = lhs - net / model.masses[uk];
        rep.scale = std::max({rep.scale, std::abs(lhs), size / model.masses[uk]});
        rep.constraint += model.masses[uk] * std::sin(2.0 * th[uk]);
    }
    rep.max_abs = std::max({std::abs(rep.residuals[0]), std::abs(rep.residuals[1]),
                            std::abs(rep.residuals[2]), std::abs(rep.constraint) * cfg.omega_sq});
    rep.pass = rep.max_abs / rep.scale < tol;
    return rep;
}

std::vector<RegressionRow> appendix_regression() {
    const double r17 = std::sqrt(17.0);
    const double r7 = std::sqrt(7.0);
    const double big = std::sqrt(26894.0 * r17 - 110014.0);
    const double p = std::sqrt(311.0 - 63.0 * r17);
    const double q = std::sqrt(-185.0 + 49.0 * r17);
    const double u = std::sqrt(622.0 - 126.0 * r17);
    const double v = std::sqrt(-370.0 + 98.0 * r17);
    const double ratio = 16.0 / 189.0 * std::sqrt(55614.0 * r17 + 1605122.0 / 7.0);
    const double k_sin = std::sqrt(7.0 / (98.0 * r17 - 306.0)) / 64.0;

    const double a = std::acos(-1.0 / 8.0);
    const ScalenePair pair = solve_scalene(a);
    const Shape shape = pair.upper;
    const double y = pair.y;
    const double x = shape.x;
    const double t32 = x - a;
    const ShapeKinetics k = kinetics(shape);
    const RotationRate rate = omega_and_s(shape);
    const Configuration cfg = shape_to_configuration(shape, rate.s, rate.omega_sq);
    const double probe_y = 0.3;

    std::vector<RegressionRow> rows{
        {"cos(2y)", (1921.0 - 441.0 * r17) / 256.0, std::cos(2.0 * y), 0},
        {"sin(a)", 3.0 * r7 / 8.0, std::sin(a), 0},
        {"cos(2a)", -31.0 / 32.0, std::cos(2.0 * a), 0},
        {"sin(2a)", -3.0 * r7 / 32.0, std::sin(2.0 * a), 0},
        {"cos(a/2)", r7 / 4.0, std::cos(0.5 * a), 0},
        {"sin(a/2)", 0.75, std::sin(0.5 * a), 0},
        {"cos(y)", std::sqrt(7.0 * (311.0 - 63.0 * r17) / 2.0) / 16.0, std::cos(y), 0},
        {"sin(y)", 3.0 / 16.0 * std::sqrt((-185.0 + 49.0 * r17) / 2.0), std::sin(y), 0},
        {"cos(x)", (7.0 * u - 9.0 * v) / 128.0, std::cos(x), 0},
        {"sin(x)", 3.0 * r7 / 128.0 * (u + v), std::sin(x), 0},
        {"cos(2theta31)", (441.0 * r17 - 63.0 * big - 1921.0) / 2048.0, std::cos(2.0 * x), 0},
        {"sin(2theta31)", -3.0 * r7 * (441.0 * r17 + big - 1921.0) / 2048.0, std::sin(2.0 * x), 0},
        {"cos(theta32)", (9.0 * v + 7.0 * u) / 128.0, std::cos(t32), 0},
        {"sin(theta32)",
         -3.0 / 128.0 * (std::sqrt(4354.0 - 882.0 * r17) - std::sqrt(686.0 * r17 - 2590.0)),
         std::sin(t32), 0},
        {"cos(2theta32)", (441.0 * r17 + 63.0 * big - 1921.0) / 2048.0, std::cos(2.0 * t32), 0},
        {"sin(2theta32)", 3.0 * r7 * (441.0 * r17 - big - 1921.0) / 2048.0, std::sin(2.0 * t32), 0},
        {"A", 3.0 / 16.0 * std::sqrt(0.5 * (49.0 * r17 - 153.0)), k.A, 0},
        {"F12", 64.0 / 63.0, k.F12, 0},
        {"F23", -8192.0 / (63.0 * (p - q) * (p - q)), k.F23, 0},
        {"F31", -8192.0 / (63.0 * (p + q) * (p + q)), k.F31, 0},
        {"G12", -3.0 * r7 / 32.0, k.G12, 0},
        {"G23", 3.0 * r7 * (441.0 * r17 - 1921.0 - big) / 2048.0, k.G23, 0},
        {"G31", 3.0 * r7 * (441.0 * r17 - 1921.0 + big) / 2048.0, k.G31, 0},
        {"(G12-G23)(G31-G12)", 63.0 * (6503.0 * r17 - 26815.0) / 16384.0,
         k.g_diff_12_23() * k.g_diff_31_12(), 0},
        {"(F12-F23)/(G12-G23)", ratio, k.f_diff_12_23() / k.g_diff_12_23(), 0},
        {"(F31-F12)/(G31-G12)", ratio, k.f_diff_31_12() / k.g_diff_31_12(), 0},
        {"s", 1.0, static_cast<double>(rate.s), 0},
        {"omega^2", 32.0 / 63.0 * std::sqrt(5326.0 * r17 + 153714.0 / 7.0), rate.omega_sq, 0},
        {"sin(2theta1)", k_sin * (441.0 * r17 - 1857.0 + big), std::sin(2.0 * cfg.theta1), 0},
        {"sin(2theta2)", k_sin * (-441.0 * r17 + 1857.0 + big), std::sin(2.0 * cfg.theta2), 0},
        {"sin(2theta3)", -std::sqrt(1120.0 - 4361.0 / r17) / 32.0, std::sin(2.0 * cfg.theta3), 0},
        // the worked example's h is twice the general h (same zero set)
        {"2h(a,0.3)",
         (512.0 * std::cos(4.0 * probe_y) - 15368.0 * std::cos(2.0 * probe_y) + 6513.0) / 2048.0,
         2.0 * evaluate_h(a, probe_y), 0},
        {"h(a,y)", 0.0, evaluate_h(a, y), 0},
        {"equation-of-motion residual", 0.0, verify_configuration(cfg).max_abs, 0},
    };
    for (auto& row : rows) row.abs_err = std::abs(row.expected - row.computed);
    return rows;
}

ShiftReport repulsive_shift_report(IsoscelesSpec spec, double tol) {
    ShiftReport rep;
    rep.attractive = solve_isosceles(spec);
    const Shape shape = rep.attractive.shape();
    rep.repulsive = solve_shape(shape, PotentialModel::repulsive());

    if (rep.attractive.theta3_undetermined || rep.repulsive.theta3_undetermined) {
        rep.pass = rep.attractive.theta3_undetermined && rep.repulsive.theta3_undetermined &&
                   rep.repulsive.omega_sq == 0.0;
        return rep;
    }
    const auto ta = rep.attractive.thetas();
    const auto tr = rep.repulsive.thetas();
    for (std::size_t i = 0; i < 3; ++i) {
        const double d = std::remainder(tr[i] - ta[i] - 0.5 * pi, pi);
        rep.max_shift_error = std::max(rep.max_shift_error, std::abs(d));
    }
    rep.omega_sq_rel_error =
        std::abs(rep.repulsive.omega_sq - rep.attractive.omega_sq) / rep.attractive.omega_sq;

    const bool a_zero = axis_projection(shape).A < a_zero_threshold;
    if (!a_zero) {
        const Configuration att_generic = solve_shape(shape);
        rep.s_negated = rep.repulsive.s == -att_generic.s && att_generic.s == rep.attractive.s;
    }
    rep.pass = rep.max_shift_error < tol && rep.omega_sq_rel_error < tol && (a_zero || rep.s_negated);
    return rep;
}

bool repulsive_shift_check(IsoscelesSpec spec, double tol) {
    return repulsive_shift_report(spec, tol).pass;
}

}  // namespace meridian

#include "meridian/families.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "meridian/bisection.hpp"
#include "meridian/error.hpp"
#include "meridian/potential.hpp"
#include "meridian/shape_analysis.hpp"
#include "meridian/translation.hpp"

namespace meridian {

namespace {

constexpr double limit_tol = 1e-12;

// cos(3a) + 6 cos(2a) + 14 cos(a) + 8 written in c = cos a.
double critical_cubic(double c) { return ((4.0 * c + 12.0) * c + 11.0) * c + 2.0; }

CriticalAngle compute_critical_angle() {
    const double r = std::sqrt(78.0) / 9.0;
    CriticalAngle out;
    out.cos_ac = -1.0 + 0.5 * (std::cbrt(1.0 + r) + std::cbrt(1.0 - r));
    out.cos_ac_bisection = bisect(critical_cubic, -1.0, 0.0, 1e-15).root;
    if (std::abs(out.cos_ac - out.cos_ac_bisection) > 1e-12) {
        throw Error(ErrorCode::Internal, "critical angle: closed form and bisection disagree");
    }
    out.ac = std::acos(out.cos_ac);
    out.xc = 0.5 * out.ac;
    return out;
}

const CriticalAngle& cached_critical_angle() {
    static const CriticalAngle value = compute_critical_angle();
    return value;
}

// Half-offset y of the scalene shape whose largest arc is L, for L in
// (pi/2, a_c]; y = 0 at a_c.
double scalene_half_offset(double L) {
    const double ac = cached_critical_angle().ac;
    if (std::abs(L - ac) <= limit_tol) return 0.0;
    double c2y = scalene_cos2y(L);
    if (std::isnan(c2y)) throw Error(ErrorCode::Internal, "scalene_cos2y undefined inside the window");
    if (c2y > 1.0) {
        if (c2y - 1.0 > 1e-12) throw Error(ErrorCode::Internal, "cos(2y) above 1 inside the window");
        c2y = 1.0;
    }
    return 0.5 * std::acos(c2y);
}

Configuration relabel_isosceles(const Configuration& iso, int mid_body, bool swap_outer) {
    // iso has body 3 in the middle at theta3, outer bodies at theta3 -/+ theta.
    const double left = iso.theta1;
    const double right = iso.theta2;
    const double mid = iso.theta3;
    Configuration cfg = iso;
    switch (mid_body) {
        case 1: cfg.theta1 = mid; cfg.theta2 = right; cfg.theta3 = left; break;
        case 2: cfg.theta1 = left; cfg.theta2 = mid; cfg.theta3 = right; break;
        default:
            cfg.theta1 = swap_outer ? right : left;
            cfg.theta2 = swap_outer ? left : right;
            cfg.theta3 = mid;
            break;
    }
    if (cfg.theta1 <= -0.5 * pi || cfg.theta1 > 0.5 * pi) {
        cfg.theta1 = normalize_angle(cfg.theta1 + pi);
        cfg.theta2 = normalize_angle(cfg.theta2 + pi);
        cfg.theta3 = normalize_angle(cfg.theta3 + pi);
    }
    cfg.s = translation_sign(cfg);
    return cfg;
}

bool same_angle(double u, double v, double tol) {
    return std::abs(normalize_angle(u - v)) < tol;
}

}  // namespace

CriticalAngle critical_angle() { return cached_critical_angle(); }

double scalene_cos2y(double a) {
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const double c2a = std::cos(2.0 * a);
    const double disc = c2a * c2a - 4.0 * c2a - 4.0;
    if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
    // cos a + sin a tan a (cos 2a + sqrt D), rationalised: (cos 2a)^2 - D = 8 cos^2 a.
    return ca * (1.0 + 8.0 * sa * sa / (c2a - std::sqrt(disc)));
}

double scalene_cos2y_rejected(double a) {
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const double c2a = std::cos(2.0 * a);
    const double disc = c2a * c2a - 4.0 * c2a - 4.0;
    if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return ca + sa * sa / ca * (c2a - std::sqrt(disc));
}

ScalenePair solve_scalene(double a_largest) {
    if (!std::isfinite(a_largest)) throw Error(ErrorCode::Precondition, "solve_scalene: non-finite a");
    const double ac = cached_critical_angle().ac;
    if (a_largest <= 0.5 * pi || a_largest > ac + limit_tol) {
        throw Error(ErrorCode::Range,
                    "solve_scalene: largest arc must lie in (pi/2, a_c) with a_c = 1.8124...");
    }
    ScalenePair out;
    if (std::abs(a_largest - ac) <= limit_tol) {
        out.isosceles_limit = true;
        out.y = 0.0;
    } else {
        out.y = scalene_half_offset(a_largest);
    }
    out.upper = Shape{a_largest, 0.5 * a_largest + out.y};
    out.lower = Shape{a_largest, 0.5 * a_largest - out.y};
    return out;
}

Configuration solve_isosceles(IsoscelesSpec spec) {
    const double th = spec.theta;
    if (!std::isfinite(th) || th <= 0.0 || th >= pi) {
        throw Error(ErrorCode::Precondition, "solve_isosceles: theta must lie in (0, pi)");
    }
    check_regular(std::cos(th));
    try {
        check_regular(std::cos(2.0 * th));
    } catch (const Error&) {
        throw Error(ErrorCode::Singular,
                    "solve_isosceles: theta = pi/2 puts bodies 1 and 2 antipodal");
    }

    Configuration cfg;
    const double third2 = 2.0 * pi / 3.0;
    if (std::abs(th - third2) <= limit_tol) {
        cfg.theta1 = -th;
        cfg.theta2 = th;
        cfg.theta3 = 0.0;
        cfg.omega_sq = 0.0;
        cfg.theta3_undetermined = true;
        cfg.s = 1;
        return cfg;
    }
    const double s2 = std::sin(2.0 * th);
    const double s1 = std::sin(th);
    const double w = 1.0 / std::pow(std::abs(s2), 3) + 1.0 / (s1 * s1 * s2);
    const bool pole_branch = th < third2;
    cfg.omega_sq = pole_branch ? 2.0 * w : -2.0 * w;
    cfg.theta3 = pole_branch ? 0.0 : 0.5 * pi;
    cfg.theta1 = normalize_angle(cfg.theta3 - th);
    cfg.theta2 = normalize_angle(cfg.theta3 + th);
    if (cfg.theta1 <= -0.5 * pi) {
        cfg.theta1 = normalize_angle(cfg.theta1 + pi);
        cfg.theta2 = normalize_angle(cfg.theta2 + pi);
        cfg.theta3 = normalize_angle(cfg.theta3 + pi);
    }
    // s (1 + 2 cos 2theta) / |1 + 2 cos 2theta| = +1 on the pole branch, -1 otherwise.
    const double q = 1.0 + 2.0 * std::cos(2.0 * th);
    const int sign_q = q > 0.0 ? 1 : -1;
    cfg.s = std::abs(q) < a_zero_threshold ? 1 : (pole_branch ? sign_q : -sign_q);
    return cfg;
}

ArcEnumeration enumerate_re_for_arc(double a) {
    if (!std::isfinite(a) || a <= 0.0 || a >= pi) {
        throw Error(ErrorCode::Precondition, "enumerate_re_for_arc: a must lie in (0, pi)");
    }
    ArcEnumeration out;
    out.a = a;

    struct Placement {
        const char* label;
        double x;
        int mid_body;
        double theta;
        bool swap_outer;
    };
    const std::array<Placement, 4> placements{{
        {"isosceles x=2a", normalize_angle(2.0 * a), 2, a, false},
        {"isosceles x=a/2", 0.5 * a, 3, 0.5 * a, false},
        {"isosceles x=a/2-pi", 0.5 * a - pi, 3, pi - 0.5 * a, true},
        {"isosceles x=-a", -a, 1, a, false},
    }};
    for (const auto& p : placements) {
        bool duplicate = false;
        for (const auto& e : out.equilibria) duplicate |= same_angle(e.shape.x, p.x, 1e-12);
        if (duplicate) continue;
        Configuration iso;
        try {
            iso = solve_isosceles(IsoscelesSpec{p.theta});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Singular) throw;
            out.excluded.push_back(std::string(p.label) + " (antipodal pair)");
            continue;
        }
        Equilibrium eq;
        eq.shape = Shape{a, p.x};
        eq.config = relabel_isosceles(iso, p.mid_body, p.swap_outer);
        const auto cls = classify(eq.shape);
        eq.kind = cls.kind;
        eq.largest_arc = cls.largest_arc;
        eq.origin = p.label;
        out.equilibria.push_back(eq);
    }

    const double ac = cached_critical_angle().ac;
    const double xc = 0.5 * ac;
    std::array<Shape, 2> scalene{};
    bool have_scalene = true;
    if (a > 0.5 * pi && a < ac - limit_tol) {
        const ScalenePair pair = solve_scalene(a);
        scalene = {pair.upper, pair.lower};
    } else if (a < xc - limit_tol || (a > xc + limit_tol && a < 0.5 * pi)) {
        // a is the smallest (a < xc) or the middle arc of a triangle whose
        // largest arc L lies in the window; arcs are L, L/2 + y, L/2 - y.
        const bool smallest = a < xc;
        auto arc_minus_target = [&](double L) {
            const double y = scalene_half_offset(L);
            return (smallest ? 0.5 * L - y : 0.5 * L + y) - a;
        };
        const double L = bisect(arc_minus_target, 0.5 * pi + 1e-12, ac, 1e-15).root;
        const double other = L - a;
        scalene = {Shape{a, L}, Shape{a, -other}};
    } else {
        have_scalene = false;
    }
    if (have_scalene) {
        for (const Shape& sh : scalene) {
            Equilibrium eq;
            eq.shape = sh;
            eq.config = solve_shape(sh);
            const auto cls = classify(sh);
            eq.kind = cls.kind;
            eq.largest_arc = cls.largest_arc;
            eq.origin = "scalene";
            out.equilibria.push_back(eq);
        }
    }
    return out;
}

std::vector<FamilyRow> scalene_family_table(int n, double cos_start) {
    if (n < 2) throw Error(ErrorCode::Precondition, "scalene_family_table: n must be at least 2");
    const CriticalAngle& crit = cached_critical_angle();
    if (!(cos_start < 0.0 && cos_start > crit.cos_ac)) {
        throw Error(ErrorCode::Precondition, "scalene_family_table: cos_start must lie in (cos a_c, 0)");
    }
    std::vector<FamilyRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double c = i == n - 1
                             ? crit.cos_ac
                             : cos_start + (crit.cos_ac - cos_start) * static_cast<double>(i) / (n - 1);
        const double a = i == n - 1 ? crit.ac : std::acos(c);
        const ScalenePair pair = solve_scalene(a);
        const Configuration cfg = solve_shape(pair.upper);
        rows.push_back(FamilyRow{c, cfg.omega_sq, cfg.s, cfg.theta1, cfg.theta2, cfg.theta3, a});
    }
    return rows;
}

}  // namespace meridian

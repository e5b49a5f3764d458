#include <doctest.h>

#include <chrono>
#include <cmath>

#include "meridian/bisection.hpp"
#include "meridian/families.hpp"
#include "meridian/shape_analysis.hpp"
#include "meridian/translation.hpp"
#include "meridian/verify.hpp"
#include "support.hpp"

using namespace meridian;
using testing_support::circ_dist;
using testing_support::error_code_of;

TEST_CASE("critical angle") {
    const auto c = critical_angle();
    CHECK(c.cos_ac == doctest::Approx(-0.23931).epsilon(2e-5));
    CHECK(c.ac == doctest::Approx(1.8124).epsilon(5e-5));
    CHECK(c.xc == doctest::Approx(0.90622).epsilon(1e-5));
    CHECK(c.xc == c.ac / 2.0);
    CHECK(std::abs(c.cos_ac - c.cos_ac_bisection) < 1e-12);
    const double a = c.ac;
    CHECK(std::abs(std::cos(3.0 * a) + 6.0 * std::cos(2.0 * a) + 14.0 * std::cos(a) + 8.0) < 1e-13);
    // independent bracket on the trigonometric form
    const auto r = bisect([](double t) { return std::cos(3.0 * t) + 6.0 * std::cos(2.0 * t) + 14.0 * std::cos(t) + 8.0; },
                          pi / 2.0, 2.5);
    CHECK(std::abs(r.root - a) < 1e-12);
}

TEST_CASE("scalene closed form") {
    const double a = std::acos(-0.125);
    const double r17 = std::sqrt(17.0);
    CHECK(scalene_cos2y(a) == doctest::Approx((1921.0 - 441.0 * r17) / 256.0).epsilon(1e-13));
    const auto p = solve_scalene(a);
    CHECK_FALSE(p.isosceles_limit);
    const double cx = (7.0 * std::sqrt(622.0 - 126.0 * r17) - 9.0 * std::sqrt(-370.0 + 98.0 * r17)) / 128.0;
    CHECK(std::cos(p.upper.x) == doctest::Approx(cx).epsilon(1e-13));
    CHECK(std::cos(p.upper.x) == doctest::Approx(0.1432).epsilon(1e-3));
    CHECK(p.upper.x - a / 2.0 == doctest::Approx(p.y));
    CHECK(p.lower.x - a / 2.0 == doctest::Approx(-p.y));

    // literal quadratic root as an oracle for the cancellation-free form
    for (int i = 1; i < 100; ++i) {
        const double t = pi / 2.0 + (critical_angle().ac - pi / 2.0) * i / 100.0;
        const double c = std::cos(t), c2 = std::cos(2.0 * t), s2 = std::sin(t) * std::sin(t);
        const double D = c2 * c2 - 4.0 * c2 - 4.0;
        const double literal = c + s2 / c * (c2 + std::sqrt(D));
        CHECK(scalene_cos2y(t) == doctest::Approx(literal).epsilon(1e-9));
    }
}

TEST_CASE("isosceles limit at a_c") {
    const auto c = critical_angle();
    const auto p = solve_scalene(c.ac);
    CHECK(p.isosceles_limit);
    CHECK(p.y == 0.0);
    const Configuration cfg = solve_shape(p.upper);
    CHECK(std::abs(cfg.theta3) < 1e-7);
    CHECK(cfg.theta2 == doctest::Approx(c.ac / 2.0).epsilon(1e-7));
    CHECK(cfg.theta1 == doctest::Approx(-c.ac / 2.0).epsilon(1e-7));
}

TEST_CASE("scalene window") {
    for (double a : {0.5, 1.0, 1.5, 1.57, pi / 2.0, 1.815, 2.0, 3.0}) {
        CAPTURE(a);
        CHECK(error_code_of([a] { solve_scalene(a); }) == ErrorCode::Range);
    }
    const double ac = critical_angle().ac;
    for (int i = 1; i <= 200; ++i) {
        const double a = pi / 2.0 + (ac - pi / 2.0) * i / 201.0;
        CAPTURE(a);
        CHECK(std::abs(scalene_cos2y_rejected(a)) > 1.0);
        const auto p = solve_scalene(a);
        for (const Shape& s : {p.upper, p.lower}) {
            CHECK(std::abs(normalized_f(s)) < 1e-9);
            CHECK(classify(s).kind == RotatorKind::Scalene);
            CHECK(classify(s).largest_arc == doctest::Approx(a).epsilon(1e-14));
            CHECK(verify_configuration(solve_shape(s)).pass);
        }
    }
}

TEST_CASE("no scalene root below pi/2 with a as the largest arc") {
    for (int i = 1; i < 400; ++i) {
        const double a = (pi / 2.0) * i / 400.0;
        const double c2y = scalene_cos2y(a);
        CAPTURE(a);
        if (std::isnan(c2y) || std::abs(c2y) > 1.0) continue;
        const double y = 0.5 * std::acos(c2y);
        CHECK(y >= a / 2.0);
    }
}

TEST_CASE("one scalene root per a in the window, none beyond a_c") {
    const double ac = critical_angle().ac;
    for (int i = 1; i < 200; ++i) {
        const double a = pi / 2.0 + (pi - pi / 2.0) * i / 200.0;
        int changes = 0;
        const int n = 4000;
        double prev = evaluate_h(a, 1e-9);
        for (int j = 1; j <= n; ++j) {
            const double y = a / 2.0 * j / (n + 1);
            const double v = evaluate_h(a, y);
            if ((v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
        CAPTURE(a);
        CHECK(changes == (a < ac ? 1 : 0));
    }
}

TEST_CASE("isosceles branches") {
    const Configuration t3 = solve_isosceles({pi / 3.0});
    CHECK(t3.omega_sq == doctest::Approx(32.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(std::abs(t3.theta3) < 1e-15);
    CHECK(t3.theta2 == doctest::Approx(pi / 3.0));
    CHECK(t3.theta1 == doctest::Approx(-pi / 3.0));

    const Configuration fp = solve_isosceles({2.0 * pi / 3.0});
    CHECK(fp.omega_sq == 0.0);
    CHECK(fp.theta3_undetermined);

    const Configuration b = solve_isosceles({3.0 * pi / 4.0});
    CHECK(b.omega_sq == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(circ_dist(b.theta3, pi / 2.0, pi) < 1e-15);

    CHECK(error_code_of([] { solve_isosceles({pi / 2.0}); }) == ErrorCode::Singular);
    CHECK(error_code_of([] { solve_isosceles({1.5707963}); }) == ErrorCode::Singular);
    CHECK(error_code_of([] { solve_isosceles({0.0}); }) == ErrorCode::Precondition);
    CHECK(error_code_of([] { solve_isosceles({pi}); }) == ErrorCode::Precondition);

    double prev_lo = 0.0, prev_hi = 0.0;
    for (int i = 1; i < 400; ++i) {
        const double th = pi * i / 400.0;
        if (i == 200) continue;  // pi/2
        const Configuration c = solve_isosceles({th});
        CAPTURE(th);
        const double s2 = std::sin(2.0 * th);
        const double closed = 2.0 * (1.0 / std::pow(std::abs(s2), 3) + 1.0 / (std::sin(th) * std::sin(th) * s2));
        if (std::abs(th - 2.0 * pi / 3.0) < 1e-12) continue;
        CHECK(c.omega_sq > 0.0);
        CHECK(c.omega_sq == doctest::Approx(th < 2.0 * pi / 3.0 ? closed : -closed).epsilon(1e-12));
        CHECK(circ_dist(c.theta3, th < 2.0 * pi / 3.0 ? 0.0 : pi / 2.0, pi) < 1e-13);
        double sum = 0.0;
        for (double t : c.thetas()) sum += std::sin(2.0 * t);
        CHECK(std::abs(sum) < 1e-12);
        CHECK(verify_configuration(c).pass);
        // blow-up on both sides of pi/2
        if (i < 200) {
            if (i > 150) CHECK(c.omega_sq > prev_lo);
            prev_lo = c.omega_sq;
        } else if (i > 200 && i < 250) {
            if (i > 201) CHECK(c.omega_sq < prev_hi);
            prev_hi = c.omega_sq;
        }
    }
    CHECK(solve_isosceles({pi / 2.0 - 1e-4}).omega_sq > 1e10);
    CHECK(solve_isosceles({pi / 2.0 + 1e-4}).omega_sq > 1e10);
}

TEST_CASE("enumerate pi/6") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto en = enumerate_re_for_arc(pi / 6.0);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms < 50.0);
    REQUIRE(en.equilibria.size() == 6);
    std::vector<const Equilibrium*> sc;
    for (const auto& e : en.equilibria) {
        CHECK(circ_dist(e.config.theta2 - e.config.theta1, pi / 6.0) < 1e-13);
        CHECK(verify_configuration(e.config).pass);
        if (e.kind == RotatorKind::Scalene) sc.push_back(&e);
    }
    REQUIRE(sc.size() == 2);
    for (const auto* e : sc) CHECK(e->largest_arc / pi == doctest::Approx(0.5648).epsilon(5e-4 / 0.5648));
    // congruent under 1 <-> 2: (a, x) -> (-a, x - a)
    const Shape m{-sc[0]->shape.a, sc[0]->shape.x - sc[0]->shape.a};
    CHECK(circ_dist(std::abs(normalize_angle(m.a)), pi / 6.0) < 1e-12);
    const auto arcs0 = arc_angles(sc[0]->shape);
    const auto arcs1 = arc_angles(sc[1]->shape);
    CHECK(arcs0.a21 == doctest::Approx(arcs1.a21));
    CHECK(arcs0.a31 == doctest::Approx(arcs1.a32));
    CHECK(arcs0.a32 == doctest::Approx(arcs1.a31));
    CHECK(sc[0]->config.omega_sq == doctest::Approx(sc[1]->config.omega_sq).epsilon(1e-12));
}

TEST_CASE("enumerate special arcs") {
    const auto eq = enumerate_re_for_arc(2.0 * pi / 3.0);
    bool has_fixed_point = false;
    for (const auto& e : eq.equilibria) has_fixed_point = has_fixed_point || (e.kind == RotatorKind::Equilateral && e.config.omega_sq == 0.0);
    CHECK(has_fixed_point);
    CHECK(eq.equilibria.size() == 2);

    const auto half = enumerate_re_for_arc(pi / 2.0);
    CHECK_FALSE(half.excluded.empty());
    for (const auto& e : half.equilibria) CHECK(verify_configuration(e.config).pass);

    for (int i = 1; i <= 20; ++i) {
        const double a = pi * i / 21.0;
        const auto en = enumerate_re_for_arc(a);
        CAPTURE(a);
        // at 2pi/3 three placements coincide with the equilateral point
        CHECK(en.equilibria.size() >= (std::abs(a - 2.0 * pi / 3.0) < 1e-12 ? 2u : 3u));
        for (const auto& e : en.equilibria) {
            CHECK(circ_dist(e.config.theta2 - e.config.theta1, a) < 1e-12);
            CHECK(verify_configuration(e.config).pass);
        }
    }
    CHECK(error_code_of([] { enumerate_re_for_arc(0.0); }) == ErrorCode::Precondition);
}

TEST_CASE("family table") {
    const auto rows = scalene_family_table(30);
    REQUIRE(rows.size() == 30);
    CHECK(rows.front().cos_a == -1e-3);
    CHECK(rows.back().cos_a == critical_angle().cos_ac);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].cos_a < rows[i - 1].cos_a);
    for (const auto& r : rows) {
        Configuration c;
        c.theta1 = r.theta1;
        c.theta2 = r.theta2;
        c.theta3 = r.theta3;
        c.omega_sq = r.omega_sq;
        CHECK(verify_configuration(c).pass);
        CHECK(r.s == 1);
    }
    const auto& last = rows.back();
    CHECK(std::abs(last.theta3) < 1e-7);
    CHECK(last.theta2 == doctest::Approx(critical_angle().xc).epsilon(1e-7));
    CHECK(last.theta1 == doctest::Approx(-critical_angle().xc).epsilon(1e-7));
    CHECK(rows.front().largest_arc == doctest::Approx(std::acos(-1e-3)));

    const auto worked = scalene_family_table(2, -0.125);
    CHECK(worked.front().omega_sq == doctest::Approx(106.447306923).epsilon(1e-10));
    CHECK(error_code_of([] { scalene_family_table(1); }) == ErrorCode::Precondition);
    CHECK(error_code_of([] { scalene_family_table(5, 0.1); }) == ErrorCode::Precondition);
}

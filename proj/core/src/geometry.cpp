#include "meridian/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "meridian/error.hpp"

namespace meridian {

double normalize_angle(double t) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::Precondition, "normalize_angle: non-finite angle");
    }
    double r = std::remainder(t, two_pi);  // [-pi, pi]
    if (r <= -pi) r += two_pi;
    return r;
}

bool Shape::is_canonical() const {
    return a > 0.0 && a < pi && x > -pi && x < pi && x != 0.0 && x != a;
}

YCoordinate YCoordinate::from_shape(const Shape& s) {
    return YCoordinate{normalize_angle(s.x - 0.5 * s.a)};
}

Shape YCoordinate::to_shape(double a) const {
    return Shape{a, normalize_angle(y + 0.5 * a)};
}

Shape Configuration::shape() const {
    return Shape{normalize_angle(theta2 - theta1), normalize_angle(theta3 - theta1)};
}

double ArcAngles::largest() const { return std::max({a21, a31, a32}); }

namespace {

double fold_arc(double t) { return std::abs(normalize_angle(t)); }

}  // namespace

ArcAngles arc_angles_unchecked(const Shape& shape) {
    return ArcAngles{fold_arc(shape.a), fold_arc(shape.x), fold_arc(shape.x - shape.a)};
}

ArcAngles arc_angles(const Shape& shape) {
    ArcAngles arcs = arc_angles_unchecked(shape);
    if (arcs.a21 == 0.0) throw Error(ErrorCode::Singular, "collision of bodies 1 and 2");
    if (arcs.a31 == 0.0) throw Error(ErrorCode::Singular, "collision of bodies 1 and 3");
    if (arcs.a32 == 0.0) throw Error(ErrorCode::Singular, "collision of bodies 2 and 3");
    return arcs;
}

const char* to_string(RotatorKind kind) noexcept {
    switch (kind) {
        case RotatorKind::Scalene: return "scalene";
        case RotatorKind::Isosceles: return "isosceles";
        case RotatorKind::Equilateral: return "equilateral";
        case RotatorKind::Degenerate: return "degenerate";
    }
    return "degenerate";
}

RotatorClassification classify(const Shape& shape, double tol) {
    const ArcAngles arcs = arc_angles_unchecked(shape);
    const auto v = arcs.values();
    RotatorClassification out{RotatorKind::Scalene, arcs.largest()};

    const bool degenerate = std::any_of(v.begin(), v.end(), [tol](double arc) {
        return arc < tol || arc > pi - tol;
    });
    if (degenerate) {
        out.kind = RotatorKind::Degenerate;
        return out;
    }
    const double third = two_pi / 3.0;
    if (std::all_of(v.begin(), v.end(), [&](double arc) { return std::abs(arc - third) < tol; })) {
        out.kind = RotatorKind::Equilateral;
        return out;
    }
    const int equal_pairs = (std::abs(v[0] - v[1]) < tol) + (std::abs(v[0] - v[2]) < tol) +
                            (std::abs(v[1] - v[2]) < tol);
    if (equal_pairs >= 1) out.kind = RotatorKind::Isosceles;
    return out;
}

}  // namespace meridian

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "meridian/geometry.hpp"
#include "meridian/potential.hpp"

namespace meridian {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct PlanePoint {
    double x = 0.0;  // theta31
    double a = 0.0;  // theta21
};

/// Sampling lattice over the (x, a) shape plane. Samples sit at cell
/// centres so the open-interval endpoints are never evaluated.
struct ContourGrid {
    Interval a_range{0.0, pi};
    Interval x_range{-pi, pi};
    int resolution = 800;
    std::vector<PlanePoint> exclusions = default_exclusions();
    double puncture_radius = 1e-3;
    int threads = 0;  // 0: hardware concurrency

    static std::vector<PlanePoint> default_exclusions();
    void validate() const;
    double a_step() const { return (a_range.hi - a_range.lo) / resolution; }
    double x_step() const { return (x_range.hi - x_range.lo) / resolution; }
    double cell_diagonal() const;
};

enum class Branch { ScaleneCurve, LineX2A, LineXHalfA, LineXHalfAMinusPi, LineXMinusA };

const char* to_string(Branch b) noexcept;

struct Polyline {
    Branch branch = Branch::ScaleneCurve;
    std::vector<PlanePoint> points;
};

struct ContourSet {
    std::vector<Polyline> polylines;
    int skipped_cells = 0;      // cells crossing a collision/antipodal line
    int rejected_points = 0;    // sign changes that were jumps, not zeros
    int punctured_points = 0;   // dropped inside an exclusion radius
    double max_abs_f = 0.0;     // over emitted scalene points, normalised

    std::vector<const Polyline*> branch(Branch b) const;
};

/// Scalene factor of f evaluated in the relabelled frame where the pair
/// (i, j) spans the largest arc L and body k sits at offset y from their
/// midpoint. Returns +1 where the three bodies are not within a half circle
/// (no scalene rotator exists there).
double scalene_indicator(double a, double x);

/// Sign-change scan on the grid, bisection refinement and polyline linking
/// of the scalene curve; isosceles lines are emitted analytically.
/// Requires an equal-mass model with uniform |pair coupling|.
ContourSet scan_and_trace(const ContourGrid& grid,
                          const PotentialModel& model = PotentialModel::attractive(),
                          double tol = 1e-9);

enum class ContourCoords { XA, YA };

struct ContourRow {
    std::string branch;
    double coord1 = 0.0;
    double coord2 = 0.0;
};

/// Flatten to (branch, x or y, a) rows. YA uses y = x - a/2 in (-pi, pi].
std::vector<ContourRow> emit_contour(const ContourSet& set, ContourCoords coords);

}  // namespace meridian

#include "meridian/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "meridian/bisection.hpp"
#include "meridian/error.hpp"
#include "meridian/shape_analysis.hpp"

namespace meridian {

namespace {

constexpr int refine_iterations = 80;

double fold(double t) { return std::abs(normalize_angle(t)); }

bool is_emittable_zero(double a, double x, const PotentialModel& model, double tol, double* out) {
    try {
        const double fn = std::abs(normalized_f(Shape{a, x}, model));
        if (out) *out = fn;
        return fn < tol;
    } catch (const Error&) {
        return false;
    }
}

bool punctured(const ContourGrid& grid, double x, double a) {
    for (const auto& p : grid.exclusions) {
        if (std::hypot(x - p.x, a - p.a) < grid.puncture_radius) return true;
    }
    return false;
}

// Grid values, row-major by a: values[j * n + i] at (x_i, a_j).
std::vector<double> sample_grid(const ContourGrid& grid) {
    const int n = grid.resolution;
    std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    const double dx = grid.x_step();
    const double da = grid.a_step();
    auto fill_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            const double a = grid.a_range.lo + (j + 0.5) * da;
            for (int i = 0; i < n; ++i) {
                const double x = grid.x_range.lo + (i + 0.5) * dx;
                values[static_cast<std::size_t>(j) * n + i] = scalene_indicator(a, x);
            }
        }
    };
    int threads = grid.threads > 0 ? grid.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::clamp(threads, 1, n);
    if (threads == 1) {
        fill_rows(0, n);
        return values;
    }
    {
        std::vector<std::jthread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int j0 = t * chunk;
            const int j1 = std::min(n, j0 + chunk);
            if (j0 < j1) pool.emplace_back(fill_rows, j0, j1);
        }
    }
    return values;
}

bool cell_is_singular(double x0, double x1, double a0, double a1) {
    // Collision/antipodal lines: sin x = 0 and sin(x - a) = 0.
    auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    const std::array<std::array<double, 2>, 4> corners{{{x0, a0}, {x1, a0}, {x0, a1}, {x1, a1}}};
    int sx = 0, sxa = 0;
    bool mixed = false;
    for (const auto& c : corners) {
        const int s1 = sign(std::sin(c[0]));
        const int s2 = sign(std::sin(c[0] - c[1]));
        if (s1 == 0 || s2 == 0) return true;
        if (sx == 0) {
            sx = s1;
            sxa = s2;
        } else if (s1 != sx || s2 != sxa) {
            mixed = true;
        }
    }
    return mixed;
}

struct Node {
    PlanePoint p;
    bool valid = false;
};

}  // namespace

std::vector<PlanePoint> ContourGrid::default_exclusions() {
    return {{-pi, 0.5 * pi}, {pi, 0.5 * pi}, {-0.5 * pi, 0.5 * pi}, {0.0, 0.5 * pi}, {0.5 * pi, 0.5 * pi}};
}

void ContourGrid::validate() const {
    if (resolution < 16) throw Error(ErrorCode::Precondition, "contour grid: resolution must be >= 16");
    if (!(a_range.lo < a_range.hi) || a_range.lo < 0.0 || a_range.hi > pi) {
        throw Error(ErrorCode::Precondition, "contour grid: a_range must be a sub-interval of [0, pi]");
    }
    if (!(x_range.lo < x_range.hi) || x_range.lo < -pi || x_range.hi > pi) {
        throw Error(ErrorCode::Precondition, "contour grid: x_range must be a sub-interval of [-pi, pi]");
    }
    if (!(puncture_radius >= 0.0)) {
        throw Error(ErrorCode::Precondition, "contour grid: puncture radius must be non-negative");
    }
    for (const auto& required : default_exclusions()) {
        const bool found = std::any_of(exclusions.begin(), exclusions.end(), [&](const PlanePoint& p) {
            return std::abs(p.x - required.x) < 1e-12 && std::abs(p.a - required.a) < 1e-12;
        });
        if (!found) {
            throw Error(ErrorCode::Precondition, "contour grid: the a = pi/2 exclusions are mandatory");
        }
    }
}

double ContourGrid::cell_diagonal() const { return std::hypot(x_step(), a_step()); }

const char* to_string(Branch b) noexcept {
    switch (b) {
        case Branch::ScaleneCurve: return "scalene-curve";
        case Branch::LineX2A: return "line x=2a";
        case Branch::LineXHalfA: return "line x=a/2";
        case Branch::LineXHalfAMinusPi: return "line x=a/2-pi";
        case Branch::LineXMinusA: return "line x=-a";
    }
    return "scalene-curve";
}

std::vector<const Polyline*> ContourSet::branch(Branch b) const {
    std::vector<const Polyline*> out;
    for (const auto& pl : polylines) {
        if (pl.branch == b) out.push_back(&pl);
    }
    return out;
}

double scalene_indicator(double a, double x) {
    const std::array<double, 3> pos{0.0, a, x};
    // arcs[k] is the arc of the pair not containing body k
    const std::array<double, 3> arcs{fold(x - a), fold(x), fold(a)};
    if (arcs[0] + arcs[1] + arcs[2] > two_pi - 1e-9) return 1.0;  // not within a half circle
    const auto k = static_cast<std::size_t>(std::max_element(arcs.begin(), arcs.end()) - arcs.begin());
    const std::size_t i = (k + 1) % 3;
    const double L = arcs[k];
    const double y = fold(pos[k] - pos[i]) - 0.5 * L;
    return evaluate_h(L, y);
}

ContourSet scan_and_trace(const ContourGrid& grid, const PotentialModel& model, double tol) {
    grid.validate();
    model.validate();
    if (!(tol > 0.0)) throw Error(ErrorCode::Precondition, "scan_and_trace: tol must be positive");
    const double c0 = std::abs(pair_coupling(model, 0, 1));
    if (!model.equal_masses() || std::abs(pair_coupling(model, 1, 2)) != c0 ||
        std::abs(pair_coupling(model, 2, 0)) != c0) {
        throw Error(ErrorCode::Precondition,
                    "scan_and_trace: requires equal masses and equal |pair coupling|");
    }

    const int n = grid.resolution;
    const double dx = grid.x_step();
    const double da = grid.a_step();
    auto xs = [&](int i) { return grid.x_range.lo + (i + 0.5) * dx; };
    auto as = [&](int j) { return grid.a_range.lo + (j + 0.5) * da; };
    const std::vector<double> values = sample_grid(grid);
    auto val = [&](int j, int i) { return values[static_cast<std::size_t>(j) * n + i]; };

    ContourSet out;

    // Edge ids: horizontal edges (j, i)-(j, i+1) first, then vertical (j, i)-(j+1, i).
    const std::size_t n_h = static_cast<std::size_t>(n) * (n - 1);
    auto h_id = [&](int j, int i) { return static_cast<std::size_t>(j) * (n - 1) + i; };
    auto v_id = [&](int j, int i) { return n_h + static_cast<std::size_t>(j) * n + i; };
    std::vector<int> edge_node(n_h + static_cast<std::size_t>(n - 1) * n, -1);
    std::vector<Node> nodes;

    auto crossing = [&](std::size_t id, double x0, double a0, double x1, double a1) -> int {
        if (edge_node[id] != -1) return edge_node[id];
        auto along = [&](double t) { return scalene_indicator(a0 + t * (a1 - a0), x0 + t * (x1 - x0)); };
        const BisectionResult r = bisect(along, 0.0, 1.0, 0.0, refine_iterations);
        Node node{{x0 + r.root * (x1 - x0), a0 + r.root * (a1 - a0)}, false};
        double fn = 0.0;
        if (punctured(grid, node.p.x, node.p.a)) {
            ++out.punctured_points;
        } else if (is_emittable_zero(node.p.a, node.p.x, model, tol, &fn)) {
            node.valid = true;
            out.max_abs_f = std::max(out.max_abs_f, fn);
        } else {
            ++out.rejected_points;
        }
        nodes.push_back(node);
        edge_node[id] = static_cast<int>(nodes.size() - 1);
        return edge_node[id];
    };

    std::vector<std::array<int, 2>> segments;
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i + 1 < n; ++i) {
            const double v00 = val(j, i), v10 = val(j, i + 1), v01 = val(j + 1, i), v11 = val(j + 1, i + 1);
            const bool p00 = v00 > 0, p10 = v10 > 0, p01 = v01 > 0, p11 = v11 > 0;
            if (p00 == p10 && p00 == p01 && p00 == p11) continue;
            if (cell_is_singular(xs(i), xs(i + 1), as(j), as(j + 1))) {
                ++out.skipped_cells;
                continue;
            }
            // bottom, right, top, left
            std::array<int, 4> e{-1, -1, -1, -1};
            if (p00 != p10) e[0] = crossing(h_id(j, i), xs(i), as(j), xs(i + 1), as(j));
            if (p10 != p11) e[1] = crossing(v_id(j, i + 1), xs(i + 1), as(j), xs(i + 1), as(j + 1));
            if (p01 != p11) e[2] = crossing(h_id(j + 1, i), xs(i), as(j + 1), xs(i + 1), as(j + 1));
            if (p00 != p01) e[3] = crossing(v_id(j, i), xs(i), as(j), xs(i), as(j + 1));

            auto link = [&](int u, int v) {
                if (u >= 0 && v >= 0 && nodes[static_cast<std::size_t>(u)].valid &&
                    nodes[static_cast<std::size_t>(v)].valid) {
                    segments.push_back({u, v});
                }
            };
            const int count = static_cast<int>(std::count_if(e.begin(), e.end(), [](int v) { return v >= 0; }));
            if (count == 2) {
                std::array<int, 2> pair{};
                int m = 0;
                for (int v : e) {
                    if (v >= 0) pair[static_cast<std::size_t>(m++)] = v;
                }
                link(pair[0], pair[1]);
            } else if (count == 4) {
                const double centre = scalene_indicator(0.5 * (as(j) + as(j + 1)), 0.5 * (xs(i) + xs(i + 1)));
                if ((centre > 0) == p00) {
                    link(e[0], e[1]);  // isolate corner (i+1, j)
                    link(e[2], e[3]);  // isolate corner (i, j+1)
                } else {
                    link(e[0], e[3]);
                    link(e[1], e[2]);
                }
            }
        }
    }

    // Chain segments into polylines; every node has degree <= 2.
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& s : segments) {
        adj[static_cast<std::size_t>(s[0])].push_back(s[1]);
        adj[static_cast<std::size_t>(s[1])].push_back(s[0]);
    }
    std::vector<char> used(nodes.size(), 0);
    auto walk = [&](int start) {
        Polyline pl{Branch::ScaleneCurve, {}};
        int prev = -1;
        int cur = start;
        while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = 1;
            pl.points.push_back(nodes[static_cast<std::size_t>(cur)].p);
            int next = -1;
            for (int nb : adj[static_cast<std::size_t>(cur)]) {
                if (nb != prev && !used[static_cast<std::size_t>(nb)]) {
                    next = nb;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        if (pl.points.size() >= 2) out.polylines.push_back(std::move(pl));
    };
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (!used[v] && adj[v].size() == 1) walk(static_cast<int>(v));
    }
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (!used[v] && !adj[v].empty()) walk(static_cast<int>(v));
    }

    // Isosceles lines, exact, split at wraps and punctures.
    struct Line {
        Branch branch;
        double (*x_of_a)(double);
    };
    const std::array<Line, 4> lines{{
        {Branch::LineX2A, [](double a) { return normalize_angle(2.0 * a); }},
        {Branch::LineXHalfA, [](double a) { return 0.5 * a; }},
        {Branch::LineXHalfAMinusPi, [](double a) { return 0.5 * a - pi; }},
        {Branch::LineXMinusA, [](double a) { return -a; }},
    }};
    for (const auto& line : lines) {
        Polyline current{line.branch, {}};
        auto flush = [&] {
            if (current.points.size() >= 2) out.polylines.push_back(current);
            current.points.clear();
        };
        for (int j = 0; j < n; ++j) {
            const double a = as(j);
            const double x = line.x_of_a(a);
            const bool inside = x > grid.x_range.lo && x < grid.x_range.hi;
            if (!inside) {
                flush();
                continue;
            }
            if (punctured(grid, x, a)) {
                ++out.punctured_points;
                flush();
                continue;
            }
            if (!current.points.empty() && std::abs(x - current.points.back().x) > 4.0 * da + 1e-12) {
                flush();  // wrapped through +-pi
            }
            try {
                const double fn = std::abs(normalized_f(Shape{a, x}, model));
                if (!(fn < tol)) {
                    throw Error(ErrorCode::Internal, std::string("isosceles line fails f = 0: ") +
                                                         to_string(line.branch));
                }
            } catch (const Error& e) {
                if (e.code() == ErrorCode::Internal) throw;
                // A = 0 or near-singular sample: the line is exact, keep it.
            }
            current.points.push_back({x, a});
        }
        flush();
    }
    return out;
}

std::vector<ContourRow> emit_contour(const ContourSet& set, ContourCoords coords) {
    std::vector<ContourRow> rows;
    for (const auto& pl : set.polylines) {
        for (const auto& p : pl.points) {
            const double c1 = coords == ContourCoords::XA ? p.x : normalize_angle(p.x - 0.5 * p.a);
            rows.push_back(ContourRow{to_string(pl.branch), c1, p.a});
        }
    }
    return rows;
}

}  // namespace meridian

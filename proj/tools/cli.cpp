#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "meridian/contour.hpp"
#include "meridian/error.hpp"
#include "meridian/families.hpp"
#include "meridian/shape_analysis.hpp"
#include "meridian/translation.hpp"
#include "meridian/verify.hpp"

namespace meridian::cli {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Command>& command_table() {
    static const std::map<std::string, Command> table{
        {"critical-angle", Command::CriticalAngle}, {"solve-scalene", Command::SolveScalene},
        {"solve-isosceles", Command::SolveIsosceles}, {"enumerate", Command::Enumerate},
        {"trace-contour", Command::TraceContour},   {"family-table", Command::FamilyTable},
        {"verify", Command::Verify},                {"regression", Command::Regression},
    };
    return table;
}

[[noreturn]] void precondition(const std::string& msg) { throw Error(ErrorCode::Precondition, msg); }

double require(const std::optional<double>& v, const char* flag) {
    if (!v) precondition(std::string("missing required option ") + flag);
    if (!std::isfinite(*v)) precondition(std::string(flag) + " must be finite");
    return *v;
}

double angle_in(const RunConfig& cfg, const std::optional<double>& v, const char* flag) {
    const double raw = require(v, flag);
    return cfg.degrees ? raw * std::numbers::pi / 180.0 : raw;
}

PotentialModel build_model(const RunConfig& cfg) {
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    if (!cfg.masses.empty()) {
        if (cfg.masses.size() != 3) precondition("--mass must be given exactly three times");
        masses = {cfg.masses[0], cfg.masses[1], cfg.masses[2]};
    }
    PotentialModel model;
    if (cfg.model == "attractive") {
        model = PotentialModel::attractive(masses);
    } else if (cfg.model == "repulsive") {
        model = PotentialModel::repulsive(masses);
    } else if (cfg.model == "charged") {
        if (cfg.charges.size() != 3) precondition("charged model requires exactly three --charge values");
        model = PotentialModel::charged({cfg.charges[0], cfg.charges[1], cfg.charges[2]}, masses);
    } else {
        precondition("unknown model '" + cfg.model + "' (attractive | repulsive | charged)");
    }
    if (model.variant != PotentialVariant::Charged && !cfg.charges.empty()) {
        precondition("--charge is only valid with --model charged");
    }
    model.validate();
    return model;
}

void require_attractive_equal_mass(const PotentialModel& model, const char* command) {
    if (model.variant != PotentialVariant::AttractiveCotangent || !model.equal_masses()) {
        precondition(std::string(command) + " is defined for the equal-mass attractive model only");
    }
}

// Every configuration leaving the CLI is re-checked against the equations of motion.
void check_emitted(const Configuration& cfg, const PotentialModel& model) {
    const ResidualReport rep = verify_configuration(cfg, model);
    if (!rep.pass) {
        throw Error(ErrorCode::Internal, "emitted configuration fails verification (max residual " +
                                             format_double(rep.max_abs) + ")");
    }
}

ordered_json cell_to_json(const Cell& c) {
    return std::visit([](const auto& v) { return ordered_json(v); }, c);
}

ordered_json input_echo(const RunConfig& cfg, const PotentialModel& model) {
    ordered_json in;
    in["command"] = command_name(cfg.command);
    in["model"] = to_string(model.variant);
    in["masses"] = model.masses;
    if (model.variant == PotentialVariant::Charged) in["charges"] = model.charges;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) in[key] = *v;
    };
    put("a", cfg.a);
    put("cos_a", cfg.cos_a);
    put("theta", cfg.theta);
    put("theta1", cfg.theta1);
    put("theta2", cfg.theta2);
    put("theta3", cfg.theta3);
    put("omega_sq", cfg.omega_sq);
    put("cos_start", cfg.cos_start);
    put("tol", cfg.tol);
    if (cfg.command == Command::TraceContour) {
        in["resolution"] = cfg.resolution;
        in["coords"] = cfg.coords;
    }
    if (cfg.command == Command::FamilyTable) in["n"] = cfg.n;
    in["degrees"] = cfg.degrees;
    return in;
}

std::vector<Cell> config_cells(const Configuration& c) {
    return {c.theta1, c.theta2, c.theta3, c.omega_sq, static_cast<long long>(c.s), c.theta3_undetermined};
}

const std::vector<std::string> config_columns{"theta1", "theta2", "theta3", "omega_sq", "s",
                                              "theta3_undetermined"};

std::vector<std::string> with_config_columns(std::vector<std::string> head) {
    head.insert(head.end(), config_columns.begin(), config_columns.end());
    return head;
}

std::vector<Cell> with_config_cells(std::vector<Cell> head, const Configuration& c) {
    auto tail = config_cells(c);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

struct Outcome {
    Table table;
    ordered_json extra = ordered_json::object();
    std::string csv_override;  // trace-contour uses its own row format
};

Outcome run_command(const RunConfig& cfg, const PotentialModel& model) {
    Outcome out;
    switch (cfg.command) {
        case Command::CriticalAngle: {
            require_attractive_equal_mass(model, "critical-angle");
            const CriticalAngle c = critical_angle();
            out.table.columns = {"cos_ac", "ac", "xc", "cos_ac_bisection"};
            out.table.rows.push_back({c.cos_ac, c.ac, c.xc, c.cos_ac_bisection});
            break;
        }
        case Command::SolveScalene: {
            require_attractive_equal_mass(model, "solve-scalene");
            if (cfg.a.has_value() == cfg.cos_a.has_value()) precondition("give exactly one of --a, --cos-a");
            double a = 0.0;
            if (cfg.a) {
                a = angle_in(cfg, cfg.a, "--a");
            } else {
                const double c = require(cfg.cos_a, "--cos-a");
                if (c <= -1.0 || c >= 1.0) precondition("--cos-a must lie in (-1, 1)");
                a = std::acos(c);
            }
            const ScalenePair pair = solve_scalene(a);
            out.table.columns = with_config_columns({"branch", "a", "x", "y", "largest_arc", "kind"});
            for (int b = 0; b < 2; ++b) {
                const Shape& sh = b == 0 ? pair.upper : pair.lower;
                const Configuration c = solve_shape(sh, model);
                check_emitted(c, model);
                const auto cls = classify(sh);
                out.table.rows.push_back(with_config_cells(
                    {std::string(b == 0 ? "upper" : "lower"), sh.a, sh.x, YCoordinate::from_shape(sh).y,
                     cls.largest_arc, std::string(to_string(cls.kind))},
                    c));
            }
            out.extra["isosceles_limit"] = pair.isosceles_limit;
            break;
        }
        case Command::SolveIsosceles: {
            const double theta = angle_in(cfg, cfg.theta, "--theta");
            Configuration c = solve_isosceles(IsoscelesSpec{theta});
            if (model.variant != PotentialVariant::AttractiveCotangent || !model.equal_masses()) {
                c = solve_shape(c.shape(), model);
            }
            check_emitted(c, model);
            out.table.columns = with_config_columns({"theta"});
            out.table.rows.push_back(with_config_cells({theta}, c));
            break;
        }
        case Command::Enumerate: {
            require_attractive_equal_mass(model, "enumerate");
            const ArcEnumeration en = enumerate_re_for_arc(angle_in(cfg, cfg.a, "--a"));
            out.table.columns = with_config_columns({"origin", "kind", "a", "x", "largest_arc"});
            for (const auto& e : en.equilibria) {
                check_emitted(e.config, model);
                out.table.rows.push_back(with_config_cells(
                    {e.origin, std::string(to_string(e.kind)), e.shape.a, e.shape.x, e.largest_arc}, e.config));
            }
            out.extra["count"] = en.equilibria.size();
            out.extra["excluded"] = en.excluded;
            break;
        }
        case Command::TraceContour: {
            ContourGrid grid;
            grid.resolution = cfg.resolution;
            if (cfg.coords != "xa" && cfg.coords != "ya") precondition("--coords must be xa or ya");
            const ContourCoords coords = cfg.coords == "xa" ? ContourCoords::XA : ContourCoords::YA;
            const ContourSet set = scan_and_trace(grid, model, cfg.tol.value_or(1e-9));
            out.table.columns = {"branch", "coord1", "coord2"};
            for (const auto& row : emit_contour(set, coords)) {
                out.table.rows.push_back({row.branch, row.coord1, row.coord2});
            }
            ordered_json polylines = ordered_json::array();
            for (const auto& pl : set.polylines) {
                ordered_json pts = ordered_json::array();
                for (const auto& p : pl.points) {
                    const double c1 = coords == ContourCoords::XA ? p.x : normalize_angle(p.x - 0.5 * p.a);
                    pts.push_back({c1, p.a});
                }
                polylines.push_back({{"branch", to_string(pl.branch)}, {"points", pts}});
            }
            out.extra["coords"] = cfg.coords;
            out.extra["polylines"] = std::move(polylines);
            out.extra["skipped_cells"] = set.skipped_cells;
            out.extra["rejected_points"] = set.rejected_points;
            out.extra["punctured_points"] = set.punctured_points;
            out.extra["max_abs_f"] = set.max_abs_f;
            break;
        }
        case Command::FamilyTable: {
            require_attractive_equal_mass(model, "family-table");
            const auto rows = scalene_family_table(cfg.n, cfg.cos_start.value_or(default_family_cos_start));
            out.table.columns = {"cos_a", "omega_sq", "s", "theta1", "theta2", "theta3", "largest_arc"};
            for (const auto& r : rows) {
                Configuration c;
                c.theta1 = r.theta1;
                c.theta2 = r.theta2;
                c.theta3 = r.theta3;
                c.omega_sq = r.omega_sq;
                c.s = r.s;
                check_emitted(c, model);
                out.table.rows.push_back({r.cos_a, r.omega_sq, static_cast<long long>(r.s), r.theta1, r.theta2,
                                          r.theta3, r.largest_arc});
            }
            break;
        }
        case Command::Verify: {
            Configuration c;
            c.theta1 = angle_in(cfg, cfg.theta1, "--theta1");
            c.theta2 = angle_in(cfg, cfg.theta2, "--theta2");
            c.theta3 = angle_in(cfg, cfg.theta3, "--theta3");
            c.omega_sq = require(cfg.omega_sq, "--omega-sq");
            if (c.omega_sq < 0.0) precondition("--omega-sq must be non-negative");
            const ResidualReport rep = verify_configuration(c, model, cfg.tol.value_or(default_verify_tol));
            out.table.columns = {"r1", "r2", "r3", "constraint", "max_abs", "pass"};
            out.table.rows.push_back({rep.residuals[0], rep.residuals[1], rep.residuals[2], rep.constraint,
                                      rep.max_abs, rep.pass});
            break;
        }
        case Command::Regression: {
            require_attractive_equal_mass(model, "regression");
            out.table.columns = {"name", "expected", "computed", "abs_err"};
            for (const auto& r : appendix_regression()) {
                out.table.rows.push_back({r.name, r.expected, r.computed, r.abs_err});
            }
            break;
        }
    }
    return out;
}

std::string emit_json(const RunConfig& cfg, const PotentialModel& model, const Outcome& out,
                      double elapsed_ms) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = command_name(cfg.command);
    doc["input"] = input_echo(cfg, model);
    doc["columns"] = out.table.columns;
    ordered_json records = ordered_json::array();
    for (const auto& row : out.table.rows) {
        ordered_json rec = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) rec[out.table.columns[i]] = cell_to_json(row[i]);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    for (const auto& [k, v] : out.extra.items()) doc[k] = v;
    if (cfg.metadata) {
        doc["metadata"] = {{"library", "meridian"}, {"version", "1.0.0"}, {"elapsed_ms", elapsed_ms}};
    }
    return doc.dump(2) + "\n";
}

int exit_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Precondition:
        case ErrorCode::AZero: return ExitPrecondition;
        case ErrorCode::Singular: return ExitSingular;
        case ErrorCode::Range: return ExitRange;
        case ErrorCode::Internal: return ExitInternal;
    }
    return ExitInternal;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    const auto& t = command_table();
    const auto it = t.find(name);
    if (it == t.end()) return std::nullopt;
    return it->second;
}

const char* command_name(Command c) {
    for (const auto& [name, cmd] : command_table()) {
        if (cmd == c) return name.c_str();
    }
    return "unknown";
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string emit_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::visit(
                [&out](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out += format_double(v);
                    } else if constexpr (std::is_same_v<T, long long>) {
                        out += std::to_string(v);
                    } else if constexpr (std::is_same_v<T, bool>) {
                        out += v ? "true" : "false";
                    } else {
                        out += v;
                    }
                },
                row[i]);
        }
        out += '\n';
    }
    return out;
}

RunResult run(const RunConfig& cfg) {
    RunResult result;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const PotentialModel model = build_model(cfg);
        const Outcome out = run_command(cfg, model);
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        result.output = cfg.format == Format::Csv ? emit_csv(out.table) : emit_json(cfg, model, out, elapsed);
        if (!cfg.output.empty()) {
            std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
            if (!f) throw IoError("cannot open output file '" + cfg.output + "'");
            f << result.output;
            f.flush();
            if (!f) throw IoError("failed writing output file '" + cfg.output + "'");
        }
    } catch (const Error& e) {
        result.exit_code = exit_for(e.code());
        const std::string_view code = e.code() == ErrorCode::AZero ? "PRECONDITION" : to_string(e.code());
        result.error_line = std::string(code) + ": " + e.what();
        result.output.clear();
    } catch (const IoError& e) {
        result.exit_code = ExitIo;
        result.error_line = std::string("IO: ") + e.what();
        result.output.clear();
    }
    return result;
}

}  // namespace meridian::cli

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace meridian::cli {

enum class Command {
    CriticalAngle,
    SolveScalene,
    SolveIsosceles,
    Enumerate,
    TraceContour,
    FamilyTable,
    Verify,
    Regression,
};

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::CriticalAngle;

    std::optional<double> a;
    std::optional<double> cos_a;
    std::optional<double> theta;
    std::optional<double> theta1;
    std::optional<double> theta2;
    std::optional<double> theta3;
    std::optional<double> omega_sq;
    std::optional<double> cos_start;
    int resolution = 800;
    int n = 20;
    std::optional<double> tol;
    std::string coords = "xa";

    std::string model = "attractive";
    std::vector<double> charges;
    std::vector<double> masses;

    Format format = Format::Json;
    std::string output;  // empty: stdout
    bool degrees = false;
    bool metadata = false;
};

/// Exit statuses.
enum Exit : int {
    ExitOk = 0,
    ExitPrecondition = 2,
    ExitSingular = 3,
    ExitRange = 4,
    ExitIo = 5,
    ExitInternal = 6,
};

struct RunResult {
    int exit_code = ExitOk;
    std::string output;      // the emitted artifact (also written to cfg.output if set)
    std::string error_line;  // "CODE: message", empty on success
};

RunResult run(const RunConfig& cfg);

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV: header row, '.' decimals, 17 significant digits, LF line endings.
std::string emit_csv(const Table& table);

/// 17 significant digits, locale independent.
std::string format_double(double v);

}  // namespace meridian::cli

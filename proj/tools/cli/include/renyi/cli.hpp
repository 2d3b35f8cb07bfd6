#pragma once

// Batch front end: figure sweeps, single-shot bound queries and the
// verification suite, rendered as CSV or JSON.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "renyi/quadrature.hpp"

namespace renyi::cli {

enum class Command { fig1, fig2, fig3, entropy_bound, mi_bound, verify };
enum class Format { csv, json };

struct RunSpec {
  Command command = Command::verify;
  std::map<std::string, std::string> parameters;  // flag name without dashes -> value
  std::string output_path;                        // empty or "-" writes to stdout
  Format format = Format::csv;
};

// Malformed or unknown parameters; maps to exit code 2.
class SpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalidSpec = 2;

Command parse_command(std::string_view name);
const char* to_string(Command c);
Format parse_format(std::string_view name);

// Keys accepted by a command, including the shared "seed" and "tol".
const std::vector<std::string>& allowed_keys(Command c);

// Throws SpecError on keys outside allowed_keys(spec.command).
void validate(const RunSpec& spec);

// Defaults plus "tol" and "seed"; without a "seed" key the seed comes from
// RENYI_BOUNDS_SEED when that variable is set.
NumericsConfig resolve_numerics(const RunSpec& spec);

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool all_passed = true;  // verify only
};

// Evaluates the command without writing anything.
Table evaluate(const RunSpec& spec, const NumericsConfig& cfg);

// One '#' header line (version, command, seed, numerics, parameters), a
// column row, then one line per row; 12 significant digits.
std::string render_csv(const RunSpec& spec, const NumericsConfig& cfg, const Table& table);
std::string render_json(const RunSpec& spec, const NumericsConfig& cfg, const Table& table);

// Validates, evaluates and writes the artifact. Returns 0, 1 when a
// verification check or a numerical evaluation fails, 2 on an invalid spec.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);
int run(const RunSpec& spec);

// "a,b,c", "start:stop:step" or "log:start:stop:count".
std::vector<double> parse_grid(std::string_view text);
double parse_real(std::string_view key, std::string_view text);
long long parse_integer(std::string_view key, std::string_view text);

}  // namespace renyi::cli

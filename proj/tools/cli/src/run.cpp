#include "renyi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "renyi/error.hpp"
#include "renyi/version.hpp"

namespace renyi::cli {

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  std::vector<std::string> keys;
};

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {Command::fig1, "fig1", {"r-grid", "sigma2", "seed", "tol"}},
      {Command::fig2, "fig2", {"r", "n-max", "seed", "tol"}},
      {Command::fig3, "fig3", {"eps-grid", "p", "q", "seed", "tol"}},
      {Command::entropy_bound,
       "entropy-bound",
       {"family", "mu", "sigma2", "n", "r", "p", "q", "seed", "tol"}},
      {Command::mi_bound,
       "mi-bound",
       {"channel", "var", "eps", "a", "p", "q", "t", "r", "seed", "tol"}},
      {Command::verify, "verify", {"seed", "tol"}},
  };
  return table;
}

const CommandInfo& info(Command c) {
  for (const auto& ci : command_table()) {
    if (ci.command == c) return ci;
  }
  throw SpecError("unknown command");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string header_line(const RunSpec& spec, const NumericsConfig& cfg) {
  std::ostringstream os;
  os << "# renyi-bounds " << kVersion << " command=" << to_string(spec.command)
     << " seed=" << cfg.rng_seed << " rel_tol=" << format_real(cfg.rel_tol)
     << " abs_tol=" << format_real(cfg.abs_tol) << " max_subdivisions=" << cfg.max_subdivisions
     << " mc_samples=" << cfg.mc_samples;
  for (const auto& [k, v] : spec.parameters) {
    if (k == "seed" || k == "tol") continue;
    os << ' ' << k << '=' << v;
  }
  return os.str();
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& ci : command_table()) {
    if (name == ci.name) return ci.command;
  }
  throw SpecError("unknown command '" + std::string(name) + "'");
}

const char* to_string(Command c) { return info(c).name; }

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw SpecError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

const std::vector<std::string>& allowed_keys(Command c) { return info(c).keys; }

void validate(const RunSpec& spec) {
  const auto& keys = allowed_keys(spec.command);
  for (const auto& [k, v] : spec.parameters) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw SpecError("parameter '" + k + "' is not accepted by " + to_string(spec.command));
    }
  }
}

double parse_real(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw SpecError("parameter '" + std::string(key) + "': '" + s + "' is not a finite number");
  }
  return v;
}

long long parse_integer(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw SpecError("parameter '" + std::string(key) + "': '" + s + "' is not an integer");
  }
  return v;
}

std::vector<double> parse_grid(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw SpecError("empty grid");
  std::vector<double> out;
  if (s.rfind("log:", 0) == 0) {
    const auto parts = split(std::string_view(s).substr(4), ':');
    if (parts.size() != 3) throw SpecError("log grid must be log:start:stop:count");
    const double a = parse_real("grid", parts[0]);
    const double b = parse_real("grid", parts[1]);
    const long long n = parse_integer("grid", parts[2]);
    if (!(a > 0.0 && b > 0.0) || n < 1) throw SpecError("log grid needs positive bounds and count");
    if (n == 1) return {a};
    const double la = std::log(a);
    const double lb = std::log(b);
    for (long long i = 0; i < n; ++i) {
      out.push_back(i == 0 ? a : i == n - 1 ? b : std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1)));
    }
    return out;
  }
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw SpecError("range grid must be start:stop:step");
    const double a = parse_real("grid", parts[0]);
    const double b = parse_real("grid", parts[1]);
    const double h = parse_real("grid", parts[2]);
    if (!(h > 0.0) || b < a) throw SpecError("range grid needs step > 0 and stop >= start");
    const auto n = static_cast<long long>(std::floor((b - a) / h + 1e-9));
    for (long long i = 0; i <= n; ++i) out.push_back(a + h * static_cast<double>(i));
    return out;
  }
  for (const auto& part : split(s, ',')) out.push_back(parse_real("grid", part));
  return out;
}

NumericsConfig resolve_numerics(const RunSpec& spec) {
  NumericsConfig cfg;
  if (auto it = spec.parameters.find("tol"); it != spec.parameters.end()) {
    cfg.rel_tol = parse_real("tol", it->second);
    if (!(cfg.rel_tol > 0.0)) throw SpecError("parameter 'tol' must be positive");
  }
  std::string seed_text;
  if (auto it = spec.parameters.find("seed"); it != spec.parameters.end()) {
    seed_text = it->second;
  } else if (const char* env = std::getenv("RENYI_BOUNDS_SEED"); env != nullptr && *env != '\0') {
    seed_text = env;
  }
  if (!seed_text.empty()) {
    const std::string s = trim(seed_text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw SpecError("seed '" + s + "' is not an unsigned 64-bit integer");
    }
    cfg.rng_seed = v;
  }
  return cfg;
}

Table evaluate(const RunSpec& spec, const NumericsConfig& cfg) {
  validate(spec);
  switch (spec.command) {
    case Command::fig1:
      return detail::fig1(spec, cfg);
    case Command::fig2:
      return detail::fig2(spec, cfg);
    case Command::fig3:
      return detail::fig3(spec, cfg);
    case Command::entropy_bound:
      return detail::entropy_bound_query(spec, cfg);
    case Command::mi_bound:
      return detail::mi_bound_query(spec, cfg);
    case Command::verify:
    default:
      return detail::verify(cfg);
  }
}

std::string render_csv(const RunSpec& spec, const NumericsConfig& cfg, const Table& table) {
  std::string out = header_line(spec, cfg);
  out += '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const RunSpec& spec, const NumericsConfig& cfg, const Table& table) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["tool"] = "renyi-bounds";
  doc["version"] = kVersion;
  doc["command"] = to_string(spec.command);
  doc["seed"] = cfg.rng_seed;
  doc["numerics"] = {{"rel_tol", cfg.rel_tol},
                     {"abs_tol", cfg.abs_tol},
                     {"max_subdivisions", cfg.max_subdivisions},
                     {"mc_samples", cfg.mc_samples}};
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : spec.parameters) params[k] = v;
  doc["parameters"] = params;
  doc["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& key = table.columns[i];
      if (const auto* d = std::get_if<double>(&row[i])) {
        if (std::isfinite(*d)) {
          r[key] = *d;
        } else {
          r[key] = format_real(*d);
        }
      } else if (const auto* n = std::get_if<long long>(&row[i])) {
        r[key] = *n;
      } else {
        r[key] = std::get<std::string>(row[i]);
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = rows;
  if (spec.command == Command::verify) doc["all_passed"] = table.all_passed;
  return doc.dump(2) + "\n";
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  NumericsConfig cfg;
  Table table;
  try {
    validate(spec);
    cfg = resolve_numerics(spec);
    table = evaluate(spec, cfg);
  } catch (const SpecError& e) {
    err << "renyi-bounds: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const InvalidArgument& e) {
    err << "renyi-bounds: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const InvalidMomentOrder& e) {
    err << "renyi-bounds: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::exception& e) {
    err << "renyi-bounds: " << to_string(spec.command) << " failed: " << e.what() << '\n';
    return kExitFailed;
  }

  const std::string text =
      spec.format == Format::json ? render_json(spec, cfg, table) : render_csv(spec, cfg, table);
  if (spec.output_path.empty() || spec.output_path == "-") {
    out << text;
    out.flush();
  } else {
    std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "renyi-bounds: cannot open '" << spec.output_path << "' for writing\n";
      return kExitFailed;
    }
    file << text;
    if (!file) {
      err << "renyi-bounds: write to '" << spec.output_path << "' failed\n";
      return kExitFailed;
    }
  }
  if (spec.command == Command::verify && !table.all_passed) return kExitFailed;
  return kExitOk;
}

int run(const RunSpec& spec) { return run(spec, std::cout, std::cerr); }

}  // namespace renyi::cli

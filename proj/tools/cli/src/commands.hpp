#pragma once

#include <string>

#include "renyi/cli.hpp"

namespace renyi::cli::detail {

Table fig1(const RunSpec& spec, const NumericsConfig& cfg);
Table fig2(const RunSpec& spec, const NumericsConfig& cfg);
Table fig3(const RunSpec& spec, const NumericsConfig& cfg);
Table entropy_bound_query(const RunSpec& spec, const NumericsConfig& cfg);
Table mi_bound_query(const RunSpec& spec, const NumericsConfig& cfg);
Table verify(const NumericsConfig& cfg);

// Parameter lookup with a default, converting and range-checking.
std::string get_text(const RunSpec& spec, const std::string& key, const std::string& fallback);
double get_real(const RunSpec& spec, const std::string& key, double fallback);
long long get_integer(const RunSpec& spec, const std::string& key, long long fallback);

}  // namespace renyi::cli::detail

#include "commands.hpp"

#include <cmath>
#include <optional>

#include "renyi/distributions.hpp"
#include "renyi/entropy_bounds.hpp"
#include "renyi/mi_bounds.hpp"
#include "renyi/parallel.hpp"

namespace renyi::cli::detail {

namespace {

void require_order(double r, const char* key) {
  if (!(r > 0.0 && r < 1.0)) throw SpecError(std::string("parameter '") + key + "' must lie in (0, 1)");
}

std::vector<std::vector<Cell>> sweep(std::size_t n,
                                     const std::function<std::vector<Cell>(std::size_t)>& row) {
  std::vector<std::vector<Cell>> rows(n);
  parallel_for(n, [&](std::size_t i) { rows[i] = row(i); });
  return rows;
}

}  // namespace

std::string get_text(const RunSpec& spec, const std::string& key, const std::string& fallback) {
  const auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : it->second;
}

double get_real(const RunSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : parse_real(key, it->second);
}

long long get_integer(const RunSpec& spec, const std::string& key, long long fallback) {
  const auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : parse_integer(key, it->second);
}

Table fig1(const RunSpec& spec, const NumericsConfig& cfg) {
  const auto rs = parse_grid(get_text(spec, "r-grid", "0.1:0.9:0.1"));
  const auto s2s = parse_grid(get_text(spec, "sigma2", "0.1,1,10"));
  for (double r : rs) require_order(r, "r-grid");
  for (double s2 : s2s) {
    if (!(s2 > 0.0)) throw SpecError("parameter 'sigma2' must be positive");
  }
  Table t;
  t.columns = {"r", "sigma2", "delta_two_moment", "delta_one_moment"};
  t.rows = sweep(rs.size() * s2s.size(), [&](std::size_t i) {
    const double r = rs[i / s2s.size()];
    const double s2 = s2s[i % s2s.size()];
    const auto d = dist::lognormal(0.0, s2);
    const auto sup = Support::positive_half_line();
    const double two = optimal_gap(d, sup, 1, r, GapSearch::two_moment, cfg).gap;
    const double one = optimal_gap(d, sup, 1, r, GapSearch::p_zero, cfg).gap;
    return std::vector<Cell>{r, s2, two, one};
  });
  return t;
}

Table fig2(const RunSpec& spec, const NumericsConfig& cfg) {
  const double r = get_real(spec, "r", 0.1);
  require_order(r, "r");
  const long long n_max = get_integer(spec, "n-max", 64);
  if (n_max < 1 || n_max > 100000) throw SpecError("parameter 'n-max' must lie in [1, 100000]");
  const double limit = lognormal_gap_closed(r);
  Table t;
  t.columns = {"n", "delta_two_moment", "delta_one_moment", "lognormal_limit"};
  t.rows = sweep(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const double two = optimal_gaussian_gap(r, n).gap;
    const double one = optimal_gap(dist::gaussian_magnitude(n), Support::euclidean(n), n, r,
                                   GapSearch::p_zero, cfg)
                           .gap;
    return std::vector<Cell>{static_cast<long long>(n), two, one, limit};
  });
  return t;
}

Table fig3(const RunSpec& spec, const NumericsConfig& cfg) {
  const auto eps = parse_grid(get_text(spec, "eps-grid", "log:1e-4:0.5:25"));
  for (double e : eps) {
    if (!(e > 0.0 && e < 1.0)) throw SpecError("parameter 'eps-grid' values must lie in (0, 1)");
  }
  const double p = get_real(spec, "p", 0.0);
  const double q = get_real(spec, "q", 2.0);
  if (!(p < 1.0 && q > 1.0)) throw SpecError("fig3 needs p < 1 < q");
  Table t;
  t.columns = {"eps", "mi_oracle", "prop9_bound", "chi2_bound"};
  t.rows = sweep(eps.size(), [&](std::size_t i) {
    const double e = eps[i];
    const auto ch = ChannelModel::scale_mixture(dist::two_point(e, 1.0 + 1.0 / std::sqrt(e)));
    const double mi = mi_oracle(ch, Conditioning::given_U, cfg);
    const double p9 = prop9_bound(ch, p, q, Conditioning::given_U, cfg);
    const double chi2 = chi2_mi_bound(ch, Conditioning::given_X, cfg);
    return std::vector<Cell>{e, mi, p9, chi2};
  });
  return t;
}

Table entropy_bound_query(const RunSpec& spec, const NumericsConfig& cfg) {
  const std::string family = get_text(spec, "family", "lognormal");
  const double r = get_real(spec, "r", 0.5);
  require_order(r, "r");
  int n = 1;
  ScalarDistribution d;
  if (family == "lognormal") {
    d = dist::lognormal(get_real(spec, "mu", 0.0), get_real(spec, "sigma2", 1.0));
  } else if (family == "gaussian") {
    d = dist::gaussian(get_real(spec, "mu", 0.0), get_real(spec, "sigma2", 1.0));
  } else if (family == "gaussian-vector") {
    const long long nn = get_integer(spec, "n", 1);
    if (nn < 1 || nn > 100000) throw SpecError("parameter 'n' must lie in [1, 100000]");
    n = static_cast<int>(nn);
    d = dist::gaussian_magnitude(n);
  } else {
    throw SpecError("unknown family '" + family + "' (lognormal, gaussian, gaussian-vector)");
  }
  const Support sup = natural_support(d);
  const bool has_p = spec.parameters.count("p") != 0;
  const bool has_q = spec.parameters.count("q") != 0;
  if (has_p != has_q) throw SpecError("entropy-bound needs both p and q, or neither");

  Table t;
  t.columns = {"family", "n", "r", "p", "q", "lambda", "bound", "entropy", "gap"};
  if (has_p) {
    const auto rep = entropy_bound(d, sup, n, r, get_real(spec, "p", 0.0), get_real(spec, "q", 0.0), cfg);
    t.rows.push_back({family, static_cast<long long>(n), r, rep.p, rep.q, rep.lambda, rep.bound,
                      rep.entropy.value_or(std::nan("")), rep.gap.value_or(std::nan(""))});
  } else {
    const auto rep = optimal_gap(d, sup, n, r, GapSearch::two_moment, cfg);
    t.rows.push_back({family, static_cast<long long>(n), r, rep.p, rep.q,
                      lambda_of(r, rep.p, rep.q), rep.bound, rep.entropy, rep.gap});
  }
  return t;
}

Table mi_bound_query(const RunSpec& spec, const NumericsConfig& cfg) {
  const std::string channel = get_text(spec, "channel", "awgn-gaussian");
  std::optional<ChannelModel> ch;
  Conditioning cond = Conditioning::given_X;
  if (channel == "awgn-gaussian") {
    ch = ChannelModel::awgn(dist::gaussian(0.0, get_real(spec, "var", 1.0)));
  } else if (channel == "awgn-two-point") {
    ch = ChannelModel::awgn(dist::two_point(get_real(spec, "eps", 0.1), get_real(spec, "a", 3.0)));
  } else if (channel == "mixture-two-point") {
    const double e = get_real(spec, "eps", 0.1);
    if (!(e > 0.0 && e < 1.0)) throw SpecError("parameter 'eps' must lie in (0, 1)");
    ch = ChannelModel::scale_mixture(dist::two_point(e, get_real(spec, "a", 1.0 + 1.0 / std::sqrt(e))));
    cond = Conditioning::given_U;
  } else {
    throw SpecError("unknown channel '" + channel +
                    "' (awgn-gaussian, awgn-two-point, mixture-two-point)");
  }
  const double p = get_real(spec, "p", 0.0);
  const double q = get_real(spec, "q", 2.0);
  const double tt = get_real(spec, "t", 0.5);
  const double r = get_real(spec, "r", 0.5);
  if (!(tt > 0.0 && tt <= 1.0)) throw SpecError("parameter 't' must lie in (0, 1]");
  require_order(r, "r");
  const char* given = cond == Conditioning::given_X ? "X" : "U";

  Table t;
  t.columns = {"quantity", "given", "value"};
  t.rows.push_back({std::string("mi_oracle"), std::string(given), mi_oracle(*ch, cond, cfg)});
  t.rows.push_back({std::string("chi2_bound"), std::string(given), chi2_mi_bound(*ch, cond, cfg)});
  if (cond == Conditioning::given_U) {
    t.rows.push_back(
        {std::string("chi2_bound"), std::string("X"), chi2_mi_bound(*ch, Conditioning::given_X, cfg)});
  }
  t.rows.push_back({std::string("prop7_bound"), std::string(given), prop7_bound(*ch, tt, cond, cfg)});
  t.rows.push_back({std::string("prop8_bound"), std::string(given), prop8_bound(*ch, r, cond, cfg)});
  t.rows.push_back({std::string("prop9_bound"), std::string(given), prop9_bound(*ch, p, q, cond, cfg)});
  return t;
}

}  // namespace renyi::cli::detail

#pragma once

// Hirzebruch chi_y genus of fixed point data, by two independent routes:
//  * counting:  chi^i = (-1)^i N_i, N_i the signed number of points of index i;
//  * symbolic:  chi^i = sum_p eps(p) sigma_i(t^{w_p}) / prod_j (1 - t^{w_pj})
//               summed exactly as a rational function in t, with the t = 0
//               constant term read off a truncated series expansion.

#include "fpkit/exact_algebra.hpp"
#include "fpkit/fixed_point_data.hpp"
#include "fpkit/outcome.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpkit {

struct GenusReport {
  std::vector<std::int64_t> chi;  // chi^0 .. chi^n
  std::vector<std::int64_t> N;    // N_0 .. N_n
  std::int64_t todd = 0;
  bool symbolic_constant = false;  // set only by routes that evaluate the symbolic sum
  std::vector<std::int64_t> txy;   // T^0 .. T^n

  friend bool operator==(const GenusReport&, const GenusReport&) = default;
};

// ---------------------------------------------------------------------------
// Counting route

inline std::vector<std::int64_t> signed_index_counts(const FixedPointData& data) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(data.half_dimension) + 1, 0);
  for (const auto& p : data.points) counts[static_cast<std::size_t>(index_of(p))] += value(p.sign);
  return counts;
}

inline GenusReport chi_counting(const FixedPointData& data) {
  GenusReport r;
  r.N = signed_index_counts(data);
  r.chi.resize(r.N.size());
  for (std::size_t i = 0; i < r.N.size(); ++i) r.chi[i] = (i % 2 == 0) ? r.N[i] : -r.N[i];
  r.todd = r.chi.front();
  r.txy = r.chi;
  return r;
}

// ---------------------------------------------------------------------------
// Symbolic route

/// Truncation order large enough that a vanishing expansion certifies a
/// vanishing rational function: one more than the total |weight| sum.
inline std::size_t default_series_order(const FixedPointData& data) {
  std::size_t total = 0;
  for (const auto& p : data.points)
    for (Weight w : p.weights) total += static_cast<std::size_t>(abs_weight(w));
  return total + 1;
}

/// eps(p) sigma_i(t^{w}) / prod (1 - t^{w}) with numerator and denominator
/// multiplied by t^{|w|} for every negative weight, so both are polynomials.
inline RationalFunction fixed_point_term(const FixedPoint& p, int i) {
  std::int64_t shift = 0;
  Polynomial den(BigRational(1));
  for (Weight w : p.weights) {
    const auto a = static_cast<std::size_t>(abs_weight(w));
    if (w > 0) {
      den *= Polynomial::one_minus_power(a);
    } else {
      shift += abs_weight(w);
      den *= Polynomial::monomial(BigRational(1), a) - Polynomial(BigRational(1));
    }
  }
  const auto sigma = elementary_symmetric_powers(p.weights);
  std::vector<BigRational> coeffs;
  for (const auto& [e, c] : sigma.at(static_cast<std::size_t>(i))) {
    const auto k = static_cast<std::size_t>(e + shift);
    if (coeffs.size() <= k) coeffs.resize(k + 1, BigRational(0));
    coeffs[k] += BigRational(c);
  }
  Polynomial num(std::move(coeffs));
  if (p.sign == Sign::minus) num = -num;
  return RationalFunction(std::move(num), std::move(den));
}

/// Exact sum of all fixed point terms for chi^i, in canonical form.
inline RationalFunction chi_rational_function(const FixedPointData& data, int i) {
  RationalFunction acc;
  for (const auto& p : data.points) acc += fixed_point_term(p, i);
  return acc;
}

/// Series expansion of the chi^i sum: each point contributes
/// eps(p) sigma_i(t^{w}) prod_j geometric_rewrite(w_j); the Laurent factor
/// sigma_i is absorbed by expanding the geometric product s extra orders,
/// s = sum of |negative weights|.
inline TruncatedSeries chi_series(const FixedPointData& data, int i, std::size_t order) {
  TruncatedSeries total(order);
  for (const auto& p : data.points) {
    std::size_t shift = 0;
    for (Weight w : p.weights)
      if (w < 0) shift += static_cast<std::size_t>(-w);
    TruncatedSeries g = TruncatedSeries::constant(order + shift, BigRational(1));
    for (Weight w : p.weights) g = times_geometric_rewrite(std::move(g), w);

    const auto sigma = elementary_symmetric_powers(p.weights);
    TruncatedSeries term(order);
    for (std::size_t k = 0; k <= order; ++k) {
      BigRational acc(0);
      for (const auto& [e, c] : sigma.at(static_cast<std::size_t>(i))) {
        const std::int64_t src = static_cast<std::int64_t>(k) - e;
        if (src < 0) continue;
        acc += BigRational(c) * g[static_cast<std::size_t>(src)];
      }
      term[k] = acc;
    }
    total += p.sign == Sign::plus ? term : term.scaled(BigRational(-1));
  }
  return total;
}

struct SymbolicChi {
  RationalFunction value;
  bool constant = false;          // denominator of the canonical sum has degree 0
  BigRational constant_term;      // coefficient of t^0 in the series expansion
  bool series_constant = false;   // expansion vanishes in degrees 1..order
  std::size_t series_order = 0;
};

inline SymbolicChi chi_symbolic(const FixedPointData& data, int i, std::optional<std::size_t> order = std::nullopt) {
  if (i < 0 || i > data.half_dimension) throw DataError("chi index out of range");
  SymbolicChi out;
  out.value = chi_rational_function(data, i);
  out.constant = out.value.is_constant();
  out.series_order = order.value_or(default_series_order(data));
  const TruncatedSeries s = chi_series(data, i, out.series_order);
  out.constant_term = s[0];
  out.series_constant = s.is_constant();
  return out;
}

struct TxyEvaluation {
  std::vector<std::int64_t> coefficients;  // T^0 .. T^n
  bool certified = false;  // every symbolic sum is constant and equals the counted value
};

inline TxyEvaluation txy_evaluate(const FixedPointData& data) {
  TxyEvaluation out;
  out.coefficients = chi_counting(data).txy;
  out.certified = true;
  for (int i = 0; i <= data.half_dimension; ++i) {
    const RationalFunction r = chi_rational_function(data, i);
    if (!r.is_constant() || r.value_at_zero() != BigRational(out.coefficients[static_cast<std::size_t>(i)]))
      out.certified = false;
  }
  return out;
}

/// Full report: counting route for the coefficients, symbolic route for the
/// constancy verdict and the cross-check of every coefficient.
struct GenusEvaluation {
  GenusReport report;
  std::vector<SymbolicChi> symbolic;
  bool routes_agree = false;  // constant terms equal counted chi^i for every i
};

inline GenusEvaluation evaluate_genus(const FixedPointData& data, std::optional<std::size_t> order = std::nullopt) {
  GenusEvaluation out;
  out.report = chi_counting(data);
  out.report.symbolic_constant = true;
  out.routes_agree = true;
  for (int i = 0; i <= data.half_dimension; ++i) {
    auto s = chi_symbolic(data, i, order);
    const BigRational counted(out.report.chi[static_cast<std::size_t>(i)]);
    if (!s.constant) out.report.symbolic_constant = false;
    if (s.constant_term != counted) out.routes_agree = false;
    if (s.constant && s.value.value_at_zero() != counted) out.routes_agree = false;
    out.symbolic.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semi-free actions: every weight is +1 or -1.

struct SemifreeReport {
  std::int64_t todd = 0;
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> expected_N;  // Todd * binomial(n, i)
  bool counts_match = false;
  std::int64_t bound = 0;  // |Todd| * 2^n
  std::int64_t points = 0;
  bool bound_met = false;

  bool passed() const { return counts_match && bound_met; }
};

inline bool is_semifree(const FixedPointData& data) {
  for (const auto& p : data.points)
    for (Weight w : p.weights)
      if (abs_weight(w) != 1) return false;
  return true;
}

inline SemifreeReport semifree_report(const FixedPointData& data) {
  if (!is_semifree(data)) throw DataError("action not semi-free");
  const int n = data.half_dimension;
  if (n > 60) throw DataError("dimension too large for the semi-free bound");
  SemifreeReport r;
  r.N = signed_index_counts(data);
  r.todd = r.N.front();
  std::int64_t binom = 1;
  for (int i = 0; i <= n; ++i) {
    r.expected_N.push_back(r.todd * binom);
    binom = binom * (n - i) / (i + 1);
  }
  r.counts_match = r.N == r.expected_N;
  r.bound = (r.todd < 0 ? -r.todd : r.todd) * (std::int64_t{1} << n);
  r.points = static_cast<std::int64_t>(data.points.size());
  r.bound_met = r.points >= r.bound;
  return r;
}

// ---------------------------------------------------------------------------
// JSON

/// chi_y as a polynomial in y, e.g. "1 - y".
inline std::string chi_y_string(const std::vector<std::int64_t>& chi) {
  std::vector<BigRational> c;
  for (auto v : chi) c.emplace_back(v);
  return Polynomial(std::move(c)).to_string("y");
}

inline json to_json(const GenusReport& r) {
  json j;
  j["chi"] = r.chi;
  j["N"] = r.N;
  j["todd"] = r.todd;
  j["symbolic_constant"] = r.symbolic_constant;
  j["txy"] = r.txy;
  return j;
}

inline json to_json(const SemifreeReport& r) {
  json j;
  j["todd"] = r.todd;
  j["N"] = r.N;
  j["expected_N"] = r.expected_N;
  j["counts_match"] = r.counts_match;
  j["bound"] = r.bound;
  j["points"] = r.points;
  j["bound_met"] = r.bound_met;
  return j;
}

inline json to_json(const GenusEvaluation& g) {
  json j = to_json(g.report);
  j["chi_y"] = chi_y_string(g.report.chi);
  j["routes_agree"] = g.routes_agree;
  json sym = json::array();
  for (std::size_t i = 0; i < g.symbolic.size(); ++i) {
    const auto& s = g.symbolic[i];
    sym.push_back(json{{"i", i},
                       {"sum", s.value.to_string()},
                       {"constant", s.constant},
                       {"constant_term", to_string(s.constant_term)},
                       {"series_order", s.series_order},
                       {"series_constant", s.series_constant}});
  }
  j["symbolic"] = std::move(sym);
  return j;
}

}  // namespace fpkit

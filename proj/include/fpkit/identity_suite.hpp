#pragma once

// Necessary conditions on the fixed point data of a circle action on a
// compact unitary manifold with isolated fixed points. Every checker returns
// a CheckOutcome; none of them throws on failing data.

#include "fpkit/exact_algebra.hpp"
#include "fpkit/fixed_point_data.hpp"
#include "fpkit/genus_engine.hpp"
#include "fpkit/outcome.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fpkit {

namespace detail {

/// sum_p eps(p) N_p(w)
inline std::int64_t signed_weight_count(const FixedPointData& data, Weight w) {
  std::int64_t s = 0;
  for (const auto& p : data.points) s += value(p.sign) * weight_count(p, w);
  return s;
}

/// Same sum restricted to points of index i (zero when no point has index i).
inline std::int64_t signed_weight_count_at_index(const FixedPointData& data, Weight w, int i) {
  std::int64_t s = 0;
  for (const auto& p : data.points)
    if (index_of(p) == i) s += value(p.sign) * weight_count(p, w);
  return s;
}

inline BigInt weight_product(const FixedPoint& p) {
  BigInt prod = 1;
  for (Weight w : p.weights) prod *= BigInt(static_cast<long>(w));
  return prod;
}

inline BigRational localization_term(const FixedPoint& p, const BigInt& numerator) {
  BigRational r = make_rational(numerator, weight_product(p));
  return p.sign == Sign::plus ? r : BigRational(-r);
}

}  // namespace detail

/// sum_p eps(p) N_p(w) = sum_p eps(p) N_p(-w) for every w.
inline CheckOutcome check_weight_balance(const FixedPointData& data) {
  for (Weight w : weight_magnitudes(data)) {
    const auto plus = detail::signed_weight_count(data, w);
    const auto minus = detail::signed_weight_count(data, -w);
    if (plus != minus)
      return CheckOutcome::fail("weight_balance",
                                json{{"w", w}, {"signed_count", plus}, {"signed_count_negated", minus}});
  }
  return CheckOutcome::pass("weight_balance");
}

/// The total multiplicity of +w and -w over all points is even.
inline CheckOutcome check_hattori_parity(const FixedPointData& data) {
  for (Weight w : weight_magnitudes(data)) {
    std::int64_t total = 0;
    for (const auto& p : data.points) total += weight_count(p, w) + weight_count(p, -w);
    if (total % 2 != 0) return CheckOutcome::fail("hattori_parity", json{{"w", w}, {"total", total}});
  }
  return CheckOutcome::pass("hattori_parity");
}

/// An odd number of fixed points forces even n.
inline CheckOutcome check_odd_count_even_n(const FixedPointData& data) {
  const auto k = data.points.size();
  if (k % 2 == 1 && data.half_dimension % 2 == 1)
    return CheckOutcome::fail("odd_count_even_n", json{{"points", k}, {"n", data.half_dimension}});
  return CheckOutcome::pass("odd_count_even_n");
}

inline CheckOutcome check_c1_sum(const FixedPointData& data) {
  std::int64_t s = 0;
  for (const auto& p : data.points) s += value(p.sign) * chern_value(p);
  if (s != 0) return CheckOutcome::fail("c1_sum", json{{"sum", s}});
  return CheckOutcome::pass("c1_sum");
}

/// N_i = N_{n-i}; reported, not assumed, on arbitrary data.
inline CheckOutcome check_index_symmetry(const FixedPointData& data) {
  const auto N = signed_index_counts(data);
  const std::size_t n = N.size() - 1;
  for (std::size_t i = 0; i <= n; ++i)
    if (N[i] != N[n - i]) return CheckOutcome::fail("index_symmetry", json{{"i", i}, {"N", N}});
  return CheckOutcome::pass("index_symmetry");
}

/// For a = min |w| and 0 <= i < n:
///   sum_{n_p = i} eps N_p(a) = sum_{n_p = i+1} eps N_p(-a),
/// together with the three-term identity it is derived from, for 0 <= i <= n:
///   sum_{n_p = i} eps [N_p(a) + N_p(-a)]
///     = sum_{n_p = i-1} eps N_p(a) + sum_{n_p = i+1} eps N_p(-a).
/// Throws DataError on data without fixed points.
inline CheckOutcome check_min_weight_balance(const FixedPointData& data) {
  if (data.points.empty()) throw DataError("minimum weight balance needs at least one fixed point");
  const auto mags = weight_magnitudes(data);
  const Weight a = mags.front();
  const int n = data.half_dimension;
  using detail::signed_weight_count_at_index;
  for (int i = 0; i < n; ++i) {
    const auto lhs = signed_weight_count_at_index(data, a, i);
    const auto rhs = signed_weight_count_at_index(data, -a, i + 1);
    if (lhs != rhs)
      return CheckOutcome::fail("min_weight_balance",
                                json{{"a", a}, {"index", i}, {"identity", "per_index"}, {"lhs", lhs}, {"rhs", rhs}});
  }
  for (int i = 0; i <= n; ++i) {
    const auto lhs = signed_weight_count_at_index(data, a, i) + signed_weight_count_at_index(data, -a, i);
    const auto rhs = signed_weight_count_at_index(data, a, i - 1) + signed_weight_count_at_index(data, -a, i + 1);
    if (lhs != rhs)
      return CheckOutcome::fail("min_weight_balance",
                                json{{"a", a}, {"index", i}, {"identity", "three_term"}, {"lhs", lhs}, {"rhs", rhs}});
  }
  return CheckOutcome::pass("min_weight_balance");
}

struct AbbvValue {
  int power = 0;
  BigRational value;
};

/// Localization sum sum_p eps(p) c_1(p)^j / prod_m w_{p,m}.
inline AbbvValue abbv_c1_power(const FixedPointData& data, int j) {
  if (j < 0) throw DataError("power must be nonnegative");
  AbbvValue out{j, BigRational(0)};
  for (const auto& p : data.points) {
    BigInt c1 = BigInt(static_cast<long>(chern_value(p)));
    BigInt num;
    mpz_pow_ui(num.get_mpz_t(), c1.get_mpz_t(), static_cast<unsigned long>(j));
    out.value += detail::localization_term(p, num);
  }
  return out;
}

/// Localization sums of c_1^j vanish for 0 <= j < n.
inline CheckOutcome check_abbv_vanishing(const FixedPointData& data) {
  for (int j = 0; j < data.half_dimension; ++j) {
    const auto v = abbv_c1_power(data, j);
    if (v.value != 0) return CheckOutcome::fail("abbv_vanishing", json{{"power", j}, {"value", to_string(v.value)}});
  }
  return CheckOutcome::pass("abbv_vanishing");
}

struct ChernGroup {
  Weight value = 0;
  std::vector<std::string> members;
  BigRational sum;  // sum over members of eps(p) / prod w
};

struct ChernMapAnalysis {
  std::vector<ChernGroup> groups;  // ascending by value
  bool somewhere_injective = false;
  bool group_sums_apply = false;             // at most n distinct values
  std::vector<Weight> group_sum_violations;   // values whose group sum is nonzero, when the group-sum condition applies
  std::int64_t bound = 0;                 // n + 1 when somewhere injective
  std::int64_t points = 0;
  bool bound_met = true;

  bool consistent() const { return group_sum_violations.empty() && bound_met; }
};

inline ChernMapAnalysis chern_map_analysis(const FixedPointData& data) {
  std::map<Weight, ChernGroup> by_value;
  for (const auto& p : data.points) {
    auto& g = by_value[chern_value(p)];
    g.value = chern_value(p);
    g.members.push_back(p.id);
    g.sum += detail::localization_term(p, BigInt(1));
  }
  ChernMapAnalysis a;
  for (auto& [k, g] : by_value) a.groups.push_back(std::move(g));
  a.points = static_cast<std::int64_t>(data.points.size());
  a.group_sums_apply = static_cast<int>(a.groups.size()) <= data.half_dimension;
  if (a.group_sums_apply)
    for (const auto& g : a.groups)
      if (g.sum != 0) a.group_sum_violations.push_back(g.value);
  a.somewhere_injective =
      std::any_of(a.groups.begin(), a.groups.end(), [](const ChernGroup& g) { return g.members.size() == 1; });
  if (a.somewhere_injective) {
    a.bound = data.half_dimension + 1;
    a.bound_met = a.points >= a.bound;
  }
  return a;
}

inline json to_json(const ChernMapAnalysis& a) {
  json groups = json::array();
  for (const auto& g : a.groups)
    groups.push_back(json{{"value", g.value}, {"members", g.members}, {"sum", to_string(g.sum)}});
  json j;
  j["groups"] = std::move(groups);
  j["somewhere_injective"] = a.somewhere_injective;
  j["group_sums_apply"] = a.group_sums_apply;
  j["group_sum_violations"] = a.group_sum_violations;
  j["bound"] = a.somewhere_injective ? json(a.bound) : json(nullptr);
  j["points"] = a.points;
  j["bound_met"] = a.bound_met;
  return j;
}

inline CheckOutcome check_chern_map(const FixedPointData& data) {
  const auto a = chern_map_analysis(data);
  return CheckOutcome{"chern_map", a.consistent(), to_json(a)};
}

/// Every supplied isotropy partition groups only weight-congruent points.
inline CheckOutcome check_user_partitions(const FixedPointData& data) {
  for (const auto& [w, partition] : data.isotropy_components) {
    auto c = check_congruence(data, w, partition);
    if (!c.passed) return CheckOutcome::fail("isotropy_congruence", c.witness);
  }
  return CheckOutcome::pass("isotropy_congruence");
}

/// Each chi^i sum reduces to a constant equal to the counted value.
inline CheckOutcome check_genus_constancy(const FixedPointData& data) {
  const auto counted = chi_counting(data).chi;
  for (int i = 0; i <= data.half_dimension; ++i) {
    const RationalFunction r = chi_rational_function(data, i);
    if (!r.is_constant())
      return CheckOutcome::fail("genus_constancy", json{{"i", i}, {"sum", r.to_string()}});
    if (r.value_at_zero() != counted[static_cast<std::size_t>(i)])
      return CheckOutcome::fail("genus_constancy",
                                json{{"i", i}, {"sum", r.to_string()}, {"counted", counted[static_cast<std::size_t>(i)]}});
  }
  return CheckOutcome::pass("genus_constancy");
}

/// All checks in a fixed order, cheapest first. Strict mode appends the
/// congruence of user partitions and the symbolic genus constancy.
inline std::vector<CheckOutcome> validate_all(const FixedPointData& data, bool strict) {
  std::vector<CheckOutcome> out;
  out.push_back(check_odd_count_even_n(data));
  out.push_back(check_hattori_parity(data));
  out.push_back(check_weight_balance(data));
  out.push_back(check_c1_sum(data));
  out.push_back(check_index_symmetry(data));
  out.push_back(data.points.empty() ? CheckOutcome::pass("min_weight_balance") : check_min_weight_balance(data));
  out.push_back(check_abbv_vanishing(data));
  out.push_back(check_chern_map(data));
  if (strict) {
    out.push_back(check_user_partitions(data));
    out.push_back(check_genus_constancy(data));
  }
  return out;
}

inline bool all_passed(const std::vector<CheckOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return c.passed; });
}

inline json to_json(const std::vector<CheckOutcome>& outcomes) {
  json j = json::array();
  for (const auto& c : outcomes) j.push_back(to_json(c));
  return j;
}

}  // namespace fpkit

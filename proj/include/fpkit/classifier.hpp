#pragma once

// Brute-force search over small fixed point data, filtered by the identity
// suite and matched against the classification of actions with two fixed
// points. Also the seeded random generator of graph-induced data.

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/identity_suite.hpp"
#include "fpkit/multigraph.hpp"
#include "fpkit/outcome.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace fpkit {

struct SearchBounds {
  int points = 1;      // k
  int n = 1;           // half-dimension
  Weight max_weight = 1;  // W
};

inline void check_bounds(const SearchBounds& b) {
  if (b.points < 1 || b.n < 1 || b.max_weight < 1) throw DataError("search bounds must all be >= 1");
}

enum class TrichotomyCase { dim2_samesign, dim6_samesign, mirror_oppositesign, none };

inline const char* case_name(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::dim2_samesign: return "dim2-samesign";
    case TrichotomyCase::dim6_samesign: return "dim6-samesign";
    case TrichotomyCase::mirror_oppositesign: return "mirror-oppositesign";
    case TrichotomyCase::none: break;
  }
  return "none";
}

struct TrichotomyVerdict {
  TrichotomyCase which = TrichotomyCase::none;
  std::vector<Weight> parameters;  // (a) or (a, b), a <= b

  friend bool operator==(const TrichotomyVerdict&, const TrichotomyVerdict&) = default;
};

inline json to_json(const TrichotomyVerdict& v) {
  return json{{"case", case_name(v.which)}, {"parameters", v.parameters}};
}

namespace detail {

/// {-a-b, a, b} for positive a, b; returns (a, b) with a <= b.
inline std::optional<std::pair<Weight, Weight>> one_negative_sum(const std::vector<Weight>& w) {
  if (w.size() != 3 || !(w[0] < 0 && w[1] > 0 && w[2] > 0)) return std::nullopt;
  if (w[1] + w[2] != -w[0]) return std::nullopt;
  return std::make_pair(w[1], w[2]);
}

/// {-a, -b, a+b} for positive a, b.
inline std::optional<std::pair<Weight, Weight>> one_positive_sum(const std::vector<Weight>& w) {
  if (w.size() != 3 || !(w[0] < 0 && w[1] < 0 && w[2] > 0)) return std::nullopt;
  if (-w[0] - w[1] != w[2]) return std::nullopt;
  return std::make_pair(-w[1], -w[0]);
}

}  // namespace detail

/// Matches two-point data against the three possible shapes. Throws unless
/// there are exactly two points.
inline TrichotomyVerdict trichotomy_match(const FixedPointData& data) {
  if (data.points.size() != 2) throw DataError("trichotomy needs exactly 2 fixed points");
  const FixedPoint& p = data.points[0];
  const FixedPoint& q = data.points[1];
  if (p.sign != q.sign) {
    if (p.weights == q.weights) return {TrichotomyCase::mirror_oppositesign, {}};
    return {};
  }
  if (data.half_dimension == 1 && p.weights[0] == -q.weights[0])
    return {TrichotomyCase::dim2_samesign, {abs_weight(p.weights[0])}};
  if (data.half_dimension == 3) {
    for (auto [x, y] : {std::pair{&p, &q}, std::pair{&q, &p}}) {
      auto ab = detail::one_negative_sum(x->weights);
      auto ab2 = detail::one_positive_sum(y->weights);
      if (ab && ab2 && *ab == *ab2) return {TrichotomyCase::dim6_samesign, {ab->first, ab->second}};
    }
  }
  return {};
}

/// Every (sign, sorted weight multiset) a single point can carry, in
/// canonical order: sign -1 first, multisets lexicographic.
inline std::vector<std::pair<Sign, std::vector<Weight>>> point_types(int n, Weight max_weight) {
  std::vector<Weight> values;
  for (Weight w = -max_weight; w <= max_weight; ++w)
    if (w != 0) values.push_back(w);
  std::vector<std::vector<Weight>> multisets;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Weight> m;
    for (auto i : idx) m.push_back(values[i]);
    multisets.push_back(std::move(m));
    // next nondecreasing index tuple
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == values.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[pos - 1];
  }
  std::vector<std::pair<Sign, std::vector<Weight>>> out;
  for (Sign s : {Sign::minus, Sign::plus})
    for (const auto& m : multisets) out.emplace_back(s, m);
  return out;
}

/// Visits every candidate once up to point relabeling: points appear as a
/// nondecreasing sequence of point types, ids p1..pk in that order.
inline void for_each_candidate(const SearchBounds& bounds, const std::function<void(const FixedPointData&)>& visit) {
  check_bounds(bounds);
  const auto types = point_types(bounds.n, bounds.max_weight);
  const auto k = static_cast<std::size_t>(bounds.points);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    FixedPointData d;
    d.name = "candidate";
    d.half_dimension = bounds.n;
    for (std::size_t j = 0; j < k; ++j)
      d.points.push_back({"p" + std::to_string(j + 1), types[idx[j]].first, types[idx[j]].second});
    visit(d);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == types.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
  }
}

struct Candidate {
  FixedPointData data;
  std::vector<CheckOutcome> outcomes;  // strict validation

  bool survives() const { return all_passed(outcomes); }
};

/// Threads to use: FPKIT_THREADS when set and positive, else hardware concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("FPKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// All candidates with their strict validation, in canonical order. Work is
/// split across threads; results land at their enumeration index.
inline std::vector<Candidate> enumerate_candidates(const SearchBounds& bounds, unsigned threads = thread_budget()) {
  std::vector<Candidate> out;
  for_each_candidate(bounds, [&](const FixedPointData& d) { out.push_back({d, {}}); });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) out[i].outcomes = validate_all(out[i].data, true);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, out.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

struct Survivor {
  FixedPointData data;
  std::optional<TrichotomyVerdict> verdict;  // only for two-point data
};

struct Census {
  SearchBounds bounds;
  std::size_t candidates = 0;
  /// Candidates rejected by each check, attributing a candidate to the first
  /// check it fails; in check order.
  std::vector<std::pair<std::string, std::size_t>> rejected;
  std::vector<Survivor> survivors;
  std::map<std::string, std::size_t> trichotomy;  // two-point searches only
  std::vector<FixedPointData> flagged;             // two-point survivors outside every case
};

inline Census survey(const SearchBounds& bounds, unsigned threads = thread_budget()) {
  Census c;
  c.bounds = bounds;
  const bool two_points = bounds.points == 2;
  if (two_points)
    for (auto which : {TrichotomyCase::dim2_samesign, TrichotomyCase::dim6_samesign,
                       TrichotomyCase::mirror_oppositesign, TrichotomyCase::none})
      c.trichotomy[case_name(which)] = 0;

  for (auto& cand : enumerate_candidates(bounds, threads)) {
    ++c.candidates;
    if (c.rejected.empty())
      for (const auto& o : cand.outcomes) c.rejected.emplace_back(o.name, 0);
    auto failed = std::find_if(cand.outcomes.begin(), cand.outcomes.end(), [](const CheckOutcome& o) { return !o.passed; });
    if (failed != cand.outcomes.end()) {
      ++c.rejected[static_cast<std::size_t>(failed - cand.outcomes.begin())].second;
      continue;
    }
    Survivor s{std::move(cand.data), std::nullopt};
    if (two_points) {
      s.verdict = trichotomy_match(s.data);
      ++c.trichotomy[case_name(s.verdict->which)];
      if (s.verdict->which == TrichotomyCase::none) c.flagged.push_back(s.data);
    }
    c.survivors.push_back(std::move(s));
  }
  return c;
}

namespace detail {

inline json compact(const FixedPointData& d) {
  json pts = json::array();
  for (const auto& p : d.points) pts.push_back(json{{"id", p.id}, {"sign", value(p.sign)}, {"weights", p.weights}});
  return pts;
}

}  // namespace detail

inline json to_json(const Census& c) {
  json j;
  j["bounds"] = json{{"points", c.bounds.points}, {"dimension", 2 * c.bounds.n}, {"max_weight", c.bounds.max_weight}};
  j["candidates"] = c.candidates;
  json rejected = json::object();
  for (const auto& [name, count] : c.rejected) rejected[name] = count;
  j["rejected"] = std::move(rejected);
  j["survivor_count"] = c.survivors.size();
  if (c.bounds.points == 2) {
    json t = json::object();
    for (auto which : {TrichotomyCase::dim2_samesign, TrichotomyCase::dim6_samesign,
                       TrichotomyCase::mirror_oppositesign, TrichotomyCase::none})
      t[case_name(which)] = c.trichotomy.at(case_name(which));
    j["trichotomy"] = std::move(t);
  } else {
    j["trichotomy"] = nullptr;
  }
  json survivors = json::array();
  for (const auto& s : c.survivors) {
    json e{{"fixed_points", detail::compact(s.data)}};
    e["verdict"] = s.verdict ? to_json(*s.verdict) : json(nullptr);
    survivors.push_back(std::move(e));
  }
  j["survivors"] = std::move(survivors);
  json flagged = json::array();
  for (const auto& d : c.flagged)
    flagged.push_back(json{{"fixed_points", detail::compact(d)}, {"note", "not realizable by the two-fixed-point classification"}});
  j["flagged"] = std::move(flagged);
  return j;
}

// ---------------------------------------------------------------------------
// Random graph-induced data

/// Seeded n-regular signed multigraph on k vertices v1..vk without
/// self-loops, labels uniform in [1, max_label], random orientation.
/// Requires k >= 2 and k*n even.
inline SignedMultigraph random_graph(std::uint64_t seed, int k, int n, Weight max_label) {
  if (k < 1 || n < 1 || max_label < 1) throw DataError("points, n and max label must be >= 1");
  if (k == 1) throw DataError("a single vertex cannot carry edges without self-loops");
  if ((static_cast<std::int64_t>(k) * n) % 2 != 0) throw DataError("points * n must be even");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t m) { return rng() % m; };

  SignedMultigraph g;
  for (int v = 0; v < k; ++v) g.vertices.push_back({"v" + std::to_string(v + 1), below(2) ? Sign::plus : Sign::minus});
  std::vector<int> remaining(static_cast<std::size_t>(k), n);
  std::size_t next_id = 0;
  // Pairing a max-remaining vertex with any other keeps max <= total/2, so this never stalls.
  while (true) {
    int top = *std::max_element(remaining.begin(), remaining.end());
    if (top == 0) break;
    std::vector<std::size_t> tops;
    for (std::size_t v = 0; v < remaining.size(); ++v)
      if (remaining[v] == top) tops.push_back(v);
    const std::size_t u = tops[below(tops.size())];
    std::uint64_t others = 0;
    for (std::size_t v = 0; v < remaining.size(); ++v)
      if (v != u) others += static_cast<std::uint64_t>(remaining[v]);
    std::uint64_t pick = below(others);
    std::size_t partner = 0;
    for (std::size_t v = 0; v < remaining.size(); ++v) {
      if (v == u) continue;
      if (pick < static_cast<std::uint64_t>(remaining[v])) {
        partner = v;
        break;
      }
      pick -= static_cast<std::uint64_t>(remaining[v]);
    }
    --remaining[u];
    --remaining[partner];
    const Weight label = 1 + static_cast<Weight>(below(static_cast<std::uint64_t>(max_label)));
    std::size_t from = u, to = partner;
    if (below(2)) std::swap(from, to);
    g.edges.push_back({next_id++, g.vertices[from].id, g.vertices[to].id, label});
  }
  return g;
}

inline FixedPointData random_graph_data(std::uint64_t seed, int k, int n, Weight max_label) {
  return induced_data(random_graph(seed, k, n, max_label), n, "random-" + std::to_string(seed));
}

}  // namespace fpkit

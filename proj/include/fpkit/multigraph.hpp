#pragma once

// Directed labeled signed multigraphs describing fixed point data.
//
// An edge e with label w from r to s contributes the weight eps(r) w at r and
// the weight -eps(s) w at s. A graph describes the data when every vertex
// collects exactly its weight multiset this way.

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/outcome.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace fpkit {

struct Vertex {
  std::string id;
  Sign sign = Sign::plus;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t id = 0;
  std::string from;
  std::string to;
  Weight label = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct SignedMultigraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find(const std::string& id) const {
    auto it = std::find_if(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.id == id; });
    return it == vertices.end() ? nullptr : &*it;
  }

  friend bool operator==(const SignedMultigraph&, const SignedMultigraph&) = default;
};

/// Raised when some (modulus, block, level) has unequal source and target
/// slot counts; `witness` names the offending triple.
class BalanceError : public DataError {
 public:
  BalanceError(const std::string& what, json witness) : DataError(what), witness_(std::move(witness)) {}
  const json& witness() const { return witness_; }

 private:
  json witness_;
};

/// One weight +-w at a point, waiting to be matched into an edge.
struct MatchingSlot {
  enum class Side { source, target };
  std::string point;
  std::size_t slot = 0;  // position in the point's sorted weight list
  Side side = Side::source;
  Sign sign = Sign::plus;
};

/// Which of the four sign patterns an edge source -> target realizes:
///   a: (+, +w) -> (-, +w)    same level
///   b: (+, +w) -> (+, -w)    level i to i+1
///   c: (-, -w) -> (-, +w)    level i+1 to i
///   d: (-, -w) -> (+, -w)    same level
inline char matching_case(const MatchingSlot& source, const MatchingSlot& target) {
  if (source.sign == Sign::plus) return target.sign == Sign::minus ? 'a' : 'b';
  return target.sign == Sign::minus ? 'c' : 'd';
}

namespace detail {

inline void check_graph(const SignedMultigraph& g) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.vertices[i].id == g.vertices[j].id) throw DataError("duplicate vertex id '" + g.vertices[i].id + "'");
  for (const auto& e : g.edges) {
    if (e.label < 1) throw DataError("edge label must be positive");
    if (e.from == e.to) throw DataError("self-loop at '" + e.from + "'");
    if (!g.find(e.from) || !g.find(e.to)) throw DataError("edge endpoint is not a vertex");
  }
}

/// Weights collected at `id` from the incident edges, sorted.
inline std::vector<Weight> collected_weights(const SignedMultigraph& g, const Vertex& v) {
  std::vector<Weight> out;
  const Weight s = value(v.sign);
  for (const auto& e : g.edges) {
    if (e.from == v.id) out.push_back(s * e.label);
    if (e.to == v.id) out.push_back(-s * e.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

namespace detail {

using SlotPairs = std::vector<std::pair<MatchingSlot, MatchingSlot>>;

inline void sort_slots(std::vector<MatchingSlot>& v) {
  std::sort(v.begin(), v.end(), [](const MatchingSlot& x, const MatchingSlot& y) {
    return std::tie(x.point, x.slot) < std::tie(y.point, y.slot);
  });
}

/// Slots carrying +w or -w among `ids`, keyed by level (F-index for +w,
/// F-index - 1 for -w). F-index counts negative weights divisible by w.
inline std::map<int, std::pair<std::vector<MatchingSlot>, std::vector<MatchingSlot>>> collect_slots(
    const FixedPointData& data, const std::vector<std::string>& ids, Weight w) {
  using Side = MatchingSlot::Side;
  std::map<int, std::pair<std::vector<MatchingSlot>, std::vector<MatchingSlot>>> levels;
  for (const auto& id : ids) {
    const FixedPoint& p = data.at(id);
    const int f_index = static_cast<int>(
        std::count_if(p.weights.begin(), p.weights.end(), [w](Weight x) { return x < 0 && x % w == 0; }));
    for (std::size_t k = 0; k < p.weights.size(); ++k) {
      if (p.weights[k] == w) {
        auto& lv = levels[f_index];
        if (p.sign == Sign::plus)
          lv.first.push_back({p.id, k, Side::source, p.sign});
        else
          lv.second.push_back({p.id, k, Side::target, p.sign});
      } else if (p.weights[k] == -w) {
        auto& lv = levels[f_index - 1];
        if (p.sign == Sign::minus)
          lv.first.push_back({p.id, k, Side::source, p.sign});
        else
          lv.second.push_back({p.id, k, Side::target, p.sign});
      }
    }
  }
  return levels;
}

/// Level-by-level sort-and-zip inside every block. Returns the first
/// imbalanced (block, level) as a witness instead of pairs when one exists.
inline std::variant<SlotPairs, json> match_per_index(const FixedPointData& data, const Partition& partition,
                                                     Weight w) {
  SlotPairs pairs;
  for (const auto& block : partition) {
    for (auto& [level, sides] : collect_slots(data, block, w)) {
      auto& [sources, targets] = sides;
      if (sources.size() != targets.size())
        return json{{"w", w}, {"block", block}, {"level", level},
                    {"sources", sources.size()}, {"targets", targets.size()}};
      sort_slots(sources);
      sort_slots(targets);
      for (std::size_t k = 0; k < sources.size(); ++k) pairs.emplace_back(sources[k], targets[k]);
    }
  }
  return pairs;
}

/// All +-w slots of all points matched at once, ignoring levels and blocks;
/// self-loops are removed by swapping targets with a pair that avoids the
/// looping point.
inline std::variant<SlotPairs, json> match_global(const FixedPointData& data, Weight w) {
  std::vector<std::string> ids;
  for (const auto& p : data.points) ids.push_back(p.id);
  std::vector<MatchingSlot> sources, targets;
  for (auto& [level, sides] : collect_slots(data, ids, w)) {
    sources.insert(sources.end(), sides.first.begin(), sides.first.end());
    targets.insert(targets.end(), sides.second.begin(), sides.second.end());
  }
  if (sources.size() != targets.size())
    return json{{"w", w}, {"block", "all"}, {"level", nullptr}, {"sources", sources.size()}, {"targets", targets.size()}};
  sort_slots(sources);
  sort_slots(targets);
  SlotPairs pairs;
  for (std::size_t k = 0; k < sources.size(); ++k) pairs.emplace_back(sources[k], targets[k]);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first.point != pairs[k].second.point) continue;
    const std::string& x = pairs[k].first.point;
    std::size_t j = 0;
    while (j < pairs.size() && (pairs[j].first.point == x || pairs[j].second.point == x)) ++j;
    if (j == pairs.size()) return json{{"w", w}, {"self_loop_unavoidable", x}};
    // Neither new pair can loop: x != target of j, source of j != x.
    std::swap(pairs[k].second, pairs[j].second);
  }
  return pairs;
}

}  // namespace detail

enum class MatchingMode {
  per_index,  // only the level-by-level recipe; imbalance is an error
  relaxed,    // fall back to one global matching for a modulus whose levels do not balance
};

/// Builds a graph without self-loops describing `data`. For every weight
/// magnitude w and every block F of the modulus-w partition, slots are split
/// by level i = F-index (number of negative weights divisible by w):
///   source side: eps=+1 points of F-index i with weight +w,
///                eps=-1 points of F-index i+1 with weight -w;
///   target side: eps=-1 points of F-index i with weight +w,
///                eps=+1 points of F-index i+1 with weight -w.
/// Both sides are sorted by (point id, slot) and zipped into edges labeled w.
/// `partitions` overrides the default isotropy partition per modulus.
/// Throws BalanceError when a level does not balance (per_index mode) or when
/// not even a global matching exists (relaxed mode).
inline SignedMultigraph build_multigraph(const FixedPointData& data,
                                         const std::map<Weight, Partition>& partitions = {},
                                         MatchingMode mode = MatchingMode::per_index) {
  SignedMultigraph g;
  for (const auto& p : data.points) g.vertices.push_back({p.id, p.sign});
  std::size_t next_id = 0;

  for (Weight w : weight_magnitudes(data)) {
    Partition partition;
    if (auto it = partitions.find(w); it != partitions.end())
      partition = it->second;
    else
      partition = default_isotropy_partition(data, w);

    auto matched = detail::match_per_index(data, partition, w);
    if (std::holds_alternative<json>(matched) && mode == MatchingMode::relaxed) matched = detail::match_global(data, w);
    if (auto* witness = std::get_if<json>(&matched)) {
      std::string where = "per-index balance violated for w=" + std::to_string(w);
      if ((*witness)["level"].is_number()) where += " at level " + std::to_string((*witness)["level"].get<int>());
      throw BalanceError(where, *witness);
    }
    for (const auto& [source, target] : std::get<detail::SlotPairs>(matched))
      g.edges.push_back({next_id++, source.point, target.point, w});
  }
  return g;
}

struct DescribesResult {
  bool holds = false;
  json witness = nullptr;
};

/// Checks vertex set, vertex signs, collected weight multisets and, when
/// partitions are given, that both ends of every edge share a block for the
/// edge's label.
inline DescribesResult describes(const SignedMultigraph& g, const FixedPointData& data,
                                 const std::map<Weight, Partition>* partitions = nullptr) {
  auto fail = [](json w) { return DescribesResult{false, std::move(w)}; };
  if (g.vertices.size() != data.points.size())
    return fail(json{{"condition", 1}, {"reason", "vertex count differs from point count"}});
  for (const auto& p : data.points)
    if (!g.find(p.id)) return fail(json{{"condition", 1}, {"missing_vertex", p.id}});
  for (const auto& e : g.edges) {
    if (!g.find(e.from) || !g.find(e.to)) return fail(json{{"condition", 1}, {"dangling_edge", e.id}});
    if (e.label < 1) return fail(json{{"condition", 1}, {"bad_label", e.id}});
  }
  for (const auto& p : data.points) {
    const Vertex& v = *g.find(p.id);
    if (v.sign != p.sign) return fail(json{{"condition", 2}, {"vertex", p.id}});
  }
  for (const auto& p : data.points) {
    const auto got = detail::collected_weights(g, *g.find(p.id));
    if (got != p.weights)
      return fail(json{{"condition", 3}, {"vertex", p.id}, {"collected", got}, {"expected", p.weights}});
  }
  if (partitions) {
    for (const auto& e : g.edges) {
      auto it = partitions->find(e.label);
      if (it == partitions->end()) continue;
      bool shared = std::any_of(it->second.begin(), it->second.end(), [&](const auto& block) {
        return std::find(block.begin(), block.end(), e.from) != block.end() &&
               std::find(block.begin(), block.end(), e.to) != block.end();
      });
      if (!shared) return fail(json{{"condition", 4}, {"edge", e.id}, {"from", e.from}, {"to", e.to}, {"label", e.label}});
    }
  }
  return {true, nullptr};
}

/// Fixed point data whose weights are read off the graph. Every vertex must
/// have exactly n incident edges.
inline FixedPointData induced_data(const SignedMultigraph& g, int n, std::string name = "induced") {
  detail::check_graph(g);
  if (n < 1) throw DataError("n must be positive");
  FixedPointData data;
  data.name = std::move(name);
  data.half_dimension = n;
  for (const auto& v : g.vertices) {
    auto weights = detail::collected_weights(g, v);
    if (static_cast<int>(weights.size()) != n)
      throw DataError("not n-regular: vertex '" + v.id + "' has degree " + std::to_string(weights.size()));
    data.points.push_back({v.id, v.sign, std::move(weights)});
  }
  normalize(data);
  return data;
}

/// Keeps every vertex and the edges whose labels are multiples of w.
inline SignedMultigraph sub_multigraph(const SignedMultigraph& g, Weight w) {
  if (w < 1) throw DataError("modulus must be >= 1");
  SignedMultigraph out;
  out.vertices = g.vertices;
  for (const auto& e : g.edges)
    if (e.label % w == 0) out.edges.push_back(e);
  return out;
}

/// Every point with only its weights divisible by w kept.
inline std::vector<FixedPoint> restrict_weights(const FixedPointData& data, Weight w) {
  std::vector<FixedPoint> out;
  for (const auto& p : data.points) {
    FixedPoint q{p.id, p.sign, {}};
    for (Weight x : p.weights)
      if (x % w == 0) q.weights.push_back(x);
    out.push_back(std::move(q));
  }
  return out;
}

/// Partition per weight magnitude: user components where given, residue
/// grouping otherwise.
inline std::map<Weight, Partition> effective_partitions(const FixedPointData& data) {
  std::map<Weight, Partition> out;
  for (Weight w : weight_magnitudes(data)) out[w] = default_isotropy_partition(data, w);
  return out;
}

inline std::string export_dot(const SignedMultigraph& g) {
  if (g.vertices.empty() && g.edges.empty()) return "digraph G { }\n";
  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) order.emplace(g.vertices[i].id, i);
  auto pos = [&](const std::string& id) {
    auto it = order.find(id);
    return it == order.end() ? order.size() : it->second;
  };
  std::vector<const Edge*> edges;
  for (const auto& e : g.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [&](const Edge* a, const Edge* b) {
    return std::make_tuple(pos(a->from), pos(a->to), a->label, a->id) <
           std::make_tuple(pos(b->from), pos(b->to), b->label, b->id);
  });
  std::string out = "digraph G {\n";
  for (const auto& v : g.vertices)
    out += "  \"" + v.id + "\" [label=\"" + v.id + "," + symbol(v.sign) + "\"];\n";
  for (const Edge* e : edges)
    out += "  \"" + e->from + "\" -> \"" + e->to + "\" [label=\"" + std::to_string(e->label) + "\"];\n";
  out += "}\n";
  return out;
}

inline json to_json(const SignedMultigraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back(json{{"id", v.id}, {"sign", value(v.sign)}});
  json es = json::array();
  for (const auto& e : g.edges) es.push_back(json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
  json j;
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j;
}

inline SignedMultigraph graph_from_json(const json& j) {
  try {
    SignedMultigraph g;
    for (const auto& v : j.at("vertices"))
      g.vertices.push_back({v.at("id").get<std::string>(), sign_from_int(v.at("sign").get<std::int64_t>())});
    std::size_t id = 0;
    for (const auto& e : j.at("edges"))
      g.edges.push_back({id++, e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                         e.at("label").get<Weight>()});
    detail::check_graph(g);
    return g;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed graph: ") + e.what());
  }
}

}  // namespace fpkit

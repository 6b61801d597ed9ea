#pragma once

// Signed fixed point data of a circle action with isolated fixed points:
// one sign and one multiset of nonzero integer weights per fixed point.

#include "fpkit/outcome.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpkit {

using Weight = std::int64_t;

enum class Sign : int { minus = -1, plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign sign_from_int(std::int64_t v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw DataError("sign must be 1 or -1, got " + std::to_string(v));
}

struct FixedPoint {
  std::string id;
  Sign sign = Sign::plus;
  std::vector<Weight> weights;  // sorted ascending

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// Blocks of point ids; every id appears in exactly one block.
using Partition = std::vector<std::vector<std::string>>;

struct FixedPointData {
  std::string name;
  int half_dimension = 0;
  std::vector<FixedPoint> points;
  /// User-supplied components of the fixed set of Z_w, keyed by modulus w >= 1.
  std::map<Weight, Partition> isotropy_components;

  const FixedPoint* find(std::string_view id) const {
    auto it = std::find_if(points.begin(), points.end(), [&](const FixedPoint& p) { return p.id == id; });
    return it == points.end() ? nullptr : &*it;
  }

  const FixedPoint& at(std::string_view id) const {
    if (const FixedPoint* p = find(id)) return *p;
    throw DataError("unknown fixed point id '" + std::string(id) + "'");
  }

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

inline Weight abs_weight(Weight w) { return w < 0 ? -w : w; }

inline Weight residue(Weight w, Weight modulus) { return ((w % modulus) + modulus) % modulus; }

/// Number of negative weights.
inline int index_of(const FixedPoint& p) {
  return static_cast<int>(std::count_if(p.weights.begin(), p.weights.end(), [](Weight w) { return w < 0; }));
}

inline int index_of(const FixedPointData& data, std::string_view id) { return index_of(data.at(id)); }

/// Multiplicity of w in the weight multiset.
inline int weight_count(const FixedPoint& p, Weight w) {
  return static_cast<int>(std::count(p.weights.begin(), p.weights.end(), w));
}

inline int weight_count(const FixedPointData& data, std::string_view id, Weight w) {
  if (w == 0) throw DataError("weight must be nonzero");
  return weight_count(data.at(id), w);
}

/// First equivariant Chern class at a fixed point: the sum of its weights.
inline Weight chern_value(const FixedPoint& p) {
  Weight s = 0;
  for (Weight w : p.weights) s += w;
  return s;
}

using ChernMap = std::map<std::string, Weight>;

inline ChernMap chern_map(const FixedPointData& data) {
  ChernMap m;
  for (const auto& p : data.points) m[p.id] = chern_value(p);
  return m;
}

/// Distinct absolute values of all weights, ascending.
inline std::vector<Weight> weight_magnitudes(const FixedPointData& data) {
  std::set<Weight> s;
  for (const auto& p : data.points)
    for (Weight w : p.weights) s.insert(abs_weight(w));
  return {s.begin(), s.end()};
}

inline std::vector<Weight> residue_multiset(const FixedPoint& p, Weight modulus) {
  std::vector<Weight> r;
  r.reserve(p.weights.size());
  for (Weight w : p.weights) r.push_back(residue(w, modulus));
  std::sort(r.begin(), r.end());
  return r;
}

/// Validates every structural invariant and sorts weights. Throws DataError.
inline void normalize(FixedPointData& data) {
  if (data.half_dimension < 1) throw DataError("dimension must be a positive even integer");
  std::set<std::string> ids;
  for (auto& p : data.points) {
    if (!ids.insert(p.id).second) throw DataError("duplicate id '" + p.id + "'");
    if (static_cast<int>(p.weights.size()) != data.half_dimension)
      throw DataError("dimension mismatch at '" + p.id + "': expected " + std::to_string(data.half_dimension) +
                      " weights, got " + std::to_string(p.weights.size()));
    for (Weight w : p.weights)
      if (w == 0) throw DataError("zero weight at " + p.id);
    std::sort(p.weights.begin(), p.weights.end());
  }
  for (const auto& [w, partition] : data.isotropy_components) {
    const std::string where = "malformed partition for modulus " + std::to_string(w);
    if (w < 1) throw DataError("malformed partition: modulus must be >= 1, got " + std::to_string(w));
    std::set<std::string> seen;
    for (const auto& block : partition) {
      if (block.empty()) throw DataError(where + ": empty block");
      for (const auto& id : block) {
        if (!ids.count(id)) throw DataError(where + ": unknown id '" + id + "'");
        if (!seen.insert(id).second) throw DataError(where + ": id '" + id + "' appears twice");
      }
    }
    if (seen.size() != ids.size()) throw DataError(where + ": not every id is covered");
  }
}

/// Reversing the circle action negates every weight.
inline FixedPointData reversed(FixedPointData data) {
  for (auto& p : data.points) {
    for (Weight& w : p.weights) w = -w;
    std::sort(p.weights.begin(), p.weights.end());
  }
  return data;
}

/// The user partition for modulus w if one was supplied, otherwise points
/// grouped by their multiset of weight residues mod w. Blocks appear in order
/// of first member; members keep point order.
inline Partition default_isotropy_partition(const FixedPointData& data, Weight w) {
  if (w < 1) throw DataError("modulus must be >= 1");
  if (auto it = data.isotropy_components.find(w); it != data.isotropy_components.end()) return it->second;
  Partition blocks;
  std::vector<std::vector<Weight>> keys;
  for (const auto& p : data.points) {
    auto key = residue_multiset(p, w);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      blocks.push_back({p.id});
    } else {
      blocks[static_cast<std::size_t>(it - keys.begin())].push_back(p.id);
    }
  }
  return blocks;
}

/// Points in one block must have weights that agree modulo w up to a bijection.
inline CheckOutcome check_congruence(const FixedPointData& data, Weight w, const Partition& partition) {
  const std::string name = "isotropy_congruence[" + std::to_string(w) + "]";
  for (const auto& block : partition) {
    if (block.empty()) continue;
    const auto& first = data.at(block.front());
    const auto ref = residue_multiset(first, w);
    for (std::size_t k = 1; k < block.size(); ++k) {
      const auto& other = data.at(block[k]);
      auto r = residue_multiset(other, w);
      if (r != ref)
        return CheckOutcome::fail(name, json{{"modulus", w}, {"pair", {first.id, other.id}},
                                             {"residues", {ref, r}}});
    }
  }
  return CheckOutcome::pass(name);
}

// ---------------------------------------------------------------------------
// JSON file format

inline json to_json(const FixedPointData& data) {
  json j;
  j["name"] = data.name;
  j["dimension"] = 2 * data.half_dimension;
  json pts = json::array();
  for (const auto& p : data.points) {
    json jp;
    jp["id"] = p.id;
    jp["sign"] = value(p.sign);
    jp["weights"] = p.weights;
    pts.push_back(std::move(jp));
  }
  j["fixed_points"] = std::move(pts);
  if (!data.isotropy_components.empty()) {
    json comps = json::object();
    for (const auto& [w, partition] : data.isotropy_components) comps[std::to_string(w)] = partition;
    j["isotropy_components"] = std::move(comps);
  }
  return j;
}

inline std::string serialize_data(const FixedPointData& data) { return to_json(data).dump(2) + "\n"; }

inline FixedPointData data_from_json(const json& j) {
  try {
    FixedPointData data;
    if (!j.is_object()) throw DataError("top-level value must be an object");
    data.name = j.value("name", std::string{});
    const auto dim = j.at("dimension").get<std::int64_t>();
    if (dim < 2 || dim % 2 != 0) throw DataError("dimension must be a positive even integer");
    data.half_dimension = static_cast<int>(dim / 2);
    for (const auto& jp : j.at("fixed_points")) {
      FixedPoint p;
      p.id = jp.at("id").get<std::string>();
      p.sign = sign_from_int(jp.at("sign").get<std::int64_t>());
      p.weights = jp.at("weights").get<std::vector<Weight>>();
      data.points.push_back(std::move(p));
    }
    if (auto it = j.find("isotropy_components"); it != j.end()) {
      if (!it->is_object()) throw DataError("malformed partition: isotropy_components must be an object");
      for (const auto& [key, blocks] : it->items()) {
        std::size_t used = 0;
        Weight w = 0;
        try {
          w = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || key.empty()) throw DataError("malformed partition: bad modulus key '" + key + "'");
        data.isotropy_components[w] = blocks.get<Partition>();
      }
    }
    normalize(data);
    return data;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed fixed point data: ") + e.what());
  }
}

inline FixedPointData parse_data(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  return data_from_json(j);
}

}  // namespace fpkit

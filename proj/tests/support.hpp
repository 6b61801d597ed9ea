#pragma once

#include "fpkit/fixed_point_data.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fpkit::testing {

struct PointSpec {
  std::string id;
  int sign;
  std::vector<Weight> weights;
};

inline FixedPointData make_data(int n, const std::vector<PointSpec>& points, std::string name = "test") {
  FixedPointData d;
  d.name = std::move(name);
  d.half_dimension = n;
  for (const auto& p : points) d.points.push_back({p.id, sign_from_int(p.sign), p.weights});
  normalize(d);
  return d;
}

inline std::string fixture_path(const std::string& name) { return std::string(FPKIT_FIXTURES) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FixedPointData fixture(const std::string& name) { return parse_data(slurp(fixture_path(name + ".json"))); }

}  // namespace fpkit::testing

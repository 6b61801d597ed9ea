#include "fpkit/classifier.hpp"
#include "fpkit/multigraph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fpkit;
using fpkit::testing::fixture;
using fpkit::testing::make_data;
using fpkit::testing::slurp;

namespace {

std::string golden(const std::string& name) { return slurp(std::string(FPKIT_GOLDEN) + "/" + name); }

struct E {
  std::string from, to;
  Weight label;
  friend bool operator<(const E& a, const E& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  }
  friend bool operator==(const E&, const E&) = default;
};

std::vector<E> edge_list(const SignedMultigraph& g) {
  std::vector<E> out;
  for (const auto& e : g.edges) out.push_back({e.from, e.to, e.label});
  std::sort(out.begin(), out.end());
  return out;
}

SignedMultigraph graph(std::vector<std::pair<std::string, int>> vertices, std::vector<E> edges) {
  SignedMultigraph g;
  for (auto& [id, s] : vertices) g.vertices.push_back({id, sign_from_int(s)});
  std::size_t i = 0;
  for (auto& e : edges) g.edges.push_back({i++, e.from, e.to, e.label});
  return g;
}

}  // namespace

TEST(Build, TwoSphere) {
  auto g = build_multigraph(fixture("s2_a3"));
  EXPECT_EQ(edge_list(g), (std::vector<E>{{"p", "q", 3}}));
  EXPECT_EQ(g.vertices.size(), 2u);
}

TEST(Build, SixSphere) {
  auto g = build_multigraph(fixture("s6"));
  EXPECT_EQ(edge_list(g), (std::vector<E>{{"p", "q", 1}, {"p", "q", 2}, {"q", "p", 3}}));
}

TEST(Build, EightSphere) {
  auto g = build_multigraph(fixture("s8"));
  EXPECT_EQ(edge_list(g), (std::vector<E>{{"p", "q", 2}, {"p", "q", 3}, {"p", "q", 5}, {"p", "q", 6}}));
  EXPECT_EQ(g.vertices[1].sign, Sign::minus);
}

TEST(Build, SixSphereFamily) {
  for (Weight a = 1; a <= 4; ++a)
    for (Weight b = a; b <= 4; ++b) {
      auto d = make_data(3, {{"p", 1, {-a - b, a, b}}, {"q", 1, {-a, -b, a + b}}});
      auto g = build_multigraph(d);
      std::vector<E> expected{{"p", "q", a}, {"p", "q", b}, {"q", "p", a + b}};
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(edge_list(g), expected) << a << "," << b;
      EXPECT_TRUE(describes(g, d).holds);
    }
}

TEST(Build, NoSelfLoopsAndDescribesFixtures) {
  for (const char* name : {"s2_a1", "s2_a2", "s2_a3", "s6", "s2n", "s8", "s2n_semifree"}) {
    auto d = fixture(name);
    auto g = build_multigraph(d);
    for (const auto& e : g.edges) EXPECT_NE(e.from, e.to);
    auto parts = effective_partitions(d);
    auto r = describes(g, d, &parts);
    EXPECT_TRUE(r.holds) << name << " " << r.witness.dump();
  }
}

TEST(Build, EdgeIdsAreSequential) {
  auto g = build_multigraph(fixture("s8"));
  for (std::size_t i = 0; i < g.edges.size(); ++i) EXPECT_EQ(g.edges[i].id, i);
}

TEST(Build, ImbalanceNamesLevel) {
  auto d = make_data(1, {{"p", 1, {1}}, {"q", 1, {1}}});
  try {
    build_multigraph(d);
    FAIL() << "expected BalanceError";
  } catch (const BalanceError& e) {
    EXPECT_NE(std::string(e.what()).find("w=1"), std::string::npos);
    EXPECT_EQ(e.witness()["w"], 1);
    EXPECT_TRUE(e.witness().contains("level"));
  }
  EXPECT_THROW(build_multigraph(d, {}, MatchingMode::relaxed), BalanceError);
}

// p(+) -> q(+) twice: level counts differ, the global matching still exists.
TEST(Build, RelaxedModeRecoversLevelMismatch) {
  auto g0 = graph({{"p", 1}, {"q", 1}}, {{"p", "q", 1}, {"p", "q", 2}});
  auto d = induced_data(g0, 2);
  EXPECT_EQ(d.at("q").weights, (std::vector<Weight>{-2, -1}));
  EXPECT_THROW(build_multigraph(d), BalanceError);
  auto g = build_multigraph(d, {}, MatchingMode::relaxed);
  EXPECT_TRUE(describes(g, d).holds);
}

TEST(Build, UserPartitionSplitsMatching) {
  // two copies of the 2-sphere; the modulus-1 partition keeps them apart
  auto d = make_data(1, {{"a", 1, {1}}, {"b", 1, {-1}}, {"c", 1, {1}}, {"d", 1, {-1}}});
  auto g = build_multigraph(d, {{1, {{"a", "d"}, {"b", "c"}}}});
  EXPECT_EQ(edge_list(g), (std::vector<E>{{"a", "d", 1}, {"c", "b", 1}}));
  auto plain = build_multigraph(d);
  EXPECT_EQ(edge_list(plain), (std::vector<E>{{"a", "b", 1}, {"c", "d", 1}}));
}

TEST(MatchingCase, AllFourPatterns) {
  using S = MatchingSlot::Side;
  MatchingSlot plus_src{"p", 0, S::source, Sign::plus}, minus_src{"p", 0, S::source, Sign::minus};
  MatchingSlot plus_tgt{"q", 0, S::target, Sign::plus}, minus_tgt{"q", 0, S::target, Sign::minus};
  EXPECT_EQ(matching_case(plus_src, minus_tgt), 'a');
  EXPECT_EQ(matching_case(plus_src, plus_tgt), 'b');
  EXPECT_EQ(matching_case(minus_src, minus_tgt), 'c');
  EXPECT_EQ(matching_case(minus_src, plus_tgt), 'd');
}

TEST(Describes, FigureGraphs) {
  auto s8 = fixture("s8");
  auto fig = graph({{"p", 1}, {"q", -1}}, {{"p", "q", 2}, {"p", "q", 3}, {"p", "q", 5}, {"p", "q", 6}});
  EXPECT_TRUE(describes(fig, s8).holds);
  EXPECT_TRUE(describes(fig, fixture("s2n")).holds);
  auto parts = effective_partitions(s8);
  EXPECT_TRUE(describes(fig, s8, &parts).holds);
}

TEST(Describes, SignFlipBreaksWeights) {
  auto fig = graph({{"p", 1}, {"q", 1}}, {{"p", "q", 2}, {"p", "q", 3}, {"p", "q", 5}, {"p", "q", 6}});
  auto r = describes(fig, fixture("s2n"));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness["condition"], 2);
  // with the data's sign flipped as well, the collected weights are the mismatch
  auto d = fixture("s2n");
  d.points[1].sign = Sign::plus;
  r = describes(fig, d);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness["condition"], 3);
  EXPECT_EQ(r.witness["vertex"], "q");
  EXPECT_EQ(r.witness["collected"], json::parse("[-6,-5,-3,-2]"));
}

TEST(Describes, StructuralFailures) {
  auto d = fixture("s2_a3");
  EXPECT_EQ(describes(graph({{"p", 1}}, {}), d).witness["condition"], 1);
  EXPECT_EQ(describes(graph({{"p", 1}, {"x", 1}}, {}), d).witness["condition"], 1);
  EXPECT_EQ(describes(graph({{"p", 1}, {"q", 1}}, {{"p", "z", 3}}), d).witness["condition"], 1);
  EXPECT_EQ(describes(graph({{"p", 1}, {"q", 1}}, {{"q", "p", 3}}), d).witness["condition"], 3);
}

TEST(Describes, PartitionCondition) {
  auto d = make_data(1, {{"a", 1, {1}}, {"b", 1, {-1}}, {"c", 1, {1}}, {"d", 1, {-1}}});
  auto g = graph({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}, {{"a", "b", 1}, {"c", "d", 1}});
  std::map<Weight, Partition> parts{{1, {{"a", "d"}, {"b", "c"}}}};
  auto r = describes(g, d, &parts);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness["condition"], 4);
}

TEST(Induced, SingleEdgeCases) {
  auto plus = induced_data(graph({{"p", 1}, {"q", 1}}, {{"p", "q", 5}}), 1);
  EXPECT_EQ(plus.at("p").weights, std::vector<Weight>{5});
  EXPECT_EQ(plus.at("q").weights, std::vector<Weight>{-5});
  auto mixed = induced_data(graph({{"p", 1}, {"q", -1}}, {{"p", "q", 5}}), 1);
  EXPECT_EQ(mixed.at("q").weights, std::vector<Weight>{5});
}

TEST(Induced, FigureOfSixSphere) {
  auto d = induced_data(graph({{"p", 1}, {"q", 1}}, {{"p", "q", 1}, {"p", "q", 2}, {"q", "p", 3}}), 3);
  EXPECT_EQ(d.at("p").weights, (std::vector<Weight>{-3, 1, 2}));
  EXPECT_EQ(d.at("q").weights, (std::vector<Weight>{-2, -1, 3}));
}

TEST(Induced, Errors) {
  EXPECT_THROW(induced_data(graph({{"p", 1}, {"q", 1}}, {{"p", "q", 1}}), 2), DataError);
  EXPECT_THROW(induced_data(graph({{"p", 1}}, {{"p", "p", 1}}), 2), DataError);
  EXPECT_THROW(induced_data(graph({{"p", 1}, {"q", 1}}, {{"p", "q", 0}}), 1), DataError);
  EXPECT_THROW(induced_data(graph({{"p", 1}, {"p", 1}}, {}), 1), DataError);
}

TEST(Subgraph, Examples) {
  auto g = build_multigraph(fixture("s8"));
  EXPECT_EQ(edge_list(sub_multigraph(g, 3)), (std::vector<E>{{"p", "q", 3}, {"p", "q", 6}}));
  EXPECT_EQ(sub_multigraph(g, 1), g);
  auto none = sub_multigraph(g, 7);
  EXPECT_TRUE(none.edges.empty());
  EXPECT_EQ(none.vertices.size(), 2u);
  EXPECT_THROW(sub_multigraph(g, 0), DataError);
}

TEST(Subgraph, DescribesIsotropyData) {
  auto d = fixture("s8");
  auto sub = sub_multigraph(build_multigraph(d), 3);
  auto pts = restrict_weights(d, 3);
  FixedPointData f{"fixed set", 2, pts, {}};
  EXPECT_EQ(f.at("p").weights, (std::vector<Weight>{3, 6}));
  EXPECT_TRUE(describes(sub, f).holds);
}

TEST(Subgraph, DegreeCountsDivisibleWeights) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto d = random_graph_data(seed, 4, 3, 6);
    auto g = build_multigraph(d, {}, MatchingMode::relaxed);
    for (Weight w = 1; w <= 6; ++w) {
      auto sub = sub_multigraph(g, w);
      auto restricted = restrict_weights(d, w);
      for (const auto& p : restricted) {
        std::size_t degree = 0;
        for (const auto& e : sub.edges) degree += (e.from == p.id) + (e.to == p.id);
        EXPECT_EQ(degree, p.weights.size());
      }
    }
  }
}

TEST(RoundTrip, RandomRegularGraphs) {
  int per_level = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5), n = 1 + static_cast<int>(seed % 4);
    if (k * n % 2) continue;
    auto d = random_graph_data(seed, k, n, 5);
    auto g = build_multigraph(d, {}, MatchingMode::relaxed);
    auto r = describes(g, d);
    EXPECT_TRUE(r.holds) << seed << " " << r.witness.dump();
    for (const auto& e : g.edges) EXPECT_NE(e.from, e.to);
    try {
      build_multigraph(d);
      ++per_level;
    } catch (const BalanceError&) {
    }
  }
  EXPECT_GT(per_level, 0);
}

TEST(Dot, Examples) {
  auto s2 = export_dot(build_multigraph(fixture("s2_a3")));
  EXPECT_NE(s2.find("\"p\" -> \"q\" [label=\"3\"];"), std::string::npos);
  EXPECT_EQ(export_dot(SignedMultigraph{}), "digraph G { }\n");
  auto s8 = export_dot(build_multigraph(fixture("s8")));
  EXPECT_LT(s8.find("label=\"2\"]"), s8.find("label=\"3\"]"));
  EXPECT_LT(s8.find("label=\"5\"]"), s8.find("label=\"6\"]"));
}

TEST(Dot, GoldenFiles) {
  EXPECT_EQ(export_dot(build_multigraph(fixture("s2_a3"))), golden("s2_a3.dot"));
  EXPECT_EQ(export_dot(build_multigraph(fixture("s6"))), golden("s6.dot"));
  EXPECT_EQ(export_dot(build_multigraph(fixture("s8"))), golden("s8.dot"));
  EXPECT_EQ(export_dot(sub_multigraph(build_multigraph(fixture("s8")), 3)), golden("s8_sub3.dot"));
}

TEST(Dot, IndependentOfEdgeInsertionOrder) {
  auto a = graph({{"p", 1}, {"q", 1}}, {{"q", "p", 3}, {"p", "q", 2}, {"p", "q", 1}});
  auto b = graph({{"p", 1}, {"q", 1}}, {{"p", "q", 1}, {"q", "p", 3}, {"p", "q", 2}});
  EXPECT_EQ(export_dot(a), export_dot(b));
}

TEST(Json, GraphRoundTrip) {
  auto g = build_multigraph(fixture("s6"));
  auto back = graph_from_json(to_json(g));
  EXPECT_EQ(back, g);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[]})")), DataError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[{"id":"p","sign":1}],"edges":[{"from":"p","to":"p","label":1}]})")),
               DataError);
}

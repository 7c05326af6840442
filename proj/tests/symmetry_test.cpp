#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cubic_corpus.hpp"
#include "globrig/census.hpp"
#include "globrig/distance_regular.hpp"
#include "globrig/generators.hpp"
#include "globrig/rigidity.hpp"
#include "globrig/symmetry.hpp"
#include "support.hpp"

using namespace globrig;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> out = builtin_census(7);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) out.push_back(ref::random_graph(1 + int(rng() % 7), 0.35, rng));
  return out;
}

/// Orbits of a permutation set on vertices, as sorted sets.
std::set<std::vector<Vertex>> brute_vertex_orbits(const Graph& g, const std::vector<std::vector<int>>& auts) {
  std::set<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::set<Vertex> orbit;
    for (const auto& p : auts) orbit.insert(p[std::size_t(v)]);
    out.insert({orbit.begin(), orbit.end()});
  }
  return out;
}

std::set<std::vector<Edge>> brute_edge_orbits(const Graph& g, const std::vector<std::vector<int>>& auts) {
  std::set<std::vector<Edge>> out;
  for (const Edge& e : g.edges()) {
    std::set<Edge> orbit;
    for (const auto& p : auts) orbit.insert(Edge(p[std::size_t(e.u)], p[std::size_t(e.v)]));
    out.insert({orbit.begin(), orbit.end()});
  }
  return out;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.permuted(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Constant |D_ij(x, y)| over pairs at each distance, straight from BFS tables.
bool brute_distance_regular(const Graph& g) {
  const auto d = ref::distances(g);
  const int n = g.order();
  std::map<std::tuple<int, int, int>, int> seen;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::map<std::pair<int, int>, int> counts;
      for (int z = 0; z < n; ++z) ++counts[{d[std::size_t(x)][std::size_t(z)], d[std::size_t(y)][std::size_t(z)]}];
      const int k = d[std::size_t(x)][std::size_t(y)];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto it = counts.find({i, j});
          const int c = it == counts.end() ? 0 : it->second;
          auto [slot, fresh] = seen.try_emplace({i, j, k}, c);
          if (!fresh && slot->second != c) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_group(gen::h_6_10()).aut_order, 60u);
  EXPECT_EQ(automorphism_group(gen::cycle(5)).aut_order, 10u);
  EXPECT_EQ(automorphism_group(gen::complete_bipartite(3, 3)).aut_order, 72u);
  EXPECT_EQ(ref::automorphisms(gen::complete_bipartite(3, 3)).size(), 72u);
  EXPECT_EQ(automorphism_group(gen::petersen()).aut_order, 120u);
  EXPECT_EQ(automorphism_group(gen::complete(8)).aut_order, 40320u);
  EXPECT_EQ(automorphism_group(Graph(5)).aut_order, 120u);
  EXPECT_EQ(automorphism_group(Graph(0)).aut_order, 1u);
  EXPECT_EQ(automorphism_group(gen::jss_counterexample(7)).aut_order, 2073600u);  // (6!)^2 * 2 * 2
}

TEST(Automorphisms, OrderAndOrbitsMatchBruteForceUpToSevenVertices) {
  for (const Graph& g : small_corpus()) {
    const auto auts = ref::automorphisms(g);
    const auto sym = automorphism_group(g);
    ASSERT_EQ(sym.aut_order, auts.size()) << to_graph6(g);
    for (const auto& gen : sym.generators) ASSERT_TRUE(is_automorphism(g, gen));
    ASSERT_EQ(std::set<std::vector<Vertex>>(sym.vertex_orbits.begin(), sym.vertex_orbits.end()), brute_vertex_orbits(g, auts));
    ASSERT_EQ(std::set<std::vector<Edge>>(sym.edge_orbits.begin(), sym.edge_orbits.end()), brute_edge_orbits(g, auts));
    ASSERT_EQ(sym.vertex_transitive, sym.vertex_orbits.size() <= 1);
    ASSERT_EQ(sym.edge_transitive, sym.edge_orbits.size() <= 1);
  }
}

TEST(Automorphisms, GeneratorsPreserveAdjacencyOnLargerGraphs) {
  std::mt19937_64 rng(22);
  std::vector<Graph> graphs{gen::h_6_10(), gen::petersen(), gen::jss_counterexample(5), gen::cycle(12)};
  for (int i = 0; i < 50; ++i) graphs.push_back(ref::random_graph(8 + int(rng() % 12), 0.3, rng));
  for (const Graph& g : graphs) {
    const auto sym = automorphism_group(g);
    for (const auto& gen : sym.generators) ASSERT_TRUE(ref::is_automorphism(g, gen));
    const Graph h = g.permuted(ref::random_permutation(g.order(), rng));
    ASSERT_EQ(automorphism_group(h).aut_order, sym.aut_order);
  }
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_vertex_transitive(gen::prism()));
  EXPECT_FALSE(is_edge_transitive(gen::prism()));
  EXPECT_FALSE(is_vertex_transitive(gen::complete_bipartite(3, 4)));
  EXPECT_TRUE(is_edge_transitive(gen::complete_bipartite(3, 4)));
  EXPECT_TRUE(is_vertex_transitive(gen::complete(4)));
  EXPECT_TRUE(is_edge_transitive(gen::complete(4)));
  EXPECT_TRUE(is_edge_transitive(gen::h_6_10()));
  EXPECT_FALSE(is_vertex_transitive(gen::h_6_10()));
  const auto prism = automorphism_group(gen::prism());
  EXPECT_EQ(prism.edge_orbits.size(), 2u);  // triangle edges and rungs
}

TEST(DegreeBipartitionTest, Examples) {
  const auto k35 = degree_bipartition(gen::complete_bipartite(3, 5));
  ASSERT_TRUE(k35.has_value());
  EXPECT_EQ(k35->low.size(), 5u);
  EXPECT_EQ(k35->low_degree, 3);
  EXPECT_EQ(k35->high.size(), 3u);
  EXPECT_EQ(k35->high_degree, 5);

  const auto h = degree_bipartition(gen::h_6_10());
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->low.size(), 10u);
  EXPECT_EQ(h->low_degree, 3);
  EXPECT_EQ(h->high.size(), 6u);
  EXPECT_EQ(h->high_degree, 5);

  const auto k34 = degree_bipartition(gen::complete_bipartite(3, 4));
  ASSERT_TRUE(k34.has_value());
  EXPECT_EQ(k34->low.size(), 4u);
  EXPECT_EQ(k34->high.size(), 3u);

  EXPECT_THROW(degree_bipartition(gen::prism()), PreconditionError);
  EXPECT_THROW(degree_bipartition(gen::complete(4)), PreconditionError);
  EXPECT_THROW(degree_bipartition(disjoint_union(gen::complete_bipartite(1, 2), gen::complete_bipartite(1, 2))), PreconditionError);
}

TEST(DegreeBipartitionTest, EdgeTransitiveCensusGraphsSplitIntoTwoOrbits) {
  int checked = 0;
  for (const Graph& g : builtin_census(7)) {
    const auto sym = automorphism_group(g);
    if (!sym.edge_transitive || sym.vertex_transitive) continue;
    ++checked;
    const auto parts = degree_bipartition(g, sym);
    ASSERT_TRUE(parts.has_value()) << to_graph6(g);
    for (const Edge& e : g.edges()) {
      const bool u_low = std::binary_search(parts->low.begin(), parts->low.end(), e.u);
      const bool v_low = std::binary_search(parts->low.begin(), parts->low.end(), e.v);
      ASSERT_NE(u_low, v_low);
    }
    std::set<std::vector<Vertex>> orbits(sym.vertex_orbits.begin(), sym.vertex_orbits.end());
    ASSERT_EQ(orbits, (std::set<std::vector<Vertex>>{parts->low, parts->high})) << to_graph6(g);
  }
  EXPECT_GT(checked, 5);
}

TEST(DistanceRegular, Examples) {
  const auto p = is_distance_regular(gen::petersen());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->to_string(), "{3,2;1,1}");
  EXPECT_EQ(p->diameter, 2);
  EXPECT_FALSE(is_distance_regular(gen::prism()).has_value());
  const auto k5 = is_distance_regular(gen::complete(5));
  ASSERT_TRUE(k5.has_value());
  EXPECT_EQ(k5->diameter, 1);
  EXPECT_EQ(k5->to_string(), "{4;1}");
  EXPECT_EQ(is_distance_regular(gen::complete_bipartite(3, 3))->to_string(), "{3,2;1,3}");
  EXPECT_EQ(is_distance_regular(gen::cycle(7))->to_string(), "{2,1,1;1,1,1}");
  EXPECT_FALSE(is_distance_regular(gen::h_6_10()).has_value());
  EXPECT_THROW(is_distance_regular(Graph(2)), PreconditionError);
  EXPECT_THROW(intersection_array(Graph(0)), PreconditionError);
}

TEST(DistanceRegular, FullAndReducedChecksAgreeWithDefinition) {
  int regular = 0;
  for (const Graph& g : builtin_census(7)) {
    const auto full = is_distance_regular(g);
    const auto reduced = intersection_array(g);
    ASSERT_EQ(full.has_value(), brute_distance_regular(g)) << to_graph6(g);
    ASSERT_EQ(full.has_value(), reduced.has_value()) << to_graph6(g);
    if (!full) continue;
    ++regular;
    ASSERT_EQ(*full, *reduced);
    ASSERT_TRUE(g.is_regular());
    const int k = g.min_degree();
    if (g.order() > 1) {
      ASSERT_EQ(full->b.front(), k);
      ASSERT_EQ(full->c.front(), 1);
    }
    for (int i = 1; i < full->diameter; ++i) ASSERT_LE(full->b[std::size_t(i)] + full->c[std::size_t(i - 1)], k);
  }
  EXPECT_GT(regular, 10);
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(is_isomorphic(gen::complete_bipartite(3, 3), gen::prism()));
  std::mt19937_64 rng(23);
  const Graph h = gen::h_6_10();
  EXPECT_TRUE(is_isomorphic(h, h.permuted(ref::random_permutation(16, rng))));
  EXPECT_FALSE(is_isomorphic(h, h.without_edge(Edge(0, 6)).with_edge(Edge(0, 1))));
}

TEST(Isomorphism, TightCubicGraphsOnSixVertices) {
  const auto cubic6 = ref::connected_cubic(6);
  ASSERT_EQ(cubic6.size(), 2u);
  std::vector<Graph> tight;
  for (const auto& code : cubic6) {
    const Graph g = from_graph6(code);
    if (g.size() == std::size_t(2 * g.order() - 3) && is_rigid(g)) tight.push_back(g);
  }
  ASSERT_EQ(tight.size(), 2u);
  const bool k33_first = is_isomorphic(tight[0], gen::complete_bipartite(3, 3));
  EXPECT_TRUE(is_isomorphic(tight[k33_first ? 0 : 1], gen::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_isomorphic(tight[k33_first ? 1 : 0], gen::prism()));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = ref::random_graph(1 + int(rng() % 16), double(rng() % 100) / 100.0, rng);
    const auto c = canonical_form(g);
    ASSERT_EQ(g.permuted(c.labeling), c.graph);
    const Graph h = g.permuted(ref::random_permutation(g.order(), rng));
    ASSERT_EQ(canonical_form(h).graph, c.graph) << to_graph6(g);
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphicSmallGraphs) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + int(rng() % 5);
    const Graph a = ref::random_graph(n, 0.5, rng);
    const Graph b = ref::random_graph(n, 0.5, rng);
    ASSERT_EQ(is_isomorphic(a, b), brute_isomorphic(a, b)) << to_graph6(a) << ' ' << to_graph6(b);
  }
}

TEST(CanonicalForm, RegularGraphsStayDistinct) {
  // Hard cases for refinement: all vertices look alike at the start.
  const auto cubic10 = ref::connected_cubic(10);
  EXPECT_EQ(cubic10.size(), 19u);
  std::mt19937_64 rng(26);
  for (const auto& code : cubic10) {
    const Graph g = from_graph6(code);
    ASSERT_EQ(canonical_graph6(g.permuted(ref::random_permutation(10, rng))), code);
  }
}

TEST(CanonicalForm, CospectralStronglyRegularPair) {
  std::vector<Edge> rook;
  std::vector<Edge> shrikhande;
  auto id = [](int a, int b) { return 4 * ((a + 4) % 4) + (b + 4) % 4; };
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          if (id(a, b) < id(c, d) && (a == c || b == d)) rook.emplace_back(id(a, b), id(c, d));
        }
      }
      for (auto [da, db] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) shrikhande.emplace_back(id(a, b), id(a + da, b + db));
    }
  }
  const Graph r = Graph::from_edges(16, rook);
  const Graph s = Graph::from_edges(16, shrikhande);
  ASSERT_TRUE(r.is_regular());
  ASSERT_TRUE(s.is_regular());
  EXPECT_EQ(r.min_degree(), 6);
  EXPECT_EQ(s.min_degree(), 6);
  EXPECT_FALSE(is_isomorphic(r, s));
  EXPECT_EQ(automorphism_group(r).aut_order, 1152u);
  EXPECT_EQ(automorphism_group(s).aut_order, 192u);
  EXPECT_TRUE(is_distance_regular(r).has_value());
  EXPECT_TRUE(is_distance_regular(s).has_value());
  std::mt19937_64 rng(27);
  EXPECT_EQ(canonical_graph6(s.permuted(ref::random_permutation(16, rng))), canonical_graph6(s));
}

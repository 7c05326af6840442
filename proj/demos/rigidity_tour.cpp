// Walks a handful of catalog graphs through the library: rank, components,
// symmetry, the general decision and whichever family rule applies.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "globrig/globrig.hpp"

using namespace globrig;

int main() {
  const std::vector<std::string> specs{"complete,4",  "cycle,6",   "complete_bipartite,3,3", "prism",
                                       "octahedron",  "petersen",  "complete_bipartite,3,4", "h_6_10",
                                       "jss_counterexample,5"};
  std::cout << std::left << std::setw(24) << "graph" << std::setw(6) << "n" << std::setw(6) << "m" << std::setw(7)
            << "rank" << std::setw(8) << "comps" << std::setw(9) << "|Aut|" << std::setw(20) << "route"
            << "verdict\n";
  for (const auto& spec : specs) {
    const Graph g = gen::generate_from_spec(spec);
    const auto comps = rigid_components(g);
    const auto sym = automorphism_group(g);
    const auto general = decide_global_rigidity(g);
    const auto fast = classify(g);
    std::cout << std::setw(24) << spec << std::setw(6) << g.order() << std::setw(6) << g.size() << std::setw(7)
              << comps.rank << std::setw(8) << comps.components.size() << std::setw(9) << sym.aut_order << std::setw(20)
              << to_string(fast.route) << (general.globally_rigid ? "globally rigid" : *general.rigid ? "rigid" : "flexible")
              << " (" << general.reason << ")";
    if (fast.globally_rigid != general.globally_rigid) std::cout << "  [family rule disagrees]";
    std::cout << '\n';
  }

  // A flexible graph made rigid, then redundantly rigid, one edge at a time.
  Graph g = gen::cycle(6);
  std::cout << "\nC6 plus chords:\n";
  for (const Edge e : {Edge(0, 3), Edge(1, 4), Edge(2, 5), Edge(0, 2)}) {
    g = g.with_edge(e);
    const auto d = decide_global_rigidity(g);
    std::cout << "  + " << e.u << '-' << e.v << ": rank " << rigidity_rank(g) << ", " << d.reason << '\n';
  }
}

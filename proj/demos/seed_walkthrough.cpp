// Walks through the seed machinery on a complete bipartite host: samples a
// cover set, turns it into a seed, exhibits a deletable pair, and lists the
// neighbour pairs that pair certifies as linked.

#include <iostream>
#include <string>
#include <vector>

#include "genmat/families.hpp"
#include "genmat/matroids.hpp"
#include "genmat/rng.hpp"
#include "genmat/seeds.hpp"

using namespace genmat;

namespace {

const RankQueryConfig kConfig{3, kDefaultPrime, 1};

std::string join(const std::vector<int>& values) {
  std::string text = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(values[i]);
  }
  return text + "}";
}

}  // namespace

int main() {
  const int d = 2;
  MatroidKind kind = MatroidKind::birigidity(d);
  BipartiteGraph g = complete_bipartite(6, 6);
  std::cout << "Host K_{6,6} under " << kind.label() << ", rank "
            << generic_rank(g, kind, kConfig) << ".\n\n";

  // A cover set X_0 gives every outside vertex d neighbours inside, so the
  // one-level chain X_0, V is valid input for the seed construction.
  auto rng = substream(42, 0);
  std::vector<int> x0 = sample_cover_set(g, d, 0.3, rng);
  std::cout << "Sampled cover set X_0 = " << join(x0) << ".\n";
  std::vector<int> everything(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) everything[v] = v;
  SeedCertificate certificate = find_seed(g, kind, SeedChain{{x0, everything}}, kConfig);
  std::cout << "Seed K = " << join(certificate.seed_vertices) << " with "
            << certificate.basis_edges.size() << " basis edges inside K.\n";
  std::cout << "Greedy elimination order outside K:\n";
  for (std::size_t i = 0; i < certificate.elimination_order.size(); ++i) {
    std::cout << "  add " << certificate.elimination_order[i] << " using neighbours "
              << join(certificate.witnesses[i]) << '\n';
  }
  int inside = generic_rank(g.induced_subgraph(certificate.seed_vertices), kind, kConfig);
  int outside = g.vertex_count() - static_cast<int>(certificate.seed_vertices.size());
  std::cout << "Rank split: " << generic_rank(g, kind, kConfig) << " = " << inside << " + " << d
            << " * " << outside << ".\n\n";

  // On a complete host any small complete subgraph seeds the matroid; the
  // growth procedure then stops at a single uncovered edge whose endpoints
  // can both be deleted at full rank cost.
  SemisimpleGraph host = complete_graph(7);
  MatroidKind hyper = MatroidKind::hyperconnectivity(d);
  DeletablePair pair = deletable_pair(host, hyper, {0, 1, 2}, kConfig);
  std::cout << "Deletable pair on K_7 under " << hyper.label() << ": (" << pair.u << ", " << pair.v
            << ") with ranks " << pair.rank_full << " / " << pair.rank_without_u << " / "
            << pair.rank_without_v << " / " << pair.rank_without_both << ".\n";

  EdgeList linked = linked_neighbour_pairs(host, hyper, pair.u, pair.v, kConfig);
  std::cout << "That pair certifies " << linked.size() << " neighbour pairs as linked:";
  for (const auto& [x, y] : linked) std::cout << " (" << x << "," << y << ")";
  std::cout << '\n';
  return 0;
}

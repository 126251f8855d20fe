// Tabulates the generic rank of each matroid family on complete host graphs
// and compares it with the closed-form value. A trailing '!' would mark a
// disagreement between the randomized computation and the formula.

#include <iomanip>
#include <iostream>

#include "genmat/families.hpp"
#include "genmat/matroids.hpp"

using namespace genmat;

namespace {

const RankQueryConfig kConfig{3, kDefaultPrime, 1};

void single_class_table(const std::string& title, bool looped,
                        MatroidKind (*make)(int), int max_dim, int max_n) {
  std::cout << title << '\n';
  std::cout << "  d\\n";
  for (int n = 1; n <= max_n; ++n) std::cout << std::setw(5) << n;
  std::cout << '\n';
  for (int d = 1; d <= max_dim; ++d) {
    MatroidKind kind = make(d);
    std::cout << "  " << std::left << std::setw(3) << d << std::right;
    for (int n = 1; n <= max_n; ++n) {
      SemisimpleGraph host = looped ? complete_semisimple(n) : complete_graph(n);
      int computed = generic_rank(host, kind, kConfig);
      bool agrees = computed == rank_formula(kind, n);
      std::cout << std::setw(4 + (agrees ? 1 : 0)) << computed << (agrees ? "" : "!");
    }
    std::cout << '\n';
  }
  std::cout << '\n';
}

void bipartite_table(const std::string& title, MatroidKind kind, int max_size) {
  std::cout << title << '\n';
  std::cout << "  m\\n";
  for (int n = 1; n <= max_size; ++n) std::cout << std::setw(5) << n;
  std::cout << '\n';
  for (int m = 1; m <= max_size; ++m) {
    std::cout << "  " << std::left << std::setw(3) << m << std::right;
    for (int n = 1; n <= max_size; ++n) {
      int computed = generic_rank(complete_bipartite(m, n), kind, kConfig);
      bool agrees = computed == rank_formula(kind, m, n);
      std::cout << std::setw(4 + (agrees ? 1 : 0)) << computed << (agrees ? "" : "!");
    }
    std::cout << '\n';
  }
  std::cout << '\n';
}

}  // namespace

int main() {
  std::cout << "Generic ranks on complete hosts, three trials per entry.\n\n";
  single_class_table("symmetric completion on K_n with loops: d n - C(d, 2) once n >= d", true,
                     &MatroidKind::sym_completion, 4, 8);
  single_class_table("hyperconnectivity on K_n: d n - C(d + 1, 2) once n >= d", false,
                     &MatroidKind::hyperconnectivity, 4, 8);
  bipartite_table("birigidity with d = 2 on K_{m,n}: 2 m + 2 n - 4 once m, n >= 2",
                  MatroidKind::birigidity(2), 8);
  bipartite_table("birigidity with (a, b) = (1, 2) on K_{m,n}: 2 m + n - 2 once m >= 1, n >= 2",
                  MatroidKind::birigidity_ab(1, 2), 8);

  // Rigidity has no closed form, so print the computed row on its own.
  std::cout << "rigidity on K_n (computed only)\n  d\\n";
  for (int n = 1; n <= 8; ++n) std::cout << std::setw(5) << n;
  std::cout << '\n';
  for (int d = 1; d <= 4; ++d) {
    std::cout << "  " << std::left << std::setw(3) << d << std::right;
    for (int n = 1; n <= 8; ++n) {
      std::cout << std::setw(5) << generic_rank(complete_graph(n), MatroidKind::rigidity(d), kConfig);
    }
    std::cout << '\n';
  }
  return 0;
}

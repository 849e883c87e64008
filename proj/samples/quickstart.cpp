// Two tropical lines with no common zero, and the Cayley matrix that says so.

#include <iostream>

#include "tropdual/tropdual.hpp"

int main() {
  using namespace tropdual;
  // min(x, 0) and min(x, 1): the minimum ties at x = 0 and x = 1 respectively.
  const std::vector<TropPoly> system{
      TropPoly::univariate({{1, Rational(0)}, {0, Rational(0)}}),
      TropPoly::univariate({{1, Rational(0)}, {0, Rational(1)}}),
  };
  for (const auto& f : system) {
    std::cout << to_string(f) << " roots:";
    for (const auto& r : univariate_roots(f)) {
      std::cout << ' ' << to_string(r.value) << " (x" << r.multiplicity << ")";
    }
    std::cout << '\n';
  }

  const auto bound = 4 * total_degree(system);
  const auto c = build_cayley(system, bound);
  const auto res = decide_exact(c.matrix);
  std::cout << "C_" << bound << ": " << c.rows.size() << " x " << c.cols.size()
            << ", " << to_string(res.status) << '\n';
  if (res.refutation) {
    std::cout << "refutation nodes: " << refutation_size(*res.refutation)
              << ", checked: " << std::boolalpha
              << check_refutation(c.matrix, *res.refutation) << '\n';
  }
}

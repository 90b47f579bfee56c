// Walks through the critical points of f_C on SO(4) and checks perfectness.

#include "somorse/somorse.hpp"

#include <iostream>

int main() {
  using namespace somorse;
  const auto costs = CostVector::linear(4);

  for (const auto& r : enumerate_critical_points(costs)) {
    const int numeric = numeric_index(tangent_hessian(r.pattern.embedded(), costs));
    std::cout << r.pattern.to_string() << "  index " << r.index << " (eigenvalues: " << numeric
              << ")  value " << r.value << "\n";
  }

  const auto report = is_perfect(costs);
  std::cout << "Morse polynomial:    " << report.morse.to_string() << "\n"
            << "Poincare polynomial: " << report.poincare_product.to_string() << "\n"
            << (report.perfect ? "perfect" : "not perfect") << "\n";

  const auto flow = gradient_flow(haar_sample(4, 42), costs);
  std::cout << "flow from a random start: " << flow.iterations << " iterations, limit "
            << (flow.classified_pattern ? flow.classified_pattern->to_string() : "unclassified") << "\n";
  return report.perfect ? 0 : 1;
}

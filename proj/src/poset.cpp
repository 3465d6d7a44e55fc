#include "eostrata/poset.hpp"

#include <stdexcept>

#include "eostrata/weyl.hpp"

namespace eo {

bool young_leq(const YoungType& a, const YoungType& b) {
  if (a.g != b.g) throw std::invalid_argument("Young comparison across different g");
  if (a.mu.size() > b.mu.size()) return false;
  for (std::size_t j = 0; j < a.mu.size(); ++j)
    if (a.mu[j] > b.mu[j]) return false;
  return true;
}

HasseDiagram hasse(int g) {
  HasseDiagram d;
  d.g = g;
  for (const FinalType& t : enumerate_final_types(g)) d.nodes.push_back(final_to_young(t));
  for (const YoungType& node : d.nodes) {
    // Grow one existing part (strictness permitting) ...
    for (std::size_t j = 0; j < node.mu.size(); ++j) {
      int grown = node.mu[j] + 1;
      if (grown > g) continue;
      if (j > 0 && grown >= node.mu[j - 1]) continue;
      YoungType upper = node;
      upper.mu[j] = grown;
      d.edges.emplace_back(node, upper);
    }
    // ... or append a new part of size 1.
    if (node.mu.empty() || node.mu.back() > 1) {
      YoungType upper = node;
      upper.mu.push_back(1);
      d.edges.emplace_back(node, upper);
    }
  }
  return d;
}

bool orders_match(int g) {
  if (g > 6) throw std::invalid_argument("orders_match is exhaustive; use g <= 6");
  std::vector<YoungType> nodes;
  std::vector<WeylElement> omegas;
  for (const FinalType& t : enumerate_final_types(g)) {
    nodes.push_back(final_to_young(t));
    omegas.push_back(from_young(nodes.back()));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (young_leq(nodes[i], nodes[j]) != bruhat_leq(omegas[j], omegas[i])) return false;
  return true;
}

}  // namespace eo

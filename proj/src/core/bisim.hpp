#ifndef DESCOMP_CORE_BISIM_HPP
#define DESCOMP_CORE_BISIM_HPP

#include <tuple>
#include <vector>

namespace descomp {

// Plain labeled transition system with interned integer labels, used for
// strong-bisimulation checks and quotients of controller generators and
// target fragments.
struct Lts {
  int num_states = 0;
  std::vector<std::tuple<int, int, int>> edges;  // (from, label, to)
};

// Coarsest strong-bisimulation partition (Kanellakis-Smolka refinement).
std::vector<int> bisimulation_classes(const Lts& lts);

// Strong bisimilarity of two rooted systems (disjoint-union refinement).
bool lts_bisimilar(const Lts& a, int init_a, const Lts& b, int init_b);

// Greatest simulation relation: pairs (x, y) with x simulated by y.
// `left` is simulated within `right`; pass the same LTS twice for a preorder
// on one system.
std::vector<std::pair<int, int>> greatest_simulation_pairs(const Lts& left,
                                                           const Lts& right);

}  // namespace descomp

#endif

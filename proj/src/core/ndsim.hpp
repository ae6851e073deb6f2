#ifndef DESCOMP_CORE_NDSIM_HPP
#define DESCOMP_CORE_NDSIM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/cg.hpp"
#include "core/model.hpp"

namespace descomp {

// Greatest nd-simulation of the target by the enacted system. Deliberately
// shares no code with the synthesis pipeline: this module is the referee.
struct SimRelation {
  enum class Kind { Plain, Nd };

  Kind kind = Kind::Nd;
  std::set<std::pair<int, int>> pairs;  // (target state index, enacted state id)
  // For every removed pair, an action witnessing the closure violation at the
  // moment of removal.
  std::map<std::pair<int, int>, std::string> removal_witness;

  bool contains(int target_state, int enacted_state) const {
    return pairs.count({target_state, enacted_state}) != 0;
  }
};

// Largest relation R with: (t, b) in R implies that for every action a enabled
// at t there is one index j such that (i) some (a, j) move exists at b and
// (ii) every (a, j) move lands in R again, for every a-successor of t.
SimRelation greatest_nd_simulation(const Target& t, const EnactedSystem& e);

// Greatest plain simulation of b1 by b2 (pairs of state indexes).
std::vector<std::pair<int, int>> greatest_simulation(const Behavior& b1,
                                                     const Behavior& b2);

struct CrosscheckReport {
  bool ok = false;
  std::vector<CompositionTuple> only_in_cg;
  std::vector<CompositionTuple> only_in_sim;

  std::string to_text() const;
};

// Referee check: the composition tuples of the extracted controller generator
// must coincide with the pairs of the greatest nd-simulation reachable under
// nd-sim-respecting delegation from the initial pair.
CrosscheckReport crosscheck_cg(const ControllerGenerator& g, const SimRelation& r,
                               const Target& t, const EnactedSystem& e);

}  // namespace descomp

#endif

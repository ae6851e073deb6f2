#ifndef DESCOMP_CORE_SRTF_HPP
#define DESCOMP_CORE_SRTF_HPP

#include <vector>

#include "core/model.hpp"
#include "core/supcon.hpp"

namespace descomp {

// Supremal realizable target fragment: a possibly nondeterministic target,
// simulated by the original one and exactly composable in the system. States
// reference the supervisor states they were read from, and every fragment
// edge remembers which behavior the supervisor delegated the action to.
struct TargetFragment {
  Target target;                 // allow_nondeterministic is set
  std::vector<int> origin;       // fragment state -> supervisor state
  std::vector<CompositionTuple> tuples;  // fragment state -> snapshot
  struct EdgeDelegation {
    int from;
    std::string action;
    int to;
    int index1;
  };
  std::vector<EdgeDelegation> delegations;

  // Single initial state and no transitions: nothing of the target is
  // realizable beyond the empty fragment.
  bool trivial() const { return target.behavior.transitions.empty(); }
};

// Builds the maximal composition plant, controls its marked language (with no
// uncontrollable events this is a trim, computed here through the generic
// supcon for one code path), and reads the fragment off the supervisor.
// Requires a deterministic system; the target may be nondeterministic.
TargetFragment compute_srtf(const System& s, const Target& t);

// Mutual greatest simulation over the union action alphabet.
bool simulation_equivalent(const Target& t1, const Target& t2);
bool simulated_by(const Target& t1, const Target& t2);  // t1 <= t2

// Optional post-pass: strong-bisimulation quotient of the fragment.
TargetFragment quotient_fragment(const TargetFragment& f);

}  // namespace descomp

#endif

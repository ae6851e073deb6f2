#ifndef DESCOMP_CORE_CG_HPP
#define DESCOMP_CORE_CG_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/supcon.hpp"

namespace descomp {

// Universal solution extracted from a supervisor: states are composition
// snapshots, one transition per (action, delegation), and the behavior
// selection function omega reads the transition relation.
//
// Two flavors share this shape. Tuple CGs merge supervisor states with equal
// composition tuples (the set-of-tuples reading). Memory CGs keep supervisor
// states apart, which is required once constraints introduce bounded memory
// beyond the current composition snapshot.
struct ControllerGenerator {
  enum class Kind { Tuple, Memory };

  struct Transition {
    int from;
    std::string action;
    int index1;
    int to;
  };

  Kind kind = Kind::Tuple;
  std::vector<std::string> actions;  // A_t
  int behavior_count = 0;
  std::vector<CompositionTuple> tuples;  // per state
  std::vector<int> r_states;             // per state, backing R-state (memory kind)
  int initial = 0;
  std::vector<Transition> transitions;

  int state_count() const { return static_cast<int>(tuples.size()); }
  bool empty_solution() const;

  // omega(q, action); empty when the request is not realizable at q.
  // Throws ErrorCode::Domain for an unknown state.
  std::set<int> select(int state, const std::string& action) const;
  std::set<std::string> enabled_actions(int state) const;
  // Successor tuples observable after delegating action to index1.
  std::vector<std::pair<int, std::string>> observable_successors(
      int state, const std::string& action, int index1) const;
};

// Extraction from a supervisor over the basic (triple-phase) plant. Raises
// ErrorCode::Mode when the supervisor alphabet is not request/delegate/evolve.
ControllerGenerator extract_cg(const SupervisorGenerator& r);
ControllerGenerator extract_memory_cg(const SupervisorGenerator& r);

std::set<int> cg_select(const ControllerGenerator& g, int state, const std::string& action);

// Single run over a shared controller generator. One owner per RunState;
// independent runs share the same immutable generator.
struct RunState {
  const ControllerGenerator* cg = nullptr;
  int state = 0;

  struct Step {
    std::string action;
    int index1;
    std::string observed;
    int to;
  };
  std::vector<Step> transcript;
};

RunState cg_start(const ControllerGenerator& g);

// Delegates `action` to behavior index1 and advances along the unique
// transition consistent with the observed successor state of that behavior.
// Raises ErrorCode::IllegalDelegation when index1 is not in omega, and
// ErrorCode::ModelViolation when `observed` is not a legal successor.
void cg_step(RunState& run, const std::string& action, int index1,
             const std::string& observed);

// Bisimulation machinery over (action, index) labeled transitions.
std::vector<int> cg_bisim_classes(const ControllerGenerator& g);
bool cg_bisimilar(const ControllerGenerator& a, const ControllerGenerator& b);
ControllerGenerator cg_quotient(const ControllerGenerator& g);

}  // namespace descomp

#endif

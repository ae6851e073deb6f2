#ifndef DESCOMP_CORE_MODEL_HPP
#define DESCOMP_CORE_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/event.hpp"

namespace descomp {

// Nondeterministic finite transition system over a shared action alphabet.
struct Behavior {
  std::string name;
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> actions;  // declared alphabet (may exceed used set)
  std::vector<TargetTransition> transitions;

  int state_index(const std::string& s) const;  // -1 if unknown
  std::vector<std::string> successors(const std::string& state,
                                      const std::string& action) const;
  bool deterministic() const;
  // Throws ErrorCode::Validation when endpoints or the initial state are
  // not declared states.
  void validate() const;
};

struct Target {
  Behavior behavior;
  bool allow_nondeterministic = false;

  // Deterministic successor; nullopt when the action is not enabled.
  std::optional<std::string> step(const std::string& state,
                                  const std::string& action) const;
};

struct System {
  std::vector<Behavior> behaviors;  // behavior j has index j (1-based)

  int size() const { return static_cast<int>(behaviors.size()); }
  const Behavior& at(int index1) const { return behaviors[index1 - 1]; }
  bool deterministic() const;
  std::set<std::string> action_union() const;
};

// Composition snapshot: target state plus one local state per behavior.
struct CompositionTuple {
  std::string target_state;
  std::vector<std::string> behavior_states;

  std::string label() const;
  auto operator<=>(const CompositionTuple&) const = default;
};

// Asynchronous product of the available behaviors, reachable fragment only.
// Transitions carry the action performed and the index of the single
// component that moved.
struct EnactedSystem {
  struct Edge {
    int from;
    std::string action;
    int index1;  // behavior that moved, 1-based
    int to;
  };

  System system;
  std::vector<std::vector<std::string>> states;  // state vectors, by id
  int initial = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // state id -> edge positions

  int state_id(const std::vector<std::string>& vec) const;  // -1 if unknown
  // Successor ids for (state, action, index).
  std::vector<int> successors(int state, const std::string& action, int index1) const;

 private:
  friend EnactedSystem build_enacted_system(const System&);
  std::map<std::vector<std::string>, int> index_;
};

EnactedSystem build_enacted_system(const System& s);

// One step of a system history: the requested action, the delegated
// behavior, and the full state vector after the move.
struct HistoryStep {
  std::string action;
  int index1;
  std::vector<std::string> after;
};

struct History {
  std::vector<std::string> initial;
  std::vector<HistoryStep> steps;

  const std::vector<std::string>& last() const {
    return steps.empty() ? initial : steps.back().after;
  }
  std::size_t length() const { return steps.size(); }
};

// Throws ErrorCode::Validation if some step is not an enacted-system move.
void validate_history(const History& h, const EnactedSystem& e);

struct TargetTrace {
  std::vector<std::string> states;   // length steps+1
  std::vector<std::string> actions;  // length steps
};

// word(h) = (a1 . j1 . st_j1(b1)) ... : three events per step.
std::vector<EventId> word_of_history(const History& h);

// word(tau, h) = (<t0,a1,t1> . j1) ... : two events per step. The trace and
// the history must agree on length and actions.
std::vector<EventId> word_of_trace_history(const TargetTrace& trace, const History& h);

}  // namespace descomp

#endif

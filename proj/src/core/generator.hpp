#ifndef DESCOMP_CORE_GENERATOR_HPP
#define DESCOMP_CORE_GENERATOR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/event.hpp"

namespace descomp {

// Snapshot of the whole composition process, attached to plant states and
// carried through synthesis so supervisors and controller generators can be
// read back without re-parsing event paths.
struct PlantStateInfo {
  std::string target_state;
  std::vector<std::string> behavior_states;
  std::optional<std::string> pending_request;           // basic mode
  int pending_delegation = 0;                           // 0 = none
  std::optional<TargetTransition> pending_transition;   // srtf mode

  bool at_boundary() const {
    return !pending_request && pending_delegation == 0 && !pending_transition;
  }
  std::string label() const;

  bool operator==(const PlantStateInfo&) const = default;
};

// Deterministic finite generator over tagged events, with marked states.
// Mutating calls are for construction only; every algorithm in this library
// takes generators by const reference and returns fresh values.
class Generator {
 public:
  using StateId = int;
  static constexpr StateId kNoState = -1;

  Generator() = default;

  // Designated empty generator: one unmarked state, no transitions, so the
  // marked language is empty and the generated language is {epsilon}.
  static Generator empty();

  StateId add_state(bool marked = false);
  void set_initial(StateId s);
  void set_marked(StateId s, bool marked = true);
  void include_event(const EventId& e) { alphabet_.insert(e); }
  // Throws ErrorCode::Determinism on a duplicate (state, event) pair.
  void add_transition(StateId from, const EventId& e, StateId to);
  void set_plant_info(StateId s, PlantStateInfo info);
  void set_label(StateId s, std::string label);
  void set_sources(StateId s, StateId left, StateId right);

  int state_count() const { return static_cast<int>(states_.size()); }
  StateId initial() const { return initial_; }
  bool marked(StateId s) const { return states_[s].marked; }
  int marked_count() const;
  const std::set<EventId>& alphabet() const { return alphabet_; }
  const std::map<EventId, StateId>& transitions_from(StateId s) const {
    return states_[s].out;
  }
  StateId successor(StateId s, const EventId& e) const;
  StateId walk(const std::vector<EventId>& word) const;  // kNoState if undefined
  bool accepts(const std::vector<EventId>& word) const;  // generated language
  bool accepts_marked(const std::vector<EventId>& word) const;
  long transition_count() const;

  const std::optional<PlantStateInfo>& plant_info(StateId s) const {
    return states_[s].plant;
  }
  const std::string& label(StateId s) const { return states_[s].label; }
  // For product states: the pair of source-automaton states.
  const std::optional<std::pair<StateId, StateId>>& sources(StateId s) const {
    return states_[s].sources;
  }

  std::vector<bool> reachable() const;
  std::vector<bool> coreachable() const;  // can reach a marked state
  bool marked_language_empty() const;

 private:
  struct StateData {
    bool marked = false;
    std::map<EventId, StateId> out;
    std::optional<PlantStateInfo> plant;
    std::optional<std::pair<StateId, StateId>> sources;
    std::string label;
  };

  void check_state(StateId s, const char* who) const;

  std::vector<StateData> states_;
  StateId initial_ = kNoState;
  std::set<EventId> alphabet_;
};

// Strict synchronous product: L(result) = L(g1) n L(g2) and likewise for the
// marked languages. States are annotated with the source pair; only reachable
// pairs are materialized. Plant-state annotations are taken from the left
// operand when present.
Generator sync_product(const Generator& g1, const Generator& g2);

// Reachable and coreachable subautomaton; marked language preserved. Returns
// the designated empty generator when the initial state is not coreachable.
Generator trim(const Generator& g);

struct ControllabilityReport {
  bool ok = false;
  std::vector<EventId> witness;  // w . sigma_u leaving the candidate
};

// Checks the controllability condition on the reachable synchronized product:
// every uncontrollable event the plant enables must be enabled by the
// candidate. With require_sublanguage the candidate must not generate words
// outside L(plant); a diverging word raises ErrorCode::Precondition.
ControllabilityReport is_controllable(const Generator& candidate,
                                      const Generator& plant,
                                      bool require_sublanguage = false);

// First word generated by candidate but not by plant, if any.
std::optional<std::vector<EventId>> diverging_word(const Generator& candidate,
                                                   const Generator& plant);

// Exact equivalence of both the generated and the marked languages
// (both generators are deterministic, so a product walk decides this).
bool language_equivalent(const Generator& a, const Generator& b);
// L_m(a) subset of L_m(b).
bool marked_sublanguage(const Generator& a, const Generator& b);

}  // namespace descomp

#endif

#ifndef DESCOMP_CORE_SUPCON_HPP
#define DESCOMP_CORE_SUPCON_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/generator.hpp"

namespace descomp {

// Trim recognizer R of the supremal controllable sublanguage, together with
// the plant state each R-state stands on.
struct SupervisorGenerator {
  Generator automaton;
  std::vector<Generator::StateId> plant_state;  // indexed by R-state

  bool empty() const { return automaton.marked_language_empty(); }
};

// Computes supC(L_m(spec) n L_m(plant)) by the iterated fixpoint: build the
// synchronous product, delete states missing a plant-enabled uncontrollable
// event, trim, and repeat until stable.
//
// Requires the marked-prefix hypothesis closure(K) n L_m(G) subset K; a
// violation raises ErrorCode::Hypothesis with a witness word.
SupervisorGenerator supcon(const Generator& plant, const Generator& spec);

// Per-state sets of disabled controllable events; states where nothing is
// disabled are omitted.
struct ControlPattern {
  std::map<Generator::StateId, std::set<EventId>> disabled;
};

ControlPattern control_patterns(const Generator& plant, const SupervisorGenerator& r);

// TCT condat style, one line per state: "state:event[,event...]".
// Events are rendered with to_string; see ads.hpp for the integer form.
std::string condat_text(const ControlPattern& p);

}  // namespace descomp

#endif

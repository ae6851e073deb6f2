#ifndef DESCOMP_CORE_PLANT_HPP
#define DESCOMP_CORE_PLANT_HPP

#include "core/generator.hpp"
#include "core/model.hpp"

namespace descomp {

// Composition plant for a deterministic target: each request is processed by
// three plant phases (uncontrollable request, controllable delegation,
// uncontrollable evolution). Every delegation is enabled after a request,
// including ones the chosen behavior cannot honor; those states are dead ends
// and are pruned later by synthesis, never here. Only the reachable fragment
// is materialized and every state carries its PlantStateInfo.
Generator build_composition_plant(const System& s, const Target& t);

// Maximal composition plant for a deterministic system: requests are target
// transitions and all events are controllable. A delegation is only enabled
// when the behavior can perform the requested action.
Generator build_maximal_plant(const System& s, const Target& t);

}  // namespace descomp

#endif

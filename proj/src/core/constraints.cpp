#include "core/constraints.hpp"

#include "core/errors.hpp"
#include "core/plant.hpp"

namespace descomp {

Generator compile_constraint(const ConstraintSpec& c, const Generator& plant) {
  const Generator& rec = c.recognizer;
  if (rec.initial() == Generator::kNoState)
    raise(ErrorCode::Validation, "constraint recognizer has no initial state");
  for (Generator::StateId s = 0; s < rec.state_count(); ++s) {
    if (!rec.marked(s))
      raise(ErrorCode::Validation,
            "constraint recognizer state " + std::to_string(s) +
                " is unmarked; constraint languages must be prefix-closed "
                "(every state marked)");
  }
  for (const EventId& e : rec.alphabet()) {
    if (!plant.alphabet().count(e))
      raise(ErrorCode::InvalidArgument,
            "constraint mentions event " + to_string(e) +
                " which the composition plant never generates");
  }
  Generator spec = rec;
  for (const EventId& e : plant.alphabet()) spec.include_event(e);
  return spec;
}

ControllerGenerator synthesize_constrained(const System& s, const Target& t,
                                           const ConstraintSpec& c) {
  Generator plant = build_composition_plant(s, t);
  Generator spec = compile_constraint(c, plant);
  SupervisorGenerator r = supcon(plant, spec);
  return extract_memory_cg(r);
}

ConstraintSpec universal_constraint(const Generator& plant) {
  ConstraintSpec c;
  c.description = "universal constraint (no restriction)";
  Generator::StateId s = c.recognizer.add_state(true);
  c.recognizer.set_initial(s);
  for (const EventId& e : plant.alphabet()) c.recognizer.add_transition(s, e, s);
  return c;
}

}  // namespace descomp

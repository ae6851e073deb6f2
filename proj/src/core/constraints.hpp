#ifndef DESCOMP_CORE_CONSTRAINTS_HPP
#define DESCOMP_CORE_CONSTRAINTS_HPP

#include <string>

#include "core/cg.hpp"
#include "core/generator.hpp"
#include "core/model.hpp"

namespace descomp {

// Prefix-closed constraint language over plant events, supplied as an
// explicit recognizer with every state marked. Constraint alphabets may
// mention delegations and internal behavior states, not just target actions.
struct ConstraintSpec {
  Generator recognizer;
  std::string description;
};

// Validates the constraint shape against the plant and returns the spec
// recognizer to control. Every recognizer state must be marked
// (prefix-closedness is enforced syntactically); an unmarked state raises
// ErrorCode::Validation. Recognizer events must exist in the plant alphabet.
Generator compile_constraint(const ConstraintSpec& c, const Generator& plant);

// plant -> supcon(plant, K_C) -> memory controller generator. The result is
// empty exactly when no conforming composition exists.
ControllerGenerator synthesize_constrained(const System& s, const Target& t,
                                           const ConstraintSpec& c);

// Universal constraint recognizer (one marked state looping on the whole
// plant alphabet); with it the pipeline reduces to plain composition.
ConstraintSpec universal_constraint(const Generator& plant);

}  // namespace descomp

#endif

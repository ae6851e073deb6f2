#ifndef DESCOMP_CORE_PROBLEM_IO_HPP
#define DESCOMP_CORE_PROBLEM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/cg.hpp"
#include "core/constraints.hpp"
#include "core/model.hpp"

namespace descomp {

enum class ProblemMode { Compose, Srtf };

struct Problem {
  std::string name;
  ProblemMode mode = ProblemMode::Compose;
  System system;
  Target target;
  std::optional<ConstraintSpec> constraint;
  std::vector<std::string> warnings;  // filled by parse_problem
};

// JSON problem files, format "descomp-problem" version 1. Validation names
// the offending behavior/state/action; a target action no behavior performs
// is a warning, not an error.
Problem parse_problem(const std::string& text);
std::string serialize_problem(const Problem& p);

// A behavior on its own (used to export target fragments).
std::string behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const std::string& text);

// Controller generator artifacts, format "descomp-cg" version 1.
std::string cg_to_json(const ControllerGenerator& g);
ControllerGenerator cg_from_json(const std::string& text);

}  // namespace descomp

#endif

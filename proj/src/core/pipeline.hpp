#ifndef DESCOMP_CORE_PIPELINE_HPP
#define DESCOMP_CORE_PIPELINE_HPP

#include <optional>
#include <string>

#include "core/ads.hpp"
#include "core/cg.hpp"
#include "core/constraints.hpp"
#include "core/ndsim.hpp"
#include "core/problem_io.hpp"
#include "core/srtf.hpp"

namespace descomp {

enum class SynthesisMode { Compose, Constrained, Srtf };

// One-shot synthesis over a parsed problem: plant, supervisor, and either a
// controller generator (compose/constrained) or a target fragment (srtf).
struct SynthesisResult {
  SynthesisMode mode = SynthesisMode::Compose;
  Generator plant;
  SymbolTable plant_symbols;
  SupervisorGenerator supervisor;
  std::optional<ControllerGenerator> cg;     // compose / constrained
  std::optional<TargetFragment> fragment;    // srtf
  bool solution_exists = false;
  std::optional<bool> srtf_equivalent_to_target;

  std::string summary() const;
  std::string omega_table() const;
};

SynthesisResult synthesize(const Problem& p, SynthesisMode mode, bool quotient);

// Referee run: existence by the nd-simulation route, agreement with the
// supervisory route, and the tuple-level crosscheck on solvable instances.
struct RefereeReport {
  bool des_exists = false;
  bool sim_exists = false;
  CrosscheckReport crosscheck;
  bool ok = false;

  std::string to_text() const;
};

RefereeReport referee(const Problem& p);

}  // namespace descomp

#endif

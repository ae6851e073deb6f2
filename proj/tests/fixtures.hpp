#ifndef DESCOMP_TESTS_FIXTURES_HPP
#define DESCOMP_TESTS_FIXTURES_HPP

#include <random>

#include "core/ads.hpp"
#include "core/cg.hpp"
#include "core/constraints.hpp"
#include "core/generator.hpp"
#include "core/model.hpp"
#include "core/problem_io.hpp"

namespace descomp::fixtures {

// --- industrial machine (raw TCT events: 0=break 1=on 3=operate 5=repair
// 7=off 9=dismantle; odd codes controllable) ---
Generator machine_generator();
SymbolTable machine_symbols();
Generator k1_recognizer();  // no break-downs: (on operate* off)*
Generator k2_recognizer();  // never dismantle: one state, five loops
std::string machine_ads_canonical();  // canonical listing of the machine
Generator machine_without_dismantle_state();

// --- mining problem: truck/loader/excavator and the cyclic mining target ---
Behavior mining_truck();
Behavior mining_loader();
Behavior mining_excavator();
System mining_system();
Target mining_target();

// Controller generator of the mining problem as published: 22 states,
// 32 (action, index) edges, initial state 0.
ControllerGenerator mining_cg_reference();
// Same automaton restricted to states 0..11 (the "excavator repaired first"
// constrained solution).
ControllerGenerator mining_cg_reference_constrained();

// Constraint: whenever the excavator loads (it then needs repair), the next
// repair request must be delegated to it. Three states, every state marked.
ConstraintSpec excavator_first_repair_constraint();
// Toggle recognizer that tracks the parity of excavator loads without
// forbidding anything; splits tuple-equal supervisor states by memory.
ConstraintSpec excavator_load_parity_constraint();
// Strict alternation of load delegations between loader and excavator.
ConstraintSpec strict_load_alternation_constraint();

// --- deterministic mining variant (srtf setting) ---
System mining_deterministic_system();
Target mining_deterministic_target();  // same shape as the basic target
// Published nine-state fragment for the deterministic variant.
Target mining_srtf_reference();

// --- small helpers ---
System single_copy_system(const Behavior& b);

// Seeded random instances for oracle comparisons.
struct RandomProblemOptions {
  int max_target_states = 4;
  int max_behaviors = 3;
  int max_behavior_states = 3;
  int num_actions = 3;
  bool deterministic_system = false;
};
struct RandomGeneratorOptions {
  int max_states = 5;
  int num_events = 4;      // half controllable, half not
  double edge_density = 0.45;
  double marked_prob = 0.5;
};

Problem random_problem(std::mt19937& rng, const RandomProblemOptions& opt);
Generator random_generator(std::mt19937& rng, const RandomGeneratorOptions& opt);
// Random spec over the same event set; all-marked with probability 0.5 so the
// marked-prefix hypothesis often holds by construction (callers re-roll).
Generator random_spec(std::mt19937& rng, const Generator& plant,
                      const RandomGeneratorOptions& opt);

}  // namespace descomp::fixtures

#endif

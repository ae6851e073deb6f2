#include "core/pipeline.hpp"

#include "core/errors.hpp"
#include "core/plant.hpp"

namespace descomp {

std::string SynthesisResult::summary() const {
  std::string out;
  if (mode == SynthesisMode::Srtf) {
    const auto& frag = *fragment;
    out += "srtf computed: " + std::to_string(frag.target.behavior.states.size()) +
           " states, " + std::to_string(frag.target.behavior.transitions.size()) +
           " transitions\n";
    if (srtf_equivalent_to_target)
      out += std::string("simulation-equivalent to the original target: ") +
             (*srtf_equivalent_to_target ? "yes" : "no") + "\n";
  } else {
    out += solution_exists ? "composition exists\n" : "no composition exists\n";
    if (cg && !cg->empty_solution())
      out += "controller generator: " + std::to_string(cg->state_count()) + " states, " +
             std::to_string(cg->transitions.size()) + " transitions\n";
  }
  out += "plant: " + std::to_string(plant.state_count()) + " states, " +
         std::to_string(plant.transition_count()) + " transitions\n";
  out += "supervisor: " + std::to_string(supervisor.automaton.state_count()) +
         " states\n";
  return out;
}

std::string SynthesisResult::omega_table() const {
  if (!cg || cg->empty_solution()) return "";
  std::string out;
  for (int s = 0; s < cg->state_count(); ++s) {
    for (const auto& a : cg->actions) {
      auto omega = cg->select(s, a);
      if (omega.empty()) continue;
      out += "omega(" + std::to_string(s) + "," + a + ") = {";
      bool first = true;
      for (int j : omega) {
        out += (first ? "" : ",") + std::to_string(j);
        first = false;
      }
      out += "}  " + cg->tuples[s].label() + "\n";
    }
  }
  return out;
}

SynthesisResult synthesize(const Problem& p, SynthesisMode mode, bool quotient) {
  SynthesisResult result;
  result.mode = mode;

  if (mode == SynthesisMode::Srtf) {
    result.plant = build_maximal_plant(p.system, p.target);
    result.plant_symbols = make_symbol_table(result.plant);
    result.supervisor = supcon(result.plant, result.plant);
    TargetFragment frag = compute_srtf(p.system, p.target);
    if (quotient) frag = quotient_fragment(frag);
    result.srtf_equivalent_to_target = simulation_equivalent(frag.target, p.target);
    result.solution_exists = !frag.trivial();
    result.fragment = std::move(frag);
    return result;
  }

  result.plant = build_composition_plant(p.system, p.target);
  result.plant_symbols = make_symbol_table(result.plant);

  if (mode == SynthesisMode::Constrained) {
    if (!p.constraint)
      raise(ErrorCode::InvalidArgument,
            "constrained synthesis requested but the problem carries no constraint");
    Generator spec = compile_constraint(*p.constraint, result.plant);
    result.supervisor = supcon(result.plant, spec);
  } else {
    result.supervisor = supcon(result.plant, result.plant);
  }

  ControllerGenerator cg = extract_memory_cg(result.supervisor);
  if (quotient) cg = cg_quotient(cg);
  result.solution_exists = !result.supervisor.empty();
  result.cg = std::move(cg);
  return result;
}

std::string RefereeReport::to_text() const {
  std::string out;
  out += std::string("supervisory route: ") +
         (des_exists ? "composition exists" : "no composition exists") + "\n";
  out += std::string("nd-simulation route: ") +
         (sim_exists ? "composition exists" : "no composition exists") + "\n";
  if (des_exists != sim_exists) {
    out += "routes disagree\n";
  } else if (des_exists) {
    out += crosscheck.to_text();
  } else {
    out += "crosscheck ok: both routes report no composition\n";
  }
  return out;
}

RefereeReport referee(const Problem& p) {
  RefereeReport report;
  Generator plant = build_composition_plant(p.system, p.target);
  SupervisorGenerator r = supcon(plant, plant);
  report.des_exists = !r.empty();

  EnactedSystem enacted = build_enacted_system(p.system);
  SimRelation sim = greatest_nd_simulation(p.target, enacted);
  int t0 = p.target.behavior.state_index(p.target.behavior.initial);
  report.sim_exists = sim.contains(t0, enacted.initial);

  ControllerGenerator cg = extract_cg(r);
  report.crosscheck = crosscheck_cg(cg, sim, p.target, enacted);
  report.ok = report.des_exists == report.sim_exists &&
              (!report.des_exists || report.crosscheck.ok);
  return report;
}

}  // namespace descomp

#include "core/supcon.hpp"

#include <deque>

#include "core/errors.hpp"

namespace descomp {

namespace {

// Word reaching each reachable product state, for hypothesis witnesses.
std::vector<EventId> word_to(const Generator& g, Generator::StateId target) {
  std::map<Generator::StateId, std::vector<EventId>> word;
  std::deque<Generator::StateId> queue{g.initial()};
  word[g.initial()] = {};
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    if (s == target) return word[s];
    for (const auto& [e, t] : g.transitions_from(s)) {
      if (word.count(t)) continue;
      auto w = word[s];
      w.push_back(e);
      word[t] = std::move(w);
      queue.push_back(t);
    }
  }
  return {};
}

void check_marked_prefix_hypothesis(const Generator& product, const Generator& plant,
                                    const Generator& spec) {
  auto spec_core = spec.coreachable();
  for (Generator::StateId s = 0; s < product.state_count(); ++s) {
    auto src = product.sources(s);
    Generator::StateId p = src->first, k = src->second;
    if (plant.marked(p) && spec_core[k] && !spec.marked(k)) {
      std::string text =
          "specification is not closed under marked prefixes; witness:";
      for (const auto& e : word_to(product, s)) text += " " + to_string(e);
      raise(ErrorCode::Hypothesis, text);
    }
  }
}

}  // namespace

SupervisorGenerator supcon(const Generator& plant, const Generator& spec) {
  Generator product = sync_product(plant, spec);
  check_marked_prefix_hypothesis(product, plant, spec);

  const int n = product.state_count();
  std::vector<bool> alive(n, true);

  auto product_enabled = [&](Generator::StateId s, const EventId& e) {
    Generator::StateId t = product.successor(s, e);
    return t != Generator::kNoState && alive[t];
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // (b) delete states where a plant-enabled uncontrollable event is missing
    bool deleted = true;
    while (deleted) {
      deleted = false;
      for (Generator::StateId s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        Generator::StateId p = product.sources(s)->first;
        for (const auto& [e, pt] : plant.transitions_from(p)) {
          if (e.controllable()) continue;
          if (!product_enabled(s, e)) {
            alive[s] = false;
            deleted = true;
            changed = true;
            break;
          }
        }
      }
    }

    // (c) trim to the reachable and coreachable part
    std::vector<bool> reach(n, false);
    if (alive[product.initial()]) {
      std::deque<Generator::StateId> queue{product.initial()};
      reach[product.initial()] = true;
      while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        for (const auto& [e, t] : product.transitions_from(s))
          if (alive[t] && !reach[t]) {
            reach[t] = true;
            queue.push_back(t);
          }
      }
    }
    std::vector<std::vector<Generator::StateId>> rev(n);
    std::vector<bool> core(n, false);
    std::deque<Generator::StateId> queue;
    for (Generator::StateId s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      for (const auto& [e, t] : product.transitions_from(s))
        if (alive[t]) rev[t].push_back(s);
      if (product.marked(s)) {
        core[s] = true;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      for (auto p : rev[s])
        if (!core[p]) {
          core[p] = true;
          queue.push_back(p);
        }
    }
    for (Generator::StateId s = 0; s < n; ++s) {
      if (alive[s] && (!reach[s] || !core[s])) {
        alive[s] = false;
        changed = true;
      }
    }
    if (!alive[product.initial()]) break;
  }

  SupervisorGenerator result;
  if (!alive[product.initial()]) {
    result.automaton = Generator::empty();
    result.plant_state.assign(1, plant.initial());
    return result;
  }

  std::vector<Generator::StateId> remap(n, Generator::kNoState);
  for (const EventId& e : product.alphabet()) result.automaton.include_event(e);
  for (Generator::StateId s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    Generator::StateId t = result.automaton.add_state(product.marked(s));
    if (product.plant_info(s)) result.automaton.set_plant_info(t, *product.plant_info(s));
    result.automaton.set_sources(t, product.sources(s)->first, product.sources(s)->second);
    if (!product.label(s).empty()) result.automaton.set_label(t, product.label(s));
    remap[s] = t;
    result.plant_state.push_back(product.sources(s)->first);
  }
  result.automaton.set_initial(remap[product.initial()]);
  for (Generator::StateId s = 0; s < n; ++s) {
    if (remap[s] == Generator::kNoState) continue;
    for (const auto& [e, t] : product.transitions_from(s))
      if (remap[t] != Generator::kNoState)
        result.automaton.add_transition(remap[s], e, remap[t]);
  }
  // The fixpoint deletes whole states, so the survivors still need a trim
  // pass in pathological cases; by construction they are already trim here.
  return result;
}

ControlPattern control_patterns(const Generator& plant, const SupervisorGenerator& r) {
  ControlPattern pattern;
  for (Generator::StateId y = 0; y < r.automaton.state_count(); ++y) {
    Generator::StateId p = r.plant_state[y];
    std::set<EventId> disabled;
    for (const auto& [e, pt] : plant.transitions_from(p)) {
      if (!e.controllable()) continue;
      if (r.automaton.successor(y, e) == Generator::kNoState) disabled.insert(e);
    }
    if (!disabled.empty()) pattern.disabled.emplace(y, std::move(disabled));
  }
  return pattern;
}

std::string condat_text(const ControlPattern& p) {
  std::string out;
  for (const auto& [state, events] : p.disabled) {
    out += std::to_string(state) + ":";
    bool first = true;
    for (const auto& e : events) {
      if (!first) out += ",";
      out += to_string(e);
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace descomp

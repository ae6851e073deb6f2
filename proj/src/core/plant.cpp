#include "core/plant.hpp"

#include <deque>
#include <map>

#include "core/errors.hpp"

namespace descomp {

namespace {

struct PlantBuilder {
  Generator gen;
  std::map<std::string, Generator::StateId> index;
  std::deque<std::pair<Generator::StateId, PlantStateInfo>> queue;

  Generator::StateId intern(const PlantStateInfo& info) {
    std::string key = info.label();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    Generator::StateId s = gen.add_state(info.at_boundary());
    gen.set_plant_info(s, info);
    gen.set_label(s, key);
    index.emplace(key, s);
    queue.push_back({s, info});
    return s;
  }
};

}  // namespace

Generator build_composition_plant(const System& s, const Target& t) {
  if (!t.behavior.deterministic())
    raise(ErrorCode::Mode,
          "target is nondeterministic; basic composition requires a deterministic "
          "target (use the srtf pipeline for nondeterministic targets)");
  for (const auto& b : s.behaviors) b.validate();
  t.behavior.validate();

  PlantBuilder pb;
  PlantStateInfo init;
  init.target_state = t.behavior.initial;
  for (const auto& b : s.behaviors) init.behavior_states.push_back(b.initial);
  pb.gen.set_initial(pb.intern(init));

  while (!pb.queue.empty()) {
    auto [from, info] = pb.queue.front();
    pb.queue.pop_front();

    if (info.at_boundary()) {
      // case 1: uncontrollable request, target moves and the request is recorded
      for (const auto& tr : t.behavior.transitions) {
        if (tr.from != info.target_state) continue;
        PlantStateInfo next = info;
        next.target_state = tr.to;
        next.pending_request = tr.action;
        pb.gen.add_transition(from, EventId::request(tr.action), pb.intern(next));
      }
    } else if (info.pending_request && info.pending_delegation == 0) {
      // case 2: every delegation is enabled, legal or not
      for (int j = 1; j <= s.size(); ++j) {
        PlantStateInfo next = info;
        next.pending_delegation = j;
        pb.gen.add_transition(from, EventId::delegate(j), pb.intern(next));
      }
    } else if (info.pending_request) {
      // case 3: one uncontrollable evolution per successor of the delegate
      int j = info.pending_delegation;
      for (const auto& succ :
           s.at(j).successors(info.behavior_states[j - 1], *info.pending_request)) {
        PlantStateInfo next = info;
        next.behavior_states[j - 1] = succ;
        next.pending_request.reset();
        next.pending_delegation = 0;
        pb.gen.add_transition(from, EventId::evolve(j, succ), pb.intern(next));
      }
    }
  }
  return pb.gen;
}

Generator build_maximal_plant(const System& s, const Target& t) {
  if (!s.deterministic())
    raise(ErrorCode::Mode,
          "available system is nondeterministic; the maximal composition plant "
          "is defined for deterministic systems only");
  for (const auto& b : s.behaviors) b.validate();
  t.behavior.validate();

  PlantBuilder pb;
  PlantStateInfo init;
  init.target_state = t.behavior.initial;
  for (const auto& b : s.behaviors) init.behavior_states.push_back(b.initial);
  pb.gen.set_initial(pb.intern(init));

  while (!pb.queue.empty()) {
    auto [from, info] = pb.queue.front();
    pb.queue.pop_front();

    if (!info.pending_transition) {
      // Every target transition may be requested; requests whose source does
      // not match the current target state lead to dead ends removed by trim.
      for (const auto& tr : t.behavior.transitions) {
        PlantStateInfo next = info;
        next.pending_transition = tr;
        pb.gen.add_transition(from, EventId::trans_req(tr), pb.intern(next));
      }
    } else if (info.pending_transition->from == info.target_state) {
      const auto& tr = *info.pending_transition;
      for (int j = 1; j <= s.size(); ++j) {
        auto succ = s.at(j).successors(info.behavior_states[j - 1], tr.action);
        if (succ.empty()) continue;  // delegation only enabled when performable
        PlantStateInfo next = info;
        next.target_state = tr.to;
        next.behavior_states[j - 1] = succ.front();
        next.pending_transition.reset();
        pb.gen.add_transition(from, EventId::delegate(j), pb.intern(next));
      }
    }
  }
  return pb.gen;
}

}  // namespace descomp

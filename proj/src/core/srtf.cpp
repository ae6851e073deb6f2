#include "core/srtf.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "core/bisim.hpp"
#include "core/errors.hpp"
#include "core/ndsim.hpp"
#include "core/plant.hpp"

namespace descomp {

TargetFragment compute_srtf(const System& s, const Target& t) {
  Generator plant = build_maximal_plant(s, t);
  SupervisorGenerator r = supcon(plant, plant);

  TargetFragment frag;
  frag.target.allow_nondeterministic = true;
  frag.target.behavior.name = t.behavior.name + "_srtf";
  for (const auto& a : t.behavior.actions) frag.target.behavior.actions.push_back(a);

  const Generator& aut = r.automaton;
  if (r.empty()) {
    // cannot happen for a maximal plant (the initial state is marked), but
    // keep the designated representation anyway
    frag.target.behavior.states = {"s0"};
    frag.target.behavior.initial = "s0";
    frag.origin = {0};
    frag.tuples.push_back({t.behavior.initial, {}});
    return frag;
  }

  std::map<Generator::StateId, int> state_of;  // boundary supervisor state -> fragment state
  auto intern = [&](Generator::StateId y) {
    auto it = state_of.find(y);
    if (it != state_of.end()) return it->second;
    int id = static_cast<int>(frag.origin.size());
    state_of.emplace(y, id);
    frag.origin.push_back(y);
    const auto& info = aut.plant_info(y);
    frag.tuples.push_back({info->target_state, info->behavior_states});
    frag.target.behavior.states.push_back("s" + std::to_string(id));
    return id;
  };

  int init = intern(aut.initial());
  frag.target.behavior.initial = frag.target.behavior.states[init];

  std::deque<Generator::StateId> queue{aut.initial()};
  std::set<Generator::StateId> seen{aut.initial()};
  while (!queue.empty()) {
    Generator::StateId y = queue.front();
    queue.pop_front();
    int from = intern(y);
    for (const auto& [req, y1] : aut.transitions_from(y)) {
      if (req.kind() != EventKind::TransReq) continue;
      for (const auto& [del, y2] : aut.transitions_from(y1)) {
        if (del.kind() != EventKind::Delegate) continue;
        int to = intern(y2);
        frag.target.behavior.transitions.push_back(
            {frag.target.behavior.states[from], req.name(),
             frag.target.behavior.states[to]});
        frag.delegations.push_back({from, req.name(), to, del.index()});
        if (seen.insert(y2).second) queue.push_back(y2);
      }
    }
  }

  // distinct supervisor paths may induce the same (from, action, to) triple
  std::sort(frag.target.behavior.transitions.begin(),
            frag.target.behavior.transitions.end());
  frag.target.behavior.transitions.erase(
      std::unique(frag.target.behavior.transitions.begin(),
                  frag.target.behavior.transitions.end()),
      frag.target.behavior.transitions.end());
  return frag;
}

namespace {

Lts behavior_lts(const Behavior& b, std::map<std::string, int>& labels) {
  Lts lts;
  lts.num_states = static_cast<int>(b.states.size());
  for (const auto& tr : b.transitions) {
    auto it = labels.find(tr.action);
    if (it == labels.end()) it = labels.emplace(tr.action, static_cast<int>(labels.size())).first;
    lts.edges.emplace_back(b.state_index(tr.from), it->second, b.state_index(tr.to));
  }
  return lts;
}

}  // namespace

bool simulated_by(const Target& t1, const Target& t2) {
  auto pairs = greatest_simulation(t1.behavior, t2.behavior);
  int i1 = t1.behavior.state_index(t1.behavior.initial);
  int i2 = t2.behavior.state_index(t2.behavior.initial);
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i1, i2)) != pairs.end();
}

bool simulation_equivalent(const Target& t1, const Target& t2) {
  return simulated_by(t1, t2) && simulated_by(t2, t1);
}

TargetFragment quotient_fragment(const TargetFragment& f) {
  std::map<std::string, int> labels;
  Lts lts = behavior_lts(f.target.behavior, labels);
  auto cls = bisimulation_classes(lts);
  if (cls.empty()) return f;

  TargetFragment q;
  q.target.allow_nondeterministic = true;
  q.target.behavior.name = f.target.behavior.name;
  q.target.behavior.actions = f.target.behavior.actions;

  const Behavior& b = f.target.behavior;
  int init_state = b.state_index(b.initial);

  std::map<int, int> state_of_class;
  auto intern = [&](int state) {
    int c = cls[state];
    auto it = state_of_class.find(c);
    if (it != state_of_class.end()) return it->second;
    int id = static_cast<int>(q.origin.size());
    state_of_class.emplace(c, id);
    q.origin.push_back(f.origin[state]);
    q.tuples.push_back(f.tuples[state]);
    q.target.behavior.states.push_back("s" + std::to_string(id));
    return id;
  };

  int qinit = intern(init_state);
  q.target.behavior.initial = q.target.behavior.states[qinit];

  std::deque<int> queue{init_state};
  std::vector<bool> seen(b.states.size(), false);
  seen[init_state] = true;
  std::set<std::tuple<int, std::string, int>> dedup;
  std::set<std::tuple<int, std::string, int, int>> deleg_dedup;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    int from = intern(s);
    for (std::size_t i = 0; i < b.transitions.size(); ++i) {
      const auto& tr = b.transitions[i];
      if (b.state_index(tr.from) != s) continue;
      int to_state = b.state_index(tr.to);
      int to = intern(to_state);
      if (dedup.insert({from, tr.action, to}).second)
        q.target.behavior.transitions.push_back(
            {q.target.behavior.states[from], tr.action, q.target.behavior.states[to]});
      if (!seen[to_state]) {
        seen[to_state] = true;
        queue.push_back(to_state);
      }
    }
    for (const auto& d : f.delegations) {
      if (d.from != s) continue;
      int to = intern(d.to);
      if (deleg_dedup.insert({from, d.action, to, d.index1}).second)
        q.delegations.push_back({from, d.action, to, d.index1});
    }
  }
  return q;
}

}  // namespace descomp

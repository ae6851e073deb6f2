#include "core/cg.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "core/bisim.hpp"
#include "core/errors.hpp"

namespace descomp {

bool ControllerGenerator::empty_solution() const {
  // A solvable problem always yields at least the initial snapshot; the empty
  // supervisor leaves no states at all.
  return tuples.empty();
}

std::set<int> ControllerGenerator::select(int state, const std::string& action) const {
  if (state < 0 || state >= state_count())
    raise(ErrorCode::Domain, "controller generator has no state " + std::to_string(state));
  std::set<int> out;
  for (const auto& t : transitions)
    if (t.from == state && t.action == action) out.insert(t.index1);
  return out;
}

std::set<std::string> ControllerGenerator::enabled_actions(int state) const {
  if (state < 0 || state >= state_count())
    raise(ErrorCode::Domain, "controller generator has no state " + std::to_string(state));
  std::set<std::string> out;
  for (const auto& t : transitions)
    if (t.from == state) out.insert(t.action);
  return out;
}

std::vector<std::pair<int, std::string>> ControllerGenerator::observable_successors(
    int state, const std::string& action, int index1) const {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& t : transitions)
    if (t.from == state && t.action == action && t.index1 == index1)
      out.push_back({t.to, tuples[t.to].behavior_states[index1 - 1]});
  return out;
}

std::set<int> cg_select(const ControllerGenerator& g, int state, const std::string& action) {
  return g.select(state, action);
}

namespace {

void require_basic_phase_alphabet(const SupervisorGenerator& r) {
  for (const EventId& e : r.automaton.alphabet()) {
    switch (e.kind()) {
      case EventKind::Request:
      case EventKind::Delegate:
      case EventKind::Evolve:
        break;
      default:
        raise(ErrorCode::Mode,
              "supervisor alphabet is not in request/delegate/evolve form; "
              "controller generators are extracted from basic composition "
              "supervisors only");
    }
  }
}

CompositionTuple tuple_of(const Generator& r, Generator::StateId y) {
  const auto& info = r.plant_info(y);
  if (!info)
    raise(ErrorCode::Precondition,
          "supervisor state carries no composition snapshot; was it produced "
          "by supcon over a composition plant?");
  return {info->target_state, info->behavior_states};
}

ControllerGenerator extract(const SupervisorGenerator& r, ControllerGenerator::Kind kind) {
  require_basic_phase_alphabet(r);
  ControllerGenerator cg;
  cg.kind = kind;

  std::set<std::string> actions;
  int behaviors = 0;
  for (const EventId& e : r.automaton.alphabet()) {
    if (e.kind() == EventKind::Request) actions.insert(e.name());
    if (e.kind() == EventKind::Delegate) behaviors = std::max(behaviors, e.index());
  }
  cg.actions.assign(actions.begin(), actions.end());

  if (r.empty()) return cg;

  const Generator& aut = r.automaton;
  CompositionTuple init_tuple = tuple_of(aut, aut.initial());
  cg.behavior_count =
      std::max(behaviors, static_cast<int>(init_tuple.behavior_states.size()));

  // States are supervisor states at phase boundaries; the tuple flavor then
  // merges states with equal snapshots.
  std::map<int, int> state_of_y;       // memory kind
  std::map<CompositionTuple, int> state_of_tuple;  // tuple kind
  auto intern = [&](Generator::StateId y) {
    CompositionTuple tuple = tuple_of(aut, y);
    if (kind == ControllerGenerator::Kind::Memory) {
      auto it = state_of_y.find(y);
      if (it != state_of_y.end()) return it->second;
      int id = cg.state_count();
      state_of_y.emplace(y, id);
      cg.tuples.push_back(std::move(tuple));
      cg.r_states.push_back(y);
      return id;
    }
    auto it = state_of_tuple.find(tuple);
    if (it != state_of_tuple.end()) return it->second;
    int id = cg.state_count();
    state_of_tuple.emplace(tuple, id);
    cg.tuples.push_back(std::move(tuple));
    cg.r_states.push_back(y);
    return id;
  };

  cg.initial = intern(aut.initial());
  std::deque<Generator::StateId> queue{aut.initial()};
  std::set<Generator::StateId> seen_y{aut.initial()};
  std::set<std::tuple<int, std::string, int, int>> edge_dedup;
  while (!queue.empty()) {
    Generator::StateId y = queue.front();
    queue.pop_front();
    int from = intern(y);
    for (const auto& [req, y1] : aut.transitions_from(y)) {
      if (req.kind() != EventKind::Request) continue;
      for (const auto& [del, y2] : aut.transitions_from(y1)) {
        if (del.kind() != EventKind::Delegate) continue;
        for (const auto& [evo, y3] : aut.transitions_from(y2)) {
          if (evo.kind() != EventKind::Evolve) continue;
          int to = intern(y3);
          if (edge_dedup.insert({from, req.name(), del.index(), to}).second)
            cg.transitions.push_back({from, req.name(), del.index(), to});
          if (seen_y.insert(y3).second) queue.push_back(y3);
        }
      }
    }
  }
  std::sort(cg.transitions.begin(), cg.transitions.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.from, a.action, a.index1, a.to) <
                     std::tie(b.from, b.action, b.index1, b.to);
            });
  return cg;
}

}  // namespace

ControllerGenerator extract_cg(const SupervisorGenerator& r) {
  return extract(r, ControllerGenerator::Kind::Tuple);
}

ControllerGenerator extract_memory_cg(const SupervisorGenerator& r) {
  return extract(r, ControllerGenerator::Kind::Memory);
}

RunState cg_start(const ControllerGenerator& g) {
  if (g.empty_solution())
    raise(ErrorCode::Precondition, "cannot run an empty controller generator");
  RunState run;
  run.cg = &g;
  run.state = g.initial;
  return run;
}

void cg_step(RunState& run, const std::string& action, int index1,
             const std::string& observed) {
  const ControllerGenerator& g = *run.cg;
  std::set<int> omega = g.select(run.state, action);
  if (!omega.count(index1))
    raise(ErrorCode::IllegalDelegation,
          "behavior " + std::to_string(index1) + " is not a legal delegation for '" +
              action + "' here");
  int to = -1;
  for (const auto& [cand, state_name] :
       g.observable_successors(run.state, action, index1)) {
    if (state_name == observed) {
      to = cand;
      break;
    }
  }
  if (to < 0)
    raise(ErrorCode::ModelViolation,
          "'" + observed + "' is not a legal successor of behavior " +
              std::to_string(index1) + " under '" + action + "'");
  run.transcript.push_back({action, index1, observed, to});
  run.state = to;
}

namespace {

Lts cg_lts(const ControllerGenerator& g, std::map<std::pair<std::string, int>, int>& labels) {
  Lts lts;
  lts.num_states = g.state_count();
  for (const auto& t : g.transitions) {
    auto key = std::make_pair(t.action, t.index1);
    auto it = labels.find(key);
    if (it == labels.end()) it = labels.emplace(key, static_cast<int>(labels.size())).first;
    lts.edges.emplace_back(t.from, it->second, t.to);
  }
  return lts;
}

}  // namespace

std::vector<int> cg_bisim_classes(const ControllerGenerator& g) {
  std::map<std::pair<std::string, int>, int> labels;
  return bisimulation_classes(cg_lts(g, labels));
}

bool cg_bisimilar(const ControllerGenerator& a, const ControllerGenerator& b) {
  if (a.empty_solution() || b.empty_solution())
    return a.empty_solution() == b.empty_solution();
  std::map<std::pair<std::string, int>, int> labels;
  Lts la = cg_lts(a, labels);
  Lts lb = cg_lts(b, labels);
  return lts_bisimilar(la, a.initial, lb, b.initial);
}

ControllerGenerator cg_quotient(const ControllerGenerator& g) {
  if (g.empty_solution()) return g;
  auto cls = cg_bisim_classes(g);
  // keep only classes reachable from the initial class
  int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;

  ControllerGenerator q;
  q.kind = g.kind;
  q.actions = g.actions;
  q.behavior_count = g.behavior_count;

  std::vector<int> remap(num_classes, -1);
  auto intern_class = [&](int c, int representative) {
    if (remap[c] >= 0) return remap[c];
    remap[c] = q.state_count();
    q.tuples.push_back(g.tuples[representative]);
    q.r_states.push_back(g.r_states[representative]);
    return remap[c];
  };

  q.initial = intern_class(cls[g.initial], g.initial);
  std::set<std::tuple<int, std::string, int, int>> dedup;
  // breadth-first over classes keeps numbering stable for equal inputs
  std::deque<int> queue{g.initial};
  std::vector<bool> seen(g.state_count(), false);
  seen[g.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    int from = intern_class(cls[s], s);
    for (const auto& t : g.transitions) {
      if (t.from != s) continue;
      int to = intern_class(cls[t.to], t.to);
      if (dedup.insert({from, t.action, t.index1, to}).second)
        q.transitions.push_back({from, t.action, t.index1, to});
      if (!seen[t.to]) {
        seen[t.to] = true;
        queue.push_back(t.to);
      }
    }
  }
  std::sort(q.transitions.begin(), q.transitions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.action, a.index1, a.to) <
           std::tie(b.from, b.action, b.index1, b.to);
  });
  return q;
}

}  // namespace descomp

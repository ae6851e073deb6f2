#include "core/model.hpp"

#include <algorithm>
#include <deque>

#include "core/errors.hpp"

namespace descomp {

int Behavior::state_index(const std::string& s) const {
  auto it = std::find(states.begin(), states.end(), s);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

std::vector<std::string> Behavior::successors(const std::string& state,
                                              const std::string& action) const {
  std::vector<std::string> out;
  for (const auto& t : transitions)
    if (t.from == state && t.action == action) out.push_back(t.to);
  return out;
}

bool Behavior::deterministic() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& t : transitions)
    if (!seen.insert({t.from, t.action}).second) return false;
  return true;
}

void Behavior::validate() const {
  if (state_index(initial) < 0)
    raise(ErrorCode::Validation,
          "behavior '" + name + "': initial state '" + initial + "' is not declared");
  for (const auto& t : transitions) {
    if (state_index(t.from) < 0 || state_index(t.to) < 0)
      raise(ErrorCode::Validation, "behavior '" + name + "': transition " + t.from +
                                       " -" + t.action + "-> " + t.to +
                                       " uses an undeclared state");
  }
}

std::optional<std::string> Target::step(const std::string& state,
                                        const std::string& action) const {
  auto succ = behavior.successors(state, action);
  if (succ.empty()) return std::nullopt;
  return succ.front();
}

bool System::deterministic() const {
  return std::all_of(behaviors.begin(), behaviors.end(),
                     [](const Behavior& b) { return b.deterministic(); });
}

std::set<std::string> System::action_union() const {
  std::set<std::string> all;
  for (const auto& b : behaviors) {
    for (const auto& a : b.actions) all.insert(a);
    for (const auto& t : b.transitions) all.insert(t.action);
  }
  return all;
}

std::string CompositionTuple::label() const {
  std::string s = "<" + target_state;
  for (const auto& b : behavior_states) s += "," + b;
  return s + ">";
}

int EnactedSystem::state_id(const std::vector<std::string>& vec) const {
  auto it = index_.find(vec);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> EnactedSystem::successors(int state, const std::string& action,
                                           int index1) const {
  std::vector<int> result;
  for (int pos : out[state]) {
    const Edge& e = edges[pos];
    if (e.action == action && e.index1 == index1) result.push_back(e.to);
  }
  return result;
}

EnactedSystem build_enacted_system(const System& s) {
  if (s.size() < 1) raise(ErrorCode::Validation, "system must contain at least one behavior");
  for (const auto& b : s.behaviors) b.validate();

  EnactedSystem e;
  e.system = s;
  std::deque<int> queue;
  auto intern = [&](const std::vector<std::string>& vec) {
    auto it = e.index_.find(vec);
    if (it != e.index_.end()) return it->second;
    int id = static_cast<int>(e.states.size());
    e.states.push_back(vec);
    e.out.emplace_back();
    e.index_.emplace(vec, id);
    queue.push_back(id);
    return id;
  };

  std::vector<std::string> init;
  init.reserve(s.size());
  for (const auto& b : s.behaviors) init.push_back(b.initial);
  e.initial = intern(init);

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const auto vec = e.states[id];  // copy: e.states may reallocate below
    for (int j = 1; j <= s.size(); ++j) {
      const Behavior& b = s.at(j);
      for (const auto& t : b.transitions) {
        if (t.from != vec[j - 1]) continue;
        std::vector<std::string> next = vec;
        next[j - 1] = t.to;
        int to = intern(next);
        e.out[id].push_back(static_cast<int>(e.edges.size()));
        e.edges.push_back({id, t.action, j, to});
      }
    }
  }
  return e;
}

void validate_history(const History& h, const EnactedSystem& e) {
  int cur = e.state_id(h.initial);
  if (cur != e.initial)
    raise(ErrorCode::Validation, "history does not start at the initial state vector");
  for (const auto& step : h.steps) {
    int to = e.state_id(step.after);
    bool found = false;
    for (int pos : e.out[cur]) {
      const auto& edge = e.edges[pos];
      if (edge.action == step.action && edge.index1 == step.index1 && edge.to == to) {
        found = true;
        break;
      }
    }
    if (!found)
      raise(ErrorCode::Validation, "history step (" + step.action + "," +
                                       std::to_string(step.index1) +
                                       ") is not an enacted-system transition");
    cur = to;
  }
}

std::vector<EventId> word_of_history(const History& h) {
  std::vector<EventId> word;
  word.reserve(3 * h.steps.size());
  for (const auto& step : h.steps) {
    word.push_back(EventId::request(step.action));
    word.push_back(EventId::delegate(step.index1));
    word.push_back(EventId::evolve(step.index1, step.after[step.index1 - 1]));
  }
  return word;
}

std::vector<EventId> word_of_trace_history(const TargetTrace& trace, const History& h) {
  if (trace.actions.size() != h.steps.size() ||
      trace.states.size() != trace.actions.size() + 1)
    raise(ErrorCode::InvalidArgument,
          "target trace and history have mismatched lengths");
  std::vector<EventId> word;
  word.reserve(2 * h.steps.size());
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    if (trace.actions[i] != h.steps[i].action)
      raise(ErrorCode::InvalidArgument,
            "target trace and history disagree on action " + std::to_string(i));
    word.push_back(EventId::trans_req(
        {trace.states[i], trace.actions[i], trace.states[i + 1]}));
    word.push_back(EventId::delegate(h.steps[i].index1));
  }
  return word;
}

}  // namespace descomp

#include "core/generator.hpp"

#include <algorithm>
#include <deque>

#include "core/errors.hpp"

namespace descomp {

std::string PlantStateInfo::label() const {
  std::string s = "<" + target_state;
  for (const auto& b : behavior_states) s += "," + b;
  if (pending_request) {
    s += "," + *pending_request + "," + std::to_string(pending_delegation);
  } else if (pending_transition) {
    s += ",<" + pending_transition->from + "," + pending_transition->action + "," +
         pending_transition->to + ">";
  } else {
    s += ",e";
  }
  s += ">";
  return s;
}

Generator Generator::empty() {
  Generator g;
  StateId s = g.add_state(false);
  g.set_initial(s);
  g.set_label(s, "empty");
  return g;
}

Generator::StateId Generator::add_state(bool marked) {
  states_.push_back(StateData{});
  states_.back().marked = marked;
  return static_cast<StateId>(states_.size()) - 1;
}

void Generator::check_state(StateId s, const char* who) const {
  if (s < 0 || s >= state_count())
    raise(ErrorCode::InvalidArgument, std::string(who) + ": state out of range");
}

void Generator::set_initial(StateId s) {
  check_state(s, "set_initial");
  initial_ = s;
}

void Generator::set_marked(StateId s, bool marked) {
  check_state(s, "set_marked");
  states_[s].marked = marked;
}

void Generator::add_transition(StateId from, const EventId& e, StateId to) {
  check_state(from, "add_transition");
  check_state(to, "add_transition");
  auto [it, inserted] = states_[from].out.emplace(e, to);
  if (!inserted)
    raise(ErrorCode::Determinism,
          "duplicate transition on event " + to_string(e) + " at state " +
              std::to_string(from));
  alphabet_.insert(e);
}

void Generator::set_plant_info(StateId s, PlantStateInfo info) {
  check_state(s, "set_plant_info");
  states_[s].plant = std::move(info);
}

void Generator::set_label(StateId s, std::string label) {
  check_state(s, "set_label");
  states_[s].label = std::move(label);
}

void Generator::set_sources(StateId s, StateId left, StateId right) {
  check_state(s, "set_sources");
  states_[s].sources = {left, right};
}

int Generator::marked_count() const {
  int n = 0;
  for (const auto& st : states_)
    if (st.marked) ++n;
  return n;
}

Generator::StateId Generator::successor(StateId s, const EventId& e) const {
  check_state(s, "successor");
  auto it = states_[s].out.find(e);
  return it == states_[s].out.end() ? kNoState : it->second;
}

Generator::StateId Generator::walk(const std::vector<EventId>& word) const {
  StateId s = initial_;
  for (const auto& e : word) {
    if (s == kNoState) return kNoState;
    s = successor(s, e);
  }
  return s;
}

bool Generator::accepts(const std::vector<EventId>& word) const {
  return walk(word) != kNoState;
}

bool Generator::accepts_marked(const std::vector<EventId>& word) const {
  StateId s = walk(word);
  return s != kNoState && marked(s);
}

long Generator::transition_count() const {
  long n = 0;
  for (const auto& st : states_) n += static_cast<long>(st.out.size());
  return n;
}

std::vector<bool> Generator::reachable() const {
  std::vector<bool> seen(states_.size(), false);
  if (initial_ == kNoState) return seen;
  std::deque<StateId> queue{initial_};
  seen[initial_] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const auto& [e, t] : states_[s].out) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> Generator::coreachable() const {
  std::vector<std::vector<StateId>> rev(states_.size());
  std::deque<StateId> queue;
  std::vector<bool> seen(states_.size(), false);
  for (StateId s = 0; s < state_count(); ++s) {
    for (const auto& [e, t] : states_[s].out) rev[t].push_back(s);
    if (states_[s].marked) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId p : rev[s]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

bool Generator::marked_language_empty() const {
  auto reach = reachable();
  for (StateId s = 0; s < state_count(); ++s)
    if (reach[s] && states_[s].marked) return false;
  return true;
}

Generator sync_product(const Generator& g1, const Generator& g2) {
  for (const EventId& e : g1.alphabet()) {
    auto it = g2.alphabet().find(e);
    if (it != g2.alphabet().end() && it->controllable() != e.controllable())
      raise(ErrorCode::AlphabetMismatch,
            "event " + to_string(e) + " has conflicting controllability flags");
  }
  if (g1.initial() == Generator::kNoState || g2.initial() == Generator::kNoState)
    raise(ErrorCode::InvalidArgument, "sync_product: generator without initial state");

  Generator out;
  for (const EventId& e : g1.alphabet()) out.include_event(e);
  for (const EventId& e : g2.alphabet()) out.include_event(e);

  std::map<std::pair<int, int>, Generator::StateId> index;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int x, int y) {
    auto key = std::make_pair(x, y);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    Generator::StateId s = out.add_state(g1.marked(x) && g2.marked(y));
    out.set_sources(s, x, y);
    if (g1.plant_info(x))
      out.set_plant_info(s, *g1.plant_info(x));
    else if (g2.plant_info(y))
      out.set_plant_info(s, *g2.plant_info(y));
    index.emplace(key, s);
    queue.push_back(key);
    return s;
  };

  out.set_initial(intern(g1.initial(), g2.initial()));
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    Generator::StateId from = index.at({x, y});
    for (const auto& [e, x2] : g1.transitions_from(x)) {
      Generator::StateId y2 = g2.successor(y, e);
      if (y2 == Generator::kNoState) continue;
      out.add_transition(from, e, intern(x2, y2));
    }
  }
  return out;
}

Generator trim(const Generator& g) {
  auto reach = g.reachable();
  auto coreach = g.coreachable();
  if (g.initial() == Generator::kNoState || !coreach[g.initial()])
    return Generator::empty();

  std::vector<Generator::StateId> remap(g.state_count(), Generator::kNoState);
  Generator out;
  for (const EventId& e : g.alphabet()) out.include_event(e);
  for (Generator::StateId s = 0; s < g.state_count(); ++s) {
    if (!reach[s] || !coreach[s]) continue;
    Generator::StateId t = out.add_state(g.marked(s));
    if (g.plant_info(s)) out.set_plant_info(t, *g.plant_info(s));
    if (g.sources(s)) out.set_sources(t, g.sources(s)->first, g.sources(s)->second);
    if (!g.label(s).empty()) out.set_label(t, g.label(s));
    remap[s] = t;
  }
  out.set_initial(remap[g.initial()]);
  for (Generator::StateId s = 0; s < g.state_count(); ++s) {
    if (remap[s] == Generator::kNoState) continue;
    for (const auto& [e, t] : g.transitions_from(s))
      if (remap[t] != Generator::kNoState)
        out.add_transition(remap[s], e, remap[t]);
  }
  return out;
}

namespace {

// BFS over synchronized pairs, recording a word to each pair.
struct PairWalk {
  std::map<std::pair<int, int>, std::vector<EventId>> word;
  std::deque<std::pair<int, int>> queue;

  void seed(int x, int y) {
    word[{x, y}] = {};
    queue.push_back({x, y});
  }
  bool visit(int x, int y, std::vector<EventId> w) {
    auto key = std::make_pair(x, y);
    if (word.count(key)) return false;
    word[key] = std::move(w);
    queue.push_back(key);
    return true;
  }
};

}  // namespace

std::optional<std::vector<EventId>> diverging_word(const Generator& candidate,
                                                   const Generator& plant) {
  PairWalk walk;
  walk.seed(candidate.initial(), plant.initial());
  while (!walk.queue.empty()) {
    auto [c, p] = walk.queue.front();
    walk.queue.pop_front();
    const auto& w = walk.word.at({c, p});
    for (const auto& [e, c2] : candidate.transitions_from(c)) {
      Generator::StateId p2 = plant.successor(p, e);
      std::vector<EventId> w2 = w;
      w2.push_back(e);
      if (p2 == Generator::kNoState) return w2;
      walk.visit(c2, p2, std::move(w2));
    }
  }
  return std::nullopt;
}

ControllabilityReport is_controllable(const Generator& candidate,
                                      const Generator& plant,
                                      bool require_sublanguage) {
  if (require_sublanguage) {
    if (auto w = diverging_word(candidate, plant)) {
      std::string text = "candidate is not a sublanguage of the plant; diverges on:";
      for (const auto& e : *w) text += " " + to_string(e);
      raise(ErrorCode::Precondition, text);
    }
  }

  ControllabilityReport report;
  PairWalk walk;
  walk.seed(candidate.initial(), plant.initial());
  while (!walk.queue.empty()) {
    auto [c, p] = walk.queue.front();
    walk.queue.pop_front();
    const auto& w = walk.word.at({c, p});
    for (const auto& [e, p2] : plant.transitions_from(p)) {
      Generator::StateId c2 = candidate.successor(c, e);
      if (c2 == Generator::kNoState) {
        if (!e.controllable()) {
          report.ok = false;
          report.witness = w;
          report.witness.push_back(e);
          return report;
        }
        continue;
      }
      walk.visit(c2, p2, [&] {
        std::vector<EventId> w2 = w;
        w2.push_back(e);
        return w2;
      }());
    }
  }
  report.ok = true;
  return report;
}

namespace {

// Product walk over the union of enabled events; reports the first point the
// two deterministic generators disagree on acceptance or marking.
bool walk_equivalence(const Generator& a, const Generator& b, bool marked_only) {
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue;
  seen.insert({a.initial(), b.initial()});
  queue.push_back({a.initial(), b.initial()});
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (a.marked(x) != b.marked(y)) {
      if (marked_only) {
        if (a.marked(x) && !b.marked(y)) return false;
      } else {
        return false;
      }
    }
    for (const auto& [e, x2] : a.transitions_from(x)) {
      Generator::StateId y2 = b.successor(y, e);
      if (y2 == Generator::kNoState) {
        if (!marked_only) return false;
        // a word of a missing in b: only a problem if it can still mark in a
        std::vector<bool> core = a.coreachable();
        if (core[x2]) return false;
        continue;
      }
      if (seen.insert({x2, y2}).second) queue.push_back({x2, y2});
    }
    if (!marked_only) {
      for (const auto& [e, y2] : b.transitions_from(y)) {
        if (a.successor(x, e) == Generator::kNoState) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool language_equivalent(const Generator& a, const Generator& b) {
  return walk_equivalence(a, b, false);
}

bool marked_sublanguage(const Generator& a, const Generator& b) {
  return walk_equivalence(trim(a), b, true);
}

}  // namespace descomp

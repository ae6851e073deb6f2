#include "core/problem_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/json_util.hpp"

namespace descomp {

using nlohmann::json;
using io_detail::event_from_json;
using io_detail::event_to_json;

namespace {

json behavior_body(const Behavior& b) {
  json j;
  j["name"] = b.name;
  j["initial"] = b.initial;
  j["states"] = b.states;
  if (!b.actions.empty()) j["actions"] = b.actions;
  auto trans = json::array();
  for (const auto& t : b.transitions) trans.push_back({t.from, t.action, t.to});
  j["transitions"] = trans;
  return j;
}

Behavior behavior_from(const json& j, const std::string& what) {
  if (!j.is_object()) raise(ErrorCode::Parse, what + " is not an object");
  Behavior b;
  b.name = j.value("name", what);
  if (!j.contains("initial") || !j.at("initial").is_string())
    raise(ErrorCode::Parse, what + " '" + b.name + "' has no initial state");
  b.initial = j.at("initial").get<std::string>();
  if (j.contains("actions")) b.actions = j.at("actions").get<std::vector<std::string>>();
  if (!j.contains("transitions") || !j.at("transitions").is_array())
    raise(ErrorCode::Parse, what + " '" + b.name + "' has no transitions array");
  for (const auto& t : j.at("transitions")) {
    if (!t.is_array() || t.size() != 3)
      raise(ErrorCode::Parse,
            what + " '" + b.name + "': transitions must be [from, action, to] triples");
    b.transitions.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                             t.at(2).get<std::string>()});
  }
  if (j.contains("states")) {
    b.states = j.at("states").get<std::vector<std::string>>();
  } else {
    // infer, initial first, then in order of first occurrence
    std::vector<std::string> states{b.initial};
    auto add = [&](const std::string& s) {
      if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(s);
    };
    for (const auto& t : b.transitions) {
      add(t.from);
      add(t.to);
    }
    b.states = std::move(states);
  }
  b.validate();
  return b;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorCode::Parse, "problem file is not valid JSON");
  if (!j.is_object() || j.value("format", "") != "descomp-problem")
    raise(ErrorCode::Parse, "not a descomp-problem document (missing format field)");
  if (j.value("version", 0) != 1)
    raise(ErrorCode::Parse, "unsupported descomp-problem version");

  Problem p;
  p.name = j.value("name", "problem");
  std::string mode = j.value("mode", "compose");
  if (mode == "compose")
    p.mode = ProblemMode::Compose;
  else if (mode == "srtf")
    p.mode = ProblemMode::Srtf;
  else
    raise(ErrorCode::Parse, "unknown mode '" + mode + "' (expected compose or srtf)");

  if (!j.contains("behaviors") || !j.at("behaviors").is_array() || j.at("behaviors").empty())
    raise(ErrorCode::Parse, "problem declares no available behaviors");
  std::set<std::string> names;
  for (const auto& bj : j.at("behaviors")) {
    Behavior b = behavior_from(bj, "behavior");
    if (!names.insert(b.name).second)
      raise(ErrorCode::Validation, "duplicate behavior name '" + b.name + "'");
    p.system.behaviors.push_back(std::move(b));
  }

  if (!j.contains("target")) raise(ErrorCode::Parse, "problem declares no target");
  p.target.behavior = behavior_from(j.at("target"), "target");
  p.target.allow_nondeterministic = p.mode == ProblemMode::Srtf;

  if (j.contains("constraint")) {
    const auto& cj = j.at("constraint");
    ConstraintSpec c;
    c.description = cj.value("description", "");
    if (!cj.contains("initial") || !cj.contains("transitions"))
      raise(ErrorCode::Parse, "constraint needs 'initial' and 'transitions'");
    std::vector<std::string> states;
    if (cj.contains("states")) states = cj.at("states").get<std::vector<std::string>>();
    auto state_id = [&](const std::string& name) {
      auto it = std::find(states.begin(), states.end(), name);
      if (it == states.end()) {
        states.push_back(name);
        return static_cast<int>(states.size()) - 1;
      }
      return static_cast<int>(it - states.begin());
    };
    std::string init = cj.at("initial").get<std::string>();
    std::vector<std::tuple<int, EventId, int>> trans;
    state_id(init);
    for (const auto& t : cj.at("transitions")) {
      if (!t.is_array() || t.size() != 3)
        raise(ErrorCode::Parse, "constraint transitions must be [from, event, to] triples");
      trans.emplace_back(state_id(t.at(0).get<std::string>()), event_from_json(t.at(1)),
                         state_id(t.at(2).get<std::string>()));
    }
    for (const auto& name : states) {
      auto s = c.recognizer.add_state(true);  // all marked: prefix-closed
      c.recognizer.set_label(s, name);
    }
    c.recognizer.set_initial(0);
    for (const auto& [from, e, to] : trans) c.recognizer.add_transition(from, e, to);
    p.constraint = std::move(c);
  }

  // cross-validation: actions the target requests that no behavior performs
  auto available = p.system.action_union();
  std::set<std::string> missing;
  for (const auto& t : p.target.behavior.transitions)
    if (!available.count(t.action)) missing.insert(t.action);
  for (const auto& a : missing)
    p.warnings.push_back("target action '" + a +
                         "' is not performed by any behavior; composition may be "
                         "unsolvable or the action will be pruned");
  return p;
}

std::string serialize_problem(const Problem& p) {
  json j;
  j["format"] = "descomp-problem";
  j["version"] = 1;
  j["name"] = p.name;
  j["mode"] = p.mode == ProblemMode::Srtf ? "srtf" : "compose";
  auto behaviors = json::array();
  for (const auto& b : p.system.behaviors) behaviors.push_back(behavior_body(b));
  j["behaviors"] = behaviors;
  j["target"] = behavior_body(p.target.behavior);
  if (p.constraint) {
    const Generator& rec = p.constraint->recognizer;
    json cj;
    cj["description"] = p.constraint->description;
    std::vector<std::string> states;
    for (Generator::StateId s = 0; s < rec.state_count(); ++s)
      states.push_back(rec.label(s).empty() ? "q" + std::to_string(s) : rec.label(s));
    cj["states"] = states;
    cj["initial"] = states[rec.initial()];
    auto trans = json::array();
    for (Generator::StateId s = 0; s < rec.state_count(); ++s)
      for (const auto& [e, t] : rec.transitions_from(s))
        trans.push_back({states[s], event_to_json(e), states[t]});
    cj["transitions"] = trans;
    j["constraint"] = cj;
  }
  return j.dump(2) + "\n";
}

std::string behavior_to_json(const Behavior& b) {
  json j = behavior_body(b);
  j["format"] = "descomp-behavior";
  j["version"] = 1;
  return j.dump(2) + "\n";
}

Behavior behavior_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() ||
      j.value("format", "") != "descomp-behavior")
    raise(ErrorCode::Parse, "not a descomp-behavior document");
  return behavior_from(j, "behavior");
}

std::string cg_to_json(const ControllerGenerator& g) {
  json j;
  j["format"] = "descomp-cg";
  j["version"] = 1;
  j["kind"] = g.kind == ControllerGenerator::Kind::Memory ? "memory" : "tuple";
  j["actions"] = g.actions;
  j["behavior_count"] = g.behavior_count;
  j["initial"] = g.initial;
  auto states = json::array();
  for (int s = 0; s < g.state_count(); ++s) {
    json st;
    st["id"] = s;
    st["target"] = g.tuples[s].target_state;
    st["behaviors"] = g.tuples[s].behavior_states;
    st["supervisor_state"] = g.r_states[s];
    states.push_back(st);
  }
  j["states"] = states;
  auto trans = json::array();
  for (const auto& t : g.transitions) trans.push_back({t.from, t.action, t.index1, t.to});
  j["transitions"] = trans;
  return j.dump(2) + "\n";
}

ControllerGenerator cg_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", "") != "descomp-cg")
    raise(ErrorCode::Parse, "not a descomp-cg document");
  if (j.value("version", 0) != 1) raise(ErrorCode::Parse, "unsupported descomp-cg version");

  ControllerGenerator g;
  g.kind = j.value("kind", "memory") == "tuple" ? ControllerGenerator::Kind::Tuple
                                                : ControllerGenerator::Kind::Memory;
  g.actions = j.at("actions").get<std::vector<std::string>>();
  g.behavior_count = j.at("behavior_count").get<int>();
  g.initial = j.at("initial").get<int>();
  for (const auto& st : j.at("states")) {
    CompositionTuple tup;
    tup.target_state = st.at("target").get<std::string>();
    tup.behavior_states = st.at("behaviors").get<std::vector<std::string>>();
    g.tuples.push_back(std::move(tup));
    g.r_states.push_back(st.value("supervisor_state", -1));
  }
  for (const auto& t : j.at("transitions")) {
    if (!t.is_array() || t.size() != 4)
      raise(ErrorCode::Parse, "cg transitions must be [from, action, index, to]");
    ControllerGenerator::Transition tr{t.at(0).get<int>(), t.at(1).get<std::string>(),
                                       t.at(2).get<int>(), t.at(3).get<int>()};
    if (tr.from < 0 || tr.from >= g.state_count() || tr.to < 0 || tr.to >= g.state_count())
      raise(ErrorCode::Parse, "cg transition endpoint out of range");
    g.transitions.push_back(tr);
  }
  if (g.state_count() > 0 && (g.initial < 0 || g.initial >= g.state_count()))
    raise(ErrorCode::Parse, "cg initial state out of range");
  return g;
}

}  // namespace descomp

#include "fixtures.hpp"

#include <array>

#include "core/plant.hpp"

namespace descomp::fixtures {

namespace {

Generator raw_generator(int states, int initial,
                        const std::vector<int>& marked,
                        const std::vector<std::tuple<int, int, int>>& transitions) {
  Generator g;
  for (int i = 0; i < states; ++i) g.add_state(false);
  g.set_initial(initial);
  for (int m : marked) g.set_marked(m);
  for (const auto& [from, code, to] : transitions)
    g.add_transition(from, EventId::raw(code), to);
  return g;
}

}  // namespace

Generator machine_generator() {
  return raw_generator(4, 0, {0},
                       {{0, 1, 1},   // on
                        {1, 3, 1},   // operate
                        {1, 0, 2},   // break
                        {1, 7, 0},   // off
                        {2, 5, 1},   // repair
                        {2, 9, 3}});  // dismantle
}

SymbolTable machine_symbols() {
  SymbolTable t;
  t.add(0, EventId::raw(0), "break");
  t.add(1, EventId::raw(1), "on");
  t.add(3, EventId::raw(3), "operate");
  t.add(5, EventId::raw(5), "repair");
  t.add(7, EventId::raw(7), "off");
  t.add(9, EventId::raw(9), "dismantle");
  return t;
}

Generator k1_recognizer() {
  Generator g;
  auto k0 = g.add_state(true);
  auto k1 = g.add_state(false);
  g.set_initial(k0);
  g.add_transition(k0, EventId::raw(1), k1);  // on
  g.add_transition(k1, EventId::raw(3), k1);  // operate
  g.add_transition(k1, EventId::raw(7), k0);  // off
  return g;
}

Generator k2_recognizer() {
  return raw_generator(1, 0, {0}, {{0, 0, 0}, {0, 1, 0}, {0, 3, 0}, {0, 5, 0}, {0, 7, 0}});
}

std::string machine_ads_canonical() {
  return "G\n"
         "State size: 4\n"
         "Marker states: 0\n"
         "Vocal states:\n"
         "\n"
         "Transitions:\n"
         "0 1 1\n"
         "1 0 2\n"
         "1 3 1\n"
         "1 7 0\n"
         "2 5 1\n"
         "2 9 3\n";
}

Generator machine_without_dismantle_state() {
  return raw_generator(3, 0, {0},
                       {{0, 1, 1}, {1, 3, 1}, {1, 0, 2}, {1, 7, 0}, {2, 5, 1}});
}

Behavior mining_truck() {
  Behavior b;
  b.name = "truck";
  b.states = {"a0", "a1", "a2", "a3"};
  b.initial = "a0";
  b.transitions = {{"a0", "GoMine", "a1"},
                   {"a0", "GoMine", "a3"},
                   {"a1", "GoDepot", "a2"},
                   {"a2", "unload", "a0"},
                   {"a3", "repair", "a0"}};
  return b;
}

Behavior mining_loader() {
  Behavior b;
  b.name = "loader";
  b.states = {"b0", "b1", "b2", "b3"};
  b.initial = "b0";
  b.transitions = {{"b0", "load", "b0"},   {"b0", "GoDepot", "b1"},
                   {"b1", "unload", "b0"}, {"b1", "unload", "b2"},
                   {"b2", "repair", "b3"}, {"b3", "GoMine", "b0"}};
  return b;
}

Behavior mining_excavator() {
  Behavior b;
  b.name = "excavator";
  b.states = {"c0", "c1"};
  b.initial = "c0";
  b.transitions = {
      {"c0", "dig", "c0"}, {"c1", "dig", "c1"}, {"c0", "load", "c1"}, {"c1", "repair", "c0"}};
  return b;
}

System mining_system() {
  return System{{mining_truck(), mining_loader(), mining_excavator()}};
}

Target mining_target() {
  Target t;
  t.behavior.name = "mining";
  t.behavior.states = {"t0", "t1", "t2", "t3", "t4"};
  t.behavior.initial = "t0";
  t.behavior.transitions = {{"t0", "dig", "t0"},    {"t0", "GoMine", "t1"},
                            {"t1", "load", "t2"},   {"t2", "GoDepot", "t3"},
                            {"t3", "unload", "t4"}, {"t4", "repair", "t0"}};
  return t;
}

namespace {

const std::vector<std::array<std::string, 4>> kMiningCgTuples = {
    {"t0", "a0", "b0", "c0"}, {"t1", "a3", "b0", "c0"}, {"t1", "a1", "b0", "c0"},
    {"t2", "a3", "b0", "c0"}, {"t1", "a3", "b0", "c0"}, {"t2", "a1", "b0", "c1"},
    {"t3", "a2", "b0", "c1"}, {"t0", "a3", "b3", "c0"}, {"t4", "a3", "b0", "c0"},
    {"t4", "a0", "b0", "c1"}, {"t4", "a3", "b2", "c0"}, {"t3", "a3", "b1", "c0"},
    {"t4", "a3", "b2", "c1"}, {"t0", "a0", "b0", "c1"}, {"t0", "a3", "b3", "c1"},
    {"t3", "a3", "b1", "c1"}, {"t1", "a1", "b0", "c1"}, {"t1", "a3", "b0", "c1"},
    {"t2", "a3", "b0", "c1"}, {"t2", "a3", "b0", "c1"}, {"t2", "a1", "b0", "c1"},
    {"t4", "a3", "b0", "c1"}};

struct CgEdge {
  int from;
  const char* action;
  int index1;
  int to;
};

const std::vector<CgEdge> kMiningCgEdges = {
    {0, "dig", 3, 0},     {0, "GoMine", 1, 1},  {0, "GoMine", 1, 2},
    {1, "load", 2, 3},    {1, "load", 3, 18},   {2, "load", 3, 5},
    {3, "GoDepot", 2, 11}, {4, "load", 2, 3},   {4, "load", 3, 18},
    {5, "GoDepot", 1, 6}, {6, "unload", 1, 9},  {7, "GoMine", 2, 4},
    {7, "dig", 3, 7},     {8, "repair", 1, 0},  {9, "repair", 3, 0},
    {10, "repair", 2, 7}, {11, "unload", 2, 8}, {11, "unload", 2, 10},
    {12, "repair", 2, 14}, {13, "GoMine", 1, 16}, {13, "GoMine", 1, 17},
    {13, "dig", 3, 13},   {14, "GoMine", 2, 17}, {14, "dig", 3, 14},
    {15, "unload", 2, 21}, {15, "unload", 2, 12}, {16, "load", 2, 20},
    {17, "load", 2, 19},  {18, "GoDepot", 2, 15}, {19, "GoDepot", 2, 15},
    {20, "GoDepot", 1, 6}, {21, "repair", 1, 13}};

ControllerGenerator reference_cg(int keep_below) {
  ControllerGenerator g;
  g.kind = ControllerGenerator::Kind::Memory;
  g.actions = {"GoDepot", "GoMine", "dig", "load", "repair", "unload"};
  g.behavior_count = 3;
  g.initial = 0;
  for (int i = 0; i < keep_below; ++i) {
    g.tuples.push_back({kMiningCgTuples[i][0],
                        {kMiningCgTuples[i][1], kMiningCgTuples[i][2],
                         kMiningCgTuples[i][3]}});
    g.r_states.push_back(i);
  }
  for (const auto& e : kMiningCgEdges) {
    if (e.from >= keep_below || e.to >= keep_below) continue;
    g.transitions.push_back({e.from, e.action, e.index1, e.to});
  }
  return g;
}

}  // namespace

ControllerGenerator mining_cg_reference() { return reference_cg(22); }
ControllerGenerator mining_cg_reference_constrained() { return reference_cg(12); }

namespace {

// Self-loop every plant event at `state` except the listed ones.
void loop_all_except(Generator& rec, Generator::StateId state,
                     const Generator& plant, const std::vector<EventId>& except) {
  for (const EventId& e : plant.alphabet()) {
    bool skip = false;
    for (const auto& x : except)
      if (x == e) skip = true;
    if (!skip) rec.add_transition(state, e, state);
  }
}

}  // namespace

ConstraintSpec excavator_first_repair_constraint() {
  Generator plant = build_composition_plant(mining_system(), mining_target());
  ConstraintSpec c;
  c.description = "after the excavator loads, it is the first vehicle repaired";
  auto q0 = c.recognizer.add_state(true);
  auto q1 = c.recognizer.add_state(true);
  auto q2 = c.recognizer.add_state(true);
  c.recognizer.set_initial(q0);
  EventId loaded = EventId::evolve(3, "c1");
  EventId repair_req = EventId::request("repair");
  loop_all_except(c.recognizer, q0, plant, {loaded});
  c.recognizer.add_transition(q0, loaded, q1);
  loop_all_except(c.recognizer, q1, plant, {repair_req});
  c.recognizer.add_transition(q1, repair_req, q2);
  c.recognizer.add_transition(q2, EventId::delegate(3), q0);
  return c;
}

ConstraintSpec excavator_load_parity_constraint() {
  Generator plant = build_composition_plant(mining_system(), mining_target());
  ConstraintSpec c;
  c.description = "track the parity of excavator loads (restricts nothing)";
  auto q0 = c.recognizer.add_state(true);
  auto q1 = c.recognizer.add_state(true);
  c.recognizer.set_initial(q0);
  EventId loaded = EventId::evolve(3, "c1");
  loop_all_except(c.recognizer, q0, plant, {loaded});
  loop_all_except(c.recognizer, q1, plant, {loaded});
  c.recognizer.add_transition(q0, loaded, q1);
  c.recognizer.add_transition(q1, loaded, q0);
  return c;
}

ConstraintSpec strict_load_alternation_constraint() {
  Generator plant = build_composition_plant(mining_system(), mining_target());
  ConstraintSpec c;
  c.description = "delegate load strictly alternately to the loader and the excavator";
  auto a = c.recognizer.add_state(true);   // next load -> loader
  auto ap = c.recognizer.add_state(true);  // load pending in a
  auto b = c.recognizer.add_state(true);   // next load -> excavator
  auto bp = c.recognizer.add_state(true);  // load pending in b
  c.recognizer.set_initial(a);
  EventId load_req = EventId::request("load");
  loop_all_except(c.recognizer, a, plant, {load_req});
  c.recognizer.add_transition(a, load_req, ap);
  c.recognizer.add_transition(ap, EventId::delegate(2), b);
  loop_all_except(c.recognizer, b, plant, {load_req});
  c.recognizer.add_transition(b, load_req, bp);
  c.recognizer.add_transition(bp, EventId::delegate(3), a);
  return c;
}

System mining_deterministic_system() {
  Behavior truck;
  truck.name = "truck";
  truck.states = {"a0", "a1", "a2"};
  truck.initial = "a0";
  truck.transitions = {{"a0", "repair", "a0"},
                       {"a0", "GoMine", "a1"},
                       {"a1", "GoDepot", "a2"},
                       {"a2", "unload", "a0"}};
  Behavior loader;
  loader.name = "loader";
  loader.states = {"b0", "b1", "b2"};
  loader.initial = "b0";
  loader.transitions = {{"b0", "load", "b0"},
                        {"b0", "GoDepot", "b1"},
                        {"b1", "unload", "b0"},
                        {"b1", "repair", "b2"},
                        {"b2", "GoMine", "b0"}};
  Behavior excavator;
  excavator.name = "excavator";
  excavator.states = {"c0", "c1"};
  excavator.initial = "c0";
  excavator.transitions = {
      {"c0", "dig", "c0"}, {"c0", "load", "c1"}, {"c1", "repair", "c0"}};
  return System{{truck, loader, excavator}};
}

Target mining_deterministic_target() { return mining_target(); }

Target mining_srtf_reference() {
  Target t;
  t.allow_nondeterministic = true;
  t.behavior.name = "mining_srtf";
  t.behavior.states = {"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"};
  t.behavior.initial = "t0";
  t.behavior.transitions = {
      {"t0", "dig", "t0"},    {"t0", "GoMine", "t1"}, {"t1", "load", "t2"},
      {"t1", "load", "t5"},   {"t2", "GoDepot", "t3"}, {"t3", "unload", "t4"},
      {"t4", "repair", "t0"}, {"t5", "GoDepot", "t6"}, {"t6", "unload", "t7"},
      {"t7", "repair", "t8"}, {"t7", "repair", "t0"},  {"t8", "GoMine", "t1"}};
  return t;
}

System single_copy_system(const Behavior& b) { return System{{b}}; }

Problem random_problem(std::mt19937& rng, const RandomProblemOptions& opt) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };

  std::vector<std::string> actions;
  for (int i = 0; i < opt.num_actions; ++i) actions.push_back("x" + std::to_string(i));

  Problem p;
  p.name = "random";

  int nt = pick(1, opt.max_target_states);
  p.target.behavior.name = "target";
  for (int i = 0; i < nt; ++i) p.target.behavior.states.push_back("t" + std::to_string(i));
  p.target.behavior.initial = "t0";
  for (int i = 0; i < nt; ++i) {
    for (const auto& a : actions) {
      if (!chance(0.45)) continue;
      p.target.behavior.transitions.push_back(
          {"t" + std::to_string(i), a, "t" + std::to_string(pick(0, nt - 1))});
    }
  }

  int nb = pick(1, opt.max_behaviors);
  for (int j = 0; j < nb; ++j) {
    Behavior b;
    b.name = "b" + std::to_string(j);
    int ns = pick(1, opt.max_behavior_states);
    for (int i = 0; i < ns; ++i)
      b.states.push_back("b" + std::to_string(j) + "s" + std::to_string(i));
    b.initial = b.states[0];
    for (int i = 0; i < ns; ++i) {
      for (const auto& a : actions) {
        if (!chance(0.4)) continue;
        b.transitions.push_back({b.states[i], a, b.states[pick(0, ns - 1)]});
        if (!opt.deterministic_system && chance(0.25)) {
          int other = pick(0, ns - 1);
          TargetTransition extra{b.states[i], a, b.states[other]};
          bool dup = false;
          for (const auto& t : b.transitions)
            if (t == extra) dup = true;
          if (!dup) b.transitions.push_back(extra);
        }
      }
    }
    p.system.behaviors.push_back(std::move(b));
  }
  return p;
}

Generator random_generator(std::mt19937& rng, const RandomGeneratorOptions& opt) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };

  Generator g;
  int n = pick(2, opt.max_states);
  for (int i = 0; i < n; ++i) g.add_state(chance(opt.marked_prob));
  g.set_initial(0);
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < opt.num_events; ++e) {
      if (!chance(opt.edge_density)) continue;
      g.add_transition(i, EventId::raw(e), pick(0, n - 1));
    }
  }
  if (g.marked_count() == 0) g.set_marked(0);
  for (int e = 0; e < opt.num_events; ++e) g.include_event(EventId::raw(e));
  return g;
}

Generator random_spec(std::mt19937& rng, const Generator& plant,
                      const RandomGeneratorOptions& opt) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };

  Generator g;
  int n = pick(1, opt.max_states);
  bool all_marked = chance(0.5);
  for (int i = 0; i < n; ++i) g.add_state(all_marked || chance(0.6));
  g.set_initial(0);
  for (int i = 0; i < n; ++i) {
    for (const EventId& e : plant.alphabet()) {
      if (!chance(opt.edge_density + 0.2)) continue;
      g.add_transition(i, e, pick(0, n - 1));
    }
  }
  if (g.marked_count() == 0) g.set_marked(0);
  return g;
}

}  // namespace descomp::fixtures

#include "core/ndsim.hpp"

#include <algorithm>
#include <deque>

#include "core/errors.hpp"

namespace descomp {

namespace {

std::set<std::string> actions_of(const Target& t) {
  std::set<std::string> actions;
  for (const auto& tr : t.behavior.transitions) actions.insert(tr.action);
  return actions;
}

}  // namespace

SimRelation greatest_nd_simulation(const Target& t, const EnactedSystem& e) {
  SimRelation rel;
  rel.kind = SimRelation::Kind::Nd;

  const int nt = static_cast<int>(t.behavior.states.size());
  const int ne = static_cast<int>(e.states.size());
  const auto actions = actions_of(t);

  std::vector<std::vector<bool>> in(nt, std::vector<bool>(ne, true));

  // target successor sets per (state, action)
  auto t_succ = [&](int ti, const std::string& a) {
    std::vector<int> out;
    for (const auto& tr : t.behavior.transitions)
      if (tr.from == t.behavior.states[ti] && tr.action == a)
        out.push_back(t.behavior.state_index(tr.to));
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int ti = 0; ti < nt; ++ti) {
      for (int bi = 0; bi < ne; ++bi) {
        if (!in[ti][bi]) continue;
        for (const auto& a : actions) {
          auto succ_t = t_succ(ti, a);
          if (succ_t.empty()) continue;
          bool some_index_works = false;
          for (int j = 1; j <= e.system.size() && !some_index_works; ++j) {
            auto succ_b = e.successors(bi, a, j);
            if (succ_b.empty()) continue;  // clause (i)
            bool all_covered = true;
            for (int t2 : succ_t) {
              for (int b2 : succ_b) {
                if (!in[t2][b2]) {
                  all_covered = false;
                  break;
                }
              }
              if (!all_covered) break;
            }
            some_index_works = all_covered;  // clause (ii)
          }
          if (!some_index_works) {
            in[ti][bi] = false;
            rel.removal_witness[{ti, bi}] = a;
            changed = true;
            break;
          }
        }
      }
    }
  }

  for (int ti = 0; ti < nt; ++ti)
    for (int bi = 0; bi < ne; ++bi)
      if (in[ti][bi]) rel.pairs.insert({ti, bi});
  return rel;
}

std::vector<std::pair<int, int>> greatest_simulation(const Behavior& b1,
                                                     const Behavior& b2) {
  const int n1 = static_cast<int>(b1.states.size());
  const int n2 = static_cast<int>(b2.states.size());
  std::vector<std::vector<bool>> in(n1, std::vector<bool>(n2, true));

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n1; ++x) {
      for (int y = 0; y < n2; ++y) {
        if (!in[x][y]) continue;
        bool ok = true;
        for (const auto& tr : b1.transitions) {
          if (tr.from != b1.states[x]) continue;
          int x2 = b1.state_index(tr.to);
          bool matched = false;
          for (const auto& tr2 : b2.transitions) {
            if (tr2.from != b2.states[y] || tr2.action != tr.action) continue;
            if (in[x2][b2.state_index(tr2.to)]) {
              matched = true;
              break;
            }
          }
          if (!matched) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          in[x][y] = false;
          changed = true;
        }
      }
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      if (in[x][y]) pairs.push_back({x, y});
  return pairs;
}

std::string CrosscheckReport::to_text() const {
  if (ok) return "crosscheck ok: controller generator matches the nd-simulation\n";
  std::string out = "crosscheck mismatch\n";
  for (const auto& t : only_in_cg) out += "  only in controller generator: " + t.label() + "\n";
  for (const auto& t : only_in_sim) out += "  only in nd-simulation closure: " + t.label() + "\n";
  return out;
}

CrosscheckReport crosscheck_cg(const ControllerGenerator& g, const SimRelation& r,
                               const Target& t, const EnactedSystem& e) {
  CrosscheckReport report;

  // pairs reachable from the initial pair under nd-sim-respecting delegation
  std::set<std::pair<int, int>> reachable;
  int t0 = t.behavior.state_index(t.behavior.initial);
  if (r.contains(t0, e.initial)) {
    std::deque<std::pair<int, int>> queue{{t0, e.initial}};
    reachable.insert({t0, e.initial});
    while (!queue.empty()) {
      auto [ti, bi] = queue.front();
      queue.pop_front();
      for (const auto& tr : t.behavior.transitions) {
        if (tr.from != t.behavior.states[ti]) continue;
        int t2 = t.behavior.state_index(tr.to);
        for (int j = 1; j <= e.system.size(); ++j) {
          auto succ = e.successors(bi, tr.action, j);
          if (succ.empty()) continue;
          bool safe = std::all_of(succ.begin(), succ.end(),
                                  [&](int b2) { return r.contains(t2, b2); });
          if (!safe) continue;
          for (int b2 : succ)
            if (reachable.insert({t2, b2}).second) queue.push_back({t2, b2});
        }
      }
    }
  }

  std::set<CompositionTuple> sim_tuples;
  for (const auto& [ti, bi] : reachable)
    sim_tuples.insert({t.behavior.states[ti], e.states[bi]});

  std::set<CompositionTuple> cg_tuples(g.tuples.begin(), g.tuples.end());

  for (const auto& tup : cg_tuples)
    if (!sim_tuples.count(tup)) report.only_in_cg.push_back(tup);
  for (const auto& tup : sim_tuples)
    if (!cg_tuples.count(tup)) report.only_in_sim.push_back(tup);
  report.ok = report.only_in_cg.empty() && report.only_in_sim.empty();
  return report;
}

}  // namespace descomp

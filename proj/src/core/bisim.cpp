#include "core/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace descomp {

std::vector<int> bisimulation_classes(const Lts& lts) {
  std::vector<int> cls(lts.num_states, 0);
  if (lts.num_states == 0) return cls;

  bool changed = true;
  while (changed) {
    // signature: current class plus the set of (label, successor class)
    std::vector<std::set<std::pair<int, int>>> sig(lts.num_states);
    for (const auto& [from, label, to] : lts.edges)
      sig[from].insert({label, cls[to]});

    std::map<std::pair<int, std::set<std::pair<int, int>>>, int> renumber;
    std::vector<int> next(lts.num_states);
    for (int s = 0; s < lts.num_states; ++s) {
      auto key = std::make_pair(cls[s], sig[s]);
      auto it = renumber.find(key);
      if (it == renumber.end())
        it = renumber.emplace(key, static_cast<int>(renumber.size())).first;
      next[s] = it->second;
    }
    changed = next != cls;
    cls = std::move(next);
  }
  return cls;
}

bool lts_bisimilar(const Lts& a, int init_a, const Lts& b, int init_b) {
  Lts both;
  both.num_states = a.num_states + b.num_states;
  both.edges = a.edges;
  for (const auto& [from, label, to] : b.edges)
    both.edges.emplace_back(from + a.num_states, label, to + a.num_states);
  auto cls = bisimulation_classes(both);
  return cls[init_a] == cls[init_b + a.num_states];
}

std::vector<std::pair<int, int>> greatest_simulation_pairs(const Lts& left,
                                                           const Lts& right) {
  std::vector<std::vector<std::pair<int, int>>> lout(left.num_states);
  std::vector<std::vector<std::pair<int, int>>> rout(right.num_states);
  for (const auto& [from, label, to] : left.edges) lout[from].push_back({label, to});
  for (const auto& [from, label, to] : right.edges) rout[from].push_back({label, to});

  std::vector<std::vector<bool>> rel(left.num_states,
                                     std::vector<bool>(right.num_states, true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < left.num_states; ++x) {
      for (int y = 0; y < right.num_states; ++y) {
        if (!rel[x][y]) continue;
        bool ok = true;
        for (const auto& [label, x2] : lout[x]) {
          bool matched = false;
          for (const auto& [rl, y2] : rout[y]) {
            if (rl == label && rel[x2][y2]) {
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
          rel[x][y] = false;
          changed = true;
        }
      }
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < left.num_states; ++x)
    for (int y = 0; y < right.num_states; ++y)
      if (rel[x][y]) pairs.push_back({x, y});
  return pairs;
}

}  // namespace descomp

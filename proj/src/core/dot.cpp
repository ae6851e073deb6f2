#include "core/dot.hpp"

namespace descomp {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string header(const std::string& name) {
  return "// descomp dot v1\ndigraph " + name + " {\n  rankdir=LR;\n" +
         "  __init [shape=point, label=\"\"];\n";
}

}  // namespace

std::string export_dot(const Generator& g, const SymbolTable* table) {
  std::string out = header("generator");
  for (Generator::StateId s = 0; s < g.state_count(); ++s) {
    std::string label = g.label(s).empty() ? std::to_string(s) : g.label(s);
    out += "  " + std::to_string(s) + " [label=" + quote(label) +
           (g.marked(s) ? ", shape=doublecircle" : ", shape=circle") + "];\n";
  }
  if (g.initial() != Generator::kNoState)
    out += "  __init -> " + std::to_string(g.initial()) + ";\n";
  for (Generator::StateId s = 0; s < g.state_count(); ++s) {
    for (const auto& [e, t] : g.transitions_from(s)) {
      std::string name = to_string(e);
      if (table) {
        auto it = table->codes.find(e);
        if (it != table->codes.end() && table->names.count(it->second))
          name = table->names.at(it->second);
      }
      out += "  " + std::to_string(s) + " -> " + std::to_string(t) +
             " [label=" + quote(name) + (e.controllable() ? "" : ", style=dashed") + "];\n";
    }
  }
  return out + "}\n";
}

std::string export_dot(const ControllerGenerator& g) {
  std::string out = header("cg");
  for (int s = 0; s < g.state_count(); ++s) {
    out += "  " + std::to_string(s) +
           " [shape=circle, label=" + quote(std::to_string(s)) +
           ", tooltip=" + quote(g.tuples[s].label()) + "];\n";
  }
  if (g.state_count() > 0) out += "  __init -> " + std::to_string(g.initial) + ";\n";
  for (const auto& t : g.transitions) {
    out += "  " + std::to_string(t.from) + " -> " + std::to_string(t.to) +
           " [label=" + quote(t.action + "," + std::to_string(t.index1)) + "];\n";
  }
  return out + "}\n";
}

std::string export_dot(const Behavior& b) {
  std::string out = header("behavior");
  for (std::size_t i = 0; i < b.states.size(); ++i)
    out += "  " + std::to_string(i) + " [shape=circle, label=" + quote(b.states[i]) + "];\n";
  if (!b.states.empty())
    out += "  __init -> " + std::to_string(b.state_index(b.initial)) + ";\n";
  for (const auto& t : b.transitions) {
    out += "  " + std::to_string(b.state_index(t.from)) + " -> " +
           std::to_string(b.state_index(t.to)) + " [label=" + quote(t.action) + "];\n";
  }
  return out + "}\n";
}

std::string export_dot(const TargetFragment& f) { return export_dot(f.target.behavior); }

}  // namespace descomp

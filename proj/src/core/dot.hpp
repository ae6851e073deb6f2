#ifndef DESCOMP_CORE_DOT_HPP
#define DESCOMP_CORE_DOT_HPP

#include <string>

#include "core/ads.hpp"
#include "core/cg.hpp"
#include "core/generator.hpp"
#include "core/srtf.hpp"

namespace descomp {

// Graphviz exports. Marked states are double circled; uncontrollable edges
// are dashed, controllable ones solid. The optional symbol table supplies
// edge names for raw events.
std::string export_dot(const Generator& g, const SymbolTable* table = nullptr);

// Controller generator with "action,index" edge labels.
std::string export_dot(const ControllerGenerator& g);

// Behaviors and target fragments: states plus action-labeled edges.
std::string export_dot(const Behavior& b);
std::string export_dot(const TargetFragment& f);

}  // namespace descomp

#endif

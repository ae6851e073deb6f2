#ifndef DESCOMP_CORE_ADS_HPP
#define DESCOMP_CORE_ADS_HPP

#include <map>
#include <string>

#include "core/generator.hpp"
#include "core/supcon.hpp"

namespace descomp {

// Event <-> integer table attached to an ADS document. The integers are
// meaningless without it, so pipelines save it alongside the .ads file.
// Parity encodes controllability: odd integers are controllable, even ones
// uncontrollable.
struct SymbolTable {
  std::map<int, std::string> names;   // code -> display name
  std::map<EventId, int> codes;       // event -> code
  std::map<int, EventId> events;      // code -> event

  void add(int code, const EventId& e, const std::string& name);
  bool has(const EventId& e) const { return codes.count(e) != 0; }
};

struct AdsDocument {
  std::string title;
  Generator generator;
  SymbolTable table;
};

// Parses a TCT ADS text document. States are 0..Size-1 with initial state 0;
// vocal states are parsed and ignored. Events become raw events with
// parity-derived controllability and an identity symbol table.
AdsDocument read_ads(const std::string& text);

// Writes the generator in ADS form with canonical ordering: states are
// renumbered breadth-first from the initial state (appending unreachable
// states last) and transition lines are sorted by source state, then event
// code. Every event used must be in the table with the correct parity;
// violations raise ErrorCode::Encoding.
std::string write_ads(const Generator& g, const SymbolTable& table,
                      const std::string& title);

// Canonical table for a pipeline generator: controllable events get odd
// codes, uncontrollable ones even codes, both in event order.
SymbolTable make_symbol_table(const Generator& g);

// Symbol table (de)serialization, JSON with a format/version header.
std::string symbol_table_to_json(const SymbolTable& table);
SymbolTable symbol_table_from_json(const std::string& text);

// condat listing with events as their table integers.
std::string condat_text(const ControlPattern& p, const SymbolTable& table);

}  // namespace descomp

#endif

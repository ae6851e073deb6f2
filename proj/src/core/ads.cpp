#include "core/ads.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/json_util.hpp"

namespace descomp {

void SymbolTable::add(int code, const EventId& e, const std::string& name) {
  if (events.count(code) && !(events.at(code) == e))
    raise(ErrorCode::Encoding, "symbol table maps code " + std::to_string(code) +
                                   " to two different events");
  names[code] = name;
  codes[e] = code;
  events[code] = e;
}

namespace {

int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    raise(ErrorCode::Parse,
          "ADS line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_header(const std::string& line, const char* name) {
  return line.rfind(name, 0) == 0;
}

std::string after_colon(const std::string& line, int line_no) {
  auto pos = line.find(':');
  if (pos == std::string::npos)
    raise(ErrorCode::Parse, "ADS line " + std::to_string(line_no) + ": missing ':'");
  return line.substr(pos + 1);
}

}  // namespace

AdsDocument read_ads(const std::string& text) {
  AdsDocument doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  enum class Section { Title, Size, Markers, Vocal, Transitions } section = Section::Title;
  bool transitions_header_seen = false;
  int size = -1;
  std::vector<int> markers;
  std::vector<std::tuple<int, int, int>> trans;

  while (std::getline(in, line)) {
    ++line_no;
    // strip trailing CR from CRLF files
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    while (!stripped.empty() && (stripped.back() == ' ' || stripped.back() == '\t'))
      stripped.pop_back();
    if (stripped.empty()) continue;

    if (section == Section::Title) {
      doc.title = stripped;
      section = Section::Size;
      continue;
    }
    if (is_header(stripped, "State size")) {
      if (section != Section::Size)
        raise(ErrorCode::Parse, "ADS line " + std::to_string(line_no) + ": unexpected 'State size'");
      auto toks = split_ws(after_colon(stripped, line_no));
      if (toks.size() != 1)
        raise(ErrorCode::Parse, "ADS line " + std::to_string(line_no) + ": malformed state size");
      size = parse_int(toks[0], line_no);
      section = Section::Markers;
      continue;
    }
    if (is_header(stripped, "Marker states")) {
      if (section != Section::Markers)
        raise(ErrorCode::Parse,
              "ADS line " + std::to_string(line_no) + ": unexpected 'Marker states'");
      for (const auto& tok : split_ws(after_colon(stripped, line_no)))
        markers.push_back(parse_int(tok, line_no));
      section = Section::Vocal;
      continue;
    }
    if (is_header(stripped, "Vocal states")) {
      if (section != Section::Vocal)
        raise(ErrorCode::Parse,
              "ADS line " + std::to_string(line_no) + ": unexpected 'Vocal states'");
      section = Section::Transitions;  // vocal entries, if any, are ignored below
      continue;
    }
    if (is_header(stripped, "Transitions")) {
      if (section != Section::Transitions)
        raise(ErrorCode::Parse,
              "ADS line " + std::to_string(line_no) + ": 'Transitions' before headers");
      transitions_header_seen = true;
      continue;
    }

    auto toks = split_ws(stripped);
    switch (section) {
      case Section::Markers:
        raise(ErrorCode::Parse,
              "ADS line " + std::to_string(line_no) + ": missing 'Marker states' header");
      case Section::Vocal:
        // extra marker states listed on their own lines
        for (const auto& tok : toks) markers.push_back(parse_int(tok, line_no));
        break;
      case Section::Transitions: {
        if (!transitions_header_seen) break;  // vocal state entries, ignored
        if (toks.size() != 3)
          raise(ErrorCode::Parse,
                "ADS line " + std::to_string(line_no) + ": expected 'from event to'");
        trans.emplace_back(parse_int(toks[0], line_no), parse_int(toks[1], line_no),
                           parse_int(toks[2], line_no));
        break;
      }
      default:
        raise(ErrorCode::Parse,
              "ADS line " + std::to_string(line_no) + ": missing section headers");
    }
  }

  if (size < 0) raise(ErrorCode::Parse, "ADS document has no 'State size' header");
  if (size == 0) raise(ErrorCode::Parse, "ADS document declares zero states");
  if (!transitions_header_seen)
    raise(ErrorCode::Parse, "ADS document has no 'Transitions' header");

  for (int s = 0; s < size; ++s) doc.generator.add_state(false);
  doc.generator.set_initial(0);
  for (int m : markers) {
    if (m < 0 || m >= size)
      raise(ErrorCode::Parse, "ADS marker state " + std::to_string(m) + " out of range");
    doc.generator.set_marked(m);
  }
  for (const auto& [from, code, to] : trans) {
    if (from < 0 || from >= size || to < 0 || to >= size)
      raise(ErrorCode::Parse, "ADS transition endpoint out of range");
    EventId e = EventId::raw(code);
    doc.table.add(code, e, "e" + std::to_string(code));
    doc.generator.add_transition(from, e, to);
  }
  return doc;
}

namespace {

std::vector<Generator::StateId> canonical_order(const Generator& g,
                                                const SymbolTable& table) {
  std::vector<Generator::StateId> order;
  std::vector<bool> seen(g.state_count(), false);
  std::deque<Generator::StateId> queue{g.initial()};
  seen[g.initial()] = true;
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    order.push_back(s);
    // visit successors in integer-code order for reproducible numbering
    std::vector<std::pair<int, Generator::StateId>> next;
    for (const auto& [e, t] : g.transitions_from(s)) {
      auto it = table.codes.find(e);
      next.push_back({it == table.codes.end() ? 0 : it->second, t});
    }
    std::sort(next.begin(), next.end());
    for (const auto& [code, t] : next) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  for (Generator::StateId s = 0; s < g.state_count(); ++s)
    if (!seen[s]) order.push_back(s);
  return order;
}

}  // namespace

std::string write_ads(const Generator& g, const SymbolTable& table,
                      const std::string& title) {
  if (g.initial() == Generator::kNoState)
    raise(ErrorCode::Encoding, "cannot write a generator without an initial state");
  for (Generator::StateId s = 0; s < g.state_count(); ++s) {
    for (const auto& [e, t] : g.transitions_from(s)) {
      auto it = table.codes.find(e);
      if (it == table.codes.end())
        raise(ErrorCode::Encoding, "event " + to_string(e) + " is missing from the symbol table");
      bool odd = it->second % 2 != 0;
      if (odd != e.controllable())
        raise(ErrorCode::Encoding,
              "parity violation: event " + to_string(e) + " is " +
                  (e.controllable() ? "controllable" : "uncontrollable") +
                  " but maps to " + std::to_string(it->second));
    }
  }

  auto order = canonical_order(g, table);
  std::vector<int> number(g.state_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<int>(i);

  std::vector<int> markers;
  for (Generator::StateId s = 0; s < g.state_count(); ++s)
    if (g.marked(s)) markers.push_back(number[s]);
  std::sort(markers.begin(), markers.end());

  std::vector<std::tuple<int, int, int>> lines;
  for (Generator::StateId s = 0; s < g.state_count(); ++s)
    for (const auto& [e, t] : g.transitions_from(s))
      lines.emplace_back(number[s], table.codes.at(e), number[t]);
  std::sort(lines.begin(), lines.end());

  std::string out = title + "\n";
  out += "State size: " + std::to_string(g.state_count()) + "\n";
  out += "Marker states:";
  for (int m : markers) out += " " + std::to_string(m);
  out += "\n";
  out += "Vocal states:\n";
  out += "\n";
  out += "Transitions:\n";
  for (const auto& [from, code, to] : lines)
    out += std::to_string(from) + " " + std::to_string(code) + " " + std::to_string(to) + "\n";
  return out;
}

SymbolTable make_symbol_table(const Generator& g) {
  SymbolTable table;
  int next_odd = 1, next_even = 0;
  std::map<int, int> evolve_count;  // disambiguate reused local state names
  for (const EventId& e : g.alphabet()) {
    int code;
    if (e.controllable()) {
      code = next_odd;
      next_odd += 2;
    } else {
      code = next_even;
      next_even += 2;
    }
    std::string name = to_string(e);
    if (e.kind() == EventKind::Delegate) name = "delegate-" + name;
    if (e.kind() == EventKind::Evolve)
      name = std::to_string(e.index()) + ":" + e.name();
    table.add(code, e, name);
  }
  return table;
}

using io_detail::event_from_json;
using io_detail::event_to_json;

std::string symbol_table_to_json(const SymbolTable& table) {
  nlohmann::json j;
  j["format"] = "descomp-symbols";
  j["version"] = 1;
  auto items = nlohmann::json::array();
  for (const auto& [code, e] : table.events) {
    nlohmann::json item;
    item["code"] = code;
    item["name"] = table.names.at(code);
    item["controllable"] = e.controllable();
    item["event"] = event_to_json(e);
    items.push_back(item);
  }
  j["events"] = items;
  return j.dump(2) + "\n";
}

SymbolTable symbol_table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", "") != "descomp-symbols")
    raise(ErrorCode::Parse, "not a descomp-symbols document");
  SymbolTable table;
  for (const auto& item : j.at("events")) {
    table.add(item.at("code").get<int>(), event_from_json(item.at("event")),
              item.value("name", ""));
  }
  return table;
}

std::string condat_text(const ControlPattern& p, const SymbolTable& table) {
  std::string out;
  for (const auto& [state, events] : p.disabled) {
    std::vector<int> codes;
    for (const auto& e : events) {
      auto it = table.codes.find(e);
      if (it == table.codes.end())
        raise(ErrorCode::Encoding,
              "event " + to_string(e) + " is missing from the symbol table");
      codes.push_back(it->second);
    }
    std::sort(codes.begin(), codes.end());
    out += std::to_string(state) + ":";
    for (std::size_t i = 0; i < codes.size(); ++i)
      out += (i ? "," : "") + std::to_string(codes[i]);
    out += "\n";
  }
  return out;
}

namespace io_detail {

nlohmann::json event_to_json(const EventId& e) {
  nlohmann::json j;
  switch (e.kind()) {
    case EventKind::Request:
      j["request"] = e.name();
      break;
    case EventKind::Delegate:
      j["delegate"] = e.index();
      break;
    case EventKind::Evolve:
      j["evolve"] = nlohmann::json::array({e.index(), e.name()});
      break;
    case EventKind::TransReq: {
      auto t = e.transition();
      j["transreq"] = nlohmann::json::array({t.from, t.action, t.to});
      break;
    }
    case EventKind::Raw:
      j["raw"] = e.index();
      break;
  }
  return j;
}

EventId event_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    raise(ErrorCode::Parse, "malformed event object: " + j.dump());
  if (j.contains("request")) return EventId::request(j.at("request").get<std::string>());
  if (j.contains("delegate")) return EventId::delegate(j.at("delegate").get<int>());
  if (j.contains("evolve")) {
    const auto& a = j.at("evolve");
    return EventId::evolve(a.at(0).get<int>(), a.at(1).get<std::string>());
  }
  if (j.contains("transreq")) {
    const auto& a = j.at("transreq");
    return EventId::trans_req(
        {a.at(0).get<std::string>(), a.at(1).get<std::string>(), a.at(2).get<std::string>()});
  }
  if (j.contains("raw")) return EventId::raw(j.at("raw").get<int>());
  raise(ErrorCode::Parse, "unknown event object: " + j.dump());
}

}  // namespace io_detail

}  // namespace descomp

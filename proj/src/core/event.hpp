#ifndef DESCOMP_CORE_EVENT_HPP
#define DESCOMP_CORE_EVENT_HPP

#include <compare>
#include <string>

namespace descomp {

// A transition of the target module, used as a request in srtf mode.
struct TargetTransition {
  std::string from;
  std::string action;
  std::string to;

  auto operator<=>(const TargetTransition&) const = default;
};

enum class EventKind {
  Request,   // target action request (uncontrollable)
  Delegate,  // delegation to behavior j (controllable)
  Evolve,    // observed evolution of behavior j to a state (uncontrollable)
  TransReq,  // target-transition request, srtf mode (controllable)
  Raw,       // plain integer event, TCT style (odd = controllable)
};

// Tagged plant event. Identity is (kind, payload); controllability is
// derived at construction and not part of the identity.
class EventId {
 public:
  static EventId request(std::string action);
  static EventId delegate(int index);
  static EventId evolve(int index, std::string state);
  static EventId trans_req(TargetTransition t);
  static EventId raw(int code);                     // controllable iff odd
  static EventId raw(int code, bool controllable);  // non-TCT escape hatch

  EventKind kind() const { return kind_; }
  bool controllable() const { return controllable_; }

  // Request/Evolve: action or state name. TransReq: the action.
  const std::string& name() const { return name_; }
  // Delegate/Evolve: behavior index (1-based). Raw: integer code.
  int index() const { return index_; }
  TargetTransition transition() const { return {from_, name_, to_}; }

  bool operator==(const EventId& o) const {
    return kind_ == o.kind_ && index_ == o.index_ && name_ == o.name_ &&
           from_ == o.from_ && to_ == o.to_;
  }
  bool operator<(const EventId& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (index_ != o.index_) return index_ < o.index_;
    if (name_ != o.name_) return name_ < o.name_;
    if (from_ != o.from_) return from_ < o.from_;
    return to_ < o.to_;
  }

 private:
  EventKind kind_ = EventKind::Raw;
  bool controllable_ = false;
  int index_ = 0;
  std::string name_;
  std::string from_, to_;  // TransReq endpoints
};

// Compact display form: requests/evolves by name, delegates by index,
// transition requests as <t,a,t'>, raw events as their integer.
std::string to_string(const EventId& e);

}  // namespace descomp

#endif

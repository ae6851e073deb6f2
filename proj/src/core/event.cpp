#include "core/event.hpp"

#include "core/errors.hpp"

namespace descomp {

EventId EventId::request(std::string action) {
  EventId e;
  e.kind_ = EventKind::Request;
  e.controllable_ = false;
  e.name_ = std::move(action);
  return e;
}

EventId EventId::delegate(int index) {
  if (index < 1) raise(ErrorCode::InvalidArgument, "delegation index must be >= 1");
  EventId e;
  e.kind_ = EventKind::Delegate;
  e.controllable_ = true;
  e.index_ = index;
  return e;
}

EventId EventId::evolve(int index, std::string state) {
  if (index < 1) raise(ErrorCode::InvalidArgument, "behavior index must be >= 1");
  EventId e;
  e.kind_ = EventKind::Evolve;
  e.controllable_ = false;
  e.index_ = index;
  e.name_ = std::move(state);
  return e;
}

EventId EventId::trans_req(TargetTransition t) {
  EventId e;
  e.kind_ = EventKind::TransReq;
  e.controllable_ = true;
  e.index_ = 0;
  e.from_ = std::move(t.from);
  e.name_ = std::move(t.action);
  e.to_ = std::move(t.to);
  return e;
}

EventId EventId::raw(int code) { return raw(code, code % 2 != 0); }

EventId EventId::raw(int code, bool controllable) {
  EventId e;
  e.kind_ = EventKind::Raw;
  e.controllable_ = controllable;
  e.index_ = code;
  return e;
}

std::string to_string(const EventId& e) {
  switch (e.kind()) {
    case EventKind::Request:
      return e.name();
    case EventKind::Delegate:
      return std::to_string(e.index());
    case EventKind::Evolve:
      return e.name();
    case EventKind::TransReq:
      return "<" + e.transition().from + "," + e.name() + "," + e.transition().to + ">";
    case EventKind::Raw:
      return std::to_string(e.index());
  }
  return "?";
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Determinism: return "determinism";
    case ErrorCode::AlphabetMismatch: return "alphabet-mismatch";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Hypothesis: return "hypothesis";
    case ErrorCode::Mode: return "mode";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::IllegalDelegation: return "illegal-delegation";
    case ErrorCode::ModelViolation: return "model-violation";
    case ErrorCode::Encoding: return "encoding";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace descomp

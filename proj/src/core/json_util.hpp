#ifndef DESCOMP_CORE_JSON_UTIL_HPP
#define DESCOMP_CORE_JSON_UTIL_HPP

#include <json.hpp>

#include "core/event.hpp"

namespace descomp::io_detail {

// Structural event encoding shared by the problem, symbol-table and
// controller-generator documents: {"request": a} | {"delegate": j} |
// {"evolve": [j, state]} | {"transreq": [t, a, t']} | {"raw": code}.
nlohmann::json event_to_json(const EventId& e);
EventId event_from_json(const nlohmann::json& j);

}  // namespace descomp::io_detail

#endif

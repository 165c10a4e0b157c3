#ifndef CONFAULT_REPORTS_HPP
#define CONFAULT_REPORTS_HPP

#include <vector>

#include "confault/detect.hpp"
#include "confault/digraph.hpp"
#include "confault/distinguish.hpp"
#include "confault/exactalg.hpp"
#include "json.hpp"

namespace confault {

// Machine-readable documents for the CLI. Arbitrary-precision integers are
// serialized as decimal strings and unreachable distances as null, so
// consumers never face overflow or sentinel values.

nlohmann::json json_of_graph(const Digraph& g);
nlohmann::json json_of_poly(const IntPoly& p);
nlohmann::json json_of_verdict(const DistinguishVerdict& v);
nlohmann::json json_of_detect_report(const DetectReport& rep);
nlohmann::json json_of_plan(const ObservationPlan& plan, ObserveMode mode);
nlohmann::json json_of_lemma1(const Lemma1Report& rep);
nlohmann::json json_of_info(const Digraph& g);

}  // namespace confault

#endif

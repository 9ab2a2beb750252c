#ifndef MKC_CLI_REPORT_JSON_HPP
#define MKC_CLI_REPORT_JSON_HPP

#include "json.hpp"
#include "mkc/charax.hpp"
#include "mkc/families.hpp"
#include "mkc/kcut.hpp"
#include "mkc/spectra.hpp"

namespace mkc::cli {

// Stable JSON field names for every report the CLI emits.

nlohmann::json to_json(const VertexPartition& p);
nlohmann::json to_json(const CharaxVerdict& v);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const BoundComparison& c);
nlohmann::json to_json(const CutValue& c);
nlohmann::json to_json(const TightnessCertificate& c);
nlohmann::json to_json(const WeylReport& r);
nlohmann::json to_json(const SVectorStructureReport& r);

}  // namespace mkc::cli

#endif  // MKC_CLI_REPORT_JSON_HPP

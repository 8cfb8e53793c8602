#pragma once

// JSON and CSV encodings. A series is {"coeffs": [[re, im], ...]} with the
// array index as the power of z; complex scalars are [re, im] pairs.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fpalg/membership.hpp"
#include "fpalg/series.hpp"
#include "fpalg/verify.hpp"

namespace fpalg {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& f);
/// Throws std::invalid_argument on malformed input.
TruncatedSeries series_from_json(const Json& j);
TruncatedSeries parse_series(const std::string& text);

Json corpus_to_json(const Corpus& corpus);

/// Per-entry records are omitted; they go to CSV.
Json report_to_json(const VerificationReport& report);
void write_report_csv(const VerificationReport& report, std::ostream& out);

Json verdict_to_json(const MembershipVerdict& v, const CoefficientRule& rule, const SpaceParams& sp,
                     const ClassifyOptions& opts);

}  // namespace fpalg

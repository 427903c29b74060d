#pragma once

#include <optional>
#include <string>

#include "wfp/code.hpp"
#include "wfp/oracles.hpp"
#include "wfp/search.hpp"

namespace wfp::io {

// Schema identifiers stamped into every JSON payload (field "schema").
// Bump the suffix when a payload shape changes; docs/schemas/ carries the
// matching JSON Schema files.
inline constexpr const char* kVerifySchemaId = "wfp.verify.v1";
inline constexpr const char* kAnalyzeSchemaId = "wfp.analyze.v1";
inline constexpr const char* kBoundsSchemaId = "wfp.bounds.v1";
inline constexpr const char* kCertificateSchemaId = "wfp.certificate.v1";
inline constexpr const char* kSearchSchemaId = "wfp.search.v1";

struct VerifyOutcome {
    int t;
    std::string method;  // direct | structural | both
    bool ok;
    std::optional<DirectViolation> direct;
    std::optional<StructuralViolation> structural;
};

/// All emitters return a complete pretty-printed document with sorted keys
/// and a trailing newline; output is deterministic except for the elapsed /
/// wall-time fields, which report the actual run.
std::string verify_json(const Code& c, const VerifyOutcome& v);
std::string analysis_json(const Code& c, const AnalysisReport& r);
std::string bounds_table_json(int from, int to);
std::string certificate_json(const oracles::FamilyCertificate& c);
std::string certificate_json(const oracles::CodeCertificate& c);
std::string search_json(const search::SearchResult& r);

}  // namespace wfp::io

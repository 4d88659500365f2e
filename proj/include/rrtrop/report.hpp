#pragma once

// Report serialization. The document model is a JSON value; it is printed
// either as JSON ("structured") or as YAML ("text", indented and diffable).
// Both forms parse back to the same document.

#include <string>
#include <vector>

#include "json.hpp"
#include "rrtrop/sos.hpp"
#include "rrtrop/tropical.hpp"

namespace rrtrop {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Structured };
ReportFormat parse_report_format(const std::string& s);

inline constexpr const char* kToolName = "rrtrop";
inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const WeightVector& w);
Json to_json(const std::vector<Polynomial>& v);
Json to_json(const ConeReport& r);
Json to_json(const ChainCheck& c);
Json to_json(const Certificate& c);
Json to_json(const ComponentClassification& c);
Json to_json(const AuditResult& a);
Json to_json(const QMRepresentation& rep);
Json to_json(const ReductionTrace& t);

// Inverses; polynomials are parsed over `ring`.
ConeReport cone_report_from_json(const Json& j, const RingPtr& ring);
Certificate certificate_from_json(const Json& j);
QMRepresentation representation_from_json(const Json& j, const RingPtr& ring);

// Top-level document: tool, version, command echo, then the payload fields.
Json make_report(const std::string& command, const std::vector<std::string>& args);

std::string render(const Json& doc, ReportFormat format);
// Throws ParseError on malformed input.
Json parse_report(const std::string& text, ReportFormat format);

}  // namespace rrtrop

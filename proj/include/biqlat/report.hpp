#pragma once

#include <string>

#include <json.hpp>

#include "biqlat/constructions.hpp"

namespace biqlat {

// Machine-readable output document.  JSON is the authoritative format; CSV
// and plain text are renderings of the same content.  All exact values are
// serialized as decimal / "p/q" strings so consumers keep exactness.
struct ReportDocument {
    std::string schema_version = "1";
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::array();

    bool operator==(const ReportDocument&) const = default;
};

nlohmann::ordered_json json_of(const Factorization& f);
nlohmann::ordered_json json_of(const AdmissibleQ& aq);
nlohmann::ordered_json json_of(const LatticeReport& rep, bool approx);
nlohmann::ordered_json json_of_matrix(const RatMat& m);
nlohmann::ordered_json json_of_matrix(const IntMat& m);

// Basis coordinates plus the exact Gram matrix, for `construct`.
nlohmann::ordered_json construct_json(const ModuleBasis& basis, const GramMatrix& g,
                                      const LatticeReport* context, bool approx);

std::string to_json_string(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);
std::string to_plain(const ReportDocument& doc);

// Inverse of to_json_string; parse(serialize(x)) == x.
ReportDocument parse_document(const std::string& text);

}  // namespace biqlat

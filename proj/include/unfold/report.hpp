#pragma once

// Stable serializations of certificates: JSON objects and TSV/CSV rows.

#include <string>
#include <string_view>

#include <json.hpp>

#include "unfold/certify.hpp"

namespace unfold {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const Certificate& cert);
/// Inverse of certificate_to_json; throws InvalidInput on malformed or
/// inconsistent documents.
Certificate certificate_from_json(const Json& doc);

enum class OutputFormat { Tsv, Csv, Json };

std::string_view format_name(OutputFormat f);

/// Column header: q1,q2,q3,k,genus,stratum,rank_lb,full_rank,hyp_excluded,verdict.
std::string table_header(OutputFormat f);
/// One row for the triple (q1,q2,q3) certified by `cert`.
std::string table_row(OutputFormat f, std::int64_t q1, std::int64_t q2, std::int64_t q3, const Certificate& cert);

}  // namespace unfold

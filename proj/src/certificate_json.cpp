#include <sstream>

#include "unfold/errors.hpp"
#include "unfold/report.hpp"

namespace unfold {

Json certificate_to_json(const Certificate& cert) {
  Json trace;
  trace["D"] = cert.trace.divisors;
  Json pairs = Json::array();
  for (const auto& [a, b] : cert.trace.relations) pairs.push_back({a, b});
  trace["E"] = std::move(pairs);
  trace["A_generators"] = std::vector<std::int64_t>(cert.trace.a_generators.members().begin(),
                                                    cert.trace.a_generators.members().end());
  trace["A_closure_size"] = cert.trace.a_closure.size();
  trace["classes"] = cert.trace.classes;

  Json doc;
  doc["q"] = std::vector<std::int64_t>(cert.sys.q().begin(), cert.sys.q().end());
  doc["k"] = cert.sys.k();
  doc["genus"] = cert.genus;
  doc["stratum"] = cert.stratum.zero_orders;
  doc["marked_points"] = cert.stratum.marked_points;
  doc["rank_lower_bound"] = cert.rank_lower_bound;
  doc["full_rank"] = cert.full_rank_certified;
  doc["hyperelliptic_excluded"] = cert.hyperelliptic_excluded;
  doc["verdict"] = verdict_name(cert.verdict);
  doc["trace"] = std::move(trace);
  return doc;
}

Certificate certificate_from_json(const Json& doc) {
  try {
    const auto q = doc.at("q").get<std::vector<std::int64_t>>();
    Certificate c{.sys = make_angle_system(q, GcdMode::Strict)};
    if (doc.at("k").get<std::int64_t>() != c.sys.k()) throw InvalidInput("certificate: k does not match q");
    c.genus = doc.at("genus").get<int>();
    c.stratum.zero_orders = doc.at("stratum").get<std::vector<int>>();
    c.stratum.marked_points = doc.at("marked_points").get<int>();
    c.rank_lower_bound = doc.at("rank_lower_bound").get<int>();
    c.full_rank_certified = doc.at("full_rank").get<bool>();
    c.hyperelliptic_excluded = doc.at("hyperelliptic_excluded").get<bool>();
    const auto verdict = parse_verdict(doc.at("verdict").get<std::string>());
    if (!verdict) throw InvalidInput("certificate: unknown verdict");
    c.verdict = *verdict;

    const auto& t = doc.at("trace");
    c.trace.divisors = t.at("D").get<std::vector<std::int64_t>>();
    for (const auto& pair : t.at("E")) {
      c.trace.relations.emplace_back(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
    }
    c.trace.a_generators = ResidueSet(c.sys.k(), t.at("A_generators").get<std::vector<std::int64_t>>());
    c.trace.a_closure = multiplicative_closure(c.trace.a_generators);
    if (c.trace.a_closure.size() != t.at("A_closure_size").get<std::size_t>())
      throw InvalidInput("certificate: A_closure_size inconsistent with A_generators");
    c.trace.classes = t.at("classes").get<std::vector<std::vector<std::int64_t>>>();
    return c;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("certificate: ") + e.what());
  }
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Tsv: return "tsv";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "tsv";
}

namespace {

constexpr const char* kColumns[] = {"q1",      "q2",      "q3",        "k",            "genus",
                                    "stratum", "rank_lb", "full_rank", "hyp_excluded", "verdict"};

std::string join_row(OutputFormat f, const std::vector<std::string>& cells) {
  const char sep = f == OutputFormat::Csv ? ',' : '\t';
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    if (f == OutputFormat::Csv && cells[i].find(',') != std::string::npos)
      out += '"' + cells[i] + '"';
    else
      out += cells[i];
  }
  return out;
}

}  // namespace

std::string table_header(OutputFormat f) {
  return join_row(f, std::vector<std::string>(std::begin(kColumns), std::end(kColumns)));
}

std::string table_row(OutputFormat f, std::int64_t q1, std::int64_t q2, std::int64_t q3, const Certificate& cert) {
  if (f == OutputFormat::Json) {
    Json doc = certificate_to_json(cert);
    if (Json({q1, q2, q3}) != doc["q"]) doc["enumerated_q"] = {q1, q2, q3};
    return doc.dump();
  }
  return join_row(f, {std::to_string(q1), std::to_string(q2), std::to_string(q3), std::to_string(q1 + q2 + q3),
                      std::to_string(cert.genus), cert.stratum.str(), std::to_string(cert.rank_lower_bound),
                      cert.full_rank_certified ? "true" : "false", cert.hyperelliptic_excluded ? "true" : "false",
                      std::string(verdict_name(cert.verdict))});
}

}  // namespace unfold

#include <doctest.h>

#include "unfold/errors.hpp"
#include "unfold/report.hpp"

using namespace unfold;

TEST_CASE("json certificate round-trips") {
  for (const auto& e : enumerate_certificates(31, {false, false, true}, 1)) {
    const auto doc = certificate_to_json(e.cert);
    const auto text = doc.dump();
    const auto back = certificate_from_json(Json::parse(text));
    REQUIRE(certificate_to_json(back).dump() == text);
  }
}

TEST_CASE("json fields") {
  const auto doc = certificate_to_json(make_certificate(make_angle_system({1, 2, 8})));
  CHECK(doc["q"] == Json({1, 2, 8}));
  CHECK(doc["k"] == 11);
  CHECK(doc["genus"] == 5);
  CHECK(doc["stratum"] == Json({7, 1}));
  CHECK(doc["verdict"] == "DenseInStratumComponent");
  CHECK(doc["trace"]["A_closure_size"] == 10);
}

TEST_CASE("malformed json is rejected") {
  auto doc = certificate_to_json(make_certificate(make_angle_system({1, 2, 8})));
  auto bad_k = doc;
  bad_k["k"] = 12;
  CHECK_THROWS_AS(certificate_from_json(bad_k), InvalidInput);
  auto bad_size = doc;
  bad_size["trace"]["A_closure_size"] = 3;
  CHECK_THROWS_AS(certificate_from_json(bad_size), InvalidInput);
  auto bad_verdict = doc;
  bad_verdict["verdict"] = "Maybe";
  CHECK_THROWS_AS(certificate_from_json(bad_verdict), InvalidInput);
  doc.erase("genus");
  CHECK_THROWS_AS(certificate_from_json(doc), InvalidInput);
}

TEST_CASE("table rows") {
  CHECK(table_header(OutputFormat::Tsv) == "q1\tq2\tq3\tk\tgenus\tstratum\trank_lb\tfull_rank\thyp_excluded\tverdict");
  CHECK(table_header(OutputFormat::Csv) == "q1,q2,q3,k,genus,stratum,rank_lb,full_rank,hyp_excluded,verdict");
  const auto cert = make_certificate(make_angle_system({1, 2, 8}));
  CHECK(table_row(OutputFormat::Csv, 1, 2, 8, cert) == "1,2,8,11,5,\"(7,1)\",5,true,true,DenseInStratumComponent");
  CHECK(table_row(OutputFormat::Tsv, 1, 2, 8, cert) == "1\t2\t8\t11\t5\t(7,1)\t5\ttrue\ttrue\tDenseInStratumComponent");
  const auto row = Json::parse(table_row(OutputFormat::Json, 2, 4, 16, cert));
  CHECK(row["enumerated_q"] == Json({2, 4, 16}));
  CHECK(row["q"] == Json({1, 2, 8}));
  CHECK_FALSE(Json::parse(table_row(OutputFormat::Json, 1, 2, 8, cert)).contains("enumerated_q"));
}

#include <gtest/gtest.h>

#include "nalg/constructions.hpp"
#include "nalg/json_io.hpp"

using namespace nalg;

namespace {

const FieldDesc Q = FieldDesc::rational();
const FieldDesc F3 = FieldDesc::prime(3);

std::vector<AlgebraDocument> documents() {
  std::vector<AlgebraDocument> out;
  auto add = [&](const InvolutiveAlgebra& x) {
    out.push_back({x.algebra, x.conj, decompose(x.algebra)});
  };
  for (const FieldDesc& f : {Q, F3}) {
    add(split_quaternions_table(f));
    add(upper_triangular(f));
    add(h_plus_line(f));
    add(standard_tower(4, f));
    add(split_hurwitz(8, f));
  }
  add(anisotropic_nonflexible(Q, Scalar(Q, -1, 3), Scalar(Q, 7, 2)));
  out.push_back({search_division_3d(3).algebra, std::nullopt, std::nullopt});
  return out;
}

Json u_doc() { return document_to_json({upper_triangular(Q).algebra, std::nullopt, std::nullopt}); }

} // namespace

TEST(Json, AlgebraDocumentShape) {
  const Json j = u_doc();
  EXPECT_EQ(j["field"], Json::parse(R"({"kind":"rational"})"));
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["unit"], Json::parse(R"(["1","0","0"])"));
  EXPECT_EQ(j["basis_names"], Json::parse(R"(["1","u","v"])"));
  EXPECT_EQ(j["mul"][2][1], Json::parse(R"(["0","-1","0"])"));
  const Json f = field_to_json(F3);
  EXPECT_EQ(f.dump(), R"({"kind":"prime","p":3})");
}

TEST(Json, RoundTripIsBitExact) {
  for (const auto& doc : documents()) {
    const std::string text = document_to_json(doc).dump();
    const AlgebraDocument back = document_from_json(Json::parse(text));
    EXPECT_TRUE(back.algebra.same_structure(doc.algebra));
    EXPECT_EQ(back.algebra.basis_names(), doc.algebra.basis_names());
    EXPECT_EQ(back.conj.has_value(), doc.conj.has_value());
    if (doc.conj) EXPECT_EQ(*back.conj, *doc.conj);
    EXPECT_EQ(back.osborn.has_value(), doc.osborn.has_value());
    EXPECT_EQ(document_to_json(back).dump(), text);
  }
}

TEST(Json, RejectsMalformedDocuments) {
  auto expect_parse_error = [](Json j) { EXPECT_THROW(document_from_json(j), ParseError) << j.dump(); };
  Json j = u_doc();
  j.erase("mul");
  expect_parse_error(j);
  j = u_doc();
  j["dim"] = 4;
  expect_parse_error(j);
  j = u_doc();
  j["unit"][0] = 1;
  expect_parse_error(j);
  j = u_doc();
  j["mul"][1][1][0] = "1/0";
  expect_parse_error(j);
  j = u_doc();
  j["field"] = Json::parse(R"({"kind":"prime","p":2})");
  expect_parse_error(j);
  j = u_doc();
  j["field"] = Json::parse(R"({"kind":"complex"})");
  expect_parse_error(j);
  j = u_doc();
  j["basis_names"] = Json::parse(R"(["1","u"])");
  expect_parse_error(j);
  expect_parse_error(Json::array());
}

TEST(Json, RejectsInvariantViolations) {
  Json j = u_doc();
  j["unit"] = Json::parse(R"(["0","1","0"])");
  EXPECT_THROW(document_from_json(j), InvariantViolation);
  j = u_doc();
  j["conj"] = matrix_to_json(Matrix::identity(Q, 3));  // not an anti-automorphism of U
  EXPECT_THROW(document_from_json(j), InvariantViolation);
  const InvolutiveAlgebra h = split_quaternions_table(Q);
  j = document_to_json({h.algebra, h.conj, decompose(h.algebra)});
  j["osborn"]["gram"][0][0] = "5";
  EXPECT_THROW(document_from_json(j), InvariantViolation);
}

TEST(Json, ScalarsOverPrimeFieldsAreCanonical) {
  Json j = document_to_json({upper_triangular(F3).algebra, std::nullopt, std::nullopt});
  EXPECT_EQ(j["mul"][2][1], Json::parse(R"(["0","2","0"])"));
  j["mul"][2][1][1] = "-1";
  const Algebra a = algebra_from_json(j);
  EXPECT_EQ(algebra_to_json(a)["mul"][2][1][1], "2");
}

TEST(Json, FormRoundTrip) {
  Matrix g(Q, 2, 2);
  g(0, 0) = Scalar(Q, 1, 2);
  g(0, 1) = g(1, 0) = Scalar(Q, -3);
  const QuadraticFormData f(Q, g);
  const Json j = form_to_json(f);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["gram"][0][0], "1/2");
  EXPECT_EQ(form_from_json(Json::parse(j.dump())).gram, g);
  Json bad = j;
  bad["gram"][0][1] = "4";
  EXPECT_THROW(form_from_json(bad), InvariantViolation);
}

TEST(Json, VerdictRoundTrip) {
  const Algebra u = upper_triangular(F3).algebra;
  const Verdict no = oracle_reversible(u);
  const Json j = verdict_to_json(no);
  EXPECT_EQ(j["question"], "reversible");
  EXPECT_EQ(j["status"], "no");
  EXPECT_EQ(j["method"], "oracle");
  EXPECT_TRUE(j["theorem"].is_null());
  EXPECT_EQ(j["witness"]["ab"], Json::parse(R"(["0","0","0"])"));
  const Verdict back = verdict_from_json(Json::parse(j.dump()), F3);
  EXPECT_EQ(back.status, Status::No);
  EXPECT_EQ(back.witness->a, no.witness->a);
  EXPECT_EQ(back.witness->ba, no.witness->ba);
  EXPECT_EQ(verdict_to_json(back).dump(), j.dump());

  const Verdict y = decide_fast(standard_tower(3, Q).algebra).vnf;
  const Json jy = verdict_to_json(y);
  EXPECT_EQ(jy["status"], "yes");
  EXPECT_EQ(jy["theorem"], "alternative");
  EXPECT_TRUE(jy["witness"].is_null());
  EXPECT_EQ(verdict_to_json(verdict_from_json(jy, Q)).dump(), jy.dump());
}

TEST(Json, FuzzReport) {
  const Json j = fuzz_report_to_json(fuzz_crossvalidate(5, 2, 3, 1));
  EXPECT_EQ(j["instances"], 7);
  EXPECT_TRUE(j["disagreements"].is_array());
}

TEST(Json, FileErrors) {
  EXPECT_THROW(read_json_file("/nonexistent/alg.json"), ParseError);
  write_text_file("json_test_tmp.json", "{not json");
  EXPECT_THROW(read_json_file("json_test_tmp.json"), ParseError);
  std::remove("json_test_tmp.json");
}

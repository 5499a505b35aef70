#pragma once

// JSON documents for algebras, quadratic forms, verdicts and fuzz reports.
// Every scalar is written as canonical scalar text, so documents round-trip
// bit-exactly.

#include <optional>
#include <string>

#include <json.hpp>

#include "nalg/algebra.hpp"
#include "nalg/deciders.hpp"
#include "nalg/forms.hpp"
#include "nalg/osborn.hpp"

namespace nalg {

using Json = nlohmann::ordered_json;

struct AlgebraDocument {
  Algebra algebra;
  std::optional<Matrix> conj;        // "conj": n x n, when involutive
  std::optional<OsbornData> osborn;  // "osborn": cached decomposition
};

Json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const FieldDesc& f);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldDesc& f, std::size_t rows, std::size_t cols);

Json algebra_to_json(const Algebra& a);
Json document_to_json(const AlgebraDocument& doc);
/// Parses and validates: shapes, field membership of every scalar, two-sided
/// unit, and (when present) conj and osborn against the algebra. Throws
/// ParseError on malformed documents and InvariantViolation on failed checks.
AlgebraDocument document_from_json(const Json& j);
Algebra algebra_from_json(const Json& j);

Json osborn_to_json(const OsbornData& data);

Json form_to_json(const QuadraticFormData& f);
QuadraticFormData form_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j, const FieldDesc& f);

Json fuzz_report_to_json(const FuzzReport& r);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace nalg

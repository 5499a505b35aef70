#include "nalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nalg {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

void require_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size)
    throw ParseError(what + " must be an array of length " + std::to_string(size));
}

Scalar scalar_from_json(const Json& j, const FieldDesc& f) {
  if (!j.is_string()) throw ParseError("scalars are written as strings, got " + j.dump());
  return parse_scalar(j.get<std::string>(), f);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json element_list(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(vector_to_json(x.coords()));
  return out;
}

} // namespace

Json field_to_json(const FieldDesc& f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.p()}};
}

FieldDesc field_from_json(const Json& j) {
  const Json& kind = require(j, "kind");
  if (kind == "rational") return FieldDesc::rational();
  if (kind == "prime") {
    const Json& p = require(j, "p");
    if (!p.is_number_integer()) throw ParseError("field p must be an integer");
    try {
      return FieldDesc::prime(p.get<std::int64_t>());
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field kind " + kind.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Vector vector_from_json(const Json& j, const FieldDesc& f) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, const FieldDesc& f, std::size_t rows, std::size_t cols) {
  require_array(j, rows, "matrix");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(j[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], f);
  }
  return m;
}

Json algebra_to_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json doc;
  doc["field"] = field_to_json(a.field());
  doc["dim"] = n;
  doc["unit"] = vector_to_json(a.one().coords());
  if (!a.basis_names().empty()) doc["basis_names"] = a.basis_names();
  Json mul = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(vector_to_json(a.mul(a.basis(i), a.basis(j)).coords()));
    mul.push_back(std::move(row));
  }
  doc["mul"] = std::move(mul);
  return doc;
}

Json osborn_to_json(const OsbornData& data) {
  const std::size_t m = data.m();
  Json cross = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < m; ++k) cell.push_back(data.cross(i, j, k).to_string());
      row.push_back(std::move(cell));
    }
    cross.push_back(std::move(row));
  }
  return Json{{"im_basis", element_list(data.im_basis())},
              {"gram", matrix_to_json(data.gram())},
              {"cross", std::move(cross)}};
}

Json document_to_json(const AlgebraDocument& doc) {
  Json j = algebra_to_json(doc.algebra);
  if (doc.conj) j["conj"] = matrix_to_json(*doc.conj);
  if (doc.osborn) j["osborn"] = osborn_to_json(*doc.osborn);
  return j;
}

Algebra algebra_from_json(const Json& j) { return document_from_json(j).algebra; }

AlgebraDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra document must be a JSON object");
  const FieldDesc f = field_from_json(require(j, "field"));
  const std::size_t n = size_from_json(require(j, "dim"), "dim");
  if (n == 0) throw ParseError("dim must be positive");
  const Json& unit = require(j, "unit");
  require_array(unit, n, "unit");
  Vector u = vector_from_json(unit, f);
  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    const Json& bn = j.at("basis_names");
    require_array(bn, n, "basis_names");
    for (const auto& s : bn) {
      if (!s.is_string()) throw ParseError("basis names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  const Json& mul = require(j, "mul");
  require_array(mul, n, "mul");
  std::vector<Scalar> constants;
  constants.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    require_array(mul[a], n, "mul row");
    for (std::size_t b = 0; b < n; ++b) {
      require_array(mul[a][b], n, "mul cell");
      for (const auto& s : mul[a][b]) constants.push_back(scalar_from_json(s, f));
    }
  }
  AlgebraDocument doc{Algebra(f, n, std::move(constants), std::move(u), std::move(names)),
                      std::nullopt, std::nullopt};
  const Algebra& alg = doc.algebra;

  if (j.contains("conj")) {
    Matrix c = matrix_from_json(j.at("conj"), f, n, n);
    if (!(c * c == Matrix::identity(f, n)))
      throw InvariantViolation("conj is not an involution");
    if (!(c * alg.one().coords() == alg.one().coords()))
      throw InvariantViolation("conj does not fix the unit");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vector lhs = c * alg.mul(alg.basis(a), alg.basis(b)).coords();
        const Vector rhs =
            alg.mul(Element(c * alg.basis(b).coords()), Element(c * alg.basis(a).coords())).coords();
        if (!(lhs == rhs)) throw InvariantViolation("conj is not an anti-automorphism");
      }
    doc.conj = std::move(c);
  }

  if (j.contains("osborn")) {
    const Json& o = j.at("osborn");
    const Json& ib = require(o, "im_basis");
    if (!ib.is_array()) throw ParseError("im_basis must be an array");
    std::vector<Element> basis;
    for (const auto& v : ib) {
      require_array(v, n, "im_basis vector");
      basis.emplace_back(vector_from_json(v, f));
    }
    OsbornData data(alg, std::move(basis));
    const std::size_t m = data.m();
    const Matrix gram = matrix_from_json(require(o, "gram"), f, m, m);
    const Json& cross = require(o, "cross");
    require_array(cross, m, "cross");
    CrossTensor t;
    for (std::size_t a = 0; a < m; ++a) {
      require_array(cross[a], m, "cross row");
      for (std::size_t b = 0; b < m; ++b) {
        require_array(cross[a][b], m, "cross cell");
        for (const auto& s : cross[a][b]) t.push_back(scalar_from_json(s, f));
      }
    }
    if (!(gram == data.gram()) || !(t == data.cross()))
      throw InvariantViolation("cached osborn data does not match the algebra");
    doc.osborn = std::move(data);
  }
  return doc;
}

Json form_to_json(const QuadraticFormData& form) {
  return Json{{"field", field_to_json(form.field)}, {"m", form.m()}, {"gram", matrix_to_json(form.gram)}};
}

QuadraticFormData form_from_json(const Json& j) {
  const FieldDesc f = field_from_json(require(j, "field"));
  const std::size_t m = size_from_json(require(j, "m"), "m");
  return {f, matrix_from_json(require(j, "gram"), f, m, m)};
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["question"] = to_string(v.question);
  j["status"] = to_string(v.status);
  j["method"] = to_string(v.method);
  if (v.witness)
    j["witness"] = Json{{"a", vector_to_json(v.witness->a.coords())},
                        {"b", vector_to_json(v.witness->b.coords())},
                        {"ab", vector_to_json(v.witness->ab.coords())},
                        {"ba", vector_to_json(v.witness->ba.coords())}};
  else
    j["witness"] = nullptr;
  j["theorem"] = v.theorem.empty() ? Json(nullptr) : Json(v.theorem);
  if (!v.subalgebra.empty()) j["subalgebra"] = element_list(v.subalgebra);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Verdict verdict_from_json(const Json& j, const FieldDesc& f) {
  Verdict v;
  v.question = parse_question(require(j, "question").get<std::string>());
  const std::string status = require(j, "status").get<std::string>();
  if (status == "yes") v.status = Status::Yes;
  else if (status == "no") v.status = Status::No;
  else if (status == "unknown") v.status = Status::Unknown;
  else throw ParseError("unknown status '" + status + "'");
  const std::string method = require(j, "method").get<std::string>();
  bool found = false;
  for (Method m : {Method::Oracle, Method::Criterion, Method::Theorem, Method::WitnessSearch})
    if (to_string(m) == method) {
      v.method = m;
      found = true;
    }
  if (!found) throw ParseError("unknown method '" + method + "'");
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    v.witness = Witness{Element(vector_from_json(require(w, "a"), f)),
                        Element(vector_from_json(require(w, "b"), f)),
                        Element(vector_from_json(require(w, "ab"), f)),
                        Element(vector_from_json(require(w, "ba"), f))};
  }
  if (j.contains("theorem") && j.at("theorem").is_string()) v.theorem = j.at("theorem").get<std::string>();
  if (j.contains("subalgebra"))
    for (const auto& e : j.at("subalgebra")) v.subalgebra.emplace_back(vector_from_json(e, f));
  if (j.contains("detail")) v.detail = j.at("detail").get<std::string>();
  return v;
}

Json fuzz_report_to_json(const FuzzReport& r) {
  Json d = Json::array();
  for (const auto& x : r.disagreements)
    d.push_back(Json{{"index", x.index}, {"what", x.what}, {"algebra", algebra_to_json(x.algebra)}});
  return Json{{"instances", r.instances},
              {"vnf_yes", r.vnf_yes},
              {"reversible_yes", r.reversible_yes},
              {"reversible_not_vnf", r.reversible_not_vnf},
              {"disagreements", std::move(d)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

} // namespace nalg

#include "cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "nalg/constructions.hpp"
#include "nalg/deciders.hpp"
#include "nalg/forms.hpp"
#include "nalg/json_io.hpp"
#include "nalg/osborn.hpp"

namespace nalg::cli {

namespace {

// Coefficient shown with its sign split off; residues above p/2 read as
// negatives.
std::pair<bool, std::string> signed_text(const Scalar& c) {
  if (c.field().is_prime()) {
    const std::int64_t r = c.residue(), p = c.field().p();
    if (r > p / 2) return {true, std::to_string(p - r)};
    return {false, std::to_string(r)};
  }
  if (c.sign() < 0) return {true, (-c).to_string()};
  return {false, c.to_string()};
}

} // namespace

std::string format_element(const Algebra& a, const Element& x) {
  std::string out;
  const Element one = a.one();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    auto [negative, mag] = signed_text(x[i]);
    const std::string name = a.basis_name(i);
    const bool unit_basis = a.basis(i) == one;
    std::string term;
    if (unit_basis) term = mag;
    else if (mag == "1") term = name;
    else if (mag.find('/') != std::string::npos) term = "(" + mag + ")" + name;
    else term = mag + name;
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::vector<std::string>> table_cells(const Algebra& a) {
  std::vector<std::vector<std::string>> cells(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      cells[i].push_back(format_element(a, a.mul(a.basis(i), a.basis(j))));
  return cells;
}

namespace {

std::string render_table(const Algebra& a) {
  const auto cells = table_cells(a);
  const std::size_t n = a.dim();
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    width = std::max(width, a.basis_name(i).size());
    for (const auto& c : cells[i]) width = std::max(width, c.size());
  }
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream os;
  os << pad("*") << " |";
  for (std::size_t j = 0; j < n; ++j) os << ' ' << pad(a.basis_name(j));
  os << '\n' << std::string(width + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << pad(a.basis_name(i)) << " |";
    for (const auto& c : cells[i]) os << ' ' << pad(c);
    os << '\n';
  }
  return os.str();
}

std::string verdict_text(const Algebra& a, const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.question) << ": " << to_string(v.status) << " (" << to_string(v.method);
  if (!v.theorem.empty()) os << ", " << v.theorem;
  os << ")\n";
  if (v.witness) {
    os << "  a  = " << format_element(a, v.witness->a) << '\n'
       << "  b  = " << format_element(a, v.witness->b) << '\n'
       << "  ab = " << format_element(a, v.witness->ab) << '\n'
       << "  ba = " << format_element(a, v.witness->ba) << '\n';
  }
  if (!v.subalgebra.empty()) {
    os << "  subalgebra:";
    for (const auto& e : v.subalgebra) os << ' ' << format_element(a, e);
    os << '\n';
  }
  if (!v.detail.empty()) os << "  " << v.detail << '\n';
  return os.str();
}

int exit_for(const Verdict& v) { return v.status == Status::Unknown ? 2 : 0; }

AlgebraDocument load(const std::string& path) { return document_from_json(read_json_file(path)); }

AlgebraDocument construct(const std::string& kind, const FieldDesc& field, int level, int dim,
                          const std::string& qu, const std::string& qv) {
  auto inv = [](InvolutiveAlgebra x) {
    return AlgebraDocument{std::move(x.algebra), std::move(x.conj), std::nullopt};
  };
  if (kind == "tower") return inv(standard_tower(level, field));
  if (kind == "split-hurwitz") return inv(split_hurwitz(dim, field));
  if (kind == "H") return inv(split_quaternions_table(field));
  if (kind == "U") return inv(upper_triangular(field));
  if (kind == "h-plus-line") return inv(h_plus_line(field));
  if (kind == "anisotropic-3d")
    return inv(anisotropic_nonflexible(field, parse_scalar(qu, field), parse_scalar(qv, field)));
  if (kind == "division3") {
    if (!field.is_prime()) throw FieldError("division3 needs a prime field");
    return {search_division_3d(field.p()).algebra, std::nullopt, std::nullopt};
  }
  throw Error("unknown kind '" + kind + "'");
}

struct DecideArgs {
  std::string question = "vnf";
  std::string method = "auto";
  int height = 1;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  bool json = false;
  std::string file;
};

Verdict decide(const Algebra& a, const DecideArgs& args) {
  const Question q = parse_question(args.question);
  const EnumerationOptions en{args.budget, args.workers};
  auto oracle = [&] {
    switch (q) {
    case Question::VNF: return oracle_vnf(a, en);
    case Question::Reversible: return oracle_reversible(a, en);
    case Question::ZeroDivisorFree: return no_zero_divisors(a, en);
    }
    throw Error("unreachable");
  };
  auto fast = [&]() -> Verdict {
    if (q == Question::ZeroDivisorFree) return unknown(q, "no theorem rule for zero divisors");
    const FastDecision d = decide_fast(a, FastOptions{en, 10});
    return q == Question::VNF ? d.vnf : d.reversible;
  };
  if (args.method == "oracle") return oracle();
  if (args.method == "criterion") {
    if (q == Question::ZeroDivisorFree) throw Error("no criterion decider for zero divisors");
    const OsbornData data = decompose(a);
    return q == Question::VNF ? criterion_vnf(a, data, en) : criterion_reversible(a, data, en);
  }
  if (args.method == "fast") return fast();
  if (args.method == "auto") {
    Verdict v = fast();
    if (v.status != Status::Unknown) return v;
    if (a.field().is_prime()) return oracle();
    if (q != Question::ZeroDivisorFree)
      if (auto w = witness_search_q(a, q, args.height, args.budget)) return *w;
    return unknown(q, "no theorem applies and the height " + std::to_string(args.height) +
                          " search found no witness");
  }
  throw Error("unknown method '" + args.method + "'");
}

// ---- suite ----------------------------------------------------------------

struct Check {
  std::string name;
  bool pass;
};

using Checks = std::vector<Check>;

bool status_is(const Verdict& v, Status s) { return v.status == s; }

Checks tables_fixture(const FieldDesc& field) {
  Checks out;
  const Algebra h = split_quaternions_table(FieldDesc::rational()).algebra;
  const Algebra u = upper_triangular(FieldDesc::rational()).algebra;
  const std::vector<std::vector<std::string>> th{{"1", "i", "j", "k"},
                                                 {"i", "1", "k", "j"},
                                                 {"j", "-k", "1", "-i"},
                                                 {"k", "-j", "i", "-1"}};
  const std::vector<std::vector<std::string>> tu{{"1", "u", "v"}, {"u", "0", "u"}, {"v", "-u", "1"}};
  out.push_back({"H multiplication table", table_cells(h) == th});
  out.push_back({"U multiplication table", table_cells(u) == tu});
  const FieldDesc f = field.is_prime() ? field : FieldDesc::prime(3);
  const Algebra uf = upper_triangular(f).algebra;
  const Element one = uf.one(), uu = uf.basis(1), vv = uf.basis(2);
  out.push_back({"(1+v)u = 0", uf.mul(one + vv, uu).is_zero()});
  out.push_back({"u(1+v) = 2u", uf.mul(uu, one + vv) == Scalar(f, 2) * uu});
  out.push_back({"U over " + f.to_string() + " is VNF", status_is(oracle_vnf(uf), Status::Yes)});
  out.push_back({"U over " + f.to_string() + " is not reversible",
                 status_is(oracle_reversible(uf), Status::No)});
  return out;
}

Checks h_plus_line_fixture(const FieldDesc& field) {
  Checks out;
  const Algebra a = h_plus_line(field).algebra;
  const Element one = a.one(), x = a.basis(1) + a.basis(4), y = a.basis(2) + a.basis(3);
  const Element p = one - x - y, q = one + x - y;
  out.push_back({"(1-x-y)(1+x-y) = 1", a.mul(p, q) == one});
  out.push_back({"(1+x-y)(1-x-y) != 1", !(a.mul(q, p) == one)});
  out.push_back({"y(1+x) = 0", a.mul(y, one + x).is_zero()});
  out.push_back({"(1+x)y = 2y", a.mul(one + x, y) == Scalar(field, 2) * y});
  out.push_back({"x(xy) = y != x^2 y", a.mul(x, a.mul(x, y)) == y && a.mul(a.mul(x, x), y).is_zero()});
  out.push_back({"flexible", check_law(a, Law::Flexible).holds});
  out.push_back({"quadratic", is_quadratic(a).holds});
  if (field.is_prime()) {
    const OsbornData d = decompose(a);
    const Verdict ov = oracle_vnf(a), orv = oracle_reversible(a);
    out.push_back({"oracle: not VNF", status_is(ov, Status::No)});
    out.push_back({"oracle: not reversible", status_is(orv, Status::No)});
    out.push_back({"criteria agree with oracles",
                   criterion_vnf(a, d).status == ov.status &&
                       criterion_reversible(a, d).status == orv.status});
  } else {
    out.push_back({"height 1 search finds a VNF witness",
                   witness_search_q(a, Question::VNF, 1).has_value()});
  }
  return out;
}

Checks anisotropic_fixture(const FieldDesc& field) {
  Checks out;
  const Scalar m1 = -Scalar::one(field);
  const Algebra a = anisotropic_nonflexible(field, m1, m1).algebra;
  const Element u = a.basis(1), v = a.basis(2);
  out.push_back({"(0,u)(-1,v) = 0", a.mul(u, m1 * a.one() + v).is_zero()});
  out.push_back({"(-1,v)(0,u) = -2u", a.mul(m1 * a.one() + v, u) == Scalar(field, -2) * u});
  const OsbornData d = decompose(a);
  out.push_back({"not flexible", !flexible_criterion(d).holds && !check_law(a, Law::Flexible).holds});
  out.push_back({"involutive", involutive_criterion(d).holds});
  if (field.is_rational()) {
    out.push_back({"norm anisotropic", isotropy(norm_form(d)).status == Isotropy::Anisotropic});
    out.push_back({"height 1 search: not reversible",
                   witness_search_q(a, Question::Reversible, 1).has_value()});
    out.push_back({"height 1 search: not VNF", witness_search_q(a, Question::VNF, 1).has_value()});
  } else {
    out.push_back({"oracle: not VNF", status_is(oracle_vnf(a), Status::No)});
    out.push_back({"oracle: not reversible", status_is(oracle_reversible(a), Status::No)});
  }
  return out;
}

Checks tower_fixture(const FieldDesc& field) {
  Checks out;
  for (int level = 0; level <= 4; ++level) {
    const InvolutiveAlgebra x = standard_tower(level, field);
    const std::string l = "level " + std::to_string(level) + ": ";
    out.push_back({l + "flexible", check_law(x.algebra, Law::Flexible).holds});
    out.push_back({l + "quadratic", is_quadratic(x.algebra).holds});
    out.push_back({l + "alternative iff level <= 3",
                   check_law(x.algebra, Law::Alternative).holds == (level <= 3)});
    out.push_back({l + "involution invariants", involutive_invariant_failure(x).empty()});
    if (field.is_rational()) {
      const FastDecision d = decide_fast(x.algebra);
      out.push_back({l + "fast path: VNF and reversible",
                     status_is(d.vnf, Status::Yes) && status_is(d.reversible, Status::Yes)});
    }
  }
  return out;
}

Checks split_hurwitz_fixture(const FieldDesc& field) {
  Checks out;
  const FieldDesc f = field.is_prime() ? field : FieldDesc::prime(3);
  out.push_back({"d=2 reversible", status_is(oracle_reversible(split_hurwitz(2, f).algebra), Status::Yes)});
  const Algebra h = split_hurwitz(4, f).algebra;
  out.push_back({"d=4 VNF", status_is(oracle_vnf(h), Status::Yes)});
  out.push_back({"d=4 not reversible", status_is(oracle_reversible(h), Status::No)});
  const Algebra z = split_hurwitz(8, f).algebra;
  out.push_back({"d=8 alternative, not associative",
                 check_law(z, Law::Alternative).holds && !check_law(z, Law::Associative).holds});
  const EnumerationOptions en{10'000'000, 4};
  out.push_back({"d=8 VNF", status_is(oracle_vnf(z, en), Status::Yes)});
  out.push_back({"d=8 not reversible", status_is(oracle_reversible(z, en), Status::No)});
  return out;
}

Checks division_fixture(const FieldDesc& field) {
  Checks out;
  const FieldDesc f = field.is_prime() ? field : FieldDesc::prime(3);
  const Algebra a = search_division_3d(f.p()).algebra;
  out.push_back({"no zero divisors", status_is(no_zero_divisors(a), Status::Yes)});
  out.push_back({"reversible", status_is(oracle_reversible(a), Status::Yes)});
  out.push_back({"not VNF", status_is(oracle_vnf(a), Status::No)});
  out.push_back({"not quadratic", !is_quadratic(a).holds});
  return out;
}

struct Fixture {
  std::string label;
  const char* default_field;
  std::function<Checks(const FieldDesc&)> run;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      {"tables", "prime:3", tables_fixture},
      {"h-plus-line", "rational", h_plus_line_fixture},
      {"anisotropic-3d", "rational", anisotropic_fixture},
      {"tower", "rational", tower_fixture},
      {"split-hurwitz", "prime:3", split_hurwitz_fixture},
      {"division3", "prime:3", division_fixture},
  };
  return all;
}

CommandResult run_suite(const std::string& only, const std::string& field_text) {
  CommandResult r;
  std::ostringstream os;
  bool all_pass = true, matched = false;
  for (const auto& fx : fixtures()) {
    if (!only.empty() && only != fx.label) continue;
    matched = true;
    const FieldDesc f = FieldDesc::parse(field_text.empty() ? fx.default_field : field_text);
    for (const auto& c : fx.run(f)) {
      all_pass = all_pass && c.pass;
      os << (c.pass ? "PASS " : "FAIL ") << fx.label << " [" << f.to_string() << "] " << c.name
         << '\n';
    }
  }
  if (!matched) throw Error("unknown fixture '" + only + "'");
  r.output = os.str();
  r.exit_code = all_pass ? 0 : 1;
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Exact computations with finite-dimensional unital algebras", "alg"};
  app.require_subcommand(1);

  std::string field_text = "rational";

  auto* construct_cmd = app.add_subcommand("construct", "build an algebra and write its document");
  std::string kind, out_path, qu = "-1", qv = "-1";
  int level = 0, dim = 4;
  construct_cmd->add_option("--kind", kind,
                            "tower|split-hurwitz|H|U|h-plus-line|anisotropic-3d|division3")
      ->required();
  construct_cmd->add_option("--level", level, "tower level 0..4");
  construct_cmd->add_option("--dim", dim, "split Hurwitz dimension 2, 4 or 8");
  construct_cmd->add_option("--field", field_text, "rational|prime:P");
  construct_cmd->add_option("--qu", qu, "(u,u) for anisotropic-3d");
  construct_cmd->add_option("--qv", qv, "(v,v) for anisotropic-3d");
  construct_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "check a law");
  std::string law = "all", file;
  bool json = false;
  check_cmd->add_option("--law", law,
                        "commutative|associative|flexible|alternative|quadratic|involutive|all");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_flag("--json", json);

  auto* decide_cmd = app.add_subcommand("decide", "decide VNF, reversibility or zero divisors");
  DecideArgs da;
  decide_cmd->add_option("--question", da.question, "vnf|reversible|zdf");
  decide_cmd->add_option("--method", da.method, "oracle|criterion|auto|fast");
  decide_cmd->add_option("--height", da.height, "height bound for the search over Q");
  decide_cmd->add_option("--budget", da.budget, "enumeration budget");
  decide_cmd->add_option("--workers", da.workers, "worker threads")->check(CLI::PositiveNumber);
  decide_cmd->add_flag("--json", da.json);
  decide_cmd->add_option("file", da.file)->required();

  auto* table_cmd = app.add_subcommand("table", "print the basis multiplication table");
  table_cmd->add_option("file", file)->required();
  table_cmd->add_flag("--json", json);

  auto* suite_cmd = app.add_subcommand("suite", "run the built-in example fixtures");
  std::string only, suite_field;
  suite_cmd->add_option("--only", only,
                        "tables|h-plus-line|anisotropic-3d|tower|split-hurwitz|division3");
  suite_cmd->add_option("--field", suite_field, "override the fixture field");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "cross-validate criteria against oracles");
  std::size_t count = 200, m = 3;
  std::int64_t p = 3;
  std::uint64_t seed = 0;
  fuzz_cmd->add_option("--count", count);
  fuzz_cmd->add_option("--m", m)->check(CLI::Range(1, 3));
  fuzz_cmd->add_option("--p", p);
  fuzz_cmd->add_option("--seed", seed)->required();
  fuzz_cmd->add_flag("--json", json);

  std::vector<std::string> argv_store{"alg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    result.output = out.str();
    result.error = err.str();
    return result;
  }

  try {
    if (*construct_cmd) {
      const AlgebraDocument doc = construct(kind, FieldDesc::parse(field_text), level, dim, qu, qv);
      const std::string text = dump(document_to_json(doc));
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
        out << "wrote " << out_path << " (dim " << doc.algebra.dim() << ", "
            << doc.algebra.field().to_string() << ")\n";
      }
    } else if (*check_cmd) {
      const Algebra a = load(file).algebra;
      std::vector<Law> laws;
      if (law == "all")
        laws = {Law::Commutative, Law::Associative, Law::Flexible,
                Law::Alternative, Law::Quadratic,   Law::Involutive};
      else
        laws = {parse_law(law)};
      Json arr = Json::array();
      for (Law l : laws) {
        const LawVerdict v = check_law(a, l);
        if (json) {
          Json w = Json::array();
          for (const auto& e : v.witness) w.push_back(vector_to_json(e.coords()));
          arr.push_back(Json{{"law", to_string(l)}, {"holds", v.holds}, {"witness", w}});
        } else {
          out << to_string(l) << ": " << (v.holds ? "yes" : "no");
          if (!v.holds) {
            out << "  witness:";
            for (const auto& e : v.witness) out << ' ' << format_element(a, e);
            if (!v.detail.empty()) out << "  (" << v.detail << ')';
          }
          out << '\n';
        }
      }
      if (json) out << dump(arr);
    } else if (*decide_cmd) {
      const Algebra a = load(da.file).algebra;
      const Verdict v = decide(a, da);
      out << (da.json ? dump(verdict_to_json(v)) : verdict_text(a, v));
      result.exit_code = exit_for(v);
    } else if (*table_cmd) {
      const Algebra a = load(file).algebra;
      if (json) out << dump(algebra_to_json(a)["mul"]);
      else out << render_table(a);
    } else if (*suite_cmd) {
      CommandResult r = run_suite(only, suite_field);
      r.error = err.str();
      return r;
    } else if (*fuzz_cmd) {
      const FuzzReport rep = fuzz_crossvalidate(count, m, p, seed);
      if (json) {
        out << dump(fuzz_report_to_json(rep));
      } else {
        out << "instances " << rep.instances << ", VNF " << rep.vnf_yes << ", reversible "
            << rep.reversible_yes << ", reversible but not VNF " << rep.reversible_not_vnf
            << ", disagreements " << rep.disagreements.size() << '\n';
        for (const auto& d : rep.disagreements)
          out << "instance " << d.index << ": " << d.what << '\n'
              << algebra_to_json(d.algebra).dump() << '\n';
      }
      result.exit_code = rep.disagreements.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = 1;
  }
  result.output = out.str();
  result.error = err.str();
  return result;
}

} // namespace nalg::cli

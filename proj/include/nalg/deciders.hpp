#pragma once

// Von-Neumann finiteness (ab = 1 => ba = 1) and reversibility
// (ab = 0 => ba = 0): exhaustive oracles over F_p, the criteria via
// 3-dimensional subalgebras of involutive algebras, a theorem-based fast
// path, a bounded witness search over Q, and an oracle/criterion fuzzer.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"
#include "nalg/osborn.hpp"

namespace nalg {

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

enum class Question { VNF, Reversible, ZeroDivisorFree };
enum class Status { Yes, No, Unknown };
enum class Method { Oracle, Criterion, Theorem, WitnessSearch };

std::string to_string(Question q);
std::string to_string(Status s);
std::string to_string(Method m);
Question parse_question(std::string_view text);

struct Witness {
  Element a, b, ab, ba;
};

struct Verdict {
  Question question = Question::VNF;
  Status status = Status::Unknown;
  Method method = Method::Oracle;
  std::string theorem;              // rule name for Method::Theorem
  std::optional<Witness> witness;   // No only
  std::vector<Element> subalgebra;  // criterion No: basis (1, w1, w2) of the offending subalgebra
  std::string detail;
};

/// Whether (a, b) demonstrates a No answer: for VNF ab = 1 != ba; for
/// Reversible ab = 0 != ba with a, b != 0; for ZeroDivisorFree ab = 0 with
/// a, b != 0.
bool witness_valid(const Algebra& alg, Question q, const Element& a, const Element& b);

/// A No verdict whose witness is re-verified; throws InvariantViolation if
/// the pair does not demonstrate the violation.
Verdict verified_no(const Algebra& alg, Question q, Method m, const Element& a, const Element& b,
                    std::string detail = {});

Verdict yes(Question q, Method m, std::string theorem = {}, std::string detail = {});
Verdict unknown(Question q, std::string detail = {});

struct EnumerationOptions {
  std::uint64_t budget = 10'000'000;  // max number of elements / subspaces scanned
  unsigned workers = 1;
};

/// Elements a in lexicographic coordinate order (first coordinate most
/// significant, residues 0..p-1). For each a the affine solution set of
/// L_a b = 1 is b0 + ker L_a; since b -> ba is linear, a violation exists iff
/// b0 a != 1 or some kernel basis vector k has k a != 0, and the witness is
/// b0 or b0 + k for the first such k.
Verdict oracle_vnf(const Algebra& a, const EnumerationOptions& opts = {});
/// For each a != 0: the first basis vector k of ker L_a with k a != 0.
Verdict oracle_reversible(const Algebra& a, const EnumerationOptions& opts = {});
/// Yes iff every nonzero L_a is invertible.
Verdict no_zero_divisors(const Algebra& a, const EnumerationOptions& opts = {});

enum class SubalgebraKind { Commutative, IsoU, Other };
std::string to_string(SubalgebraKind k);

struct SubalgebraClass {
  SubalgebraKind kind = SubalgebraKind::Commutative;
  /// For non-commutative B: u, v in Im B with u x v = u, and (u, v) = 0
  /// whenever (u, u) != 0. For IsoU: u^2 = 0, v^2 = 1, uv = u = -vu.
  std::optional<std::pair<Element, Element>> basis;
};

/// Classifies a 3-dimensional involutive algebra: commutative, isomorphic to
/// the upper triangular matrices, or other.
SubalgebraClass classify_3dim(const Algebra& b, const OsbornData& data);

/// Enumerates 2-dimensional subspaces W of Im A in reduced echelon form;
/// those with W x W in W give the 3-dimensional subalgebras F1 + W.
Verdict criterion_vnf(const Algebra& a, const OsbornData& data,
                      const EnumerationOptions& opts = {});
Verdict criterion_reversible(const Algebra& a, const OsbornData& data,
                             const EnumerationOptions& opts = {});

struct FastDecision {
  Verdict vnf;
  Verdict reversible;
};

struct FastOptions {
  EnumerationOptions enumeration;
  int isotropy_height = 10;
};

/// Applies, in order: associative => VNF; alternative => VNF; flexible,
/// quadratic, anisotropic norm => VNF and reversible; no zero divisors
/// (finite fields within budget) => reversible, and VNF when flexible or
/// quadratic; involutive and reversible => VNF. Undecided answers are
/// Unknown; no rule produces No.
FastDecision decide_fast(const Algebra& a, const FastOptions& opts = {});

/// Rationals of height <= h in search order: 0, 1, -1, 2, -2, 1/2, -1/2, ...
std::vector<Scalar> height_grid(int h);

/// Pairs (a, b) over the height grid with ab in F1 \ {0} and ab != ba (VNF)
/// or ab = 0 != ba, a, b != 0 (Reversible), in lexicographic order of a then
/// b. At most `limit` hits are returned. Throws BudgetExceeded when the grid
/// has more than `budget` points.
std::vector<Witness> witness_search_all_q(const Algebra& a, Question q, int height,
                                          std::size_t limit, std::uint64_t budget = 10'000'000);

/// First hit as a verified No verdict (VNF witnesses rescaled so ab = 1).
std::optional<Verdict> witness_search_q(const Algebra& a, Question q, int height,
                                        std::uint64_t budget = 10'000'000);

struct FuzzDisagreement {
  std::size_t index;
  Algebra algebra;
  std::string what;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::size_t vnf_yes = 0;
  std::size_t reversible_yes = 0;
  std::size_t reversible_not_vnf = 0;
  std::vector<FuzzDisagreement> disagreements;
};

/// Random involutive algebras from build_from_osborn (symmetric gram,
/// anticommutative cross) with Im dimension m over F_p; instance i draws
/// from seed_seq{seed, i}. When inject_fixtures is set, U and H are checked
/// first against their known verdicts.
FuzzReport fuzz_crossvalidate(std::size_t count, std::size_t m, std::int64_t p, std::uint64_t seed,
                              bool inject_fixtures = true, const EnumerationOptions& opts = {});

/// The instance fuzz_crossvalidate generates for (m, p, seed, index).
Algebra fuzz_instance(std::size_t m, std::int64_t p, std::uint64_t seed, std::size_t index);

} // namespace nalg

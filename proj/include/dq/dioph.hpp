#pragma once

// Rational D(q)-tuples: sets of distinct nonzero rationals a_i with every
// a_i a_j + q a rational square.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dq/poly.hpp"
#include "dq/quartic.hpp"
#include "dq/rat.hpp"

namespace dq {

/// Parameter value where a family degenerates (zero element, repeated
/// element, vanishing denominator or q = 0).
class DegenerateParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DTuple {
 public:
  /// Throws std::invalid_argument on q = 0, a zero element or a repeat.
  DTuple(Rat q, std::vector<Rat> elements);

  const Rat& q() const { return q_; }
  const std::vector<Rat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  Rat q_;
  std::vector<Rat> elements_;
};

struct PairCheck {
  std::size_t i = 0, j = 0;  // 1-based, i < j
  Rat value;                 // a_i a_j + q
  std::optional<Rat> root;   // nonnegative square root when it exists
};

struct VerifyResult {
  bool ok = false;
  std::vector<PairCheck> pairs;  // all pairs, lexicographic
  /// First pair (lexicographic) that is not a square.
  std::optional<PairCheck> first_failure() const;
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs() const;
};

VerifyResult verify(const DTuple& tuple);

struct Extension {
  Rat fifth;
  QPoint point;            // Q on C_S with x(Q) = fifth
  std::string provenance;  // how Q was obtained
};

/// Fifth elements for the D(q)-quadruple `quad` read off points Q in
/// 2 C_S(Q) with a square delta, on C_S: y^2 = prod (a_i x + q) with base
/// (0, q^2). Candidates are searched points, their doubles, and
/// combinations of two generators under the group law. Result is sorted by
/// (height, value); every entry re-verified as a quintuple. Throws
/// std::invalid_argument when `quad` is not a D(q)-quadruple.
std::vector<Extension> extend_quadruple(const Rat& q, const std::array<Rat, 4>& quad, std::int64_t search_height,
                                        long doubling_budget);

// ---- parametric families ----------------------------------------------------

struct FamilySpec {
  std::string name;
  std::array<Poly, 4> quadruple;
  Poly q;
  Poly fifth_num, fifth_den;
  Poly aux_rhs;  // rhs(t) a square gates the extension
};

/// "thm2", "thm3i", "thm3ii", "thm3iii". Throws std::invalid_argument otherwise.
const FamilySpec& family(std::string_view name);
const std::vector<FamilySpec>& families();

struct FamilyValue {
  Rat t, q;
  std::array<Rat, 4> quad;
  Rat fifth;
  std::vector<Rat> elements() const { return {quad[0], quad[1], quad[2], quad[3], fifth}; }
};

/// Closed-form evaluation. Throws DegenerateParameter with the reason.
FamilyValue family_fifth(std::string_view name, const Rat& t);

struct EnumerateConfig {
  std::int64_t height = 100;
  std::size_t max_results = 10;
  long budget = 2;
  unsigned threads = 0;
};

/// Verified quintuples from rational points on the family's auxiliary
/// curve: searched points plus combinations of two generators under the
/// group law, ordered by (height of t, t).
std::vector<FamilyValue> family_enumerate(std::string_view name, const EnumerateConfig& cfg);

/// Both candidates x5 = A/B for a D(qr^2)-quadruple, + sign first.
/// Throws std::invalid_argument when the input is not a D(qr^2)-quadruple,
/// or x1 x2 x3 x4 = qr^4.
std::array<Rat, 2> regular_extension(const Rat& qr, const std::array<Rat, 4>& quad);

}  // namespace dq

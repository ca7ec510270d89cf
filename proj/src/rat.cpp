#include "dq/rat.hpp"

namespace dq {

namespace {

// Parses an optionally signed decimal integer. Accepts U+2212 as minus.
Int parse_int(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (s.starts_with("\xE2\x88\x92")) {
    negative = true;
    s.remove_prefix(3);
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (char c : s)
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  Int v(std::string(s), 10);
  return negative ? Int(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s, text));
  Int n = parse_int(trim(s.substr(0, slash)), text);
  Int d = parse_int(trim(s.substr(slash + 1)), text);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

Int Rat::height() const {
  Int n = ::abs(v_.get_num());
  return n > v_.get_den() ? n : Int(v_.get_den());
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rat Rat::pow(unsigned e) const {
  Rat r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return r;
}

std::optional<Rat> Rat::checked_div(const Rat& rhs) const {
  if (rhs.is_zero()) return std::nullopt;
  Rat r;
  r.v_ = v_ / rhs.v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool height_less(const Rat& a, const Rat& b) {
  int c = cmp(a.height(), b.height());
  if (c != 0) return c < 0;
  return a < b;
}

std::pair<Int, bool> int_sqrt(const Int& n) {
  if (n < 0) throw std::domain_error("int_sqrt of negative integer");
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return {root, rem == 0};
}

std::optional<Rat> square_root(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  // mpz_perfect_square_p rejects most non-squares by residues before any root.
  if (!mpz_perfect_square_p(r.gmp().get_num_mpz_t())) return std::nullopt;
  if (!mpz_perfect_square_p(r.gmp().get_den_mpz_t())) return std::nullopt;
  auto [n, n_exact] = int_sqrt(r.num());
  auto [d, d_exact] = int_sqrt(r.den());
  if (!n_exact || !d_exact) return std::nullopt;
  return Rat(n, d);
}

}  // namespace dq

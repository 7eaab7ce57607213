#pragma once

// Exact scalars and small vector helpers shared by every module.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace horo {

using Integer = mpz_class;
using Rational = mpq_class;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Integer>;
using LatticeVector = std::vector<std::int64_t>;

// Thrown when an operation's precondition on its arguments is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when input data is well-formed but semantically invalid, or when a
// result that must be an integer is not.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Never expected for valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q". Result is canonical.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, 1);
  q /= d;
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

inline QVec to_qvec(const LatticeVector& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline LatticeVector to_lattice_vector(const QVec& v) {
  LatticeVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x)) throw DomainError("non-integral coordinate " + to_string(x));
    out.push_back(to_int64(x.get_num()));
  }
  return out;
}

inline QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec scale(const QVec& a, const Rational& k) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Lexicographic order on equal-length vectors.
inline bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

inline Integer lcm_of_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace horo

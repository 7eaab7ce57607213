#pragma once

#include <map>
#include <sstream>

#include "horo/rational.hpp"

namespace horo {

// Multivariate polynomial with rational coefficients. Zero coefficients are
// never stored.
class Polynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t i) {
    Polynomial p(num_vars);
    Exponent e(num_vars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
  }

  // c + sum coeffs[i] x_i
  static Polynomial affine(const QVec& coeffs, const Rational& c) {
    Polynomial p = constant(coeffs.size(), c);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p += variable(coeffs.size(), i) * coeffs[i];
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars_) throw DomainError("exponent vector has wrong length");
    for (int x : e)
      if (x < 0) throw DomainError("negative exponent");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      if (d < 0) d = degree_of(e);
      if (degree_of(e) != d) return false;
    }
    return true;
  }

  Polynomial homogeneous_component(int degree) const {
    Polynomial p(num_vars_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == degree) p.terms_.emplace(e, c);
    return p;
  }

  std::map<int, Polynomial> homogeneous_components() const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
      auto& p = out.try_emplace(degree_of(e), Polynomial(num_vars_)).first->second;
      p.terms_.emplace(e, c);
    }
    return out;
  }

  Polynomial top_component() const { return homogeneous_component(total_degree()); }

  Rational evaluate(const QVec& x) const {
    if (x.size() != num_vars_) throw DomainError("evaluate: wrong number of arguments");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  // Substitutes x_i := subs[i]; all substitutes share one variable count.
  Polynomial compose(const std::vector<Polynomial>& subs) const {
    if (subs.size() != num_vars_) throw DomainError("compose: wrong number of substitutes");
    const std::size_t m = subs.empty() ? 0 : subs.front().num_vars();
    std::vector<std::vector<Polynomial>> powers(num_vars_);
    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(m, c);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(m, 1));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
        t = t * pw[e[i]];
      }
      out += t;
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial p(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.num_vars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    }
    return p;
  }

  friend Polynomial operator*(Polynomial a, const Rational& k) {
    if (sgn(k) == 0) return Polynomial(a.num_vars_);
    for (auto& [e, c] : a.terms_) c *= k;
    return a;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      Rational a = abs(c);
      bool constant_term = degree_of(e) == 0;
      bool need_star = false;
      if (a != 1 || constant_term) {
        os << a.get_str();
        need_star = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        need_star = true;
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  static int degree_of(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  void check_vars(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw DomainError("polynomial variable count mismatch");
  }

  std::size_t num_vars_ = 0;
  Terms terms_;
};

}  // namespace horo

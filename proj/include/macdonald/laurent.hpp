// Laurent polynomials in one formal variable x over Scalar, plus the
// bivariate variant in x1, x2 used for the GL2 picture.  The bivariate
// exponents are stored doubled so the substitution x1 = y x, x2 = y x^{-1}
// is exact integer bookkeeping even through half-integer intermediates.

#pragma once

#include <map>
#include <string>

#include "macdonald/scalar.hpp"

namespace macdonald {

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return term(0, Scalar::one()); }
  static LaurentPoly x(int k = 1) { return term(k, Scalar::one()); }
  static LaurentPoly term(int k, Scalar c) {
    LaurentPoly p;
    if (!c.is_zero()) p.coeffs_.emplace(k, std::move(c));
    return p;
  }

  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Scalar::zero() : it->second;
  }
  int min_exp() const { return coeffs_.begin()->first; }
  int max_exp() const { return coeffs_.rbegin()->first; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ka, ca] : coeffs_)
      for (const auto& [kb, cb] : o.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  LaurentPoly operator*(const Scalar& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, cc] : coeffs_) {
      Scalar p = cc * c;
      if (!p.is_zero()) r.coeffs_.emplace(k, std::move(p));
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto a = coeffs_.begin();
    auto b = o.coeffs_.begin();
    for (; a != coeffs_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  void add_term(int k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

 private:
  std::map<int, Scalar> coeffs_;
};

inline LaurentPoly operator*(const Scalar& c, const LaurentPoly& p) { return p * c; }

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// x -> x^{-1}
inline LaurentPoly bar_involution(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [k, c] : a.coeffs()) r.add_term(-k, c);
  return r;
}

// Bivariate Laurent polynomial in x1, x2.  Keys store doubled exponents:
// key (a, b) represents x1^{a/2} x2^{b/2}.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;

  static LaurentPoly2 zero() { return {}; }
  static LaurentPoly2 one() { return term2(0, 0, Scalar::one()); }
  // doubled-exponent term
  static LaurentPoly2 term2(int a2, int b2, Scalar c) {
    LaurentPoly2 p;
    if (!c.is_zero()) p.coeffs_.emplace(std::pair{a2, b2}, std::move(c));
    return p;
  }
  // integer-exponent term x1^a x2^b
  static LaurentPoly2 term(int a, int b, Scalar c) { return term2(2 * a, 2 * b, std::move(c)); }

  const std::map<std::pair<int, int>, Scalar>& coeffs2() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // true when every exponent pair is integral (doubled entries all even)
  bool integral() const {
    for (const auto& [k, c] : coeffs_)
      if (k.first % 2 != 0 || k.second % 2 != 0) return false;
    return true;
  }

  LaurentPoly2 operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term2(k.first, k.second, c);
    return r;
  }
  LaurentPoly2 operator-() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
  }
  LaurentPoly2 operator-(const LaurentPoly2& o) const { return *this + (-o); }
  LaurentPoly2 operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (const auto& [ka, ca] : coeffs_)
      for (const auto& [kb, cb] : o.coeffs_)
        r.add_term2(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  LaurentPoly2 operator*(const Scalar& c) const {
    LaurentPoly2 r;
    if (c.is_zero()) return r;
    for (const auto& [k, cc] : coeffs_) {
      Scalar p = cc * c;
      if (!p.is_zero()) r.coeffs_.emplace(k, std::move(p));
    }
    return r;
  }

  bool operator==(const LaurentPoly2& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto a = coeffs_.begin();
    auto b = o.coeffs_.begin();
    for (; a != coeffs_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

  void add_term2(int a2, int b2, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(std::pair{a2, b2}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  // substitute x1 = x, x2 = x^{-1}  (the y = 1 slice of eq-varchange)
  LaurentPoly slice_sl2() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) {
      int e2 = k.first - k.second;  // doubled exponent of x
      if (e2 % 2 != 0) throw InternalError("half-integral exponent in slice_sl2");
      r.add_term(e2 / 2, c);
    }
    return r;
  }

 private:
  std::map<std::pair<int, int>, Scalar> coeffs_;
};

}  // namespace macdonald

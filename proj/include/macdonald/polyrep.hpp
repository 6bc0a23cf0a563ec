// The polynomial representation of the rank-1 double affine Hecke algebra.
//
// Operators act on C[x,x^{-1}] with basis {x^k 1_Y}:
//
//   T_pi x^r = q^{r/2} x^{-r}
//   T_1  x^r = t^{1/2} x^{-r} + (t^{1/2}-t^{-1/2}) (x^r-x^{-r})/(1-x^2)
//   Y        = T_pi T_1
//
// (x^r-x^{-r})/(1-x^2) is expanded as the finite geometric sum
// -(x^{r-2}+x^{r-4}+...+x^{-r}) for r>0, so no division in x ever occurs.
//
// E-basis expansions use the elimination order 0 < 1 < -1 < 2 < -2 < ...;
// E_n = x^n + strictly earlier monomials, with pivot coefficient exactly 1.
//
// Functions of Y act diagonally in the E-basis through z = Y^{-2}, whose
// eigenvalue is t q^n on E_n (n>0) and t^{-1} q^{-|n|} on E_{-|n|}.

#pragma once

#include <map>
#include <vector>

#include "macdonald/macdonald.hpp"

namespace macdonald {

inline LaurentPoly apply_Tpi(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [k, c] : f.coeffs()) r.add_term(-k, c * Scalar::uvsz(0, k));
  return r;
}

inline LaurentPoly apply_T1(const LaurentPoly& f) {
  LaurentPoly r;
  const Scalar thalf = Scalar::uvsz(1, 0);
  const Scalar tdiff = Scalar::uvsz(1, 0) - Scalar::uvsz(-1, 0);
  for (const auto& [k, c] : f.coeffs()) {
    r.add_term(-k, c * thalf);
    if (k > 0) {
      Scalar d = -(c * tdiff);
      for (int e = k - 2; e >= -k; e -= 2) r.add_term(e, d);
    } else if (k < 0) {
      Scalar d = c * tdiff;
      for (int e = k; e <= -k - 2; e += 2) r.add_term(e, d);
    }
  }
  return r;
}

// T_1^{-1} = T_1 - (t^{1/2} - t^{-1/2}), from the quadratic relation
inline LaurentPoly apply_T1_inv(const LaurentPoly& f) {
  return apply_T1(f) - f * (Scalar::uvsz(1, 0) - Scalar::uvsz(-1, 0));
}

inline LaurentPoly apply_Y(const LaurentPoly& f) { return apply_Tpi(apply_T1(f)); }

inline LaurentPoly apply_X(const LaurentPoly& f, int k = 1) {
  LaurentPoly r;
  for (const auto& [e, c] : f.coeffs()) r.add_term(e + k, c);
  return r;
}

// intertwiners in the X-basis route
inline LaurentPoly apply_taupi_x(const LaurentPoly& f) { return apply_X(apply_T1(f)); }

// bosonic symmetrizer 1_0 = T_1 + t^{-1/2}
inline LaurentPoly apply_one0(const LaurentPoly& f) {
  return apply_T1(f) + f * Scalar::uvsz(-1, 0);
}

// ---- E-basis ---------------------------------------------------------------

// An element of the polynomial representation written in the electronic
// basis: finite map E-index n -> Scalar.
class EVector {
 public:
  EVector() = default;
  static EVector unit(int n, Scalar c = Scalar::one()) {
    EVector e;
    if (!c.is_zero()) e.entries_.emplace(n, std::move(c));
    return e;
  }

  const std::map<int, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar entry(int n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Scalar::zero() : it->second;
  }

  void add(int n, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries_.try_emplace(n, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  EVector operator+(const EVector& o) const {
    EVector r = *this;
    for (const auto& [n, c] : o.entries_) r.add(n, c);
    return r;
  }
  EVector operator-(const EVector& o) const {
    EVector r = *this;
    for (const auto& [n, c] : o.entries_) r.add(n, -c);
    return r;
  }
  EVector operator*(const Scalar& c) const {
    EVector r;
    if (c.is_zero()) return r;
    for (const auto& [n, cc] : entries_) {
      Scalar p = cc * c;
      if (!p.is_zero()) r.entries_.emplace(n, std::move(p));
    }
    return r;
  }

  bool operator==(const EVector& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    for (; a != entries_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const EVector& o) const { return !(*this == o); }

 private:
  std::map<int, Scalar> entries_;
};

inline EVector operator*(const Scalar& c, const EVector& e) { return e * c; }

namespace detail {
// position of n in the elimination order 0 < 1 < -1 < 2 < -2 < ...
inline int e_rank(int n) { return n > 0 ? 2 * n - 1 : -2 * n; }
}  // namespace detail

inline EVector to_E_basis(LaurentPoly f) {
  EVector e;
  while (!f.is_zero()) {
    int pivot = 0;
    bool first = true;
    for (const auto& [k, c] : f.coeffs()) {
      if (first || detail::e_rank(k) > detail::e_rank(pivot)) pivot = k;
      first = false;
    }
    Scalar c = f.coeff(pivot);
    LaurentPoly en = E_poly(pivot);
    if (!en.coeff(pivot).is_one())
      throw InternalError("E-basis pivot coefficient is not 1");
    f = f - en * c;
    if (!f.coeff(pivot).is_zero())
      throw InternalError("E-basis elimination failed to clear pivot");
    e.add(pivot, c);
  }
  return e;
}

inline LaurentPoly from_E_basis(const EVector& e) {
  LaurentPoly f;
  for (const auto& [n, c] : e.entries()) f = f + E_poly(n) * c;
  return f;
}

// z = Y^{-2} eigenvalue substitution at E_n
inline Bindings z_eigenvalue(int n) {
  Bindings b;
  b[Var::z] = SignedMonomial{1, n > 0 ? Monomial::of(2, 2 * n) : Monomial::of(-2, 2 * n)};
  return b;
}

// Diagonal action of g(z) on the E-basis.
inline EVector apply_Y_function(const Scalar& g, const EVector& e) {
  EVector r;
  for (const auto& [n, c] : e.entries()) r.add(n, c * g.substitute(z_eigenvalue(n)));
  return r;
}

// ---- intertwiner and eta ladders -------------------------------------------

// tau^vee_1: E_r -> t^{-1/2} E_{-r} (r>0), E_0 -> 0,
//            E_{-r} -> t^{-1/2} W(t q^r) E_r with
//            W(z) = (1-t z^{-1})(1-t z)/((1-z^{-1})(1-z))
inline EVector apply_tau1(const EVector& e) {
  EVector r;
  for (const auto& [n, c] : e.entries()) {
    if (n == 0) continue;
    if (n > 0) {
      r.add(-n, c * Scalar::uvsz(-1, 0));
    } else {
      // W(z) at z = t q^m: (1-q^{-m})(1-t^2 q^m) / ((1-t^{-1}q^{-m})(1-t q^m))
      int m = -n;
      Scalar w = Scalar::one_minus(0, -2 * m) * Scalar::one_minus(4, 2 * m) /
                 (Scalar::one_minus(-2, -2 * m) * Scalar::one_minus(2, 2 * m));
      r.add(m, c * Scalar::uvsz(-1, 0) * w);
    }
  }
  return r;
}

// tau^vee_pi: E_r -> t^{-1/2} E_{-(r-1)} (r>0), E_{-r} -> t^{1/2} E_{r+1} (r>=0)
inline EVector apply_taupi(const EVector& e) {
  EVector r;
  for (const auto& [n, c] : e.entries()) {
    if (n > 0)
      r.add(-(n - 1), c * Scalar::uvsz(-1, 0));
    else
      r.add(-n + 1, c * Scalar::uvsz(1, 0));
  }
  return r;
}

// eta ladder, entrywise:
//   eta E_m    = t^{-1/2} (1-tq^m)/(1-q^m)     E_{m+1}   (m>0)
//   eta E_{-m} = t^{1/2}  (1-q^m)/(1-tq^m)     E_{-m+1}  (m>=0; zero at m=0)
inline EVector apply_eta(const EVector& e) {
  EVector r;
  for (const auto& [n, c] : e.entries()) {
    if (n > 0) {
      r.add(n + 1, c * Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 2 * n) /
                       Scalar::one_minus(0, 2 * n));
    } else if (n < 0) {
      int m = -n;
      r.add(n + 1, c * Scalar::uvsz(1, 0) * Scalar::one_minus(0, 2 * m) /
                       Scalar::one_minus(2, 2 * m));
    }
    // eta E_0 = 0
  }
  return r;
}

//   eta^{-1} E_m    = t^{1/2}  (1-q^{m-1})/(1-tq^{m-1}) E_{m-1}  (m>0; zero at m=1)
//   eta^{-1} E_{-m} = t^{-1/2} (1-tq^{m+1})/(1-q^{m+1}) E_{-m-1} (m>=0)
inline EVector apply_eta_inv(const EVector& e) {
  EVector r;
  for (const auto& [n, c] : e.entries()) {
    if (n > 0) {
      if (n == 1) continue;  // eta^{-1} E_1 = 0
      r.add(n - 1, c * Scalar::uvsz(1, 0) * Scalar::one_minus(0, 2 * (n - 1)) /
                       Scalar::one_minus(2, 2 * (n - 1)));
    } else {
      int m = -n;
      r.add(n - 1, c * Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 2 * (m + 1)) /
                       Scalar::one_minus(0, 2 * (m + 1)));
    }
  }
  return r;
}

// normalized intertwiners as compositions (one source of truth):
//   eta_{s_1} = t^{1/2} (1-z)/(1-tz) tau^vee_1,   eta_pi = tau^vee_pi
inline EVector apply_eta_s1(const EVector& e) {
  static const Scalar g = Scalar::uvsz(1, 0) * Scalar::one_minus(0, 0, 0, 1) /
                          Scalar::one_minus(2, 0, 0, 1);
  return apply_Y_function(g, apply_tau1(e));
}
inline EVector apply_eta_pi(const EVector& e) { return apply_taupi(e); }

// 1_0 in the E-basis: tau^vee_1 + t^{-1/2}(1-t z^{-1})/(1-z^{-1}) as diagonal
inline EVector apply_one0_E(const EVector& e) {
  static const Scalar g = Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 0, 0, -1) /
                          Scalar::one_minus(0, 0, 0, -1);
  return apply_tau1(e) + apply_Y_function(g, e);
}

// ---- recursive constructors -------------------------------------------------

// E_m built from E_0 = 1, E_1 = x with the intertwiner ladder:
//   E_{-r}  = t^{1/2} tau^vee_1 E_r,     E_{r+1} = t^{-1/2} tau^vee_pi E_{-r}
// entirely in the X-basis; the Y-function part of tau^vee_1 becomes the
// scalar t^{-1/2}(1-t)/(1-tq^r) at E_r's eigenvalue.
inline LaurentPoly E_poly_recursive(int m) {
  if (m == 0) return LaurentPoly::one();
  if (m == 1) return LaurentPoly::x();
  if (m < 0) {
    int r = -m;
    LaurentPoly er = E_poly_recursive(r);
    Scalar c = Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 0) / Scalar::one_minus(2, 2 * r);
    return (apply_T1(er) + er * c) * Scalar::uvsz(1, 0);
  }
  LaurentPoly eneg = E_poly_recursive(-(m - 1));
  return apply_taupi_x(eneg) * Scalar::uvsz(-1, 0);
}

// P_m from E_{+-m}: the eigenvector route of eq-Pdefn.
inline LaurentPoly P_from_E(int m) {
  if (m < 0) throw NegativeIndex("P_from_E index must be nonnegative");
  if (m == 0) return LaurentPoly::one();
  Scalar c = Scalar::uvsz(2, 0) * Scalar::one_minus(0, 2 * m) / Scalar::one_minus(2, 2 * m);
  return E_poly(-m) + E_poly(m) * c;
}

// P_m through the symmetrizer: P_m = t^{1/2} (T_1 + t^{-1/2}) E_m, valid for
// m >= 1 (at m = 0 the symmetrizer scales 1 by t^{1/2}+t^{-1/2} instead).
inline LaurentPoly P_from_E_symmetrizer(int m) {
  if (m < 0) throw NegativeIndex("P_from_E index must be nonnegative");
  if (m == 0) return LaurentPoly::one();
  LaurentPoly em = E_poly(m);
  return apply_T1(em) * Scalar::uvsz(1, 0) + em;
}

}  // namespace macdonald

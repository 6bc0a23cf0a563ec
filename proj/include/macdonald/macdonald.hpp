// Closed formulas for the type-SL2 electronic (E_m) and bosonic (P_m)
// Macdonald polynomials and the q-Pochhammer / q-t-binomial toolkit:
//
//   (a;q)_j   = (1-a)(1-qa)...(1-q^{j-1}a)
//   [l j]_qt  = ((q;q)_l/(t;q)_l) / ( (q;q)_j/(t;q)_j * (q;q)_{l-j}/(t;q)_{l-j} )
//   {l j}_qt  = [l j]_qt * (1-tq^{l-j})/(1-tq^l)
//
//   E_{-l}(x) = sum_j [l j]_qt (1-tq^j)/(1-tq^l) x^{l-2j}
//   E_l(x)    = sum_{j<l} [l-1 j]_qt q^{l-1-j}(1-tq^j)/(1-tq^{l-1}) x^{-l+2j+2}
//   P_l(x)    = sum_j [l j]_qt x^{l-2j}
//
// with t = u^2 and q = v^2.

#pragma once

#include <string>

#include "macdonald/laurent.hpp"
#include "macdonald/scalar.hpp"

namespace macdonald {

// (f; q)_j
inline Scalar pochhammer(const Scalar& f, int j) {
  if (j < 0) throw IndexOutOfRange("pochhammer order must be nonnegative");
  Scalar r = Scalar::one();
  for (int i = 0; i < j; ++i) r *= Scalar::one() - f * Scalar::uvsz(0, 2 * i);
  return r;
}

// (t q^a ; q)_j and (q^a ; q)_j, the two shapes every formula here uses
inline Scalar poch_t(int a, int j) { return pochhammer(Scalar::uvsz(2, 2 * a), j); }
inline Scalar poch_q(int a, int j) { return pochhammer(Scalar::uvsz(0, 2 * a), j); }

inline Scalar qt_binom(int l, int j) {
  if (j < 0 || j > l) throw IndexOutOfRange("qt_binom needs 0 <= j <= l");
  Scalar num = poch_q(1, l) * poch_t(0, j) * poch_t(0, l - j);
  Scalar den = poch_t(0, l) * poch_q(1, j) * poch_q(1, l - j);
  return num / den;
}

inline Scalar shifted_qt_binom(int l, int j) {
  if (j < 0 || j > l) throw IndexOutOfRange("shifted_qt_binom needs 0 <= j <= l");
  return qt_binom(l, j) * Scalar::one_minus(2, 2 * (l - j)) / Scalar::one_minus(2, 2 * l);
}

inline LaurentPoly E_poly(int m) {
  if (m == 0) return LaurentPoly::one();
  LaurentPoly r;
  if (m < 0) {
    int l = -m;
    Scalar den = Scalar::one_minus(2, 2 * l);
    for (int j = 0; j <= l; ++j)
      r.add_term(l - 2 * j, qt_binom(l, j) * Scalar::one_minus(2, 2 * j) / den);
  } else {
    int l = m;
    Scalar den = Scalar::one_minus(2, 2 * (l - 1));
    for (int j = 0; j <= l - 1; ++j)
      r.add_term(-l + 2 * j + 2, qt_binom(l - 1, j) * Scalar::uvsz(0, 2 * (l - 1 - j)) *
                                     Scalar::one_minus(2, 2 * j) / den);
  }
  return r;
}

inline LaurentPoly P_poly(int m) {
  if (m < 0) throw NegativeIndex("P_poly index must be nonnegative");
  LaurentPoly r;
  for (int j = 0; j <= m; ++j) r.add_term(m - 2 * j, qt_binom(m, j));
  return r;
}

}  // namespace macdonald

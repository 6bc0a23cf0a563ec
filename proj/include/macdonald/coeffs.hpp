// Closed product formulas and recursions for the transition coefficients
//
//   E_l(X) 1_0      = sum_j eta^{l-2j}  D_j^{(l-1)}(Y) 1_0
//   E_{-l}(X) 1_0   = sum_j eta^{-l+2j} D_j^{(-l)}(Y) 1_0
//   1_0 E_l(X) 1_0  = sum_j 1_0 eta^{l-2j} K_j^{(l)}(Y)
//
// together with the universal product coefficients A, B, C whose ev_m values
// give the expansions of E_l P_m and P_l P_m for every m at once.
//
// Every Y-function is a Scalar in {u, v, z} with z = Y^{-2};
// g(Y) -> g(Y^{-1}) is z -> z^{-1} and g(Y) -> g(q^{k/2} Y) is z -> q^{-k} z.

#pragma once

#include <optional>
#include <vector>

#include "macdonald/macdonald.hpp"

namespace macdonald {

// (t^{te} z q^{a}; q)_j
inline Scalar poch_tz(int te, int a, int j) {
  if (j < 0) throw IndexOutOfRange("pochhammer order must be nonnegative");
  Scalar r = Scalar::one();
  for (int i = 0; i < j; ++i) r *= Scalar::one_minus(2 * te, 2 * (a + i), 0, 1);
  return r;
}

// 1 - t^{te} q^{a} z^{ze}
inline Scalar omtqz(int te, int a, int ze = 0) {
  return Scalar::one_minus(2 * te, 2 * a, 0, ze);
}

// Y-binomial (l j)_Y
inline Scalar y_binom(int l, int j) {
  if (j < 0 || j > l) throw IndexOutOfRange("y_binom needs 0 <= j <= l");
  return poch_tz(-1, -(j - 1), l - j) * poch_tz(1, l - 2 * j, j) /
         (poch_tz(0, 1, l - j) * poch_tz(0, -j, j));
}

// D_j^{(l)}(Y), l >= 0
inline Scalar D_coeff(int l, int j) {
  if (l < 0 || j < 0 || j > l) throw IndexOutOfRange("D_coeff needs 0 <= j <= l");
  return Scalar::uvsz(-(l + 1) + 2 * (l - j), 0) * qt_binom(l, j) * y_binom(l, j) *
         omtqz(1, l - j) / omtqz(1, l) * omtqz(1, l - j, 1) / omtqz(1, l - 2 * j, 1);
}

// D_j^{(-l)}(Y), l >= 1
inline Scalar D_neg_coeff(int l, int j) {
  if (l < 1 || j < 0 || j > l) throw IndexOutOfRange("D_neg_coeff needs l >= 1, 0 <= j <= l");
  return Scalar::uvsz(-l + 2 * j, 2 * j) * qt_binom(l, j) * y_binom(l, l - j) *
         omtqz(1, l - j) / omtqz(1, l) * omtqz(-1, -(l - j), 1) / omtqz(-1, -(l - 2 * j), 1);
}

// K_j^{(l)}(Y), l >= 0; K_0^{(0)} = t^{1/2} + t^{-1/2}
inline Scalar K_coeff(int l, int j) {
  if (l < 0 || j < 0 || j > l) throw IndexOutOfRange("K_coeff needs 0 <= j <= l");
  if (l == 0) return Scalar::uvsz(1, 0) + Scalar::uvsz(-1, 0);
  return Scalar::uvsz(-(l - 1) + 2 * (l - 1 - j), 0) * qt_binom(l, j) * y_binom(l, j) *
         omtqz(0, l - 2 * j, 1) / omtqz(-1, l - 2 * j, 1) * omtqz(-1, 0, 1) / omtqz(0, 0, 1);
}

// The D Pascal-triangle recursion: all rows up to lmax, seeded by
// D_0^{(0)} = t^{-1/2}.
//
//   D_0^{(l)} = t^{1/2} (1-t^{-1}zq^l)/(1-zq^l) D_0^{(l-1)}(z)
//   D_l^{(l)} = t^{-1/2} (1-t)(1-tz) / ((1-tq^l)(1-zq^{-l})) D_0^{(l-1)}(z^{-1})
//   D_j^{(l)} = t^{1/2} (1-t^{-1}zq^{l-2j})/(1-zq^{l-2j}) D_j^{(l-1)}(z)
//             + t^{-1/2} (1-t)(1-t z q^{2(l-j)}) / ((1-tq^l)(1-zq^{l-2j})) D_{l-j}^{(l-1)}(z^{-1})
inline std::vector<std::vector<Scalar>> D_table(int lmax) {
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({Scalar::uvsz(-1, 0)});
  const Scalar thalf = Scalar::uvsz(1, 0), tnhalf = Scalar::uvsz(-1, 0);
  for (int l = 1; l <= lmax; ++l) {
    const auto& prev = rows.back();
    std::vector<Scalar> row(l + 1);
    for (int j = 0; j <= l; ++j) {
      Scalar val = Scalar::zero();
      if (j < l)
        val += thalf * omtqz(-1, l - 2 * j, 1) / omtqz(0, l - 2 * j, 1) * prev[j];
      if (j > 0)
        val += tnhalf * omtqz(1, 0) * omtqz(1, 2 * (l - j), 1) /
               (omtqz(1, l) * omtqz(0, l - 2 * j, 1)) * prev[l - j].invert_z();
      row[j] = val;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Scalar D_coeff_recursive(int l, int j) {
  if (l < 0 || j < 0 || j > l) throw IndexOutOfRange("D_coeff_recursive needs 0 <= j <= l");
  return D_table(l)[l][j];
}

// K_j^{(l)} from the D row one level down (eq-Krec):
//   K_0^{(l)} = t^{1/2} D_0^{(l-1)}(z)      (1-t^{-1}z)/(1-z)
//   K_l^{(l)} = t^{-1/2} D_0^{(l-1)}(z^{-1}) (1-tzq^{-l})/(1-t^{-1}zq^{-l}) (1-t^{-1}z)/(1-z)
//   K_j^{(l)} = t^{1/2} D_j^{(l-1)}(z) (1-t^{-1}z)/(1-z)
//             + t^{-1/2} D_{l-j}^{(l-1)}(z^{-1}) (1-tzq^{l-2j})/(1-t^{-1}zq^{l-2j}) (1-t^{-1}z)/(1-z)
inline Scalar K_from_D(int l, int j) {
  if (l < 0 || j < 0 || j > l) throw IndexOutOfRange("K_from_D needs 0 <= j <= l");
  if (l == 0) return Scalar::uvsz(1, 0) + Scalar::uvsz(-1, 0);
  auto rows = D_table(l - 1);
  const auto& d = rows[l - 1];
  const Scalar cfun = omtqz(-1, 0, 1) / omtqz(0, 0, 1);
  Scalar val = Scalar::zero();
  if (j < l) val += Scalar::uvsz(1, 0) * d[j] * cfun;
  if (j > 0)
    val += Scalar::uvsz(-1, 0) * d[l - j].invert_z() * omtqz(1, l - 2 * j, 1) /
           omtqz(-1, l - 2 * j, 1) * cfun;
  return val;
}

// ---- universal product coefficients ----------------------------------------

// C_j^{(l)}(Y) = [l j]_qt (t^{-1}zq^{-(j-1)};q)_j (tzq^{l-2j};q)_j
//                        / ((zq^{l-2j+1};q)_j (zq^{-j};q)_j)
inline Scalar C_coeff(int l, int j) {
  if (l < 0 || j < 0 || j > l) throw IndexOutOfRange("C_coeff needs 0 <= j <= l");
  return qt_binom(l, j) * poch_tz(-1, -(j - 1), j) * poch_tz(1, l - 2 * j, j) /
         (poch_tz(0, l - 2 * j + 1, j) * poch_tz(0, -j, j));
}

// A_j^{(l)}(Y) = [l j]_qt (1-q^{l-j})/(1-q^l)
//               (t^{-1}zq^{-(j-1)};q)_j (tzq^{l-2j};q)_j
//             / ((zq^{-j};q)_j (zq^{l-2j};q)_j)
inline Scalar A_coeff(int l, int j) {
  if (l < 1 || j < 0 || j > l - 1) throw IndexOutOfRange("A_coeff needs 0 <= j <= l-1");
  return qt_binom(l, j) * omtqz(0, l - j) / omtqz(0, l) * poch_tz(-1, -(j - 1), j) *
         poch_tz(1, l - 2 * j, j) / (poch_tz(0, -j, j) * poch_tz(0, l - 2 * j, j));
}

// B_j^{(l)}(Y) = q^j [l j]_qt (1-q^{l-j})/(1-q^l)
//               (t^{-1}zq^{-(l-j-1)};q)_{l-j} (tzq^{-(l-2j-1)};q)_{l-j-1}
//             / ((zq^{-(l-2j-1)};q)_{l-j} (zq^{-(l-j-1)};q)_{l-j-1})
inline Scalar B_coeff(int l, int j) {
  if (l < 1 || j < 0 || j > l - 1) throw IndexOutOfRange("B_coeff needs 0 <= j <= l-1");
  return Scalar::uvsz(0, 2 * j) * qt_binom(l, j) * omtqz(0, l - j) / omtqz(0, l) *
         poch_tz(-1, -(l - j - 1), l - j) * poch_tz(1, -(l - 2 * j - 1), l - j - 1) /
         (poch_tz(0, -(l - 2 * j - 1), l - j) * poch_tz(0, -(l - j - 1), l - j - 1));
}

// ---- evaluation -------------------------------------------------------------

// ev_m: z -> t q^m = u^2 v^{2m}
inline Bindings ev_bindings(int m) {
  return Bindings{{Var::z, SignedMonomial{1, Monomial::of(2, 2 * m)}}};
}
// symbolic m: z -> t q^m = u^2 s
inline Bindings ev_bindings_symbolic() {
  return Bindings{{Var::z, SignedMonomial{1, Monomial::of(2, 0, 1)}}};
}

inline Scalar ev(const Scalar& f, int m) { return f.substitute(ev_bindings(m)); }
inline Scalar ev_symbolic(const Scalar& f) { return f.substitute(ev_bindings_symbolic()); }

}  // namespace macdonald

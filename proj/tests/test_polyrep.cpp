#include "macdonald/polyrep.hpp"

#include <functional>

#include <catch2/catch_amalgamated.hpp>

using namespace macdonald;

namespace {
Scalar t(int k = 1) { return Scalar::uvsz(2 * k, 0); }
Scalar q(int k = 1) { return Scalar::uvsz(0, 2 * k); }
Scalar thalf(int k = 1) { return Scalar::uvsz(k, 0); }
Scalar om(const Scalar& a) { return Scalar::one() - a; }

using Op = std::function<LaurentPoly(const LaurentPoly&)>;

// operator equality on the span {x^k : |k| <= range}
void check_ops_equal(const Op& a, const Op& b, int range) {
  for (int k = -range; k <= range; ++k) {
    LaurentPoly xk = LaurentPoly::x(k);
    CHECK(a(xk) == b(xk));
  }
}

using EOp = std::function<EVector(const EVector&)>;

void check_eops_equal(const EOp& a, const EOp& b, int range,
                      const std::vector<int>& skip = {}) {
  for (int n = -range; n <= range; ++n) {
    if (std::find(skip.begin(), skip.end(), n) != skip.end()) continue;
    EVector en = EVector::unit(n);
    CHECK(a(en) == b(en));
  }
}
}  // namespace

TEST_CASE("T1 and Tpi pointwise actions") {
  CHECK(apply_T1(LaurentPoly::one()) == LaurentPoly::term(0, thalf()));
  CHECK(apply_Tpi(LaurentPoly::x()) == LaurentPoly::term(-1, Scalar::uvsz(0, 1)));
  CHECK(apply_Tpi(LaurentPoly::one()) == LaurentPoly::one());
  CHECK(apply_Tpi(LaurentPoly::x(-2)) == LaurentPoly::term(2, Scalar::uvsz(0, -2)));
}

TEST_CASE("quadratic relation (T1 - t^{1/2})(T1 + t^{-1/2}) = 0") {
  for (int k = -10; k <= 10; ++k) {
    LaurentPoly f = LaurentPoly::x(k);
    LaurentPoly g = apply_T1(f) + f * Scalar::uvsz(-1, 0);   // (T1 + t^{-1/2}) f
    LaurentPoly h = apply_T1(g) - g * Scalar::uvsz(1, 0);    // (T1 - t^{1/2}) g
    CHECK(h.is_zero());
  }
}

TEST_CASE("braid-type relations") {
  // T1 X T1 = X^{-1}
  check_ops_equal([](const LaurentPoly& f) { return apply_T1(apply_X(apply_T1(f))); },
                  [](const LaurentPoly& f) { return apply_X(f, -1); }, 9);
  // T_pi X T_pi^{-1} = q^{1/2} X^{-1}; on the representation T_pi^2 = 1
  check_ops_equal(
      [](const LaurentPoly& f) { return apply_Tpi(apply_X(apply_Tpi(f))); },
      [](const LaurentPoly& f) { return apply_X(f, -1) * Scalar::uvsz(0, 1); }, 9);
  // T_pi T_pi = 1
  check_ops_equal([](const LaurentPoly& f) { return apply_Tpi(apply_Tpi(f)); },
                  [](const LaurentPoly& f) { return f; }, 10);
  // T1 T1^{-1} = 1
  check_ops_equal([](const LaurentPoly& f) { return apply_T1(apply_T1_inv(f)); },
                  [](const LaurentPoly& f) { return f; }, 10);
}

TEST_CASE("Y eigenvalues on E_m") {
  CHECK(apply_Y(E_poly(1)) == E_poly(1) * Scalar::uvsz(-1, -1));
  CHECK(apply_Y(LaurentPoly::one()) == LaurentPoly::term(0, thalf()));
  CHECK(apply_Y(E_poly(-1)) == E_poly(-1) * Scalar::uvsz(1, 1));
  for (int n = -10; n <= 10; ++n) {
    Scalar eig = n > 0 ? Scalar::uvsz(-1, -n) : Scalar::uvsz(1, -n);
    CHECK(apply_Y(E_poly(n)) == E_poly(n) * eig);
  }
}

TEST_CASE("E basis elimination") {
  EVector e = to_E_basis(LaurentPoly::x(2));
  CHECK(e.entry(2) == Scalar::one());
  CHECK(e.entry(0) == -(q() * om(t()) / om(q() * t())));
  CHECK(e.entries().size() == 2);

  CHECK(to_E_basis(E_poly(3)) == EVector::unit(3));
  CHECK(to_E_basis(LaurentPoly::zero()).is_zero());

  for (int n = -8; n <= 8; ++n) {
    EVector v = EVector::unit(n, Scalar(3));
    CHECK(to_E_basis(from_E_basis(v)) == v);
  }
}

TEST_CASE("diagonal Y-function action") {
  CHECK(apply_Y_function(Scalar::uvsz(0, 0, 0, 1), EVector::unit(2)) ==
        EVector::unit(2, t() * q(2)));
  // (1 - t^{-1} z)/(1 - z) on E_m equals (1-q^m)/(1-tq^m)
  Scalar g = Scalar::one_minus(-2, 0, 0, 1) / Scalar::one_minus(0, 0, 0, 1);
  for (int m = 1; m <= 6; ++m)
    CHECK(apply_Y_function(g, EVector::unit(m)) ==
          EVector::unit(m, om(q(m)) / om(t() * q(m))));
  EVector rnd = EVector::unit(3, t()) + EVector::unit(-2, q());
  CHECK(apply_Y_function(Scalar::one(), rnd) == rnd);
}

TEST_CASE("intertwiner ladder values") {
  CHECK(apply_tau1(EVector::unit(0)).is_zero());
  CHECK(apply_taupi(EVector::unit(0)) == EVector::unit(1, thalf()));
  CHECK(apply_taupi(EVector::unit(1)) == EVector::unit(0, thalf(-1)));
  // (tau_pi)^2 = 1
  check_eops_equal([](const EVector& e) { return apply_taupi(apply_taupi(e)); },
                   [](const EVector& e) { return e; }, 8);
}

TEST_CASE("tau1 cross-route consistency") {
  // tau1 = T1 + t^{-1/2}(1-t)/(1-z) as X-basis operator + diagonal
  auto tau1_route = [](const EVector& e) {
    LaurentPoly f = from_E_basis(e);
    Scalar g = Scalar::uvsz(-1, 0) * om(t()) / Scalar::one_minus(0, 0, 0, 1);
    return to_E_basis(apply_T1(f)) + apply_Y_function(g, e);
  };
  check_eops_equal(tau1_route, [](const EVector& e) { return apply_tau1(e); }, 8);
}

TEST_CASE("taupi cross-route consistency") {
  auto taupi_route = [](const EVector& e) {
    return to_E_basis(apply_taupi_x(from_E_basis(e)));
  };
  check_eops_equal(taupi_route, [](const EVector& e) { return apply_taupi(e); }, 8);
}

TEST_CASE("tausq: (tau1)^2 is the displayed Y-function") {
  Scalar w = Scalar::uvsz(-2, 0) * Scalar::one_minus(2, 0, 0, -1) *
             Scalar::one_minus(2, 0, 0, 1) /
             (Scalar::one_minus(0, 0, 0, -1) * Scalar::one_minus(0, 0, 0, 1));
  check_eops_equal([](const EVector& e) { return apply_tau1(apply_tau1(e)); },
                   [&](const EVector& e) { return apply_Y_function(w, e); }, 8);
}

TEST_CASE("eta ladder values") {
  CHECK(apply_eta(EVector::unit(0)).is_zero());
  CHECK(apply_eta_inv(EVector::unit(1)).is_zero());
  CHECK(apply_eta(EVector::unit(1)) ==
        EVector::unit(2, thalf(-1) * om(t() * q()) / om(q())));
  // picture labels: both directions across the full window
  for (int m = 1; m <= 8; ++m) {
    CHECK(apply_eta(EVector::unit(m)) ==
          EVector::unit(m + 1, thalf(-1) * om(t() * q(m)) / om(q(m))));
    CHECK(apply_eta(EVector::unit(-m)) ==
          EVector::unit(-m + 1, thalf() * om(q(m)) / om(t() * q(m))));
    CHECK(apply_eta_inv(EVector::unit(-m + 1)) ==
          EVector::unit(-m, thalf(-1) * om(t() * q(m)) / om(q(m))));
    if (m >= 2)
      CHECK(apply_eta_inv(EVector::unit(m)) ==
            EVector::unit(m - 1, thalf() * om(q(m - 1)) / om(t() * q(m - 1))));
  }
}

TEST_CASE("eta kernel windows") {
  // eta eta^{-1} = id on span{E_n : n <= 0 or n >= 2}
  for (int n = -8; n <= 8; ++n) {
    if (n == 1) continue;
    CHECK(apply_eta(apply_eta_inv(EVector::unit(n))) == EVector::unit(n));
  }
  // eta^{-1} eta = id on span{E_n : n >= 1 or n < 0}
  for (int n = -8; n <= 8; ++n) {
    if (n == 0) continue;
    CHECK(apply_eta_inv(apply_eta(EVector::unit(n))) == EVector::unit(n));
  }
}

TEST_CASE("normalized intertwiner relations on the representation") {
  // eta_pi^2 = 1 everywhere
  check_eops_equal([](const EVector& e) { return apply_eta_pi(apply_eta_pi(e)); },
                   [](const EVector& e) { return e; }, 8);
  // eta_{s1}^2 = 1 away from the kernel index 0
  check_eops_equal([](const EVector& e) { return apply_eta_s1(apply_eta_s1(e)); },
                   [](const EVector& e) { return e; }, 8, {0});
  CHECK(apply_eta_s1(EVector::unit(0)).is_zero());
  // eta eta_{s1} = eta_{s1} eta^{-1} away from the kernel indices {0, 1}
  check_eops_equal(
      [](const EVector& e) { return apply_eta(apply_eta_s1(e)); },
      [](const EVector& e) { return apply_eta_s1(apply_eta_inv(e)); }, 8, {0, 1});
  // eta as the composition eta_pi eta_{s1}, away from 0 where both vanish
  check_eops_equal([](const EVector& e) { return apply_eta_pi(apply_eta_s1(e)); },
                   [](const EVector& e) { return apply_eta(e); }, 8);
  // eta^{-1} as eta_{s1} eta_pi
  check_eops_equal([](const EVector& e) { return apply_eta_s1(apply_eta_pi(e)); },
                   [](const EVector& e) { return apply_eta_inv(e); }, 8, {1});
  CHECK(apply_eta_inv(EVector::unit(1)).is_zero());
  CHECK(apply_eta_s1(apply_eta_pi(EVector::unit(1))).is_zero());
}

TEST_CASE("conjugating the diagonal action by eta shifts z by q") {
  Scalar g = Scalar::one_minus(2, 0, 0, 1) / Scalar::one_minus(0, 2, 0, 1);
  Bindings shift{{Var::z, SignedMonomial{1, Monomial::of(0, -2, 0, 1)}}};
  Scalar gshift = g.substitute(shift);  // g(q^{-1} z)
  check_eops_equal(
      [&](const EVector& e) { return apply_eta(apply_Y_function(g, e)); },
      [&](const EVector& e) { return apply_Y_function(gshift, apply_eta(e)); }, 8);
}

TEST_CASE("symmetrizer relations") {
  // T1 1_0 = 1_0 T1 = t^{1/2} 1_0 on the X-span
  check_ops_equal(
      [](const LaurentPoly& f) { return apply_T1(apply_one0(f)); },
      [](const LaurentPoly& f) { return apply_one0(f) * Scalar::uvsz(1, 0); }, 10);
  check_ops_equal(
      [](const LaurentPoly& f) { return apply_one0(apply_T1(f)); },
      [](const LaurentPoly& f) { return apply_one0(f) * Scalar::uvsz(1, 0); }, 10);
  // 1_0^2 = (t^{1/2}+t^{-1/2}) 1_0
  check_ops_equal(
      [](const LaurentPoly& f) { return apply_one0(apply_one0(f)); },
      [](const LaurentPoly& f) {
        return apply_one0(f) * (Scalar::uvsz(1, 0) + Scalar::uvsz(-1, 0));
      },
      10);

  // 1_0 in the E-basis agrees with the X-basis operator (eq-10intau route)
  check_eops_equal(
      [](const EVector& e) { return apply_one0_E(e); },
      [](const EVector& e) { return to_E_basis(apply_one0(from_E_basis(e))); }, 8);

  // 1_0 tau1 = 1_0 t^{-1/2}(1-tz)/(1-z) and tau1 1_0 = same function 1_0
  Scalar g = Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 0, 0, 1) /
             Scalar::one_minus(0, 0, 0, 1);
  check_eops_equal(
      [](const EVector& e) { return apply_one0_E(apply_tau1(e)); },
      [&](const EVector& e) { return apply_one0_E(apply_Y_function(g, e)); }, 8);
  check_eops_equal(
      [](const EVector& e) { return apply_tau1(apply_one0_E(e)); },
      [&](const EVector& e) { return apply_Y_function(g, apply_one0_E(e)); }, 8);
}

TEST_CASE("symmetrizer in eta form (eq-10ineta)") {
  // 1_0 = (1 + eta_{s1}) t^{-1/2} (1-t z^{-1})/(1-z^{-1})
  Scalar g = Scalar::uvsz(-1, 0) * Scalar::one_minus(2, 0, 0, -1) /
             Scalar::one_minus(0, 0, 0, -1);
  check_eops_equal(
      [](const EVector& e) { return apply_one0_E(e); },
      [&](const EVector& e) {
        EVector ge = apply_Y_function(g, e);
        return ge + apply_eta_s1(ge);
      },
      8);
  // eta_{s1} 1_0 = 1_0 away from n = 0, where 1_0 E_0 is a multiple of E_0
  // and eta_{s1} kills E_0 on the representation
  check_eops_equal(
      [](const EVector& e) { return apply_eta_s1(apply_one0_E(e)); },
      [](const EVector& e) { return apply_one0_E(e); }, 8, {0});
  // 1_0 eta_{s1} = 1_0 t^{-1}(1-tz)/(1-t^{-1}z)
  Scalar h = Scalar::uvsz(-2, 0) * Scalar::one_minus(2, 0, 0, 1) /
             Scalar::one_minus(-2, 0, 0, 1);
  check_eops_equal(
      [](const EVector& e) { return apply_one0_E(apply_eta_s1(e)); },
      [&](const EVector& e) { return apply_one0_E(apply_Y_function(h, e)); }, 8);
}

TEST_CASE("recursive E construction equals the closed form") {
  for (int m = -8; m <= 8; ++m) CHECK(E_poly_recursive(m) == E_poly(m));
}

TEST_CASE("P from E equals the closed form by both routes") {
  for (int m = 0; m <= 8; ++m) {
    CHECK(P_from_E(m) == P_poly(m));
    CHECK(P_from_E_symmetrizer(m) == P_poly(m));
  }
  CHECK_THROWS_AS(P_from_E(-1), NegativeIndex);
}

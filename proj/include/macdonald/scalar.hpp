// Exact coefficient arithmetic for the q-t special function toolkit.
//
// Everything downstream works over the field of fractions of
// Z[u^{±1}, v^{±1}, s^{±1}, z^{±1}] where
//
//   u = t^{1/2},   v = q^{1/2},   s = q^m (symbolic m),   z = Y^{-2}.
//
// Fractions are kept with the denominator in factored form so that the
// cancellations that occur in every q-Pochhammer identity stay cheap.
// Equality is decided by cross-multiplication, never by comparing canonical
// forms; display canonicalization removes integer content, monomial content
// and common binomial factors (1 - c*monomial) found by trial division.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace macdonald {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& w) : std::domain_error(w) {}
};
struct PoleAtEvaluation : std::domain_error {
  explicit PoleAtEvaluation(const std::string& w) : std::domain_error(w) {}
};
struct UnexpectedVariable : std::domain_error {
  explicit UnexpectedVariable(const std::string& w) : std::domain_error(w) {}
};
struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& w) : std::out_of_range(w) {}
};
struct NegativeIndex : std::out_of_range {
  explicit NegativeIndex(const std::string& w) : std::out_of_range(w) {}
};
struct InvalidIndex : std::logic_error {
  explicit InvalidIndex(const std::string& w) : std::logic_error(w) {}
};
struct InvalidPartition : std::invalid_argument {
  explicit InvalidPartition(const std::string& w) : std::invalid_argument(w) {}
};
struct NotHorizontalStrip : std::invalid_argument {
  explicit NotHorizontalStrip(const std::string& w) : std::invalid_argument(w) {}
};
struct NotSymmetric : std::invalid_argument {
  explicit NotSymmetric(const std::string& w) : std::invalid_argument(w) {}
};
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& w) : std::logic_error(w) {}
};

enum class Var : int { u = 0, v = 1, s = 2, z = 3 };

inline constexpr int kVarCount = 4;
inline constexpr const char* kVarNames[kVarCount] = {"u", "v", "s", "z"};

// A Laurent monomial u^a v^b s^c z^d.  Total order is lexicographic on the
// exponent vector (e_u, e_v, e_s, e_z).
struct Monomial {
  std::array<int, kVarCount> e{0, 0, 0, 0};

  static Monomial one() { return Monomial{}; }
  static Monomial var(Var x, int k = 1) {
    Monomial m;
    m.e[static_cast<int>(x)] = k;
    return m;
  }
  static Monomial of(int eu, int ev, int es = 0, int ez = 0) {
    return Monomial{{eu, ev, es, ez}};
  }

  bool is_one() const { return e == std::array<int, kVarCount>{0, 0, 0, 0}; }
  int operator[](Var x) const { return e[static_cast<int>(x)]; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial inverse() const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.e[i] = -e[i];
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.e[i] = e[i] * k;
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
};

// A signed monomial, used as a substitution target (e.g. z -> +u^2 v^{2m}).
struct SignedMonomial {
  int sign = 1;  // +1 or -1
  Monomial mono;
};

using Bindings = std::map<Var, SignedMonomial>;

// Integer-coefficient Laurent polynomial in u, v, s, z.  Terms are kept
// sorted in descending monomial order with no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(1); }
  static Poly constant(mpz_class c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
    return p;
  }
  static Poly monomial(const Monomial& m, mpz_class c = 1) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  static Poly variable(Var x, int k = 1) { return monomial(Monomial::var(x, k)); }
  static Poly from_terms(std::vector<Term> raw) {
    Poly p;
    std::map<Monomial, mpz_class, std::greater<Monomial>> acc;
    for (auto& [m, c] : raw) acc[m] += c;
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Strict total order on polynomials (used only to sort factor lists).
  bool operator<(const Poly& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const Term& a, const Term& b) {
          if (a.first != b.first) return a.first < b.first;
          return a.second < b.second;
        });
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
      if (a->first > b->first) {
        r.terms_.push_back(*a++);
      } else if (b->first > a->first) {
        r.terms_.push_back(*b++);
      } else {
        mpz_class c = a->second + b->second;
        if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    if (o.is_monomial()) return scaled(o.terms_[0].first, o.terms_[0].second);
    if (is_monomial()) return o.scaled(terms_[0].first, terms_[0].second);
    std::map<Monomial, mpz_class, std::greater<Monomial>> acc;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }

  Poly scaled(const Monomial& m, const mpz_class& c) const {
    Poly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;
  }
  Poly scaled(const mpz_class& c) const { return scaled(Monomial::one(), c); }

  // gcd of all coefficients (non-negative; 0 for the zero polynomial).
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // Componentwise minimum exponent over all terms.
  Monomial mono_content() const {
    Monomial m = terms_.empty() ? Monomial::one() : terms_[0].first;
    for (const auto& [mm, c] : terms_)
      for (int i = 0; i < kVarCount; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
    return m;
  }
  Monomial mono_max() const {
    Monomial m = terms_.empty() ? Monomial::one() : terms_[0].first;
    for (const auto& [mm, c] : terms_)
      for (int i = 0; i < kVarCount; ++i) m.e[i] = std::max(m.e[i], mm.e[i]);
    return m;
  }

  bool uses_var(Var x) const {
    for (const auto& [m, c] : terms_)
      if (m[x] != 0) return true;
    return false;
  }

  Poly substitute(const Bindings& b) const {
    Poly r;
    std::map<Monomial, mpz_class, std::greater<Monomial>> acc;
    for (const auto& [m, c] : terms_) {
      Monomial nm = m;
      int sign = 1;
      for (const auto& [x, sm] : b) {
        int k = m[x];
        if (k == 0) continue;
        nm.e[static_cast<int>(x)] = 0;
        nm = nm * sm.mono.pow(k);
        if (sm.sign < 0 && (k % 2 != 0)) sign = -sign;
      }
      acc[nm] += sign > 0 ? c : -c;
    }
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }

 private:
  std::vector<Term> terms_;
};

// Exact division test, Laurent-aware: returns P/B when B divides P (up to
// nothing -- exact), std::nullopt otherwise.  Works by leading-term
// elimination in the lex order; quotient monomials are confined to the
// Newton-polytope box of an exact quotient, which bounds the search.
inline std::optional<Poly> divide_exact(const Poly& p, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (p.is_zero()) return Poly::zero();
  if (b.is_monomial()) {
    const auto& [mb, cb] = b.leading();
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
      out.emplace_back(m * mb.inverse(), c / cb);
    }
    return Poly::from_terms(std::move(out));
  }

  Monomial qmin = p.mono_content() * b.mono_content().inverse();
  Monomial qmax = p.mono_max() * b.mono_max().inverse();
  for (int i = 0; i < kVarCount; ++i)
    if (qmin.e[i] > qmax.e[i]) return std::nullopt;

  const auto& [mb, cb] = b.leading();
  Poly r = p;
  std::vector<Poly::Term> qterms;
  while (!r.is_zero()) {
    const auto& [mr, cr] = r.leading();
    Monomial mq = mr * mb.inverse();
    for (int i = 0; i < kVarCount; ++i)
      if (mq.e[i] < qmin.e[i] || mq.e[i] > qmax.e[i]) return std::nullopt;
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    mpz_class cq = cr / cb;
    qterms.emplace_back(mq, cq);
    r = r - b.scaled(mq, cq);
  }
  return Poly::from_terms(std::move(qterms));
}

namespace detail {

// Puts a nonzero polynomial into primitive shape: integer content 1,
// monomial content 1, positive leading coefficient.  Returns what was
// stripped so the caller can keep the value unchanged.
struct Stripped {
  mpz_class content;  // positive
  Monomial mono;
  int sign;  // +1 or -1
};

inline Stripped make_primitive(Poly& p) {
  Stripped s{1, Monomial::one(), 1};
  if (p.is_zero()) return s;
  s.content = p.content();
  s.mono = p.mono_content();
  if (p.leading().second < 0) s.sign = -1;
  mpz_class c = s.sign > 0 ? s.content : -s.content;
  p = divide_exact(p, Poly::monomial(s.mono, c)).value();
  return s;
}

// Trial-division factorization into binomial factors (monomial - monomial
// shapes).  Input must be primitive.  Whatever resists binomial splitting is
// returned as a single leftover factor.
inline std::vector<Poly> factor_binomials(Poly p) {
  std::vector<Poly> factors;
  if (p.is_zero() || p.is_monomial()) return factors;
  for (;;) {
    if (p.is_monomial()) break;  // fully split; residue is 1
    std::set<Monomial> cands;
    const auto& ts = p.terms();
    const Monomial lead = ts.front().first;
    const Monomial trail = ts.back().first;
    if (ts.size() <= 40) {
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
          cands.insert(ts[i].first * ts[j].first.inverse());
    } else {
      for (std::size_t i = 1; i < ts.size(); ++i) {
        cands.insert(lead * ts[i].first.inverse());
        cands.insert(ts[i - 1].first * trail.inverse());
      }
    }
    bool found = false;
    for (const auto& d : cands) {
      if (d.is_one()) continue;
      // primitive binomial with monomial quotient d: M_{d-neg} +- M_{-neg}
      Monomial neg = Monomial::one();
      for (int i = 0; i < kVarCount; ++i) neg.e[i] = std::min(d.e[i], 0);
      Monomial hi = d * neg.inverse(), lo = neg.inverse();
      for (int sgn : {-1, +1}) {
        Poly cand = Poly::monomial(hi) + Poly::monomial(lo, sgn);
        auto q = divide_exact(p, cand);
        if (q) {
          // quotient of primitives is primitive (Gauss), no renormalization
          factors.push_back(cand);
          p = std::move(*q);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      factors.push_back(p);
      break;
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace detail

// An exact fraction num/den of Poly.  The denominator is held factored:
// den = den_int * prod(factors), each factor primitive with positive leading
// coefficient, no factor dividing the numerator, and gcd(content(num),
// den_int) = 1.  den() expands the product on demand.
class Scalar {
 public:
  Scalar() : num_(Poly::zero()), dint_(1) {}
  Scalar(long v) : num_(Poly::constant(v)), dint_(1) {}            // NOLINT
  Scalar(const Poly& p) : num_(p), dint_(1) {}                     // NOLINT
  Scalar(const Poly& num, const Poly& den) : num_(num), dint_(1) {
    if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
    absorb_den(den);
    reduce();
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar monomial(const Monomial& m, mpz_class c = 1) {
    return Scalar(Poly::monomial(m, std::move(c)));
  }
  // t^{k/2} q^{l/2} q^{m*ks} z^{kz}, i.e. u^k v^l s^{ks} z^{kz}
  static Scalar uvsz(int eu, int ev, int es = 0, int ez = 0) {
    return monomial(Monomial::of(eu, ev, es, ez));
  }
  // 1 - u^eu v^ev s^es z^ez
  static Scalar one_minus(int eu, int ev, int es = 0, int ez = 0) {
    return Scalar(Poly::one() - Poly::monomial(Monomial::of(eu, ev, es, ez)));
  }

  const Poly& num() const { return num_; }
  Poly den() const {
    Poly d = Poly::constant(dint_);
    for (const auto& f : fac_) d = d * f;
    return d;
  }
  const std::vector<Poly>& den_factors() const { return fac_; }
  const mpz_class& den_int() const { return dint_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && fac_.empty() && dint_ == 1; }

  // Equality by cross-multiplication, with a fast path for scalars whose
  // canonical representations already coincide.
  bool operator==(const Scalar& o) const {
    if (is_zero()) return o.is_zero();
    if (o.is_zero()) return false;
    if (num_ == o.num_ && dint_ == o.dint_ && fac_ == o.fac_) return true;
    return num_ * o.den() == o.num_ * den();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Scalar operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Scalar r;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), dint_.get_mpz_t(), o.dint_.get_mpz_t());
    // union of the factor multisets
    std::vector<Poly> merged;
    std::vector<Poly> amiss, bmiss;  // factors missing from a resp. b
    auto ai = fac_.begin(), bi = o.fac_.begin();
    while (ai != fac_.end() || bi != o.fac_.end()) {
      if (bi == o.fac_.end() || (ai != fac_.end() && *ai < *bi)) {
        merged.push_back(*ai);
        bmiss.push_back(*ai);
        ++ai;
      } else if (ai == fac_.end() || *bi < *ai) {
        merged.push_back(*bi);
        amiss.push_back(*bi);
        ++bi;
      } else {
        merged.push_back(*ai);
        ++ai;
        ++bi;
      }
    }
    Poly na = num_.scaled(l / dint_);
    for (const auto& f : amiss) na = na * f;
    Poly nb = o.num_.scaled(l / o.dint_);
    for (const auto& f : bmiss) nb = nb * f;
    r.num_ = na + nb;
    r.fac_ = std::move(merged);
    r.dint_ = l;
    r.reduce();
    return r;
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return zero();
    Scalar r;
    r.num_ = num_ * o.num_;
    r.fac_ = fac_;
    r.fac_.insert(r.fac_.end(), o.fac_.begin(), o.fac_.end());
    std::sort(r.fac_.begin(), r.fac_.end());
    r.dint_ = dint_ * o.dint_;
    r.reduce();
    return r;
  }

  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero scalar");
    if (is_zero()) return zero();
    Scalar r;
    r.num_ = num_.scaled(o.dint_);
    for (const auto& f : o.fac_) r.num_ = r.num_ * f;
    r.fac_ = fac_;
    r.dint_ = dint_;
    r.absorb_den(o.num_);
    r.reduce();
    return r;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Ring-homomorphic substitution of variables by signed monomials, applied
  // to numerator and denominator separately.  The denominator is substituted
  // factor by factor so it never gets expanded.
  Scalar substitute(const Bindings& b) const {
    Scalar r;
    r.num_ = num_.substitute(b);
    r.dint_ = dint_;
    for (const auto& f : fac_) {
      Poly fs = f.substitute(b);
      if (fs.is_zero())
        throw PoleAtEvaluation("denominator vanishes under substitution");
      detail::Stripped st = detail::make_primitive(fs);
      r.num_ = r.num_.scaled(st.mono.inverse(), st.sign);
      r.dint_ *= st.content;
      if (!fs.is_one()) r.fac_.push_back(std::move(fs));
    }
    std::sort(r.fac_.begin(), r.fac_.end());
    r.reduce();
    return r;
  }

  // g(Y) -> g(Y^{-1}) realized as z -> z^{-1}.  Only legal on scalars free
  // of the symbolic-m variable s.
  Scalar invert_z() const {
    if (num_.uses_var(Var::s)) throw UnexpectedVariable("invert_z on scalar involving s");
    for (const auto& f : fac_)
      if (f.uses_var(Var::s)) throw UnexpectedVariable("invert_z on scalar involving s");
    Bindings b;
    b[Var::z] = SignedMonomial{1, Monomial::var(Var::z, -1)};
    return substitute(b);
  }

  bool uses_var(Var x) const {
    if (num_.uses_var(x)) return true;
    for (const auto& f : fac_)
      if (f.uses_var(x)) return true;
    return false;
  }

 private:
  void absorb_den(const Poly& den) {
    Poly d = den;
    detail::Stripped st = detail::make_primitive(d);
    // stripped monomial and sign move into the numerator, content into dint_
    num_ = num_.scaled(st.mono.inverse(), st.sign);
    dint_ *= st.content;
    if (!d.is_one()) {
      auto fs = detail::factor_binomials(d);
      fac_.insert(fac_.end(), fs.begin(), fs.end());
      std::sort(fac_.begin(), fac_.end());
    }
  }

  void reduce() {
    if (num_.is_zero()) {
      fac_.clear();
      dint_ = 1;
      return;
    }
    // cancel denominator factors dividing the numerator
    std::vector<Poly> keep;
    keep.reserve(fac_.size());
    for (std::size_t i = 0; i < fac_.size(); ++i) {
      auto q = divide_exact(num_, fac_[i]);
      if (q) {
        num_ = std::move(*q);
      } else {
        keep.push_back(fac_[i]);
      }
    }
    fac_ = std::move(keep);
    // numerator may carry integer content cancelling den_int
    if (dint_ != 1) {
      mpz_class g, c = num_.content();
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), dint_.get_mpz_t());
      if (g > 1) {
        num_ = divide_exact(num_, Poly::constant(g)).value();
        dint_ /= g;
      }
    }
  }

  Poly num_;
  std::vector<Poly> fac_;  // sorted; product * dint_ = denominator
  mpz_class dint_;         // positive
};

inline Scalar operator+(long a, const Scalar& b) { return Scalar(a) + b; }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }
inline Scalar operator/(long a, const Scalar& b) { return Scalar(a) / b; }

// Display canonicalization.  Already maintained as an invariant by every
// constructor and operation; exposed so the identity can be property-tested.
inline Scalar normalize(const Scalar& a) { return Scalar(a.num(), a.den()); }

inline Scalar substitute(const Scalar& a, const Bindings& b) { return a.substitute(b); }
inline Scalar invert_z(const Scalar& a) { return a.invert_z(); }

// ---- canonical strings ----------------------------------------------------

inline std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kVarCount; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << kVarNames[i];
    if (m.e[i] != 1) os << '^' << m.e[i];
  }
  if (first) os << '1';
  return os.str();
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << ' ';
      os << to_string(m);
    }
  }
  return os.str();
}

inline std::string to_string(const Scalar& a) {
  return to_string(a.num()) + " / " + to_string(a.den());
}

}  // namespace macdonald

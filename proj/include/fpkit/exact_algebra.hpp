#pragma once

// Exact univariate polynomials, rational functions and truncated power series
// in one indeterminate t over a field (BigRational by default).

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpkit {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

template <class F>
concept Field = std::regular<F> && requires(const F& a, const F& b) {
  { F(0) };
  { F(1) };
  { F(a + b) } -> std::same_as<F>;
  { F(a - b) } -> std::same_as<F>;
  { F(a * b) } -> std::same_as<F>;
  { F(a / b) } -> std::same_as<F>;
  { F(-a) } -> std::same_as<F>;
};

namespace detail {

template <class F>
std::string coeff_string(const F& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

// Renders sum c_k t^k with the given variable name, highest terms last.
template <class F>
std::string render_terms(const std::vector<F>& coeffs, const std::string& var) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const F& c = coeffs[k];
    if (c == F(0)) continue;
    bool negative = c < F(0);
    F mag = negative ? F(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k >= 1) mono = var;
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty()) {
      out += coeff_string(mag);
    } else if (mag == F(1)) {
      out += mono;
    } else {
      out += coeff_string(mag) + "*" + mono;
    }
  }
  return first ? "0" : out;
}

}  // namespace detail

/// Dense polynomial in t. Trailing zero coefficients are never stored, so the
/// zero polynomial has an empty coefficient vector and degree -1.
template <Field F>
class BasicPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  BasicPolynomial() = default;
  BasicPolynomial(const F& c) : coeffs_{c} { trim(); }  // NOLINT: constants convert implicitly
  BasicPolynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * t^k
  static BasicPolynomial monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return BasicPolynomial(std::move(v));
  }

  /// 1 - t^k
  static BasicPolynomial one_minus_power(std::size_t k) {
    return BasicPolynomial(F(1)) - monomial(F(1), k);
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<F>& coefficients() const { return coeffs_; }

  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }
  F constant_term() const { return coeff(0); }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F(acc * x + *it);
    return acc;
  }

  BasicPolynomial monic() const {
    if (is_zero()) return *this;
    return scaled(F(F(1) / leading()));
  }

  BasicPolynomial scaled(const F& c) const {
    if (c == F(0)) return {};
    std::vector<F> v(coeffs_);
    for (auto& x : v) x = F(x * c);
    return BasicPolynomial(std::move(v));
  }

  BasicPolynomial operator-() const { return scaled(F(-1)); }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] = F(v[k] + b.coeffs_[k]);
    return BasicPolynomial(std::move(v));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] = F(v[k] - b.coeffs_[k]);
    return BasicPolynomial(std::move(v));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == F(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = F(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return BasicPolynomial(std::move(v));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = *this - o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  friend std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& a,
                                                           const BasicPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {BasicPolynomial{}, a};
    std::vector<F> rem(a.coeffs_);
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<F> quot(rem.size() - db, F(0));
    const F inv_lead = F(F(1) / b.leading());
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k] == F(0)) continue;
      F c = F(rem[k] * inv_lead);
      quot[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = F(rem[k - db + j] - c * b.coeffs_[j]);
    }
    return {BasicPolynomial(std::move(quot)), BasicPolynomial(std::move(rem))};
  }

  /// Quotient of a division that must be exact.
  friend BasicPolynomial exact_quotient(const BasicPolynomial& a, const BasicPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  std::string to_string(const std::string& var = "t") const { return detail::render_terms(coeffs_, var); }

  friend std::ostream& operator<<(std::ostream& os, const BasicPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
template <Field F>
BasicPolynomial<F> gcd(BasicPolynomial<F> a, BasicPolynomial<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Quotient num/den kept in canonical form: gcd(num, den) = 1 and den monic.
/// The zero function is 0/1.
template <Field F>
class BasicRationalFunction {
 public:
  using Poly = BasicPolynomial<F>;

  BasicRationalFunction() : num_(), den_(F(1)) {}
  BasicRationalFunction(const F& c) : num_(c), den_(F(1)) {}  // NOLINT
  BasicRationalFunction(Poly num) : num_(std::move(num)), den_(F(1)) {}  // NOLINT
  BasicRationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }

  /// Value at t = 0. Requires a denominator that does not vanish there.
  F value_at_zero() const {
    F d = den_.constant_term();
    if (d == F(0)) throw std::domain_error("rational function has a pole at t = 0");
    return F(num_.constant_term() / d);
  }

  BasicRationalFunction operator-() const { return BasicRationalFunction(-num_, den_, canonical_tag{}); }

  friend BasicRationalFunction operator+(const BasicRationalFunction& a, const BasicRationalFunction& b) {
    if (a.den_ == b.den_) return BasicRationalFunction(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly bq = exact_quotient(b.den_, g);
    Poly aq = exact_quotient(a.den_, g);
    return BasicRationalFunction(a.num_ * bq + b.num_ * aq, a.den_ * bq);
  }

  friend BasicRationalFunction operator-(const BasicRationalFunction& a, const BasicRationalFunction& b) {
    return a + (-b);
  }

  friend BasicRationalFunction operator*(const BasicRationalFunction& a, const BasicRationalFunction& b) {
    return BasicRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  BasicRationalFunction& operator+=(const BasicRationalFunction& o) { return *this = *this + o; }

  friend bool operator==(const BasicRationalFunction&, const BasicRationalFunction&) = default;

  std::string to_string(const std::string& var = "t") const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicRationalFunction& r) { return os << r.to_string(); }

 private:
  struct canonical_tag {};
  BasicRationalFunction(Poly num, Poly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(F(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    F lead = den_.leading();
    if (lead != F(1)) {
      F inv = F(F(1) / lead);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

template <Field F>
BasicRationalFunction<F> sum(const std::vector<BasicRationalFunction<F>>& terms) {
  BasicRationalFunction<F> acc;
  for (const auto& t : terms) acc += t;
  return acc;
}

/// Power series c_0 + c_1 t + ... + c_K t^K; everything above t^K is dropped.
template <Field F>
class BasicTruncatedSeries {
 public:
  explicit BasicTruncatedSeries(std::size_t order) : coeffs_(order + 1, F(0)) {}
  BasicTruncatedSeries(std::size_t order, const BasicPolynomial<F>& p) : coeffs_(order + 1, F(0)) {
    for (std::size_t k = 0; k <= order; ++k) coeffs_[k] = p.coeff(k);
  }

  static BasicTruncatedSeries constant(std::size_t order, const F& c) {
    BasicTruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const F& operator[](std::size_t k) const { return coeffs_.at(k); }
  F& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<F>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return c == F(0); });
  }

  /// True iff every coefficient above the constant term vanishes up to the order.
  bool is_constant() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const F& c) { return c == F(0); });
  }

  BasicTruncatedSeries truncated(std::size_t order) const {
    BasicTruncatedSeries s(order);
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
  }

  friend BasicTruncatedSeries operator+(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
    BasicTruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= s.order(); ++k) s.coeffs_[k] = F(a.coeffs_[k] + b.coeffs_[k]);
    return s;
  }

  friend BasicTruncatedSeries operator-(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
    BasicTruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= s.order(); ++k) s.coeffs_[k] = F(a.coeffs_[k] - b.coeffs_[k]);
    return s;
  }

  friend BasicTruncatedSeries operator*(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
    BasicTruncatedSeries s(std::min(a.order(), b.order()));
    const std::size_t K = s.order();
    for (std::size_t i = 0; i <= K; ++i) {
      if (a.coeffs_[i] == F(0)) continue;
      for (std::size_t j = 0; i + j <= K; ++j) s.coeffs_[i + j] = F(s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return s;
  }

  BasicTruncatedSeries& operator+=(const BasicTruncatedSeries& o) { return *this = *this + o; }

  BasicTruncatedSeries scaled(const F& c) const {
    BasicTruncatedSeries s(*this);
    for (auto& x : s.coeffs_) x = F(x * c);
    return s;
  }

  /// Multiplication by t^k.
  BasicTruncatedSeries shifted(std::size_t k) const {
    BasicTruncatedSeries s(order());
    for (std::size_t j = 0; j + k <= order(); ++j) s.coeffs_[j + k] = coeffs_[j];
    return s;
  }

  /// In-place multiplication by 1/(1 - t^a), a >= 1: c_k += c_{k-a}.
  BasicTruncatedSeries& divide_by_one_minus_power(std::size_t a) {
    if (a == 0) throw std::domain_error("1/(1 - t^0) is undefined");
    for (std::size_t k = a; k < coeffs_.size(); ++k) coeffs_[k] = F(coeffs_[k] + coeffs_[k - a]);
    return *this;
  }

  friend bool operator==(const BasicTruncatedSeries&, const BasicTruncatedSeries&) = default;

  std::string to_string(const std::string& var = "t") const {
    return detail::render_terms(coeffs_, var) + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<F> coeffs_;
};

/// Series expansion of a rational function whose denominator is nonzero at t = 0.
template <Field F>
BasicTruncatedSeries<F> expand(const BasicRationalFunction<F>& r, std::size_t order) {
  const auto& den = r.denominator();
  F d0 = den.constant_term();
  if (d0 == F(0)) throw std::domain_error("cannot expand: denominator vanishes at t = 0");
  BasicTruncatedSeries<F> s(order);
  const F inv = F(F(1) / d0);
  for (std::size_t k = 0; k <= order; ++k) {
    F acc = r.numerator().coeff(k);
    for (std::size_t j = 1; j <= k && static_cast<int>(j) <= den.degree(); ++j) acc = F(acc - den.coeff(j) * s[k - j]);
    s[k] = F(acc * inv);
  }
  return s;
}

using Polynomial = BasicPolynomial<BigRational>;
using RationalFunction = BasicRationalFunction<BigRational>;
using TruncatedSeries = BasicTruncatedSeries<BigRational>;

/// Laurent polynomial sum_e c_e t^e with integer exponents; only used to carry
/// elementary symmetric functions of t^{w_1}, ..., t^{w_n} for signed weights.
using LaurentTerms = std::vector<std::pair<std::int64_t, BigInt>>;

/// sigma_i(t^{w_1}, ..., t^{w_n}) for i = 0..n, each as (exponent, multiplicity)
/// pairs sorted by exponent.
inline std::vector<LaurentTerms> elementary_symmetric_powers(const std::vector<std::int64_t>& exponents) {
  const std::size_t n = exponents.size();
  std::vector<std::vector<std::pair<std::int64_t, BigInt>>> table(n + 1);
  table[0].push_back({0, BigInt(1)});
  for (std::int64_t w : exponents) {
    for (std::size_t i = n; i-- > 0;) {
      if (table[i].empty()) continue;
      for (const auto& [e, c] : table[i]) table[i + 1].push_back({e + w, c});
    }
    for (auto& row : table) {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      LaurentTerms merged;
      for (auto& [e, c] : row) {
        if (!merged.empty() && merged.back().first == e)
          merged.back().second += c;
        else
          merged.push_back({e, c});
      }
      row = std::move(merged);
    }
  }
  return table;
}

/// Expansion of 1/(1 - t^w) as a series in nonnegative powers of t:
///   w > 0:  1 + t^w + t^{2w} + ...
///   w < 0:  1/(1 - t^w) = -t^{|w|} / (1 - t^{|w|}) = -(t^{|w|} + t^{2|w|} + ...)
inline TruncatedSeries geometric_rewrite(std::int64_t w, std::size_t order) {
  if (w == 0) throw std::invalid_argument("weight must be nonzero");
  const std::size_t a = static_cast<std::size_t>(w > 0 ? w : -w);
  TruncatedSeries s(order);
  const BigRational c = w > 0 ? 1 : -1;
  for (std::size_t k = (w > 0 ? 0 : a); k <= order; k += a) s[k] = c;
  return s;
}

/// Same product as `s * geometric_rewrite(w, s.order())`, in O(order).
inline TruncatedSeries times_geometric_rewrite(TruncatedSeries s, std::int64_t w) {
  if (w == 0) throw std::invalid_argument("weight must be nonzero");
  const std::size_t a = static_cast<std::size_t>(w > 0 ? w : -w);
  s.divide_by_one_minus_power(a);
  if (w > 0) return s;
  return s.shifted(a).scaled(BigRational(-1));
}

}  // namespace fpkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latticestat/scalar.hpp"

namespace latticestat {

/// Integer-coefficient polynomial in the sequence index n.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) {
    trim();
  }
  static Polynomial constant(Integer v) { return Polynomial({std::move(v)}); }
  static Polynomial variable() { return Polynomial({Integer(0), Integer(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Integer& leading() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer eval(const Integer& n) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Integer> out = a.c_;
    for (auto& x : out) x = -x;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Integer& k, const Polynomial& a) {
    std::vector<Integer> out = a.c_;
    for (auto& x : out) x *= k;
    return Polynomial(std::move(out));
  }

  /// p(n + k).
  Polynomial shift(long k) const {
    Polynomial acc;
    Polynomial x_plus_k({Integer(k), Integer(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x_plus_k + constant(*it);
    return acc;
  }

  /// All real roots z satisfy |z| < bound (Cauchy). Zero and constant
  /// polynomials have no roots: bound 0.
  Integer root_bound() const {
    if (degree() < 1) return 0;
    Integer max_abs = 0;
    for (int i = 0; i < degree(); ++i)
      max_abs = std::max(max_abs, Integer(boost::multiprecision::abs(c_[i])));
    Integer lead = boost::multiprecision::abs(leading());
    return 1 + max_abs / lead + 1;  // integer ceiling of 1 + max/|lead|
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
  }

  std::string to_string(const std::string& var = "n") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& a = c_[i];
      if (a == 0) continue;
      if (!out.empty()) out += a > 0 ? "+" : "-";
      else if (a < 0) out += "-";
      Integer mag = boost::multiprecision::abs(a);
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;  // ascending
};

/// Sign of f(n), constant for all n >= from.
struct EventualSign {
  int sign = 0;  // -1, 0, +1
  long from = 1;
};

/// Limit of f(n) as n grows.
struct SequenceLimit {
  enum class Kind { Finite, PlusInfinity, MinusInfinity } kind = Kind::Finite;
  Scalar value = 0;  // meaningful for Finite
  bool is_zero() const { return kind == Kind::Finite && value == 0; }
  bool is_finite() const { return kind == Kind::Finite; }
};

/// Quotient of integer polynomials in n, defined (finite) at every n >= 1.
/// The pole-freeness invariant is enforced at construction by exact sign
/// analysis: beyond the denominator's root bound there are no roots, and
/// the finitely many candidates below it are checked directly.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
    check_pole_free();
  }

  static RationalFunction constant(const Scalar& v) {
    return RationalFunction(Polynomial::constant(numer(v)),
                            Polynomial::constant(denom(v)));
  }
  static RationalFunction variable() {
    return RationalFunction(Polynomial::variable(), Polynomial::constant(1));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  Scalar eval(long n) const {
    if (n < 1) throw UsageError("rational functions are evaluated at n >= 1");
    Integer nn(n);
    return Scalar(num_.eval(nn), den_.eval(nn));
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(-a.num_, a.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const Scalar& c, const RationalFunction& a) {
    return RationalFunction(numer(c) * a.num_, denom(c) * a.den_);
  }

  RationalFunction shift(long k) const {
    return RationalFunction(num_.shift(k), den_.shift(k));
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return (a - b).is_zero();  // cross-multiplied equality
  }

  /// deg(num) < deg(den) -> 0; equal -> leading ratio; greater -> infinite
  /// with the sign of the leading ratio.
  SequenceLimit limit() const {
    SequenceLimit lim;
    if (num_.is_zero()) return lim;
    const int dn = num_.degree(), dd = den_.degree();
    if (dn < dd) return lim;
    if (dn == dd) {
      lim.value = Scalar(num_.leading(), den_.leading());
      return lim;
    }
    const bool positive = (num_.leading() > 0) == (den_.leading() > 0);
    lim.kind = positive ? SequenceLimit::Kind::PlusInfinity
                        : SequenceLimit::Kind::MinusInfinity;
    return lim;
  }

  /// Exact eventual sign via root bounds: sign(f(n)) is constant for all
  /// n >= from, no sampling involved. nullopt when the root bound exceeds
  /// the representable budget (callers must then report Unknown rather
  /// than trust samples).
  std::optional<EventualSign> eventual_sign() const {
    if (num_.is_zero()) return EventualSign{0, 1};
    Integer bound = std::max(num_.root_bound(), den_.root_bound());
    if (bound > kMaxBound) return std::nullopt;
    long from = std::max<long>(1, bound.convert_to<long>() + 1);
    const int sign_num = num_.leading() > 0 ? 1 : -1;
    const int sign_den = den_.leading() > 0 ? 1 : -1;
    return EventualSign{sign_num * sign_den, from};
  }

  /// Eventual sign of f(n) - f(n+1). sign >= 0 from index `from` means f is
  /// nonincreasing on [from, infinity).
  std::optional<EventualSign> decrease_sign() const {
    return (*this - shift(1)).eventual_sign();
  }

  std::string to_string(const std::string& var = "n") const {
    if (num_.is_zero()) return "0";
    std::string n = num_.to_string(var);
    if (den_.degree() <= 0 && den_.leading() == 1) return n;
    std::string d = den_.to_string(var);
    const bool wrap_num = num_.degree() >= 1 && (num_.coeffs().size() > 1);
    const bool multi_num = n.find_first_of("+-", 1) != std::string::npos;
    if (wrap_num && multi_num) n = "(" + n + ")";
    const bool simple_den = den_.degree() == 0;
    if (!simple_den) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static inline const Integer kMaxBound = Integer(1) << 40;

  void normalize() {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
      std::vector<Integer> nn = num_.coeffs(), dd = den_.coeffs();
      for (auto& x : nn) x /= g;
      for (auto& x : dd) x /= g;
      num_ = Polynomial(std::move(nn));
      den_ = Polynomial(std::move(dd));
    }
  }

  void check_pole_free() const {
    Integer bound = den_.root_bound();
    if (bound > kMaxScan)
      throw UsageError("denominator root bound too large to certify pole-freeness");
    for (Integer n = 1; n <= bound; ++n)
      if (den_.eval(n) == 0)
        throw UsageError("denominator vanishes at n = " + n.str());
  }

  static inline const Integer kMaxScan = Integer(4'000'000);

  Polynomial num_;
  Polynomial den_;
};

}  // namespace latticestat

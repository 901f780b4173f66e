#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latticestat/scalar.hpp"
#include "latticestat/space.hpp"
#include "latticestat/vector.hpp"

namespace latticestat {

/// Order bounded operator between two finite coordinate lattices, realized
/// as an exact-rational matrix. The operator order (S <= T iff S(u) <= T(u)
/// on the positive cone) coincides with the entry-wise order: the standard
/// basis vectors are positive and force entry-wise <=, and entry-wise <=
/// gives S(u) <= T(u) for every u >= theta.
class OrderBoundedOperator {
 public:
  OrderBoundedOperator(SpaceDescriptor domain, SpaceDescriptor codomain,
                       std::vector<Scalar> entries)
      : domain_(domain), codomain_(codomain), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != domain_.dim * codomain_.dim)
      throw ShapeError("operator entry count does not match " +
                       std::to_string(codomain_.dim) + "x" +
                       std::to_string(domain_.dim));
  }

  static OrderBoundedOperator zero(SpaceDescriptor domain, SpaceDescriptor codomain) {
    return OrderBoundedOperator(
        domain, codomain, std::vector<Scalar>(domain.dim * codomain.dim, Scalar(0)));
  }
  static OrderBoundedOperator identity(SpaceDescriptor space) {
    OrderBoundedOperator id = zero(space, space);
    for (int i = 0; i < space.dim; ++i) id.entries_[i * space.dim + i] = 1;
    return id;
  }

  const SpaceDescriptor& domain() const { return domain_; }
  const SpaceDescriptor& codomain() const { return codomain_; }
  int rows() const { return codomain_.dim; }
  int cols() const { return domain_.dim; }

  /// 0-based row/column access.
  const Scalar& at(int r, int c) const { return entries_[r * cols() + c]; }
  Scalar& at(int r, int c) { return entries_[r * cols() + c]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool same_shape(const OrderBoundedOperator& other) const {
    return domain_.same_lattice(other.domain_) &&
           codomain_.same_lattice(other.codomain_);
  }

  friend bool operator==(const OrderBoundedOperator& a, const OrderBoundedOperator& b) {
    return a.same_shape(b) && a.entries_ == b.entries_;
  }

  LatticeVector apply(const LatticeVector& u) const {
    if (!u.space().same_lattice(domain_))
      throw ShapeError("operator domain " + domain_.to_text() +
                       " does not accept a vector from " + u.space().to_text());
    std::vector<Scalar> out(rows(), Scalar(0));
    for (int r = 0; r < rows(); ++r)
      for (int c = 0; c < cols(); ++c) out[r] += at(r, c) * u[c];
    return LatticeVector(codomain_, std::move(out));
  }

  friend OrderBoundedOperator operator+(const OrderBoundedOperator& a,
                                        const OrderBoundedOperator& b) {
    return a.zip(b, [](const Scalar& x, const Scalar& y) { return x + y; });
  }
  friend OrderBoundedOperator operator-(const OrderBoundedOperator& a,
                                        const OrderBoundedOperator& b) {
    return a.zip(b, [](const Scalar& x, const Scalar& y) { return x - y; });
  }
  friend OrderBoundedOperator operator-(const OrderBoundedOperator& a) {
    return a.map([](const Scalar& x) { return Scalar(-x); });
  }
  friend OrderBoundedOperator operator*(const Scalar& c, const OrderBoundedOperator& a) {
    return a.map([&](const Scalar& x) { return Scalar(c * x); });
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& x) { return x == 0; });
  }
  bool is_positive() const {  // T >= theta in the operator order
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& x) { return x >= 0; });
  }

  /// Sum of absolute entries; for a coordinate functional realized as a row
  /// this is its mass in the summable-sequence dual.
  Scalar mass() const {
    Scalar m = 0;
    for (const auto& x : entries_) m += abs_scalar(x);
    return m;
  }

  /// Largest absolute entry.
  Scalar max_abs_entry() const {
    Scalar m = 0;
    for (const auto& x : entries_) m = std::max(m, abs_scalar(x));
    return m;
  }

 private:
  template <typename F>
  OrderBoundedOperator map(F f) const {
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& x : entries_) out.push_back(f(x));
    return OrderBoundedOperator(domain_, codomain_, std::move(out));
  }
  template <typename F>
  OrderBoundedOperator zip(const OrderBoundedOperator& b, F f) const {
    require_same_shape(*this, b);
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.push_back(f(entries_[i], b.entries_[i]));
    return OrderBoundedOperator(domain_, codomain_, std::move(out));
  }

  static void require_same_shape(const OrderBoundedOperator& a,
                                 const OrderBoundedOperator& b) {
    if (!a.same_shape(b))
      throw ShapeError("operators have different shapes (" +
                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " vs " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()) + ")");
  }

  friend OrderBoundedOperator op_join(const OrderBoundedOperator&,
                                      const OrderBoundedOperator&);
  friend OrderBoundedOperator op_meet(const OrderBoundedOperator&,
                                      const OrderBoundedOperator&);
  friend bool op_leq(const OrderBoundedOperator&, const OrderBoundedOperator&);

  SpaceDescriptor domain_;
  SpaceDescriptor codomain_;
  std::vector<Scalar> entries_;  // row-major, rows() x cols()
};

/// S <= T in the operator order (entry-wise, equivalent to the cone test).
inline bool op_leq(const OrderBoundedOperator& a, const OrderBoundedOperator& b) {
  OrderBoundedOperator::require_same_shape(a, b);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i] > b.entries_[i]) return false;
  return true;
}

inline OrderBoundedOperator op_join(const OrderBoundedOperator& a,
                                    const OrderBoundedOperator& b) {
  return a.zip(b, [](const Scalar& x, const Scalar& y) { return std::max(x, y); });
}

inline OrderBoundedOperator op_meet(const OrderBoundedOperator& a,
                                    const OrderBoundedOperator& b) {
  return a.zip(b, [](const Scalar& x, const Scalar& y) { return std::min(x, y); });
}

/// |T| = T ∨ (-T): entry-wise absolute value. Satisfies |T(u)| <= |T|(|u|).
inline OrderBoundedOperator op_modulus(const OrderBoundedOperator& t) {
  return op_join(t, -t);
}

inline OrderBoundedOperator op_pos_part(const OrderBoundedOperator& t) {
  return op_join(t, OrderBoundedOperator::zero(t.domain(), t.codomain()));
}
inline OrderBoundedOperator op_neg_part(const OrderBoundedOperator& t) {
  return op_join(-t, OrderBoundedOperator::zero(t.domain(), t.codomain()));
}

/// s ∘ t: first t, then s. Exact matrix product.
inline OrderBoundedOperator compose(const OrderBoundedOperator& s,
                                    const OrderBoundedOperator& t) {
  if (!t.codomain().same_lattice(s.domain()))
    throw ShapeError("composition shape mismatch: inner codomain " +
                     t.codomain().to_text() + " vs outer domain " +
                     s.domain().to_text());
  OrderBoundedOperator out = OrderBoundedOperator::zero(t.domain(), s.codomain());
  for (int r = 0; r < s.rows(); ++r)
    for (int k = 0; k < s.cols(); ++k) {
      if (s.at(r, k) == 0) continue;
      for (int c = 0; c < t.cols(); ++c)
        out.at(r, c) += s.at(r, k) * t.at(k, c);
    }
  return out;
}

/// Support pattern describing a band. entry_support carries bands of the
/// operator lattice (matrices vanishing off the pattern); coord_support
/// carries band projections of the codomain (0/1 diagonal).
struct BandPattern {
  std::set<std::pair<int, int>> entry_support;  // 1-based (row, col)
  std::set<int> coord_support;                  // 1-based coordinates

  static BandPattern entries(std::set<std::pair<int, int>> support) {
    BandPattern p;
    p.entry_support = std::move(support);
    return p;
  }
  static BandPattern coords(std::set<int> support) {
    BandPattern p;
    p.coord_support = std::move(support);
    return p;
  }
  static BandPattern full_entries(int rows, int cols) {
    BandPattern p;
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c) p.entry_support.insert({r, c});
    return p;
  }
};

/// Diagonal 0/1 matrix projecting onto the coordinates in coord_support.
/// Idempotent, positive, and a lattice homomorphism: |P∘U| = P∘|U|.
inline OrderBoundedOperator band_projection(const BandPattern& pattern,
                                            SpaceDescriptor space) {
  OrderBoundedOperator p = OrderBoundedOperator::zero(space, space);
  for (int i : pattern.coord_support) {
    if (i < 1 || i > space.dim)
      throw UsageError("band projection coordinate " + std::to_string(i) +
                       " out of range for dimension " + std::to_string(space.dim));
    p.at(i - 1, i - 1) = 1;
  }
  return p;
}

/// Membership in the band of matrices supported on entry_support: every
/// entry outside the support must vanish.
inline bool band_contains(const BandPattern& pattern, const OrderBoundedOperator& t) {
  for (const auto& [r, c] : pattern.entry_support)
    if (r < 1 || r > t.rows() || c < 1 || c > t.cols())
      throw ShapeError("band support entry (" + std::to_string(r) + "," +
                       std::to_string(c) + ") outside a " +
                       std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                       " shape");
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = 1; c <= t.cols(); ++c)
      if (!pattern.entry_support.count({r, c}) && t.at(r - 1, c - 1) != 0)
        return false;
  return true;
}

/// Text form: JSON-style array of rows of exact rationals.
inline std::string operator_to_text(const OrderBoundedOperator& t) {
  std::string out = "[";
  for (int r = 0; r < t.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < t.cols(); ++c) {
      if (c) out += ",";
      out += "\"" + scalar_to_string(t.at(r, c)) + "\"";
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace latticestat

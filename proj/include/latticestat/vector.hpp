#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "latticestat/scalar.hpp"
#include "latticestat/space.hpp"

namespace latticestat {

/// Element of a finite coordinate lattice. Immutable after construction;
/// the order is coordinate-wise, so join/meet/modulus are entry-wise and
/// are genuinely the lattice operations of the space.
class LatticeVector {
 public:
  LatticeVector(SpaceDescriptor space, std::vector<Scalar> coords)
      : space_(space), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != space_.dim)
      throw ShapeError("vector has " + std::to_string(coords_.size()) +
                       " coordinates in a space of dimension " +
                       std::to_string(space_.dim));
  }

  static LatticeVector zero(SpaceDescriptor space) {
    return LatticeVector(space, std::vector<Scalar>(space.dim, Scalar(0)));
  }
  /// e_i, 1-based coordinate index.
  static LatticeVector basis(SpaceDescriptor space, int i) {
    if (i < 1 || i > space.dim)
      throw UsageError("basis index " + std::to_string(i) + " out of range");
    std::vector<Scalar> c(space.dim, Scalar(0));
    c[i - 1] = 1;
    return LatticeVector(space, std::move(c));
  }
  static LatticeVector ones(SpaceDescriptor space) {
    return LatticeVector(space, std::vector<Scalar>(space.dim, Scalar(1)));
  }

  const SpaceDescriptor& space() const { return space_; }
  int dim() const { return space_.dim; }
  const Scalar& operator[](int i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  friend bool operator==(const LatticeVector& u, const LatticeVector& v) {
    return u.space_.same_lattice(v.space_) && u.coords_ == v.coords_;
  }

  friend LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
    return u.zip(v, [](const Scalar& a, const Scalar& b) { return a + b; });
  }
  friend LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
    return u.zip(v, [](const Scalar& a, const Scalar& b) { return a - b; });
  }
  friend LatticeVector operator-(const LatticeVector& u) {
    return u.map([](const Scalar& a) { return Scalar(-a); });
  }
  friend LatticeVector operator*(const Scalar& c, const LatticeVector& u) {
    return u.map([&](const Scalar& a) { return Scalar(c * a); });
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& a) { return a == 0; });
  }
  bool is_positive() const {  // u >= theta
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& a) { return a >= 0; });
  }

 private:
  template <typename F>
  LatticeVector map(F f) const {
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& a : coords_) out.push_back(f(a));
    return LatticeVector(space_, std::move(out));
  }
  template <typename F>
  LatticeVector zip(const LatticeVector& v, F f) const {
    require_same_space(*this, v);
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      out.push_back(f(coords_[i], v.coords_[i]));
    return LatticeVector(space_, std::move(out));
  }

  static void require_same_space(const LatticeVector& u, const LatticeVector& v) {
    if (!u.space_.same_lattice(v.space_))
      throw ShapeError("vectors live in different spaces (" +
                       u.space_.to_text() + " vs " + v.space_.to_text() + ")");
  }

  friend LatticeVector join(const LatticeVector&, const LatticeVector&);
  friend LatticeVector meet(const LatticeVector&, const LatticeVector&);
  friend bool leq(const LatticeVector&, const LatticeVector&);

  SpaceDescriptor space_;
  std::vector<Scalar> coords_;
};

/// u ∨ v: coordinate-wise maximum, the least upper bound.
inline LatticeVector join(const LatticeVector& u, const LatticeVector& v) {
  return u.zip(v, [](const Scalar& a, const Scalar& b) { return std::max(a, b); });
}

/// u ∧ v: coordinate-wise minimum, the greatest lower bound.
inline LatticeVector meet(const LatticeVector& u, const LatticeVector& v) {
  return u.zip(v, [](const Scalar& a, const Scalar& b) { return std::min(a, b); });
}

/// u <= v in the coordinate order. This is a partial order; leq(u,v) and
/// leq(v,u) may both be false.
inline bool leq(const LatticeVector& u, const LatticeVector& v) {
  LatticeVector::require_same_space(u, v);
  for (int i = 0; i < u.dim(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline LatticeVector abs(const LatticeVector& u) { return join(u, -u); }
inline LatticeVector pos_part(const LatticeVector& u) {
  return join(u, LatticeVector::zero(u.space()));
}
inline LatticeVector neg_part(const LatticeVector& u) {
  return join(-u, LatticeVector::zero(u.space()));
}

inline LatticeVector sup_list(std::span<const LatticeVector> vs) {
  if (vs.empty()) throw UsageError("sup_list of an empty list");
  LatticeVector acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) acc = join(acc, vs[i]);
  return acc;
}

inline LatticeVector inf_list(std::span<const LatticeVector> vs) {
  if (vs.empty()) throw UsageError("inf_list of an empty list");
  LatticeVector acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) acc = meet(acc, vs[i]);
  return acc;
}

/// Text form: JSON-style array of exact rationals, ["1/2","-3/1"].
inline std::string vector_to_text(const LatticeVector& u) {
  std::string out = "[";
  for (int i = 0; i < u.dim(); ++i) {
    if (i) out += ",";
    out += "\"" + scalar_to_string(u[i]) + "\"";
  }
  return out + "]";
}

}  // namespace latticestat

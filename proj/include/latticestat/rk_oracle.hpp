#pragma once

#include <optional>

#include "latticestat/operators.hpp"

namespace latticestat {

enum class RkKind { Modulus, Join, Meet };

/// Brute-force Riesz–Kantorovich evaluation, used as an independent oracle
/// against the entry-wise lattice operations.
///
///   modulus:  |S|(u) = sup { |S v| : |v| = u }, over the 2^n sign corners.
///   join:     (S ∨ T)(u) = sup { S v + T w : v + w = u, v,w >= theta },
///             over the 2^n corner splits v_i ∈ {0, u_i}.
///   meet:     the order dual of join.
///
/// The supremum of a finite set in a coordinate lattice is the
/// coordinate-wise maximum over the set, so each candidate is folded with
/// join/meet. Refuses domains of dimension > 12.
inline LatticeVector rk_reference(RkKind kind, const OrderBoundedOperator& s,
                                  const std::optional<OrderBoundedOperator>& t,
                                  const LatticeVector& u) {
  if (!u.is_positive()) throw UsageError("rk_reference requires u >= theta");
  if (!u.space().same_lattice(s.domain()))
    throw ShapeError("rk_reference: u not in the operator domain");
  const int n = s.cols();
  if (n > 12) throw UsageError("rk_reference refuses dimension > 12");
  if (kind != RkKind::Modulus) {
    if (!t) throw UsageError("rk_reference join/meet needs a second operator");
    if (!s.same_shape(*t)) throw ShapeError("rk_reference: operator shapes differ");
  }

  std::optional<LatticeVector> acc;
  const auto fold = [&](const LatticeVector& candidate) {
    if (!acc)
      acc = candidate;
    else
      acc = kind == RkKind::Meet ? meet(*acc, candidate) : join(*acc, candidate);
  };

  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<Scalar> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = (mask >> i) & 1 ? u[i] : Scalar(-u[i]);
    LatticeVector corner(u.space(), std::move(v));
    if (kind == RkKind::Modulus) {
      fold(abs(s.apply(corner)));
    } else {
      // reuse the mask as a corner split: v_i = u_i or 0, w = u - v
      LatticeVector part = join(corner, LatticeVector::zero(u.space()));
      fold(s.apply(part) + t->apply(u - part));
    }
  }
  return *acc;
}

}  // namespace latticestat

#pragma once

#include <string>

#include "latticestat/errors.hpp"

namespace latticestat {

enum class SpaceKind { FiniteDim, TruncatedSequence };

/// For TruncatedSequence spaces: which infinite-dimensional space the
/// truncation models. NullSequences feeds the mass bookkeeping of the
/// coordinate-functional refutation (whose dual lives in the summable side).
enum class TruncationFlavor { None, NullSequences, SummableSequences };

/// A finite coordinate lattice R^D with coordinate-wise order, or a
/// D-truncation of a sequence space tagged with its flavor.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::FiniteDim;
  int dim = 1;
  TruncationFlavor flavor = TruncationFlavor::None;

  static SpaceDescriptor finite(int d) {
    check_dim(d);
    return {SpaceKind::FiniteDim, d, TruncationFlavor::None};
  }
  static SpaceDescriptor truncated_c0(int d) {
    check_dim(d);
    return {SpaceKind::TruncatedSequence, d, TruncationFlavor::NullSequences};
  }
  static SpaceDescriptor truncated_l1(int d) {
    check_dim(d);
    return {SpaceKind::TruncatedSequence, d, TruncationFlavor::SummableSequences};
  }

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return a.kind == b.kind && a.dim == b.dim && a.flavor == b.flavor;
  }
  friend bool operator!=(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return !(a == b);
  }

  /// Order-compatibility: two descriptors carry the same coordinate lattice.
  bool same_lattice(const SpaceDescriptor& other) const {
    return dim == other.dim;
  }

  std::string to_text() const {
    switch (kind) {
      case SpaceKind::FiniteDim:
        return "finite(" + std::to_string(dim) + ")";
      case SpaceKind::TruncatedSequence:
        return (flavor == TruncationFlavor::SummableSequences ? "trunc_l1("
                                                              : "trunc_c0(") +
               std::to_string(dim) + ")";
    }
    return "finite(" + std::to_string(dim) + ")";
  }

 private:
  static void check_dim(int d) {
    if (d < 1) throw UsageError("space dimension must be >= 1, got " + std::to_string(d));
  }
};

}  // namespace latticestat

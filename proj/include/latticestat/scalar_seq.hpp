#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latticestat/indexset.hpp"
#include "latticestat/ratfun.hpp"
#include "latticestat/scalar.hpp"

namespace latticestat {

enum class Status { Proven, Refuted, Undetermined };

inline std::string status_to_string(Status s) {
  switch (s) {
    case Status::Proven: return "proven";
    case Status::Refuted: return "refuted";
    case Status::Undetermined: return "undetermined";
  }
  return "undetermined";
}

/// Symbolic real sequence n -> Scalar: a rational-function closed form,
/// an explicit finite prefix over a closed-form tail, or a density split.
class ScalarSeq {
 public:
  enum class Kind { RatFun, Prefix, Piecewise };

  static ScalarSeq ratfun(RationalFunction f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::RatFun;
    n->f = std::move(f);
    return ScalarSeq(std::move(n));
  }
  static ScalarSeq constant(const Scalar& v) {
    return ratfun(RationalFunction::constant(v));
  }
  /// values[0..K-1] at n = 1..K, then the tail sequence evaluated at n.
  static ScalarSeq prefix(std::vector<Scalar> values, ScalarSeq tail) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prefix;
    n->values = std::move(values);
    n->left = std::move(tail.node_);
    return ScalarSeq(std::move(n));
  }
  static ScalarSeq piecewise(IndexSet j, ScalarSeq on, ScalarSeq off) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Piecewise;
    n->set = std::move(j);
    n->left = std::move(on.node_);
    n->right = std::move(off.node_);
    return ScalarSeq(std::move(n));
  }

  Scalar eval(long n) const {
    if (n < 1) throw UsageError("scalar sequences are indexed from 1");
    return eval_node(*node_, n);
  }

  std::string to_text() const { return text_node(*node_); }

  /// Exact set X with X = { n : |eval(n) - r| >= eps }, when derivable from
  /// the structure; nullopt when any branch analysis exceeds its budget.
  std::optional<IndexSet> exceptional_set(const Scalar& r, const Scalar& eps) const {
    return exceptional_node(*node_, r, eps);
  }

 private:
  struct Node {
    Kind kind = Kind::RatFun;
    RationalFunction f;
    std::vector<Scalar> values;
    std::optional<IndexSet> set;
    std::shared_ptr<const Node> left, right;
  };

  explicit ScalarSeq(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Scalar eval_node(const Node& nd, long n) {
    switch (nd.kind) {
      case Kind::RatFun:
        return nd.f.eval(n);
      case Kind::Prefix:
        if (n <= static_cast<long>(nd.values.size())) return nd.values[n - 1];
        return eval_node(*nd.left, n);
      case Kind::Piecewise:
        return nd.set->contains(n) ? eval_node(*nd.left, n) : eval_node(*nd.right, n);
    }
    return 0;
  }

  static constexpr long kScanBudget = 100'000;

  // For a closed form f: the set {n : |f(n) - r| >= eps} is exactly a finite
  // scanned prefix plus, when |f - r| >= eps eventually, the whole tail.
  // Both sides are decided by eventual-sign analysis of f - r -/+ eps.
  static std::optional<IndexSet> exceptional_ratfun(const RationalFunction& f,
                                                    const Scalar& r, const Scalar& eps) {
    const RationalFunction high = f - RationalFunction::constant(r + eps);
    const RationalFunction low = RationalFunction::constant(r - eps) - f;
    auto sh = high.eventual_sign();
    auto sl = low.eventual_sign();
    if (!sh || !sl) return std::nullopt;
    const long from = std::max(sh->from, sl->from);
    if (from > kScanBudget) return std::nullopt;
    std::vector<long> prefix_exceptional;
    for (long n = 1; n < from; ++n) {
      const Scalar v = f.eval(n);
      if (v - r >= eps || r - v >= eps) prefix_exceptional.push_back(n);
    }
    const bool tail_exceptional = sh->sign >= 0 || sl->sign >= 0;
    IndexSet fin = IndexSet::finite(std::move(prefix_exceptional));
    if (!tail_exceptional) return fin;
    std::vector<long> below;
    for (long n = 1; n < from; ++n) below.push_back(n);
    return IndexSet::unite(std::move(fin), IndexSet::cofinite(std::move(below)));
  }

  static std::optional<IndexSet> exceptional_node(const Node& nd, const Scalar& r,
                                                  const Scalar& eps) {
    switch (nd.kind) {
      case Kind::RatFun:
        return exceptional_ratfun(nd.f, r, eps);
      case Kind::Prefix: {
        auto tail = exceptional_node(*nd.left, r, eps);
        if (!tail) return std::nullopt;
        std::vector<long> bad, covered;
        for (long n = 1; n <= static_cast<long>(nd.values.size()); ++n) {
          covered.push_back(n);
          const Scalar& v = nd.values[n - 1];
          if (v - r >= eps || r - v >= eps) bad.push_back(n);
        }
        return IndexSet::unite(
            IndexSet::finite(std::move(bad)),
            IndexSet::intersect(*tail, IndexSet::cofinite(std::move(covered))));
      }
      case Kind::Piecewise: {
        auto on = exceptional_node(*nd.left, r, eps);
        auto off = exceptional_node(*nd.right, r, eps);
        if (!on || !off) return std::nullopt;
        return IndexSet::unite(IndexSet::intersect(*nd.set, *on),
                               IndexSet::intersect(IndexSet::complement(*nd.set), *off));
      }
    }
    return std::nullopt;
  }

  static std::string text_node(const Node& nd) {
    switch (nd.kind) {
      case Kind::RatFun:
        return "rf(" + nd.f.to_string() + ")";
      case Kind::Prefix: {
        std::string vals;
        for (std::size_t i = 0; i < nd.values.size(); ++i) {
          if (i) vals += ",";
          vals += scalar_to_string(nd.values[i]);
        }
        return "prefix(" + vals + ";" + text_node(*nd.left) + ")";
      }
      case Kind::Piecewise:
        return "piecewise(" + nd.set->to_text() + "," + text_node(*nd.left) + "," +
               text_node(*nd.right) + ")";
    }
    return "rf(0)";
  }

  std::shared_ptr<const Node> node_;
};

/// Verdict for statistical convergence of a real sequence. Proven and
/// Refuted carry a symbolic exceptional set; Undetermined carries only
/// finite-horizon evidence.
struct ScalarStatVerdict {
  Status status = Status::Undetermined;
  std::optional<IndexSet> exceptional;  // exact for Proven/Refuted
  Scalar exceptional_density_lb = 0;    // positive for Refuted
  long horizon = 0;
  Scalar empirical_exceptional_density = 0;
  std::string narrative;
};

/// Statistical convergence of (r_n) to r: the exceptional set
/// {j : |r_j - r| >= eps} must have density zero. Proven/Refuted only via
/// the symbolic algebra; finite counting alone yields Undetermined.
inline ScalarStatVerdict stat_converges_real(const ScalarSeq& rule, const Scalar& r,
                                             const Scalar& eps, long horizon) {
  if (eps <= 0) throw UsageError("stat_converges_real requires eps > 0");
  if (horizon < 1) throw UsageError("stat_converges_real requires horizon >= 1");
  ScalarStatVerdict out;
  out.horizon = horizon;

  long exceptional_count = 0;
  for (long n = 1; n <= horizon; ++n) {
    const Scalar v = rule.eval(n);
    if (v - r >= eps || r - v >= eps) ++exceptional_count;
  }
  out.empirical_exceptional_density = Scalar(exceptional_count, horizon);

  auto exc = rule.exceptional_set(r, eps);
  if (exc) {
    out.exceptional = exc;
    Density d = exc->density();
    if (d.known && d.value == 0) {
      out.status = Status::Proven;
      out.narrative = "exceptional set " + exc->to_text() + " has exact density 0";
      return out;
    }
    Scalar lb = exc->density_lower_bound();
    if (lb > 0) {
      out.status = Status::Refuted;
      out.exceptional_density_lb = lb;
      out.narrative = "exceptional set " + exc->to_text() +
                      " has density >= " + scalar_to_string(lb);
      return out;
    }
  }
  out.narrative = "no symbolic density verdict; empirical exceptional density " +
                  scalar_to_string(out.empirical_exceptional_density) + " at horizon " +
                  std::to_string(horizon);
  return out;
}

}  // namespace latticestat

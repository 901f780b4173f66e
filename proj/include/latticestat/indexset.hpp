#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "latticestat/scalar.hpp"

namespace latticestat {

/// Natural density of an index set: Exact(q) or Unknown, never guessed
/// from finite counts.
struct Density {
  bool known = false;
  Scalar value = 0;
  static Density exact(Scalar q) { return {true, std::move(q)}; }
  static Density unknown() { return {}; }
};

/// Symbolic subset of N = {1, 2, 3, ...}. Immutable algebraic tree with
/// decidable membership; density is derived by structural recursion with
/// sound closure rules and falls back to Unknown.
class IndexSet {
 public:
  enum class Kind { Finite, Cofinite, AP, Squares, Union, Intersection, Complement, Predicate };

  static IndexSet finite(std::vector<long> elems) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Finite;
    n->list = canonical(std::move(elems));
    return IndexSet(std::move(n));
  }
  static IndexSet cofinite(std::vector<long> excluded) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cofinite;
    n->list = canonical(std::move(excluded));
    return IndexSet(std::move(n));
  }
  static IndexSet naturals() { return cofinite({}); }
  static IndexSet empty() { return finite({}); }
  /// {a, a+d, a+2d, ...} with a >= 1, d >= 1.
  static IndexSet ap(long a, long d) {
    if (a < 1 || d < 1) throw UsageError("arithmetic progression needs a >= 1, d >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::AP;
    n->a = a;
    n->d = d;
    return IndexSet(std::move(n));
  }
  static IndexSet squares() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Squares;
    return IndexSet(std::move(n));
  }
  static IndexSet unite(IndexSet a, IndexSet b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return IndexSet(std::move(n));
  }
  static IndexSet intersect(IndexSet a, IndexSet b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return IndexSet(std::move(n));
  }
  static IndexSet complement(IndexSet a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Complement;
    n->left = std::move(a.node_);
    return IndexSet(std::move(n));
  }
  /// Opaque membership rule; density is always Unknown. The rule must be a
  /// pure function of n.
  static IndexSet predicate(std::string name, std::function<bool(long)> rule) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Predicate;
    n->pred_name = std::move(name);
    n->pred = std::move(rule);
    return IndexSet(std::move(n));
  }

  Kind kind() const { return node_->kind; }

  bool contains(long n) const {
    if (n < 1) return false;
    return contains_node(*node_, n);
  }

  /// |J ∩ [1..N]|, exact. Closed forms for the primitive nodes, a
  /// membership scan for composites.
  long count_upto(long N) const {
    if (N < 1) throw UsageError("count_upto requires N >= 1");
    return count_node(*node_, N);
  }

  Scalar empirical_density(long N) const {
    return Scalar(count_upto(N), N);
  }

  Density density() const { return density_node(*node_); }

  /// Sound exact lower bound on the lower asymptotic density. Used only to
  /// justify refutations; 0 when nothing better is derivable.
  Scalar density_lower_bound() const { return lower_node(*node_); }

  /// The set provably has infinitely many members.
  bool certainly_infinite() const { return infinite_node(*node_); }

  /// Least member >= n; scans membership with a safety cap.
  long next_member(long n, long cap = 4'000'000) const {
    for (long k = std::max(1L, n); k <= n + cap; ++k)
      if (contains(k)) return k;
    throw InternalError("next_member: no member of " + to_text() + " within " +
                        std::to_string(cap) + " of " + std::to_string(n));
  }

  /// CLI / certificate syntax, parseable by parse_indexset.
  std::string to_text() const { return text_node(*node_); }

 private:
  struct Node {
    Kind kind = Kind::Finite;
    std::vector<long> list;  // Finite members / Cofinite exclusions
    long a = 1, d = 1;       // AP
    std::shared_ptr<const Node> left, right;
    std::string pred_name;
    std::function<bool(long)> pred;
  };

  explicit IndexSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::vector<long> canonical(std::vector<long> v) {
    for (long x : v)
      if (x < 1) throw UsageError("index sets live in N; got " + std::to_string(x));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  static bool is_square(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
  }
  static long isqrt(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  }

  static bool contains_node(const Node& nd, long n) {
    switch (nd.kind) {
      case Kind::Finite:
        return std::binary_search(nd.list.begin(), nd.list.end(), n);
      case Kind::Cofinite:
        return !std::binary_search(nd.list.begin(), nd.list.end(), n);
      case Kind::AP:
        return n >= nd.a && (n - nd.a) % nd.d == 0;
      case Kind::Squares:
        return is_square(n);
      case Kind::Union:
        return contains_node(*nd.left, n) || contains_node(*nd.right, n);
      case Kind::Intersection:
        return contains_node(*nd.left, n) && contains_node(*nd.right, n);
      case Kind::Complement:
        return !contains_node(*nd.left, n);
      case Kind::Predicate:
        return nd.pred(n);
    }
    return false;
  }

  static long count_node(const Node& nd, long N) {
    switch (nd.kind) {
      case Kind::Finite:
        return static_cast<long>(
            std::upper_bound(nd.list.begin(), nd.list.end(), N) - nd.list.begin());
      case Kind::Cofinite:
        return N - static_cast<long>(std::upper_bound(nd.list.begin(), nd.list.end(), N) -
                                     nd.list.begin());
      case Kind::AP:
        return nd.a <= N ? (N - nd.a) / nd.d + 1 : 0;
      case Kind::Squares:
        return isqrt(N);
      case Kind::Complement:
        return N - count_node(*nd.left, N);
      default: {
        long c = 0;
        for (long n = 1; n <= N; ++n)
          if (contains_node(nd, n)) ++c;
        return c;
      }
    }
  }

  // Structural density rules, all of them theorems of the density calculus:
  //   d(Finite) = 0, d(Cofinite) = 1, d(AP(a,d)) = 1/d, d(Squares) = 0,
  //   d(comp A) = 1 - d(A),
  //   d(A ∩ B) = d(A) when d(B) = 1 (and symmetrically), 0 when either is 0,
  //   d(A ∪ B) = d(A) when d(B) = 0 (and symmetrically), 1 when either is 1.
  // Everything else is honestly Unknown; Predicate nodes are never guessed.
  static Density density_node(const Node& nd) {
    switch (nd.kind) {
      case Kind::Finite:
        return Density::exact(0);
      case Kind::Cofinite:
        return Density::exact(1);
      case Kind::AP:
        return Density::exact(Scalar(1, nd.d));
      case Kind::Squares:
        return Density::exact(0);
      case Kind::Complement: {
        Density d = density_node(*nd.left);
        return d.known ? Density::exact(1 - d.value) : Density::unknown();
      }
      case Kind::Intersection: {
        Density l = density_node(*nd.left), r = density_node(*nd.right);
        if ((l.known && l.value == 0) || (r.known && r.value == 0))
          return Density::exact(0);
        if (l.known && l.value == 1) return r;
        if (r.known && r.value == 1) return l;
        return Density::unknown();
      }
      case Kind::Union: {
        Density l = density_node(*nd.left), r = density_node(*nd.right);
        if ((l.known && l.value == 1) || (r.known && r.value == 1))
          return Density::exact(1);
        if (l.known && l.value == 0) return r;
        if (r.known && r.value == 0) return l;
        return Density::unknown();
      }
      case Kind::Predicate:
        return Density::unknown();
    }
    return Density::unknown();
  }

  // Lower bound on the lower density: max rule for unions,
  // lb(A) + lb(B) - 1 for intersections, 1 - d(A) via exact density for
  // complements. Conservative everywhere else.
  static Scalar lower_node(const Node& nd) {
    Density d = density_node(nd);
    switch (nd.kind) {
      case Kind::Union:
        return std::max(lower_node(*nd.left), lower_node(*nd.right));
      case Kind::Intersection: {
        Scalar s = lower_node(*nd.left) + lower_node(*nd.right) - 1;
        return s > 0 ? s : Scalar(0);
      }
      case Kind::Complement: {
        Density inner = density_node(*nd.left);
        if (inner.known) return 1 - inner.value;
        return 0;
      }
      default:
        return d.known ? d.value : Scalar(0);
    }
  }

  static bool infinite_node(const Node& nd) {
    switch (nd.kind) {
      case Kind::Finite:
        return false;
      case Kind::Cofinite:
      case Kind::AP:
      case Kind::Squares:
        return true;
      case Kind::Union:
        return infinite_node(*nd.left) || infinite_node(*nd.right);
      case Kind::Intersection: {
        // provable when one side is cofinite-like and the other infinite
        Density l = density_node(*nd.left), r = density_node(*nd.right);
        if (l.known && l.value == 1 && infinite_node(*nd.right)) return true;
        if (r.known && r.value == 1 && infinite_node(*nd.left)) return true;
        Scalar lb = lower_node(nd);
        return lb > 0;
      }
      case Kind::Complement: {
        Density inner = density_node(*nd.left);
        return inner.known && inner.value < 1;
      }
      case Kind::Predicate:
        return false;
    }
    return false;
  }

  static std::string join_list(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  }

  static std::string text_node(const Node& nd) {
    switch (nd.kind) {
      case Kind::Finite:
        return "finite(" + join_list(nd.list) + ")";
      case Kind::Cofinite:
        return nd.list.empty() ? "naturals" : "cofinite(" + join_list(nd.list) + ")";
      case Kind::AP:
        return "ap(" + std::to_string(nd.a) + "," + std::to_string(nd.d) + ")";
      case Kind::Squares:
        return "squares";
      case Kind::Union:
        return "union(" + text_node(*nd.left) + "," + text_node(*nd.right) + ")";
      case Kind::Intersection:
        return "inter(" + text_node(*nd.left) + "," + text_node(*nd.right) + ")";
      case Kind::Complement:
        return "complement(" + text_node(*nd.left) + ")";
      case Kind::Predicate:
        return "predicate(" + nd.pred_name + ")";
    }
    return "finite()";
  }

  std::shared_ptr<const Node> node_;
};

inline Scalar empirical_density(const IndexSet& j, long N) {
  return j.empirical_density(N);
}
inline Density density_exact(const IndexSet& j) { return j.density(); }

}  // namespace latticestat

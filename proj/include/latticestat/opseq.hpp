#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latticestat/indexset.hpp"
#include "latticestat/operators.hpp"
#include "latticestat/ratfun.hpp"

namespace latticestat {

/// Matrix whose entries are rational functions of the sequence index n.
/// The closed-form backbone of sequence analysis: sums, scalings and
/// compositions stay in the class, and lattice operations reenter it
/// beyond an exactly computed stabilization index.
class MatrixRF {
 public:
  MatrixRF(SpaceDescriptor domain, SpaceDescriptor codomain,
           std::vector<RationalFunction> entries)
      : domain_(domain), codomain_(codomain), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != domain_.dim * codomain_.dim)
      throw ShapeError("matrix function entry count mismatch");
  }

  static MatrixRF constant(const OrderBoundedOperator& t) {
    std::vector<RationalFunction> e;
    e.reserve(t.entries().size());
    for (const auto& x : t.entries()) e.push_back(RationalFunction::constant(x));
    return MatrixRF(t.domain(), t.codomain(), std::move(e));
  }
  static MatrixRF scaled(const RationalFunction& c, const OrderBoundedOperator& t) {
    std::vector<RationalFunction> e;
    e.reserve(t.entries().size());
    for (const auto& x : t.entries()) e.push_back(x * c);
    return MatrixRF(t.domain(), t.codomain(), std::move(e));
  }
  static MatrixRF zero(SpaceDescriptor domain, SpaceDescriptor codomain) {
    return MatrixRF(domain, codomain,
                    std::vector<RationalFunction>(domain.dim * codomain.dim));
  }

  const SpaceDescriptor& domain() const { return domain_; }
  const SpaceDescriptor& codomain() const { return codomain_; }
  int rows() const { return codomain_.dim; }
  int cols() const { return domain_.dim; }
  const RationalFunction& at(int r, int c) const { return entries_[r * cols() + c]; }
  RationalFunction& at(int r, int c) { return entries_[r * cols() + c]; }
  const std::vector<RationalFunction>& entries() const { return entries_; }

  OrderBoundedOperator eval(long n) const {
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& f : entries_) out.push_back(f.eval(n));
    return OrderBoundedOperator(domain_, codomain_, std::move(out));
  }

  friend MatrixRF operator+(const MatrixRF& a, const MatrixRF& b) {
    if (!a.domain_.same_lattice(b.domain_) || !a.codomain_.same_lattice(b.codomain_))
      throw ShapeError("matrix function shape mismatch in sum");
    std::vector<RationalFunction> e;
    e.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      e.push_back(a.entries_[i] + b.entries_[i]);
    return MatrixRF(a.domain_, a.codomain_, std::move(e));
  }
  friend MatrixRF operator-(const MatrixRF& a, const MatrixRF& b) {
    if (!a.domain_.same_lattice(b.domain_) || !a.codomain_.same_lattice(b.codomain_))
      throw ShapeError("matrix function shape mismatch in difference");
    std::vector<RationalFunction> e;
    e.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      e.push_back(a.entries_[i] - b.entries_[i]);
    return MatrixRF(a.domain_, a.codomain_, std::move(e));
  }
  friend MatrixRF operator*(const Scalar& c, const MatrixRF& a) {
    std::vector<RationalFunction> e;
    e.reserve(a.entries_.size());
    for (const auto& f : a.entries_) e.push_back(c * f);
    return MatrixRF(a.domain_, a.codomain_, std::move(e));
  }

  /// t ∘ M(n): constant matrix on the left.
  static MatrixRF compose_left(const OrderBoundedOperator& t, const MatrixRF& m) {
    if (!m.codomain_.same_lattice(t.domain()))
      throw ShapeError("compose_left shape mismatch");
    MatrixRF out = zero(m.domain_, t.codomain());
    for (int r = 0; r < t.rows(); ++r)
      for (int k = 0; k < t.cols(); ++k) {
        if (t.at(r, k) == 0) continue;
        for (int c = 0; c < m.cols(); ++c)
          out.at(r, c) = out.at(r, c) + t.at(r, k) * m.at(k, c);
      }
    return out;
  }

  /// M(n) ∘ p: constant matrix on the right.
  static MatrixRF compose_right(const MatrixRF& m, const OrderBoundedOperator& p) {
    if (!p.codomain().same_lattice(m.domain_))
      throw ShapeError("compose_right shape mismatch");
    MatrixRF out = zero(p.domain(), m.codomain_);
    for (int r = 0; r < m.rows(); ++r)
      for (int k = 0; k < m.cols(); ++k) {
        if (m.at(r, k).is_zero()) continue;
        for (int c = 0; c < p.cols(); ++c)
          out.at(r, c) = out.at(r, c) + p.at(k, c) * m.at(r, k);
      }
    return out;
  }

  std::string to_text() const {
    std::string out = "[";
    for (int r = 0; r < rows(); ++r) {
      if (r) out += ",";
      out += "[";
      for (int c = 0; c < cols(); ++c) {
        if (c) out += ",";
        out += at(r, c).to_string();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  SpaceDescriptor domain_;
  SpaceDescriptor codomain_;
  std::vector<RationalFunction> entries_;
};

/// Closed-form combinator tree for an infinite operator sequence n -> T_n.
/// Sequences are symbolic programs, never stored arrays: verdicts about
/// infinite tails need the closed form.
class OperatorSequence {
 public:
  enum class Kind {
    Const,
    ScaledOp,
    MatrixFn,
    CoordFunctional,
    Piecewise,
    Sum,
    Scale,
    Join,
    Meet,
    Abs,
    PosPart,
    ComposeLeft,
    ComposeRight,
    AtNextMember,
  };

  static OperatorSequence constant(OrderBoundedOperator t) {
    auto n = make(Kind::Const);
    n->op = std::move(t);
    return finish(std::move(n));
  }
  static OperatorSequence scaled(RationalFunction c, OrderBoundedOperator t) {
    auto n = make(Kind::ScaledOp);
    n->rf = std::move(c);
    n->op = std::move(t);
    return finish(std::move(n));
  }
  static OperatorSequence matrix_fn(MatrixRF m) {
    auto n = make(Kind::MatrixFn);
    n->mat = std::move(m);
    return finish(std::move(n));
  }
  /// n-th coordinate functional of the D-truncated null-sequence space,
  /// the zero functional beyond the truncation.
  static OperatorSequence coord_functional(int truncation) {
    if (truncation < 1) throw UsageError("coordfun truncation must be >= 1");
    auto n = make(Kind::CoordFunctional);
    n->truncation = truncation;
    return finish(std::move(n));
  }
  static OperatorSequence piecewise(IndexSet j, OperatorSequence on, OperatorSequence off) {
    auto n = make(Kind::Piecewise);
    n->set = std::move(j);
    n->a = std::move(on.node_);
    n->b = std::move(off.node_);
    return finish(std::move(n));
  }
  static OperatorSequence sum(OperatorSequence a, OperatorSequence b) {
    return binary(Kind::Sum, std::move(a), std::move(b));
  }
  static OperatorSequence scale(Scalar alpha, OperatorSequence a) {
    auto n = make(Kind::Scale);
    n->alpha = std::move(alpha);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }
  static OperatorSequence join(OperatorSequence a, OperatorSequence b) {
    return binary(Kind::Join, std::move(a), std::move(b));
  }
  static OperatorSequence meet(OperatorSequence a, OperatorSequence b) {
    return binary(Kind::Meet, std::move(a), std::move(b));
  }
  static OperatorSequence abs(OperatorSequence a) {
    auto n = make(Kind::Abs);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }
  static OperatorSequence pos_part(OperatorSequence a) {
    auto n = make(Kind::PosPart);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }
  /// n -> t ∘ A_n.
  static OperatorSequence compose_left(OrderBoundedOperator t, OperatorSequence a) {
    auto n = make(Kind::ComposeLeft);
    n->op = std::move(t);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }
  /// n -> A_n ∘ p.
  static OperatorSequence compose_right(OperatorSequence a, OrderBoundedOperator p) {
    auto n = make(Kind::ComposeRight);
    n->op = std::move(p);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }
  /// n -> A_{d_n} with d_n the least member of j with d_n >= n: the exact
  /// tail-supremum device of the characterization construction when A is
  /// decreasing along j.
  static OperatorSequence at_next_member(IndexSet j, OperatorSequence a) {
    auto n = make(Kind::AtNextMember);
    n->set = std::move(j);
    n->a = std::move(a.node_);
    return finish(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  const SpaceDescriptor& domain() const { return node_->domain; }
  const SpaceDescriptor& codomain() const { return node_->codomain; }

  OrderBoundedOperator eval(long n) const {
    if (n < 1) throw UsageError("operator sequences are indexed from 1");
    return eval_node(*node_, n);
  }

  std::string to_text() const { return text_node(*node_); }

  // Structure accessors used by the analyzer.
  const OrderBoundedOperator& op() const { return *node_->op_ptr(); }
  const RationalFunction& coefficient() const { return node_->rf; }
  const MatrixRF& matrix() const { return *node_->mat_ptr(); }
  int truncation() const { return node_->truncation; }
  const IndexSet& set() const { return *node_->set; }
  const Scalar& scale_factor() const { return node_->alpha; }
  OperatorSequence child_a() const { return OperatorSequence(node_->a); }
  OperatorSequence child_b() const { return OperatorSequence(node_->b); }
  bool has_child_b() const { return node_->b != nullptr; }

 private:
  struct Node {
    Kind kind = Kind::Const;
    std::optional<OrderBoundedOperator> op;
    RationalFunction rf;
    std::optional<MatrixRF> mat;
    int truncation = 0;
    std::optional<IndexSet> set;
    Scalar alpha = 0;
    std::shared_ptr<const Node> a, b;
    SpaceDescriptor domain, codomain;

    const OrderBoundedOperator* op_ptr() const { return op ? &*op : nullptr; }
    const MatrixRF* mat_ptr() const { return mat ? &*mat : nullptr; }
  };

  explicit OperatorSequence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }
  static OperatorSequence binary(Kind k, OperatorSequence a, OperatorSequence b) {
    auto n = make(k);
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return finish(std::move(n));
  }

  static void require_same_shape(const Node& x, const Node& y, const char* what) {
    if (!x.domain.same_lattice(y.domain) || !x.codomain.same_lattice(y.codomain))
      throw ShapeError(std::string("sequence combinator '") + what +
                       "' joins inconsistent shapes");
  }

  static OperatorSequence finish(std::shared_ptr<Node> n) {
    switch (n->kind) {
      case Kind::Const:
      case Kind::ScaledOp:
        n->domain = n->op->domain();
        n->codomain = n->op->codomain();
        break;
      case Kind::MatrixFn:
        n->domain = n->mat->domain();
        n->codomain = n->mat->codomain();
        break;
      case Kind::CoordFunctional:
        n->domain = SpaceDescriptor::truncated_c0(n->truncation);
        n->codomain = SpaceDescriptor::finite(1);
        break;
      case Kind::Piecewise:
      case Kind::Sum:
      case Kind::Join:
      case Kind::Meet:
        require_same_shape(*n->a, *n->b, "binary");
        n->domain = n->a->domain;
        n->codomain = n->a->codomain;
        break;
      case Kind::Scale:
      case Kind::Abs:
      case Kind::PosPart:
      case Kind::AtNextMember:
        n->domain = n->a->domain;
        n->codomain = n->a->codomain;
        break;
      case Kind::ComposeLeft:
        if (!n->a->codomain.same_lattice(n->op->domain()))
          throw ShapeError("lcompose: sequence codomain does not feed the operator");
        n->domain = n->a->domain;
        n->codomain = n->op->codomain();
        break;
      case Kind::ComposeRight:
        if (!n->op->codomain().same_lattice(n->a->domain))
          throw ShapeError("rcompose: operator codomain does not feed the sequence");
        n->domain = n->op->domain();
        n->codomain = n->a->codomain;
        break;
    }
    return OperatorSequence(std::move(n));
  }

  static OrderBoundedOperator eval_node(const Node& nd, long n) {
    switch (nd.kind) {
      case Kind::Const:
        return *nd.op;
      case Kind::ScaledOp:
        return nd.rf.eval(n) * *nd.op;
      case Kind::MatrixFn:
        return nd.mat->eval(n);
      case Kind::CoordFunctional: {
        OrderBoundedOperator row = OrderBoundedOperator::zero(
            SpaceDescriptor::truncated_c0(nd.truncation), SpaceDescriptor::finite(1));
        if (n <= nd.truncation) row.at(0, static_cast<int>(n) - 1) = 1;
        return row;
      }
      case Kind::Piecewise:
        return nd.set->contains(n) ? eval_node(*nd.a, n) : eval_node(*nd.b, n);
      case Kind::Sum:
        return eval_node(*nd.a, n) + eval_node(*nd.b, n);
      case Kind::Scale:
        return nd.alpha * eval_node(*nd.a, n);
      case Kind::Join:
        return op_join(eval_node(*nd.a, n), eval_node(*nd.b, n));
      case Kind::Meet:
        return op_meet(eval_node(*nd.a, n), eval_node(*nd.b, n));
      case Kind::Abs:
        return op_modulus(eval_node(*nd.a, n));
      case Kind::PosPart:
        return op_pos_part(eval_node(*nd.a, n));
      case Kind::ComposeLeft:
        return compose(*nd.op, eval_node(*nd.a, n));
      case Kind::ComposeRight:
        return compose(eval_node(*nd.a, n), *nd.op);
      case Kind::AtNextMember:
        return eval_node(*nd.a, nd.set->next_member(n));
    }
    throw InternalError("unreachable sequence node");
  }

  static std::string matrix_literal(const OrderBoundedOperator& t) {
    std::string out = "[";
    for (int r = 0; r < t.rows(); ++r) {
      if (r) out += ",";
      out += "[";
      for (int c = 0; c < t.cols(); ++c) {
        if (c) out += ",";
        out += scalar_to_string(t.at(r, c));
      }
      out += "]";
    }
    return out + "]";
  }

  static std::string text_node(const Node& nd) {
    switch (nd.kind) {
      case Kind::Const:
        return "const(" + matrix_literal(*nd.op) + ")";
      case Kind::ScaledOp:
        return "scaled(" + nd.rf.to_string() + "," + matrix_literal(*nd.op) + ")";
      case Kind::MatrixFn:
        return "matrixfn(" + nd.mat->to_text() + ")";
      case Kind::CoordFunctional:
        return "coordfun(" + std::to_string(nd.truncation) + ")";
      case Kind::Piecewise:
        return "piecewise(" + nd.set->to_text() + "," + text_node(*nd.a) + "," +
               text_node(*nd.b) + ")";
      case Kind::Sum:
        return "sum(" + text_node(*nd.a) + "," + text_node(*nd.b) + ")";
      case Kind::Scale:
        return "scale(" + scalar_to_string(nd.alpha) + "," + text_node(*nd.a) + ")";
      case Kind::Join:
        return "join(" + text_node(*nd.a) + "," + text_node(*nd.b) + ")";
      case Kind::Meet:
        return "meet(" + text_node(*nd.a) + "," + text_node(*nd.b) + ")";
      case Kind::Abs:
        return "abs(" + text_node(*nd.a) + ")";
      case Kind::PosPart:
        return "pospart(" + text_node(*nd.a) + ")";
      case Kind::ComposeLeft:
        return "lcompose(" + matrix_literal(*nd.op) + "," + text_node(*nd.a) + ")";
      case Kind::ComposeRight:
        return "rcompose(" + text_node(*nd.a) + "," + matrix_literal(*nd.op) + ")";
      case Kind::AtNextMember:
        return "atnext(" + nd.set->to_text() + "," + text_node(*nd.a) + ")";
    }
    return "const([[0/1]])";
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace latticestat

#pragma once

// Exact linear algebra: sparse labeled vectors and dense Eigen matrices over
// the exact field. Elimination never pivots by magnitude; the first nonzero
// entry of a column is the pivot.

#include <Eigen/Core>

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "liecg/errors.hpp"
#include "liecg/exactnum.hpp"

namespace Eigen {
template <>
struct NumTraits<liecg::FieldElem> : GenericNumTraits<liecg::FieldElem> {
  using Real = liecg::FieldElem;
  using NonInteger = liecg::FieldElem;
  using Literal = liecg::FieldElem;
  using Nested = liecg::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0L; }
  static inline Real dummy_precision() { return 0L; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace liecg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using FieldMatrix = Matrix<FieldElem>;
using FieldVector = Vector<FieldElem>;

namespace detail {
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}
}  // namespace detail

/// Sparse vector sum_k coeff_k |label_k>. Terms are sorted by label, labels
/// are unique and coefficients nonzero.
template <class Label>
class LabeledVector {
 public:
  struct Term {
    Label label;
    FieldElem coeff;
    bool operator==(const Term&) const = default;
  };

  LabeledVector() = default;
  /// Merges repeated labels and drops zero coefficients.
  static LabeledVector from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.label < b.label; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().label == t.label)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    LabeledVector v;
    v.terms_ = std::move(out);
    return v;
  }
  static LabeledVector unit(Label l, FieldElem c = FieldElem(1L)) {
    return from_terms({Term{std::move(l), std::move(c)}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of |l>, zero if absent.
  FieldElem coeff(const Label& l) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const Term& t, const Label& x) { return t.label < x; });
    if (it != terms_.end() && it->label == l) return it->coeff;
    return FieldElem();
  }

  LabeledVector& operator+=(const LabeledVector& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->label < b->label)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->label < a->label) {
        merged.push_back(*b++);
      } else {
        FieldElem c = a->coeff + b->coeff;
        if (!c.is_zero()) merged.push_back({a->label, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }
  LabeledVector& operator-=(const LabeledVector& o) { return *this += o.scaled(FieldElem(-1L)); }
  LabeledVector scaled(const FieldElem& c) const {
    if (c.is_zero()) return {};
    LabeledVector r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  LabeledVector operator-() const { return scaled(FieldElem(-1L)); }
  friend LabeledVector operator+(LabeledVector a, const LabeledVector& b) { return a += b; }
  friend LabeledVector operator-(LabeledVector a, const LabeledVector& b) { return a -= b; }
  bool operator==(const LabeledVector&) const = default;

  /// Applies f to every label, merging labels that collide.
  template <class F>
  auto map_labels(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Label&>()))>;
    std::vector<typename LabeledVector<Out>::Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({f(t.label), t.coeff});
    return LabeledVector<Out>::from_terms(std::move(ts));
  }

 private:
  std::vector<Term> terms_;
};

template <class Label>
LabeledVector<Label> vec_add(const LabeledVector<Label>& u, const LabeledVector<Label>& v) {
  return u + v;
}
template <class Label>
LabeledVector<Label> vec_scale(const LabeledVector<Label>& u, const FieldElem& c) {
  return u.scaled(c);
}
template <class Label>
LabeledVector<Label> vec_simplify(const LabeledVector<Label>& u) {
  return LabeledVector<Label>::from_terms(u.terms());
}

/// Bilinear form on basis labels.
template <class Label>
using LabelForm = std::function<FieldElem(const Label&, const Label&)>;

/// sum_{a,b} u_a v_b form(a,b). With an orthonormal form only equal labels
/// contribute; pass form = nullptr for that case.
template <class Label>
FieldElem bilinear(const LabeledVector<Label>& u, const LabeledVector<Label>& v,
                   const LabelForm<Label>& form = nullptr) {
  FieldElem s;
  if (!form) {
    auto a = u.terms().begin();
    auto b = v.terms().begin();
    while (a != u.terms().end() && b != v.terms().end()) {
      if (a->label < b->label)
        ++a;
      else if (b->label < a->label)
        ++b;
      else
        s += (a++)->coeff * (b++)->coeff;
    }
    return s;
  }
  for (const auto& a : u.terms())
    for (const auto& b : v.terms()) {
      FieldElem g = form(a.label, b.label);
      if (!g.is_zero()) s += a.coeff * b.coeff * g;
    }
  return s;
}

/// Row-echelon form of m, applying the same row operations to rhs.
template <class Scalar>
std::pair<Matrix<Scalar>, Matrix<Scalar>> gauss(Matrix<Scalar> m, Matrix<Scalar> rhs) {
  if (rhs.rows() != m.rows()) throw std::invalid_argument("gauss: row count mismatch");
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && detail::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      m.row(piv).swap(m.row(row));
      rhs.row(piv).swap(rhs.row(row));
    }
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (detail::is_zero(m(r, col))) continue;
      const Scalar f = m(r, col) * inv;
      m(r, col) = Scalar(0);
      for (Eigen::Index c = col + 1; c < m.cols(); ++c)
        if (!detail::is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      for (Eigen::Index c = 0; c < rhs.cols(); ++c)
        if (!detail::is_zero(rhs(row, c))) rhs(r, c) -= f * rhs(row, c);
    }
    ++row;
  }
  return {std::move(m), std::move(rhs)};
}

/// Pivot column of every nonzero row of an echelon matrix.
template <class Scalar>
std::vector<Eigen::Index> pivot_columns(const Matrix<Scalar>& echelon) {
  std::vector<Eigen::Index> piv;
  for (Eigen::Index r = 0; r < echelon.rows(); ++r) {
    Eigen::Index c = 0;
    while (c < echelon.cols() && detail::is_zero(echelon(r, c))) ++c;
    if (c == echelon.cols()) break;
    piv.push_back(c);
  }
  return piv;
}

/// One solution of an echelon system (free variables zero), one column per
/// rhs column. Throws NoSolution if some zero row has nonzero rhs.
template <class Scalar>
Matrix<Scalar> solve(const std::pair<Matrix<Scalar>, Matrix<Scalar>>& echelon) {
  const auto& [m, rhs] = echelon;
  auto piv = pivot_columns(m);
  for (Eigen::Index r = static_cast<Eigen::Index>(piv.size()); r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < rhs.cols(); ++c)
      if (!detail::is_zero(rhs(r, c))) throw NoSolution("inconsistent linear system");
  Matrix<Scalar> x = Matrix<Scalar>::Constant(m.cols(), rhs.cols(), Scalar(0));
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    for (Eigen::Index r = static_cast<Eigen::Index>(piv.size()) - 1; r >= 0; --r) {
      Scalar acc = rhs(r, c);
      for (Eigen::Index k = piv[r] + 1; k < m.cols(); ++k)
        if (!detail::is_zero(m(r, k)) && !detail::is_zero(x(k, c))) acc -= m(r, k) * x(k, c);
      x(piv[r], c) = acc / m(r, piv[r]);
    }
  }
  return x;
}

/// A nonzero solution of m x = 0 with the first free variable set to one and
/// the others to zero. Returns an empty vector if the kernel is trivial.
template <class Scalar>
Vector<Scalar> kernel_vector(const Matrix<Scalar>& m) {
  auto ech = gauss<Scalar>(m, Matrix<Scalar>::Zero(m.rows(), 0));
  const Matrix<Scalar>& e = ech.first;
  auto piv = pivot_columns(e);
  Eigen::Index free_col = -1;
  for (Eigen::Index c = 0, p = 0; c < e.cols(); ++c) {
    if (p < static_cast<Eigen::Index>(piv.size()) && piv[p] == c) {
      ++p;
      continue;
    }
    free_col = c;
    break;
  }
  if (free_col < 0) return {};
  Vector<Scalar> x = Vector<Scalar>::Constant(e.cols(), Scalar(0));
  x(free_col) = Scalar(1);
  for (Eigen::Index r = static_cast<Eigen::Index>(piv.size()) - 1; r >= 0; --r) {
    Scalar acc(0);
    for (Eigen::Index k = piv[r] + 1; k < e.cols(); ++k)
      if (!detail::is_zero(e(r, k)) && !detail::is_zero(x(k))) acc -= e(r, k) * x(k);
    x(piv[r]) = acc / e(r, piv[r]);
  }
  return x;
}

template <class Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  auto ech = gauss<Scalar>(m, Matrix<Scalar>::Zero(m.rows(), 0));
  return static_cast<Eigen::Index>(pivot_columns(ech.first).size());
}

/// Exact inverse; throws SingularMatrix.
template <class Scalar>
Matrix<Scalar> invert_matrix(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert_matrix: not square");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
  auto ech = gauss<Scalar>(m, id);
  if (static_cast<Eigen::Index>(pivot_columns(ech.first).size()) != n)
    throw SingularMatrix("matrix is singular");
  return solve(ech);
}

/// Coordinates of the vectors over the union of their labels, one row each.
template <class Label>
std::pair<FieldMatrix, std::vector<Label>> coordinate_matrix(
    const std::vector<LabeledVector<Label>>& vs) {
  std::vector<Label> labels;
  for (const auto& v : vs)
    for (const auto& t : v.terms()) labels.push_back(t.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  FieldMatrix m = FieldMatrix::Constant(static_cast<Eigen::Index>(vs.size()),
                                        static_cast<Eigen::Index>(labels.size()), FieldElem());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& t : vs[r].terms()) {
      auto c = std::lower_bound(labels.begin(), labels.end(), t.label) - labels.begin();
      m(static_cast<Eigen::Index>(r), c) = t.coeff;
    }
  return {std::move(m), std::move(labels)};
}

template <class Label>
bool linearly_dependent(const std::vector<LabeledVector<Label>>& vs) {
  if (vs.empty()) return false;
  auto [m, labels] = coordinate_matrix(vs);
  return rank(m) < static_cast<Eigen::Index>(vs.size());
}

/// Subtracts from every vector of `rest` its projections onto the mutually
/// orthogonal vectors of `ortho`.
template <class Label>
std::vector<LabeledVector<Label>> gram_orthogonalize(
    const LabelForm<Label>& form, const std::vector<LabeledVector<Label>>& ortho,
    const std::vector<LabeledVector<Label>>& rest) {
  std::vector<FieldElem> norms;
  norms.reserve(ortho.size());
  for (const auto& o : ortho) {
    FieldElem n = bilinear(o, o, form);
    if (n.is_zero()) throw std::invalid_argument("gram: null vector in orthogonal set");
    norms.push_back(n);
  }
  std::vector<LabeledVector<Label>> out;
  out.reserve(rest.size());
  for (const auto& v : rest) {
    LabeledVector<Label> w = v;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      FieldElem p = bilinear(ortho[k], v, form) / norms[k];
      if (!p.is_zero()) w -= ortho[k].scaled(p);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace liecg

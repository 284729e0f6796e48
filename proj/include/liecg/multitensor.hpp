#pragma once

// Multiple tensor products. A TensorNode is an irrep together with the
// expansion of each of its states over tuples of factor-irrep labels; the
// bracketing of the product is kept in a tree shape. Vev directions are
// denoted by negative labels -1, -2, ... after a basis change.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liecg/irrep.hpp"
#include "liecg/tensor.hpp"

namespace liecg {

/// Bracketing of a product: a leaf or a pair of subtrees. Leaves are
/// numbered left to right; factor positions in the API are 1-based.
class TreeShape {
 public:
  static TreeShape leaf();
  static TreeShape join(const TreeShape& a, const TreeShape& b);

  int leaves() const { return leaves_; }
  int depth() const;
  /// "(((4,3),1),-1)" for labels {4,3,1,-1} in a left-associated shape.
  std::string render(const std::vector<int>& labels) const;
  bool operator==(const TreeShape&) const = default;

 private:
  // children_ empty for a leaf
  std::vector<TreeShape> children_;
  int leaves_ = 1;
};

using LeafTuple = std::vector<int>;
using TreeVector = LabeledVector<LeafTuple>;

class TensorNode {
 public:
  /// Each ket expands to itself.
  static TensorNode wrap(std::shared_ptr<const Irrep> r);

  /// Decomposes irrep() x b.irrep() and keeps the k-th irrep found (1 = the
  /// one of highest weight). Throws std::invalid_argument for k out of range.
  TensorNode otimes(const TensorNode& b, int k) const;

  const Irrep& irrep() const { return *irrep_; }
  std::shared_ptr<const Irrep> irrep_ptr() const { return irrep_; }
  const TreeShape& shape() const { return shape_; }
  int factors() const { return shape_.leaves(); }
  /// Number of states with an expansion (the irrep dimension).
  int dim() const { return static_cast<int>(expansion_.size()); }

  const TreeVector& expand(StateLabel l) const { return expansion_.at(l - 1); }
  /// For every state, its terms as (coefficient, rendered tree).
  std::vector<std::pair<StateLabel, std::vector<std::pair<FieldElem, std::string>>>> untree() const;

  /// Keeps the terms whose label at `factor` is in keep.
  TensorNode filter(int factor, const std::vector<int>& keep) const;
  /// Substitutes the label at `factor` by the given combinations of new labels.
  TensorNode chbasis(int factor, const std::vector<std::pair<int, StateVector>>& trafo) const;
  /// +1 / -1 if swapping the labels at f1 and f2 fixes / negates every state,
  /// 0 otherwise. Throws std::invalid_argument unless both factors are the
  /// same irrep.
  int is_sym(int f1, int f2) const;
  TensorNode scale(const FieldElem& c) const;
  FieldElem tensor_coeff(StateLabel l, const LeafTuple& leaves) const;

 private:
  void check_factor(int factor) const;

  std::shared_ptr<const Irrep> irrep_;
  TreeShape shape_;
  std::vector<std::shared_ptr<const Irrep>> leaf_irreps_;
  std::vector<TreeVector> expansion_;  // index label-1
};

using StateOperator = std::function<StateVector(const StateVector&)>;

/// Linear extension of E_{-a_root} (root 0-based).
StateOperator e_lower(std::shared_ptr<const Irrep> r, int root);
/// A o B - B o A.
StateOperator comm(StateOperator a, StateOperator b);
/// <u|v> with the irrep's scalar products.
FieldElem scp(const Irrep& r, const StateVector& u, const StateVector& v);
/// Gram matrix of the labels start .. start+count-1.
FieldMatrix scalar_products(const Irrep& r, StateLabel start, int count);
/// Partial Gram-Schmidt with the irrep's scalar products.
std::vector<StateVector> gram(const Irrep& r, const std::vector<StateVector>& ortho,
                              const std::vector<StateVector>& rest);
/// basis[k] is a combination of the labels offset, offset+1, ...; returns
/// |offset+l> = sum_k (B^-1)_lk |-(k+1)> for every l. Throws SingularMatrix.
std::vector<std::pair<int, StateVector>> chbasis_list(const std::vector<StateVector>& basis,
                                                      int offset);

}  // namespace liecg

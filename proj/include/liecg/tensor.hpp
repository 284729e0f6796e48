#pragma once

// Two-factor tensor products V x V': product states over ket pairs, the
// Clebsch-Gordan decomposition (highest weight first, then orthogonal
// complements at dominant weights) and read-out of lowering data for the
// irreps found.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liecg/irrep.hpp"

namespace liecg {

using PairLabel = std::pair<StateLabel, StateLabel>;  // (left ket, right ket)
using ProductState = LabeledVector<PairLabel>;

/// One irrep inside the product, as built by descending its highest weight.
struct ProductIrrep {
  HighestWeight hw;
  std::vector<ProductState> states;  // level by level, construction order
  std::vector<Weight> weights;
  std::vector<int> levels;
  bool hw_normalized = true;  // false if <hw|hw> had no rational square root

  long dim() const { return static_cast<long>(states.size()); }
  /// Indices into states of the given weight, construction order.
  std::vector<std::size_t> indices_of(const Weight& w) const;
};

class Decomposition {
 public:
  Decomposition(std::shared_ptr<const Irrep> left, std::shared_ptr<const Irrep> right);

  const Irrep& left() const { return *left_; }
  const Irrep& right() const { return *right_; }
  std::shared_ptr<const Irrep> left_ptr() const { return left_; }
  std::shared_ptr<const Irrep> right_ptr() const { return right_; }
  const LieAlgebra& algebra() const { return left_->algebra(); }

  /// Throws InconsistencyError for the zero vector or a mixed-weight state.
  Weight product_weight(const ProductState& s) const;
  ProductState product_lower(const ProductState& s, int root) const;
  FieldElem product_scp(const ProductState& a, const ProductState& b) const;
  /// All ket pairs of total weight w, ordered by (left, right) label.
  std::vector<PairLabel> basis_product(const Weight& w) const;
  /// Builds the irrep generated by a highest-weight state; throws
  /// InconsistencyError if the state count differs from the Weyl dimension.
  ProductIrrep descend_irrep(const ProductState& hw_state) const;

  /// Runs the full decomposition; `progress` is told about each irrep found.
  /// Throws DecompositionFailure if the dimensions do not add up.
  void decompose(const std::function<void(const ProductIrrep&)>& progress = nullptr);
  const std::vector<ProductIrrep>& found() const { return found_; }
  std::map<HighestWeight, int> multiplicities() const;
  bool check_dims() const;
  /// "E6: (1,0,0,0,0,0,)27 x (0,0,0,0,1,0,)27 = " then one line per irrep.
  std::string result() const;

 private:
  std::shared_ptr<const Irrep> left_, right_;
  std::vector<ProductIrrep> found_;
};

bool check_dims(long left_dim, long right_dim, const std::vector<ProductIrrep>& found);

/// States of p whose weight has no negative Dynkin label.
std::vector<ProductState> dominant_weights(const ProductIrrep& p);

/// Irrep data read out of a product irrep, plus the normalized product
/// state behind every label.
struct PreparedIrrep {
  ImportedIrrepData data;
  std::vector<ProductState> states;  // index label-1
};

/// Labels follow the weight listing of the irrep; inside a weight space the
/// construction order is kept. States are normalized to unity. Throws
/// InconsistencyError if a lowered state leaves the span of its weight space.
PreparedIrrep prepare(const ProductIrrep& p, const Decomposition& d);

/// "(1,0,-1,)2": Dynkin labels with trailing comma, then degeneracy index.
std::string format_ket(const Irrep& r, StateLabel l);

/// Nested listing  [[[("c", ("ket", "ket")); ...]; ...]]  of all states,
/// one inner list per level.
std::string format_coefficients(const ProductIrrep& p, const Decomposition& d,
                                NumberFormat fmt = NumberFormat::plain);

}  // namespace liecg

#pragma once

// Concrete irreps: labeled kets, lowering operators E_{-a_i} and scalar
// products of (generally non-orthogonal) weight states.
//
// Labels run 1..dim in listing order (level, then order of construction
// within a level, then degeneracy index). Simple roots are 0-based here;
// the CLI and script front-ends speak 1-based.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecg/exactnum.hpp"
#include "liecg/liealg.hpp"
#include "liecg/linalg.hpp"

namespace liecg {

using StateLabel = int;
using StateVector = LabeledVector<StateLabel>;

struct Ket {
  Weight dynkin;
  int deg_index = 1;  // 1-based position inside its weight space
  int level = 0;
  bool operator==(const Ket&) const = default;
};

enum class IrrepOrigin { generic, imported };

/// Everything needed to rebuild an irrep found in a tensor product.
/// lowering[label-1][root] is E_{-a_root}|label>; scp holds the off-diagonal
/// products <a|b> (a < b) of equal-weight states, absent entries are zero.
struct ImportedIrrepData {
  HighestWeight hw;
  std::vector<Ket> kets;
  std::vector<std::vector<StateVector>> lowering;
  std::map<std::pair<StateLabel, StateLabel>, FieldElem> scp;
  bool operator==(const ImportedIrrepData&) const = default;
};

class Irrep {
 public:
  /// Generic construction for non-degenerate irreps and the adjoint.
  /// Throws UnsupportedIrrep for other degenerate irreps.
  Irrep(const LieAlgebra& la, const HighestWeight& hw);
  /// Throws InvalidImport for inconsistent data.
  Irrep(const LieAlgebra& la, const ImportedIrrepData& data);

  const LieAlgebra& algebra() const { return la_; }
  const HighestWeight& highest_weight() const { return hw_; }
  IrrepOrigin origin() const { return origin_; }
  int dim() const { return static_cast<int>(kets_.size()); }

  const Ket& ket(StateLabel l) const { return kets_.at(l - 1); }
  const Weight& weight(StateLabel l) const { return ket(l).dynkin; }
  /// Freudenthal weight records in listing order.
  const std::vector<WeightRecord>& weights() const { return records_; }
  /// Labels of weight w in degeneracy order; empty if w is not a weight.
  const std::vector<StateLabel>& labels_of(const Weight& w) const;

  /// E_{-a_root}|l>; zero vector if the lowered weight is absent.
  const StateVector& lower(int root, StateLabel l) const {
    return lowering_[static_cast<std::size_t>(l - 1) * la_.rank() + root];
  }
  FieldElem scalar_product(StateLabel a, StateLabel b) const;
  /// True if the weight space of l is spanned by orthonormal kets.
  bool orthonormal_at(StateLabel l) const { return block_of(l).orthonormal; }
  /// Gram matrix M^w and its inverse G^w of the weight space of w.
  const FieldMatrix& gram(const Weight& w) const;
  const FieldMatrix& inverse_gram(const Weight& w) const;

  ImportedIrrepData export_data() const;

 private:
  struct Block {
    std::vector<StateLabel> labels;
    FieldMatrix gram, inverse;
    bool orthonormal = true;
  };

  void index_weights();
  void build_blocks(const std::map<std::pair<StateLabel, StateLabel>, FieldElem>& scp);
  const Block& block_of(StateLabel l) const { return blocks_.at(ket(l).dynkin); }

  LieAlgebra la_;
  HighestWeight hw_;
  IrrepOrigin origin_;
  std::vector<WeightRecord> records_;
  std::vector<Ket> kets_;
  std::map<Weight, Block> blocks_;
  std::vector<StateVector> lowering_;
};

/// <0_a|0_b> of the adjoint: sqrt(A_ab A_ba)/2, 1 on the diagonal.
/// Indices 0-based; throws std::invalid_argument when out of range.
FieldElem scp_zero_weights(const LieAlgebra& la, int a, int b);

/// True if every weight of irrep hw has multiplicity one.
bool is_nondegenerate(const LieAlgebra& la, const HighestWeight& hw);

/// Result of the lowering consistency identity for one (state, root):
/// sum_AB M^{w-a}_AB N_aA N_bB = <a,w> M^w_ab + (N^+ M^w)^T G^{w+a} (N^+ M^w),
/// checked for all pairs a, b inside the weight space.
struct ConsistencyFailure {
  StateLabel state;
  int root;
};

/// Checks the identity for the given states (all if empty) and every root.
std::vector<ConsistencyFailure> check_consistency(const Irrep& r,
                                                  const std::vector<StateLabel>& states = {});

}  // namespace liecg

#pragma once

// Simple Lie algebras A-G: Cartan matrices, positive roots, weight systems
// of irreps (descent from the highest weight), Freudenthal multiplicities and
// Weyl dimensions.
//
// Conventions: A_{ji} = 2 a_j.a_i / a_i^2, so row j of the Cartan matrix holds
// the Dynkin labels of simple root a_j. B_n has its short root last, C_n its
// long root last, F4 and G2 their short roots first.

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace liecg {

/// Integer vector: Dynkin labels, descent counts or simple-root coefficients.
using Weight = std::vector<int>;
using HighestWeight = Weight;
using CartanMatrix = Eigen::MatrixXi;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

class LieAlgebra {
 public:
  /// Throws std::invalid_argument for an invalid family/rank combination.
  /// The rank of exceptional algebras is implied and may be passed as 0.
  LieAlgebra(Family family, int rank = 0);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Physics name: SU(n+1), SO(2n+1), Sp(2n), SO(2n), E6, ...
  std::string name() const;
  /// Cartan-type name: A3, B2, E6, ...
  std::string code() const;
  /// Inverse of code(); throws std::invalid_argument.
  static LieAlgebra parse(std::string_view code);

  bool operator==(const LieAlgebra&) const = default;

 private:
  Family family_;
  int rank_;
};

struct WeightRecord {
  int level = 0;
  Weight descent;  // q_j: applications of lowering by a_j from the highest weight
  Weight dynkin;
  int degeneracy = 0;  // 0 until multiplicities are computed
  int lowest_root_label = 0;
  bool operator==(const WeightRecord&) const = default;
};

CartanMatrix cartan(const LieAlgebra& la);

/// Squared lengths of the simple roots, short roots normalized to 1.
std::vector<int> root_weights(const LieAlgebra& la);

/// Positive roots as simple-root coefficients.
const std::vector<Weight>& positive_roots(const LieAlgebra& la);

/// Dynkin labels of sum_j coeffs_j a_j.
Weight root_dynkin(const LieAlgebra& la, const Weight& coeffs);

/// Simple-root coefficients of the lowest root (all non-positive).
Weight lowest_root(const LieAlgebra& la);

/// Dynkin label 2 a_0.w / a_0^2 of w with respect to the lowest root.
int lowest_root_label(const LieAlgebra& la, const Weight& w);

/// All weights of the irrep, each once, level by level; within a level by
/// descent vector ascending. Degeneracies are left at 0.
std::vector<WeightRecord> complete_descent(const LieAlgebra& la, const HighestWeight& hw);

/// complete_descent with multiplicities from the Freudenthal recursion.
std::vector<WeightRecord> freudenthal(const LieAlgebra& la, const HighestWeight& hw);

/// Weyl dimension formula; throws InconsistencyError if the product is not
/// integral.
long weyl_dim(const LieAlgebra& la, const HighestWeight& hw);

/// R with R.hw = level of the lowest weight of irrep hw.
Weight level_vector(const LieAlgebra& la);

HighestWeight adjoint_hw(const LieAlgebra& la);

/// Throws std::invalid_argument unless hw has rank non-negative entries.
void check_highest_weight(const LieAlgebra& la, const HighestWeight& hw);

/// "(1,0,-1)"
std::string format_weight(const Weight& w);
/// "(1,0,-1,)" as in decomposition listings.
std::string format_weight_trailing(const Weight& w);

inline int dot(const Weight& a, const Weight& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace liecg

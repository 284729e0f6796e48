#include "liecg/irrep.hpp"

#include <algorithm>
#include <string>

#include "liecg/errors.hpp"

namespace liecg {

namespace {

Weight minus_row(const Weight& w, const CartanMatrix& a, int i) {
  Weight r = w;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= a(i, static_cast<Eigen::Index>(k));
  return r;
}

Weight plus_row(const Weight& w, const CartanMatrix& a, int i) {
  Weight r = w;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += a(i, static_cast<Eigen::Index>(k));
  return r;
}

FieldElem root_of(const Rational& n2) {
  FieldElem out;
  if (!try_sqrt(FieldElem(n2), out)) throw InconsistencyError("negative lowering norm");
  return out;
}

const std::vector<StateLabel> kNoLabels;

}  // namespace

FieldElem scp_zero_weights(const LieAlgebra& la, int a, int b) {
  if (a < 0 || b < 0 || a >= la.rank() || b >= la.rank())
    throw std::invalid_argument("scp_zero_weights: index out of range");
  if (a == b) return FieldElem(1L);
  auto c = cartan(la);
  return number(1, 2, static_cast<long>(c(a, b)) * c(b, a));
}

bool is_nondegenerate(const LieAlgebra& la, const HighestWeight& hw) {
  for (const auto& r : freudenthal(la, hw))
    if (r.degeneracy != 1) return false;
  return true;
}

void Irrep::index_weights() {
  // kets in listing order, degeneracy index running inside each weight
  kets_.clear();
  for (const auto& r : records_)
    for (int d = 1; d <= r.degeneracy; ++d) kets_.push_back({r.dynkin, d, r.level});
}

Irrep::Irrep(const LieAlgebra& la, const HighestWeight& hw)
    : la_(la), hw_(hw), origin_(IrrepOrigin::generic) {
  records_ = freudenthal(la, hw);
  const bool adjoint = hw == adjoint_hw(la);
  if (!adjoint)
    for (const auto& r : records_)
      if (r.degeneracy != 1)
        throw UnsupportedIrrep("irrep " + format_weight(hw) + " of " + la.code() +
                               " is degenerate at weight " + format_weight(r.dynkin) +
                               "; build it inside a tensor product and import it");
  index_weights();

  const int n = la.rank();
  const auto a = cartan(la);
  const Weight zero(n, 0);

  build_blocks({});
  if (adjoint) {
    // zero weight: |0_i> is the lowered simple root a_i, so deg index = root index
    auto& blk = blocks_.at(zero);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        FieldElem s = scp_zero_weights(la, i, j);
        if (!s.is_zero()) {
          blk.gram(i, j) = s;
          blk.orthonormal = false;
        }
      }
    blk.inverse = invert_matrix(blk.gram);
  }

  // |N|^2 of E_{-a_i} on each state, filled in label order (weights above
  // are always done first).
  std::vector<Rational> n2(static_cast<std::size_t>(dim()) * n);
  lowering_.assign(static_cast<std::size_t>(dim()) * n, StateVector{});
  auto label_at = [&](const Weight& w, int deg) -> StateLabel {
    const auto& ls = labels_of(w);
    return ls.empty() ? 0 : ls[deg - 1];
  };

  for (StateLabel l = 1; l <= dim(); ++l) {
    const Ket& k = ket(l);
    for (int i = 0; i < n; ++i) {
      const Weight down = minus_row(k.dynkin, a, i);
      const std::size_t slot = static_cast<std::size_t>(l - 1) * n + i;
      if (labels_of(down).empty()) continue;

      if (adjoint && k.dynkin == zero) {
        // 0_a -> -a_b with |N|^2 = A_ab A_ba / 2
        const int ai = k.deg_index - 1;
        Rational v(static_cast<long>(a(ai, i)) * a(i, ai), 2);
        if (v != 0) lowering_[slot] = StateVector::unit(label_at(down, 1), root_of(v));
        n2[slot] = v;
        continue;
      }
      if (adjoint && down == zero) {
        // a_i -> 0_i with |N|^2 = 2
        lowering_[slot] = StateVector::unit(label_at(zero, i + 1), number(1, 1, 2));
        n2[slot] = 2;
        continue;
      }
      Rational v = k.dynkin[i];
      const Weight up = plus_row(k.dynkin, a, i);
      if (adjoint && up == zero) {
        v = 0;  // -a_i -> -2a_i never exists
      } else if (StateLabel lu = label_at(up, 1); lu != 0) {
        v += n2[static_cast<std::size_t>(lu - 1) * n + i];
      }
      if (v < 0) throw InconsistencyError("negative lowering norm at " + format_weight(k.dynkin));
      n2[slot] = v;
      if (v != 0) lowering_[slot] = StateVector::unit(label_at(down, 1), root_of(v));
    }
  }
}

Irrep::Irrep(const LieAlgebra& la, const ImportedIrrepData& data)
    : la_(la), hw_(data.hw), origin_(IrrepOrigin::imported) {
  if (data.kets.empty()) throw InvalidImport("import data holds no states");
  try {
    check_highest_weight(la, data.hw);
  } catch (const std::invalid_argument& e) {
    throw InvalidImport(e.what());
  }
  records_ = freudenthal(la, hw_);
  index_weights();
  if (kets_ != data.kets)
    throw InvalidImport("import kets do not match the weight system of " + format_weight(hw_));
  const int n = la.rank();
  if (data.lowering.size() != kets_.size())
    throw InvalidImport("lowering table size differs from the number of states");
  const auto a = cartan(la);
  lowering_.reserve(kets_.size() * n);
  for (std::size_t l = 0; l < kets_.size(); ++l) {
    if (static_cast<int>(data.lowering[l].size()) != n)
      throw InvalidImport("lowering table entry without one image per root");
    for (int i = 0; i < n; ++i) {
      const Weight down = minus_row(kets_[l].dynkin, a, i);
      for (const auto& t : data.lowering[l][i].terms()) {
        if (t.label < 1 || t.label > dim() || kets_[t.label - 1].dynkin != down)
          throw InvalidImport("lowering of state " + std::to_string(l + 1) +
                              " hits a state of the wrong weight");
      }
      lowering_.push_back(data.lowering[l][i]);
    }
  }
  for (const auto& [ab, v] : data.scp) {
    auto [x, y] = ab;
    if (x < 1 || y < 1 || x > dim() || y > dim())
      throw InvalidImport("scalar product with unknown label");
    if (x == y) {
      if (!v.is_one()) throw InvalidImport("states must be normalized");
      continue;
    }
    if (kets_[x - 1].dynkin != kets_[y - 1].dynkin) {
      if (!v.is_zero()) throw InvalidImport("nonzero scalar product between different weights");
      continue;
    }
    auto it = data.scp.find({y, x});
    if (it != data.scp.end() && !(it->second == v))
      throw InvalidImport("asymmetric scalar products");
  }
  build_blocks(data.scp);
}

void Irrep::build_blocks(const std::map<std::pair<StateLabel, StateLabel>, FieldElem>& scp) {
  blocks_.clear();
  for (StateLabel l = 1; l <= dim(); ++l) blocks_[ket(l).dynkin].labels.push_back(l);
  for (auto& [w, b] : blocks_) {
    const auto m = static_cast<Eigen::Index>(b.labels.size());
    b.gram = FieldMatrix::Identity(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) {
        if (i == j) continue;
        auto it = scp.find({b.labels[i], b.labels[j]});
        if (it == scp.end()) it = scp.find({b.labels[j], b.labels[i]});
        if (it != scp.end() && !it->second.is_zero()) {
          b.gram(i, j) = it->second;
          b.orthonormal = false;
        }
      }
    if (b.orthonormal) {
      b.inverse = b.gram;
    } else {
      try {
        b.inverse = invert_matrix(b.gram);
      } catch (const SingularMatrix&) {
        throw InvalidImport("singular Gram matrix at weight " + format_weight(w));
      }
    }
  }
}

const std::vector<StateLabel>& Irrep::labels_of(const Weight& w) const {
  auto it = blocks_.find(w);
  return it == blocks_.end() ? kNoLabels : it->second.labels;
}

FieldElem Irrep::scalar_product(StateLabel a, StateLabel b) const {
  if (a == b) return FieldElem(1L);
  const Ket& ka = ket(a);
  const Ket& kb = ket(b);
  if (ka.dynkin != kb.dynkin) return FieldElem();
  const Block& blk = blocks_.at(ka.dynkin);
  if (blk.orthonormal) return FieldElem();
  return blk.gram(ka.deg_index - 1, kb.deg_index - 1);
}

const FieldMatrix& Irrep::gram(const Weight& w) const { return blocks_.at(w).gram; }
const FieldMatrix& Irrep::inverse_gram(const Weight& w) const { return blocks_.at(w).inverse; }

ImportedIrrepData Irrep::export_data() const {
  ImportedIrrepData d;
  d.hw = hw_;
  d.kets = kets_;
  const int n = la_.rank();
  d.lowering.resize(kets_.size());
  for (StateLabel l = 1; l <= dim(); ++l)
    for (int i = 0; i < n; ++i) d.lowering[l - 1].push_back(lower(i, l));
  for (const auto& [w, b] : blocks_) {
    if (b.orthonormal) continue;
    for (std::size_t i = 0; i < b.labels.size(); ++i)
      for (std::size_t j = i + 1; j < b.labels.size(); ++j) {
        const FieldElem& v = b.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (!v.is_zero()) d.scp[{b.labels[i], b.labels[j]}] = v;
      }
  }
  return d;
}

// --------------------------------------------------------- consistency

std::vector<ConsistencyFailure> check_consistency(const Irrep& r,
                                                  const std::vector<StateLabel>& states) {
  const LieAlgebra& la = r.algebra();
  const int n = la.rank();
  const auto a = cartan(la);
  std::vector<ConsistencyFailure> bad;

  std::map<Weight, std::vector<StateLabel>> wanted;
  if (states.empty()) {
    for (StateLabel l = 1; l <= r.dim(); ++l) wanted[r.weight(l)].push_back(l);
  } else {
    for (StateLabel l : states) wanted[r.weight(l)].push_back(l);
  }

  // N[x][y] = coefficient of |to_y> in E_{-a}|from_x>
  auto lowering_matrix = [&](const std::vector<StateLabel>& from,
                             const std::vector<StateLabel>& to, int root) {
    FieldMatrix m = FieldMatrix::Constant(static_cast<Eigen::Index>(from.size()),
                                          static_cast<Eigen::Index>(to.size()), FieldElem());
    for (std::size_t x = 0; x < from.size(); ++x)
      for (std::size_t y = 0; y < to.size(); ++y)
        m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
            r.lower(root, from[x]).coeff(to[y]);
    return m;
  };

  for (const auto& [w, ls] : wanted) {
    const auto& here = r.labels_of(w);
    const FieldMatrix& mw = r.gram(w);
    for (int i = 0; i < n; ++i) {
      const Weight down = minus_row(w, a, i);
      const Weight up = plus_row(w, a, i);
      const auto& below = r.labels_of(down);
      const auto& above = r.labels_of(up);
      const auto d = static_cast<Eigen::Index>(here.size());

      FieldMatrix lhs = FieldMatrix::Constant(d, d, FieldElem());
      if (!below.empty()) {
        FieldMatrix nd = lowering_matrix(here, below, i);
        lhs = nd * r.gram(down) * nd.transpose();
      }
      FieldMatrix rhs = mw * FieldElem(static_cast<long>(w[i]));
      if (!above.empty()) {
        FieldMatrix nu = lowering_matrix(above, here, i) * mw;
        rhs += nu.transpose() * r.inverse_gram(up) * nu;
      }
      for (StateLabel l : ls) {
        const Eigen::Index x = r.ket(l).deg_index - 1;
        bool ok = true;
        for (Eigen::Index y = 0; y < d && ok; ++y) ok = lhs(x, y) == rhs(x, y);
        if (!ok) bad.push_back({l, i});
      }
    }
  }
  return bad;
}

}  // namespace liecg

#include "liecg/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "liecg/errors.hpp"

namespace liecg {

namespace {

Weight minus_row(Weight w, const CartanMatrix& a, int i) {
  for (std::size_t k = 0; k < w.size(); ++k) w[k] -= a(i, static_cast<Eigen::Index>(k));
  return w;
}

// Reduced row echelon span of the states kept so far at one weight; each
// row has coefficient one at its pivot and zero at every other pivot.
class Echelon {
 public:
  /// Reduces v; returns true and stores the rest if v is independent.
  bool insert(ProductState v) {
    for (const auto& [piv, row] : rows_) {
      FieldElem c = v.coeff(piv);
      if (!c.is_zero()) v -= row.scaled(c);
    }
    if (v.is_zero()) return false;
    PairLabel piv = v.terms().front().label;
    v = v.scaled(invert(v.terms().front().coeff));
    for (auto& [p, row] : rows_) {
      FieldElem c = row.coeff(piv);
      if (!c.is_zero()) row -= v.scaled(c);
    }
    rows_.emplace_back(piv, std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<PairLabel, ProductState>> rows_;
};

}  // namespace

std::vector<std::size_t> ProductIrrep::indices_of(const Weight& w) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < states.size(); ++k)
    if (weights[k] == w) out.push_back(k);
  return out;
}

Decomposition::Decomposition(std::shared_ptr<const Irrep> left, std::shared_ptr<const Irrep> right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->algebra() == right_->algebra()))
    throw std::invalid_argument("tensor product of irreps of different algebras");
}

Weight Decomposition::product_weight(const ProductState& s) const {
  if (s.is_zero()) throw InconsistencyError("weight of the zero vector");
  auto weight_of = [&](const PairLabel& p) {
    Weight w = left_->weight(p.first);
    const Weight& r = right_->weight(p.second);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += r[k];
    return w;
  };
  Weight w = weight_of(s.terms().front().label);
  for (const auto& t : s.terms())
    if (weight_of(t.label) != w) throw InconsistencyError("product state of mixed weight");
  return w;
}

ProductState Decomposition::product_lower(const ProductState& s, int root) const {
  std::vector<ProductState::Term> terms;
  for (const auto& t : s.terms()) {
    const auto [x, y] = t.label;
    for (const auto& u : left_->lower(root, x).terms())
      terms.push_back({{u.label, y}, t.coeff * u.coeff});
    for (const auto& u : right_->lower(root, y).terms())
      terms.push_back({{x, u.label}, t.coeff * u.coeff});
  }
  return ProductState::from_terms(std::move(terms));
}

FieldElem Decomposition::product_scp(const ProductState& a, const ProductState& b) const {
  FieldElem s;
  for (const auto& t : a.terms()) {
    const auto [x, y] = t.label;
    const bool lo = left_->orthonormal_at(x);
    const bool ro = right_->orthonormal_at(y);
    if (lo && ro) {
      FieldElem c = b.coeff(t.label);
      if (!c.is_zero()) s += t.coeff * c;
      continue;
    }
    const std::vector<StateLabel> self_x{x}, self_y{y};
    const auto& xs = lo ? self_x : left_->labels_of(left_->weight(x));
    const auto& ys = ro ? self_y : right_->labels_of(right_->weight(y));
    for (StateLabel x2 : xs) {
      FieldElem gx = left_->scalar_product(x, x2);
      if (gx.is_zero()) continue;
      for (StateLabel y2 : ys) {
        FieldElem c = b.coeff({x2, y2});
        if (c.is_zero()) continue;
        FieldElem gy = right_->scalar_product(y, y2);
        if (!gy.is_zero()) s += t.coeff * c * gx * gy;
      }
    }
  }
  return s;
}

std::vector<PairLabel> Decomposition::basis_product(const Weight& w) const {
  std::vector<PairLabel> out;
  for (const auto& rec : left_->weights()) {
    Weight wr = w;
    for (std::size_t k = 0; k < wr.size(); ++k) wr[k] -= rec.dynkin[k];
    const auto& rs = right_->labels_of(wr);
    if (rs.empty()) continue;
    for (StateLabel x : left_->labels_of(rec.dynkin))
      for (StateLabel y : rs) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProductIrrep Decomposition::descend_irrep(const ProductState& hw_state) const {
  const LieAlgebra& la = algebra();
  const int n = la.rank();
  const auto a = cartan(la);
  ProductIrrep p;
  p.hw = product_weight(hw_state);
  std::map<Weight, int> mult;
  long total = 0;
  for (const auto& r : freudenthal(la, p.hw)) {
    mult[r.dynkin] = r.degeneracy;
    total += r.degeneracy;
  }

  std::vector<std::size_t> level{0};
  p.states.push_back(hw_state);
  p.weights.push_back(p.hw);
  p.levels.push_back(0);
  for (int lev = 1; !level.empty(); ++lev) {
    std::map<Weight, Echelon> kept;
    std::vector<std::size_t> next;
    for (std::size_t src : level) {
      for (int i = 0; i < n; ++i) {
        Weight w = minus_row(p.weights[src], a, i);
        auto m = mult.find(w);
        if (m == mult.end()) continue;
        auto& ech = kept[w];
        if (static_cast<int>(ech.size()) == m->second) continue;
        ProductState v = product_lower(p.states[src], i);
        if (v.is_zero()) continue;
        if (!ech.insert(v)) continue;
        next.push_back(p.states.size());
        p.states.push_back(std::move(v));
        p.weights.push_back(std::move(w));
        p.levels.push_back(lev);
      }
    }
    for (const auto& [w, ech] : kept)
      if (static_cast<int>(ech.size()) != mult.at(w))
        throw InconsistencyError("irrep " + format_weight(p.hw) + ": weight " + format_weight(w) +
                                 " has " + std::to_string(ech.size()) + " states, expected " +
                                 std::to_string(mult.at(w)));
    level = std::move(next);
  }
  if (p.dim() != total)
    throw InconsistencyError("irrep " + format_weight(p.hw) + " descended to " +
                             std::to_string(p.dim()) + " states, Weyl dimension " +
                             std::to_string(total));
  return p;
}

std::vector<ProductState> dominant_weights(const ProductIrrep& p) {
  std::vector<ProductState> out;
  for (std::size_t k = 0; k < p.states.size(); ++k)
    if (std::all_of(p.weights[k].begin(), p.weights[k].end(), [](int x) { return x >= 0; }))
      out.push_back(p.states[k]);
  return out;
}

void Decomposition::decompose(const std::function<void(const ProductIrrep&)>& progress) {
  found_.clear();
  const LieAlgebra& la = algebra();
  const Weight rv = level_vector(la);

  auto record = [&](ProductIrrep p) {
    if (progress) progress(p);
    found_.push_back(std::move(p));
  };

  record(descend_irrep(ProductState::unit({1, 1})));

  // dominant weights of the leading irrep hold every candidate
  std::vector<Weight> cand;
  for (std::size_t k = 0; k < found_[0].states.size(); ++k) {
    const Weight& w = found_[0].weights[k];
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) &&
        std::find(cand.begin(), cand.end(), w) == cand.end())
      cand.push_back(w);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](const Weight& x, const Weight& y) {
    int lx = dot(rv, x), ly = dot(rv, y);
    if (lx != ly) return lx > ly;
    return x > y;
  });

  for (const Weight& w : cand) {
    const auto basis = basis_product(w);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    for (;;) {
      std::vector<const ProductState*> built;
      for (const auto& f : found_)
        for (std::size_t k : f.indices_of(w)) built.push_back(&f.states[k]);
      if (static_cast<Eigen::Index>(built.size()) == dim) break;
      if (static_cast<Eigen::Index>(built.size()) > dim)
        throw DecompositionFailure("more states than the product has at " + format_weight(w));

      // <s_k|B_j> for built states s_k and basis pairs B_j
      FieldMatrix sg = FieldMatrix::Constant(static_cast<Eigen::Index>(built.size()), dim, FieldElem());
      for (std::size_t k = 0; k < built.size(); ++k)
        for (Eigen::Index j = 0; j < dim; ++j)
          sg(static_cast<Eigen::Index>(k), j) = product_scp(*built[k], ProductState::unit(basis[j]));
      FieldVector x = kernel_vector(sg);
      if (x.size() == 0) throw DecompositionFailure("no orthogonal complement at " + format_weight(w));

      std::vector<ProductState::Term> terms;
      for (Eigen::Index j = 0; j < dim; ++j)
        if (!x(j).is_zero()) terms.push_back({basis[j], x(j)});
      ProductState v = ProductState::from_terms(std::move(terms));
      if (sign(v.terms().front().coeff) == Sign::negative) v = -v;
      FieldElem root;
      bool normalized = try_sqrt(product_scp(v, v), root);
      if (normalized) {
        v = v.scaled(invert(root));
      } else {
        std::vector<FieldElem> cs;
        for (const auto& t : v.terms()) cs.push_back(t.coeff);
        v = v.scaled(invert(gcd_of_fields(cs)));
      }
      ProductIrrep p = descend_irrep(v);
      p.hw_normalized = normalized;
      record(std::move(p));
    }
  }
  if (!check_dims()) {
    std::ostringstream os;
    os << "dimensions do not match: " << left_->dim() << " x " << right_->dim() << " !=";
    for (const auto& f : found_) os << " " << f.dim();
    throw DecompositionFailure(os.str());
  }
}

std::map<HighestWeight, int> Decomposition::multiplicities() const {
  std::map<HighestWeight, int> m;
  for (const auto& f : found_) ++m[f.hw];
  return m;
}

bool check_dims(long left_dim, long right_dim, const std::vector<ProductIrrep>& found) {
  long s = 0;
  for (const auto& f : found) s += f.dim();
  return s == left_dim * right_dim;
}

bool Decomposition::check_dims() const {
  return liecg::check_dims(left_->dim(), right_->dim(), found_);
}

std::string Decomposition::result() const {
  std::ostringstream os;
  os << algebra().code() << ": " << format_weight_trailing(left_->highest_weight()) << left_->dim()
     << " x " << format_weight_trailing(right_->highest_weight()) << right_->dim() << " = \n";
  for (const auto& f : found_) os << format_weight_trailing(f.hw) << f.dim() << "\n";
  return os.str();
}

// ------------------------------------------------------------- prepare

PreparedIrrep prepare(const ProductIrrep& p, const Decomposition& d) {
  const LieAlgebra& la = d.algebra();
  const int n = la.rank();
  const auto a = cartan(la);
  PreparedIrrep out;
  out.data.hw = p.hw;

  // labels: weight listing order, construction order inside a weight
  std::map<Weight, std::vector<StateLabel>> labels;
  for (const auto& rec : freudenthal(la, p.hw)) {
    auto idx = p.indices_of(rec.dynkin);
    if (static_cast<int>(idx.size()) != rec.degeneracy)
      throw InconsistencyError("product irrep does not match its weight system");
    int deg = 0;
    for (std::size_t k : idx) {
      ProductState s = p.states[k];
      FieldElem root;
      if (try_sqrt(d.product_scp(s, s), root)) s = s.scaled(invert(root));
      else
        throw InconsistencyError("state of weight " + format_weight(rec.dynkin) +
                                 " has irrational norm; cannot normalize");
      out.states.push_back(std::move(s));
      out.data.kets.push_back({rec.dynkin, ++deg, rec.level});
      labels[rec.dynkin].push_back(static_cast<StateLabel>(out.states.size()));
    }
  }

  // Gram blocks and their inverses
  std::map<Weight, FieldMatrix> inv;
  for (const auto& [w, ls] : labels) {
    const auto m = static_cast<Eigen::Index>(ls.size());
    if (m == 1) continue;
    FieldMatrix g = FieldMatrix::Identity(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        FieldElem v = d.product_scp(out.states[ls[i] - 1], out.states[ls[j] - 1]);
        g(i, j) = g(j, i) = v;
        if (!v.is_zero()) out.data.scp[{ls[i], ls[j]}] = v;
      }
    inv[w] = invert_matrix(g);
  }

  out.data.lowering.assign(out.states.size(), std::vector<StateVector>(n));
  for (std::size_t l = 0; l < out.states.size(); ++l) {
    for (int i = 0; i < n; ++i) {
      Weight w = minus_row(out.data.kets[l].dynkin, a, i);
      auto it = labels.find(w);
      if (it == labels.end()) continue;
      ProductState v = d.product_lower(out.states[l], i);
      if (v.is_zero()) continue;
      const auto& ts = it->second;
      const auto m = static_cast<Eigen::Index>(ts.size());
      FieldVector proj(m);
      for (Eigen::Index k = 0; k < m; ++k) proj(k) = d.product_scp(out.states[ts[k] - 1], v);
      FieldVector c = m == 1 ? proj : FieldVector(inv.at(w) * proj);
      std::vector<StateVector::Term> terms;
      ProductState rest = v;
      for (Eigen::Index k = 0; k < m; ++k) {
        if (c(k).is_zero()) continue;
        terms.push_back({ts[k], c(k)});
        rest -= out.states[ts[k] - 1].scaled(c(k));
      }
      if (!rest.is_zero())
        throw InconsistencyError("lowered state leaves its weight space at " + format_weight(w));
      out.data.lowering[l][i] = StateVector::from_terms(std::move(terms));
    }
  }
  return out;
}

std::string format_ket(const Irrep& r, StateLabel l) {
  return format_weight_trailing(r.weight(l)) + std::to_string(r.ket(l).deg_index);
}

std::string format_coefficients(const ProductIrrep& p, const Decomposition& d, NumberFormat fmt) {
  std::ostringstream os;
  os << "[";
  int lev = -1;
  for (std::size_t k = 0; k < p.states.size(); ++k) {
    if (p.levels[k] != lev) {
      os << (lev < 0 ? "[" : "];\n [");
      lev = p.levels[k];
    } else {
      os << ";\n  ";
    }
    os << "[";
    bool first = true;
    for (const auto& t : p.states[k].terms()) {
      if (!first) os << ";\n   ";
      first = false;
      os << "(\"" << render(t.coeff, fmt) << "\", (\"" << format_ket(d.left(), t.label.first)
         << "\", \"" << format_ket(d.right(), t.label.second) << "\"))";
    }
    os << "]";
  }
  if (lev >= 0) os << "]";
  os << "]";
  return os.str();
}

}  // namespace liecg

#include "liecg/multitensor.hpp"

#include <algorithm>

#include "liecg/errors.hpp"

namespace liecg {

TreeShape TreeShape::leaf() { return TreeShape{}; }

TreeShape TreeShape::join(const TreeShape& a, const TreeShape& b) {
  TreeShape t;
  t.children_ = {a, b};
  t.leaves_ = a.leaves_ + b.leaves_;
  return t;
}

int TreeShape::depth() const {
  if (children_.empty()) return 0;
  return 1 + std::max(children_[0].depth(), children_[1].depth());
}

std::string TreeShape::render(const std::vector<int>& labels) const {
  std::size_t pos = 0;
  std::function<std::string(const TreeShape&)> go = [&](const TreeShape& t) -> std::string {
    if (t.children_.empty()) return std::to_string(labels.at(pos++));
    std::string l = go(t.children_[0]);
    std::string r = go(t.children_[1]);
    return "(" + l + "," + r + ")";
  };
  return go(*this);
}

TensorNode TensorNode::wrap(std::shared_ptr<const Irrep> r) {
  TensorNode t;
  t.shape_ = TreeShape::leaf();
  t.leaf_irreps_ = {r};
  for (StateLabel l = 1; l <= r->dim(); ++l) t.expansion_.push_back(TreeVector::unit({l}));
  t.irrep_ = std::move(r);
  return t;
}

TensorNode TensorNode::otimes(const TensorNode& b, int k) const {
  Decomposition d(irrep_, b.irrep_);
  d.decompose();
  if (k < 1 || k > static_cast<int>(d.found().size()))
    throw std::invalid_argument("otimes: irrep " + std::to_string(k) + " requested, product has " +
                                std::to_string(d.found().size()));
  PreparedIrrep prep = prepare(d.found()[k - 1], d);

  TensorNode t;
  t.irrep_ = std::make_shared<const Irrep>(irrep_->algebra(), prep.data);
  t.shape_ = TreeShape::join(shape_, b.shape_);
  t.leaf_irreps_ = leaf_irreps_;
  t.leaf_irreps_.insert(t.leaf_irreps_.end(), b.leaf_irreps_.begin(), b.leaf_irreps_.end());
  for (const auto& s : prep.states) {
    std::vector<TreeVector::Term> terms;
    for (const auto& pt : s.terms()) {
      const auto& ea = expand(pt.label.first);
      const auto& eb = b.expand(pt.label.second);
      for (const auto& ta : ea.terms())
        for (const auto& tb : eb.terms()) {
          LeafTuple leaves = ta.label;
          leaves.insert(leaves.end(), tb.label.begin(), tb.label.end());
          terms.push_back({std::move(leaves), pt.coeff * ta.coeff * tb.coeff});
        }
    }
    t.expansion_.push_back(TreeVector::from_terms(std::move(terms)));
  }
  return t;
}

std::vector<std::pair<StateLabel, std::vector<std::pair<FieldElem, std::string>>>>
TensorNode::untree() const {
  std::vector<std::pair<StateLabel, std::vector<std::pair<FieldElem, std::string>>>> out;
  for (StateLabel l = 1; l <= dim(); ++l) {
    std::vector<std::pair<FieldElem, std::string>> terms;
    for (const auto& t : expand(l).terms()) terms.emplace_back(t.coeff, shape_.render(t.label));
    out.emplace_back(l, std::move(terms));
  }
  return out;
}

void TensorNode::check_factor(int factor) const {
  if (factor < 1 || factor > factors())
    throw std::invalid_argument("factor position " + std::to_string(factor) + " outside 1.." +
                                std::to_string(factors()));
}

TensorNode TensorNode::filter(int factor, const std::vector<int>& keep) const {
  check_factor(factor);
  TensorNode t = *this;
  for (auto& e : t.expansion_) {
    std::vector<TreeVector::Term> terms;
    for (const auto& term : e.terms())
      if (std::find(keep.begin(), keep.end(), term.label[factor - 1]) != keep.end())
        terms.push_back(term);
    e = TreeVector::from_terms(std::move(terms));
  }
  return t;
}

TensorNode TensorNode::chbasis(int factor, const std::vector<std::pair<int, StateVector>>& trafo) const {
  check_factor(factor);
  std::map<int, const StateVector*> rule;
  for (const auto& [old, v] : trafo) rule[old] = &v;
  TensorNode t = *this;
  for (auto& e : t.expansion_) {
    std::vector<TreeVector::Term> terms;
    for (const auto& term : e.terms()) {
      auto it = rule.find(term.label[factor - 1]);
      if (it == rule.end())
        throw std::invalid_argument("chbasis: no rule for label " +
                                    std::to_string(term.label[factor - 1]));
      for (const auto& nt : it->second->terms()) {
        LeafTuple leaves = term.label;
        leaves[factor - 1] = nt.label;
        terms.push_back({std::move(leaves), term.coeff * nt.coeff});
      }
    }
    e = TreeVector::from_terms(std::move(terms));
  }
  return t;
}

int TensorNode::is_sym(int f1, int f2) const {
  check_factor(f1);
  check_factor(f2);
  const Irrep& a = *leaf_irreps_[f1 - 1];
  const Irrep& b = *leaf_irreps_[f2 - 1];
  if (&a != &b && !(a.algebra() == b.algebra() && a.highest_weight() == b.highest_weight() &&
                    a.export_data() == b.export_data()))
    throw std::invalid_argument("is_sym: factors are different irreps");
  bool sym = true, anti = true;
  for (const auto& e : expansion_) {
    std::vector<TreeVector::Term> terms;
    for (const auto& term : e.terms()) {
      LeafTuple leaves = term.label;
      std::swap(leaves[f1 - 1], leaves[f2 - 1]);
      terms.push_back({std::move(leaves), term.coeff});
    }
    TreeVector swapped = TreeVector::from_terms(std::move(terms));
    sym = sym && swapped == e;
    anti = anti && swapped == -e;
  }
  if (sym && !anti) return 1;
  if (anti && !sym) return -1;
  return sym ? 1 : 0;  // all-zero expansions count as symmetric
}

TensorNode TensorNode::scale(const FieldElem& c) const {
  TensorNode t = *this;
  for (auto& e : t.expansion_) e = e.scaled(c);
  return t;
}

FieldElem TensorNode::tensor_coeff(StateLabel l, const LeafTuple& leaves) const {
  if (static_cast<int>(leaves.size()) != factors())
    throw std::invalid_argument("tensor_coeff: expected " + std::to_string(factors()) + " labels");
  return expand(l).coeff(leaves);
}

// ------------------------------------------------------------- helpers

StateOperator e_lower(std::shared_ptr<const Irrep> r, int root) {
  if (root < 0 || root >= r->algebra().rank()) throw std::invalid_argument("e_lower: bad root");
  return [r = std::move(r), root](const StateVector& v) {
    StateVector out;
    for (const auto& t : v.terms()) out += r->lower(root, t.label).scaled(t.coeff);
    return out;
  };
}

StateOperator comm(StateOperator a, StateOperator b) {
  return [a = std::move(a), b = std::move(b)](const StateVector& v) { return a(b(v)) - b(a(v)); };
}

FieldElem scp(const Irrep& r, const StateVector& u, const StateVector& v) {
  LabelForm<StateLabel> form = [&r](StateLabel a, StateLabel b) { return r.scalar_product(a, b); };
  return bilinear(u, v, form);
}

FieldMatrix scalar_products(const Irrep& r, StateLabel start, int count) {
  FieldMatrix m(count, count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) m(i, j) = r.scalar_product(start + i, start + j);
  return m;
}

std::vector<StateVector> gram(const Irrep& r, const std::vector<StateVector>& ortho,
                              const std::vector<StateVector>& rest) {
  LabelForm<StateLabel> form = [&r](StateLabel a, StateLabel b) { return r.scalar_product(a, b); };
  return gram_orthogonalize(form, ortho, rest);
}

std::vector<std::pair<int, StateVector>> chbasis_list(const std::vector<StateVector>& basis,
                                                      int offset) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  FieldMatrix b = FieldMatrix::Constant(m, m, FieldElem());
  for (Eigen::Index k = 0; k < m; ++k)
    for (const auto& t : basis[k].terms()) {
      const int l = t.label - offset;
      if (l < 0 || l >= m)
        throw std::invalid_argument("chbasis_list: label " + std::to_string(t.label) +
                                    " outside the basis range");
      b(k, l) = t.coeff;
    }
  FieldMatrix inv = invert_matrix(b);
  std::vector<std::pair<int, StateVector>> out;
  for (Eigen::Index l = 0; l < m; ++l) {
    std::vector<StateVector::Term> terms;
    for (Eigen::Index k = 0; k < m; ++k)
      if (!inv(l, k).is_zero()) terms.push_back({-static_cast<int>(k + 1), inv(l, k)});
    out.emplace_back(offset + static_cast<int>(l), StateVector::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace liecg

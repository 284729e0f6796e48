#include "liecg/liealg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "liecg/errors.hpp"
#include "liecg/exactnum.hpp"
#include "liecg/linalg.hpp"

namespace liecg {

// ------------------------------------------------------------- LieAlgebra

namespace {

int implied_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

LieAlgebra::LieAlgebra(Family family, int rank) : family_(family), rank_(rank) {
  int fixed = implied_rank(family);
  if (fixed != 0) {
    if (rank != 0 && rank != fixed)
      throw std::invalid_argument("exceptional algebra with wrong rank");
    rank_ = fixed;
    return;
  }
  int min_rank = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (rank < min_rank) throw std::invalid_argument("rank too small for this family");
}

std::string LieAlgebra::name() const {
  switch (family_) {
    case Family::A: return "SU(" + std::to_string(rank_ + 1) + ")";
    case Family::B: return "SO(" + std::to_string(2 * rank_ + 1) + ")";
    case Family::C: return "Sp(" + std::to_string(2 * rank_) + ")";
    case Family::D: return "SO(" + std::to_string(2 * rank_) + ")";
    default: return code();
  }
}

std::string LieAlgebra::code() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::C: return "C" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return {};
}

LieAlgebra LieAlgebra::parse(std::string_view code) {
  if (code.size() < 2) throw std::invalid_argument("bad algebra: " + std::string(code));
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(code[0])));
  std::string rest(code.substr(1));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad algebra: " + std::string(code));
  }
  switch (f) {
    case 'A': return {Family::A, r};
    case 'B': return {Family::B, r};
    case 'C': return {Family::C, r};
    case 'D': return {Family::D, r};
    case 'E':
      if (r == 6) return {Family::E6};
      if (r == 7) return {Family::E7};
      if (r == 8) return {Family::E8};
      break;
    case 'F':
      if (r == 4) return {Family::F4};
      break;
    case 'G':
      if (r == 2) return {Family::G2};
      break;
    default: break;
  }
  throw std::invalid_argument("bad algebra: " + std::string(code));
}

// ----------------------------------------------------------- Cartan data

CartanMatrix cartan(const LieAlgebra& la) {
  const int n = la.rank();
  CartanMatrix a = CartanMatrix::Zero(n, n);
  auto chain = [&] {
    for (int i = 0; i < n; ++i) {
      a(i, i) = 2;
      if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
    }
  };
  switch (la.family()) {
    case Family::A: chain(); break;
    case Family::B:
      chain();
      a(n - 2, n - 1) = -2;
      break;
    case Family::C:
      chain();
      a(n - 1, n - 2) = -2;
      break;
    case Family::D:
      chain();
      a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
      a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // chain of rank-1 nodes, last node attached to node 3
      for (int i = 0; i < n - 1; ++i) {
        a(i, i) = 2;
        if (i + 1 < n - 1) a(i, i + 1) = a(i + 1, i) = -1;
      }
      a(n - 1, n - 1) = 2;
      a(2, n - 1) = a(n - 1, 2) = -1;
      break;
    case Family::F4:
      chain();
      a(2, 1) = -2;
      break;
    case Family::G2:
      a << 2, -1, -3, 2;
      break;
  }
  return a;
}

std::vector<int> root_weights(const LieAlgebra& la) {
  const int n = la.rank();
  std::vector<int> w(n, 1);
  switch (la.family()) {
    case Family::B:
      std::fill(w.begin(), w.end() - 1, 2);
      break;
    case Family::C: w[n - 1] = 2; break;
    case Family::F4: w = {1, 1, 2, 2}; break;
    case Family::G2: w = {1, 3}; break;
    default: break;
  }
  return w;
}

namespace {

Weight unit_sum(int n, int from, int to, int mult = 1) {  // 1-based inclusive
  Weight k(n, 0);
  for (int u = from; u <= to; ++u) k[u - 1] += mult;
  return k;
}

Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Weight> parse_table(const char* const* rows) {
  std::vector<Weight> out;
  for (; *rows != nullptr; ++rows) {
    Weight k;
    for (const char* c = *rows; *c != 0; ++c) k.push_back(*c - '0');
    out.push_back(std::move(k));
  }
  return out;
}

// Exceptional positive roots as simple-root coefficients.
const char* const kE6[] = {
    "100000", "010000", "001000", "000100", "000010", "000001", "110000", "011000",
    "001100", "000110", "001001", "111000", "011100", "001110", "001101", "111100",
    "011110", "001111", "111110", "011001", "111001", "011101", "111101", "011111",
    "111111", "012101", "112101", "012111", "112111", "012211", "112211", "122101",
    "122111", "122211", "123211", "123212", nullptr};
const char* const kE7[] = {
    "1000000", "0100000", "0010000", "0001000", "0000100", "0000010", "0000001",
    "1100000", "0110000", "0011000", "0010001", "1110000", "0001100", "0111000",
    "0011001", "1111000", "0000110", "0011100", "0111100", "0011101", "1111100",
    "0001110", "0011110", "0111110", "0011111", "1111110", "0110001", "1110001",
    "0111001", "1111001", "0111101", "1111101", "0111111", "1111111", "0121001",
    "1121001", "0121101", "1121101", "0121111", "1121111", "0122101", "1122101",
    "0122111", "1122111", "0122211", "1122211", "1221001", "1221101", "1221111",
    "1222101", "1222111", "1222211", "1232101", "1232111", "1232211", "1233211",
    "1232102", "1232112", "1232212", "1233212", "1243212", "1343212", "2343212",
    nullptr};
const char* const kE8[] = {
    "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010",
    "00000001", "11000000", "01100000", "00110000", "00100001", "11100000", "00011000",
    "01110000", "00110001", "11110000", "00001100", "00111000", "01111000", "00111001",
    "11111000", "00000110", "00011100", "00111100", "01111100", "00111101", "11111100",
    "00001110", "00011110", "00111110", "01111110", "00111111", "11111110", "01100001",
    "11100001", "01110001", "11110001", "01111001", "11111001", "01111101", "11111101",
    "01111111", "11111111", "01210001", "11210001", "01211001", "11211001", "01211101",
    "11211101", "01211111", "11211111", "01221001", "11221001", "01221101", "11221101",
    "01221111", "11221111", "01222101", "11222101", "01222111", "11222111", "01222211",
    "11222211", "12210001", "12211001", "12211101", "12211111", "12221001", "12221101",
    "12221111", "12222101", "12222111", "12222211", "12321001", "12321101", "12321111",
    "12322101", "12322111", "12322211", "12332101", "12332111", "12332211", "12333211",
    "12321002", "12321102", "12321112", "12322102", "12322112", "12322212", "12332102",
    "12332112", "12332212", "12333212", "12432102", "12432112", "12432212", "12433212",
    "12443212", "13432102", "13432112", "13432212", "13433212", "13443212", "13543212",
    "13543213", "23432102", "23432112", "23432212", "23433212", "23443212", "23543212",
    "23543213", "24543212", "24543213", "24643213", "24653213", "24654213", "24654313",
    "24654323", nullptr};
// F4 and G2 are listed with short roots first, matching the Cartan matrices.
const char* const kF4[] = {
    "1000", "0100", "0010", "0001", "1100", "0110", "0011", "1110", "0210", "0111", "1210", "1111",
    "0211", "2210", "1211", "0221", "2211", "1221", "2221", "1321", "2321", "2421", "2431", "2432",
    nullptr};
const char* const kG2[] = {"10", "01", "11", "21", "31", "32", nullptr};

std::vector<Weight> family_roots(const LieAlgebra& la) {
  const int n = la.rank();
  std::vector<Weight> roots;
  switch (la.family()) {
    case Family::A:
      for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) roots.push_back(unit_sum(n, j, k));
      break;
    case Family::B:
      for (int j = 1; j <= n; ++j) roots.push_back(unit_sum(n, j, n));
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          roots.push_back(unit_sum(n, j, k - 1) + unit_sum(n, k, n, 2));
          roots.push_back(unit_sum(n, j, k - 1));
        }
      break;
    case Family::C:
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) roots.push_back(unit_sum(n, j, k - 1));
      for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n - 1; ++k)
          roots.push_back(unit_sum(n, j, k - 1) + unit_sum(n, k, n - 1, 2) + unit_sum(n, n, n));
      for (int j = 1; j <= n - 1; ++j) {
        roots.push_back(unit_sum(n, j, n - 1) + unit_sum(n, n, n));
        roots.push_back(unit_sum(n, j, n - 1, 2) + unit_sum(n, n, n));
      }
      roots.push_back(unit_sum(n, n, n));
      break;
    case Family::D:
      for (int j = 1; j <= n - 2; ++j) {
        for (int k = j + 1; k <= n - 2; ++k) {
          roots.push_back(unit_sum(n, j, k - 1) + unit_sum(n, k, n - 2, 2) +
                          unit_sum(n, n - 1, n));
          roots.push_back(unit_sum(n, j, k - 1));
        }
        roots.push_back(unit_sum(n, j, n - 2) + unit_sum(n, n - 1, n));
        roots.push_back(unit_sum(n, j, n - 2) + unit_sum(n, n - 1, n - 1));
        roots.push_back(unit_sum(n, j, n - 2) + unit_sum(n, n, n));
        roots.push_back(unit_sum(n, j, n - 2));
      }
      // the two simple roots at the fork
      roots.push_back(unit_sum(n, n - 1, n - 1));
      roots.push_back(unit_sum(n, n, n));
      break;
    case Family::E6: roots = parse_table(kE6); break;
    case Family::E7: roots = parse_table(kE7); break;
    case Family::E8: roots = parse_table(kE8); break;
    case Family::F4: roots = parse_table(kF4); break;
    case Family::G2: roots = parse_table(kG2); break;
  }
  // height, then lexicographically descending: simple roots come first
  std::sort(roots.begin(), roots.end(), [](const Weight& a, const Weight& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return roots;
}

}  // namespace

const std::vector<Weight>& positive_roots(const LieAlgebra& la) {
  static std::mutex mu;
  static std::map<std::string, std::vector<Weight>> cache;
  std::lock_guard lock(mu);
  auto key = la.code();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, family_roots(la)).first;
  return it->second;
}

Weight root_dynkin(const LieAlgebra& la, const Weight& coeffs) {
  CartanMatrix a = cartan(la);
  Weight d(la.rank(), 0);
  for (int j = 0; j < la.rank(); ++j)
    for (int i = 0; i < la.rank(); ++i) d[i] += coeffs[j] * a(j, i);
  return d;
}

Weight lowest_root(const LieAlgebra& la) {
  const auto& roots = positive_roots(la);
  Weight low = roots.back();  // unique root of maximal height
  for (int& x : low) x = -x;
  return low;
}

int lowest_root_label(const LieAlgebra& la, const Weight& w) {
  // 2 a0.w / a0^2 with a_j.w = omega_j w_j / 2 and a0^2 the long-root length
  Weight c = lowest_root(la);
  auto om = root_weights(la);
  int longest = *std::max_element(om.begin(), om.end());
  int s = 0;
  for (int j = 0; j < la.rank(); ++j) s += c[j] * om[j] * w[j];
  if (s % longest != 0) throw InconsistencyError("non-integral lowest-root label");
  return s / longest;
}

void check_highest_weight(const LieAlgebra& la, const HighestWeight& hw) {
  if (static_cast<int>(hw.size()) != la.rank())
    throw std::invalid_argument("highest weight has " + std::to_string(hw.size()) +
                                " labels, algebra " + la.code() + " needs " +
                                std::to_string(la.rank()));
  for (int x : hw)
    if (x < 0) throw std::invalid_argument("highest weight labels must be non-negative");
}

// ---------------------------------------------------------- weight system

std::vector<WeightRecord> complete_descent(const LieAlgebra& la, const HighestWeight& hw) {
  check_highest_weight(la, hw);
  const int n = la.rank();
  CartanMatrix a = cartan(la);
  std::map<Weight, Weight> seen;  // descent -> dynkin
  std::vector<WeightRecord> out;
  std::vector<WeightRecord> level{{0, Weight(n, 0), hw, 0, lowest_root_label(la, hw)}};
  seen.emplace(level[0].descent, hw);
  while (!level.empty()) {
    std::map<Weight, WeightRecord> next;  // keyed by descent: sorted ascending
    for (const auto& rec : level) {
      for (int i = 0; i < n; ++i) {
        // p: how often rec can be raised by a_i inside the weight system
        int p = 0;
        for (Weight q = rec.descent; q[i] > 0;) {
          --q[i];
          if (!seen.contains(q)) break;
          ++p;
        }
        if (rec.dynkin[i] + p <= 0) continue;
        Weight q = rec.descent;
        ++q[i];
        if (next.contains(q)) continue;
        Weight d = rec.dynkin;
        for (int k = 0; k < n; ++k) d[k] -= a(i, k);
        next.emplace(q, WeightRecord{rec.level + 1, q, d, 0, lowest_root_label(la, d)});
      }
    }
    out.insert(out.end(), level.begin(), level.end());
    level.clear();
    for (auto& [q, rec] : next) {
      seen.emplace(q, rec.dynkin);
      level.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<WeightRecord> freudenthal(const LieAlgebra& la, const HighestWeight& hw) {
  auto recs = complete_descent(la, hw);
  const int n = la.rank();
  const auto& roots = positive_roots(la);
  const auto om = root_weights(la);
  std::vector<Weight> root_dyn;
  for (const auto& r : roots) root_dyn.push_back(root_dynkin(la, r));

  std::map<Weight, std::size_t> index;  // descent -> position
  for (std::size_t k = 0; k < recs.size(); ++k) index.emplace(recs[k].descent, k);

  recs[0].degeneracy = 1;
  for (std::size_t k = 1; k < recs.size(); ++k) {
    auto& rec = recs[k];
    // 2 [(L+d)^2 - (l+d)^2] = sum_i q_i om_i (n_i + l_i + 2)
    long lhs = 0;
    for (int i = 0; i < n; ++i) lhs += static_cast<long>(rec.descent[i]) * om[i] * (hw[i] + rec.dynkin[i] + 2);
    // 2 * sum_a sum_k m(l + k a) 2 (l + k a).a,  2 mu.a = sum_j k_j om_j mu_j
    long rhs = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight q = rec.descent;
      Weight mu = rec.dynkin;
      for (int step = 1;; ++step) {
        bool inside = true;
        for (int j = 0; j < n; ++j) {
          q[j] -= roots[r][j];
          mu[j] += root_dyn[r][j];
          if (q[j] < 0) inside = false;
        }
        if (!inside) break;
        auto it = index.find(q);
        if (it == index.end()) break;
        long proj = 0;
        for (int j = 0; j < n; ++j) proj += static_cast<long>(roots[r][j]) * om[j] * mu[j];
        rhs += 2L * recs[it->second].degeneracy * proj;
      }
    }
    if (lhs <= 0 || rhs % lhs != 0)
      throw InconsistencyError("Freudenthal recursion not integral at " + format_weight(rec.dynkin));
    rec.degeneracy = static_cast<int>(rhs / lhs);
    if (rec.degeneracy <= 0)
      throw InconsistencyError("non-positive multiplicity at " + format_weight(rec.dynkin));
  }
  return recs;
}

long weyl_dim(const LieAlgebra& la, const HighestWeight& hw) {
  check_highest_weight(la, hw);
  const auto om = root_weights(la);
  Rational dim = 1;
  for (const auto& r : positive_roots(la)) {
    long num = 0, den = 0;
    for (int j = 0; j < la.rank(); ++j) {
      num += static_cast<long>(hw[j] + 1) * r[j] * om[j];
      den += static_cast<long>(r[j]) * om[j];
    }
    dim *= Rational(num, den);
  }
  dim.canonicalize();
  if (dim.get_den() != 1 || !dim.get_num().fits_slong_p())
    throw InconsistencyError("Weyl dimension not integral");
  return dim.get_num().get_si();
}

Weight level_vector(const LieAlgebra& la) {
  const int n = la.rank();
  CartanMatrix a = cartan(la);
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = FieldElem(static_cast<long>(a(i, j)));
  FieldMatrix inv = invert_matrix(m);
  Weight r(n);
  for (int i = 0; i < n; ++i) {
    FieldElem s;
    for (int j = 0; j < n; ++j) s += inv(i, j);
    s *= FieldElem(2L);
    if (!s.is_rational() || s.rational_part().get_den() != 1)
      throw InconsistencyError("non-integral level vector");
    r[i] = static_cast<int>(s.rational_part().get_num().get_si());
  }
  return r;
}

HighestWeight adjoint_hw(const LieAlgebra& la) {
  Weight c = lowest_root(la);
  for (int& x : c) x = -x;
  return root_dynkin(la, c);
}

std::string format_weight(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string format_weight_trailing(const Weight& w) {
  std::string s = "(";
  for (int x : w) s += std::to_string(x) + ",";
  return s + ")";
}

}  // namespace liecg

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "liecg/cli.hpp"
#include "liecg/errors.hpp"
#include "liecg/exactnum.hpp"
#include "liecg/multitensor.hpp"
#include "oracles.hpp"

using namespace liecg;
namespace fs = std::filesystem;

namespace {

// pinned limits
constexpr double kTranscriptSeconds = 1.0;
constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kE6Seconds = 600.0;
constexpr double kConsistencySample = 0.05;
constexpr unsigned kSampleSeed = 20240611;
constexpr long kE8MemoryKiB = 8L * 1024 * 1024;
constexpr double kSu4Seconds = 60.0;
constexpr double kDimensionSeconds = 120.0;
constexpr int kMaxTensorDim = 14;
constexpr double kTensorSeconds = 300.0;
constexpr int kRandomElements = 10000;
constexpr unsigned kNumberSeed = 7;
constexpr double kSignTolerance = 1e-60;  // |x| below this must be exact zero
constexpr double kArithmeticSeconds = 60.0;

const fs::path kData = LIECG_TEST_DATA;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::shared_ptr<const Irrep> irrep(const LieAlgebra& la, const HighestWeight& hw) {
  return std::make_shared<const Irrep>(la, hw);
}

std::string squeeze(const std::string& s) {
  std::istringstream is(s);
  std::string line, out;
  while (std::getline(is, line)) {
    auto a = line.find_first_not_of(" \t"), b = line.find_last_not_of(" \t\r");
    if (a != std::string::npos) out += line.substr(a, b - a + 1) + "\n";
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<HighestWeight> hws(const Decomposition& d) {
  std::vector<HighestWeight> out;
  for (const auto& p : d.found()) out.push_back(p.hw);
  return out;
}

// ------------------------------------------------------------- criteria

std::string transcripts() {
  for (auto [args, file] : {std::pair{std::vector<std::string>{"-su", "3", "-rep", "11"}, "su3_adjoint.txt"},
                            std::pair{std::vector<std::string>{"-e6", "-rep", "100000"}, "e6_27.txt"}}) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    require(cli::run(args, out, err) == 0, "lie exited nonzero: " + err.str());
    const double s = seconds_since(t0);
    require(squeeze(out.str()) == squeeze(slurp(kData / file)), std::string("listing differs from ") + file);
    require(s < kTranscriptSeconds, std::string(file) + " took " + std::to_string(s) + " s");
  }
  return "SU(3) adjoint and E6 27 listings match";
}

std::string worked_example() {
  auto t0 = std::chrono::steady_clock::now();
  LieAlgebra a2(Family::A, 2);
  Decomposition d(irrep(a2, {1, 0}), irrep(a2, {0, 1}));
  d.decompose();
  require(hws(d) == std::vector<HighestWeight>{{1, 1}, {0, 0}}, "irreps are not (1,1), (0,0)");
  const ProductState& s = d.found()[1].states.at(0);
  FieldElem c = number(1, 3, 3);
  ProductState want = ProductState::from_terms({{{1, 3}, c}, {{2, 2}, -c}, {{3, 1}, c}});
  require(s == want || s == -want, "singlet is not (1/sqrt3)(+1,-1,+1)");
  // basis pair order |10>|-1 0>, |-1 1>|1 -1>, |0 -1>|0 1>
  require(format_ket(d.left(), 1) == "(1,0,)1" && format_ket(d.right(), 3) == "(-1,0,)1" &&
              format_ket(d.left(), 2) == "(-1,1,)1" && format_ket(d.right(), 2) == "(1,-1,)1" &&
              format_ket(d.left(), 3) == "(0,-1,)1" && format_ket(d.right(), 1) == "(0,1,)1",
          "ket labels differ");
  require(seconds_since(t0) < kWorkedExampleSeconds, "too slow");
  return "3 x 3bar = 8 + 1, singlet (1/sqrt3)(+1,-1,+1)";
}

std::string e6_case() {
  auto t0 = std::chrono::steady_clock::now();
  LieAlgebra e6(Family::E6);
  Decomposition d(irrep(e6, {1, 0, 0, 0, 0, 0}), irrep(e6, {0, 0, 0, 0, 1, 0}));
  d.decompose();
  require(hws(d) == std::vector<HighestWeight>{{1, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}},
          "wrong irreps: " + d.result());
  require(d.check_dims(), "dimensions do not add up");
  require(d.found()[0].dim() == 650 && d.found()[1].dim() == 78, "dims are not 650, 78");
  Irrep r650(e6, prepare(d.found()[0], d).data);
  std::vector<StateLabel> all(r650.dim());
  for (int l = 0; l < r650.dim(); ++l) all[l] = l + 1;
  std::mt19937 rng(kSampleSeed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::ceil(kConsistencySample * r650.dim())));
  auto bad = check_consistency(r650, all);
  require(bad.empty(), std::to_string(bad.size()) + " consistency failures");
  const double s = seconds_since(t0);
  require(s < kE6Seconds, "took " + std::to_string(s) + " s");
  return "27 x 27bar = 650 + 78 + 1, imported 650 consistent on " + std::to_string(all.size()) +
         " sampled states (" + std::to_string(s).substr(0, 5) + " s)";
}

std::string e8_case() {
  auto t0 = std::chrono::steady_clock::now();
  LieAlgebra e8(Family::E8);
  auto adj = irrep(e8, {0, 0, 0, 0, 0, 0, 1, 0});
  Decomposition d(adj, adj);
  d.decompose();
  require(hws(d) == std::vector<HighestWeight>{{0, 0, 0, 0, 0, 0, 2, 0},
                                              {0, 0, 0, 0, 0, 1, 0, 0},
                                              {1, 0, 0, 0, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 0, 0, 1, 0},
                                              {0, 0, 0, 0, 0, 0, 0, 0}},
          "wrong irreps: " + d.result());
  std::vector<long> dims;
  for (const auto& p : d.found()) dims.push_back(p.dim());
  require(dims == std::vector<long>{27000, 30380, 3875, 248, 1}, "wrong dimensions");
  const auto& terms = d.found()[4].states.at(0).terms();
  require(terms.size() >= 3, "singlet too short");
  // reference dump: -1, 1, -1 on these pairs
  const char* pairs[3][2] = {{"(0,0,0,0,0,0,1,0,)1", "(0,0,0,0,0,0,-1,0,)1"},
                             {"(0,0,0,0,0,1,-1,0,)1", "(0,0,0,0,0,-1,1,0,)1"},
                             {"(0,0,0,0,1,-1,0,0,)1", "(0,0,0,0,-1,1,0,0,)1"}};
  for (int k = 0; k < 3; ++k) {
    require(format_ket(*adj, terms[k].label.first) == pairs[k][0] &&
                format_ket(*adj, terms[k].label.second) == pairs[k][1],
            "leading ket pair " + std::to_string(k + 1) + " differs");
    const FieldElem want = terms[0].coeff * FieldElem(k % 2 ? -1L : 1L);
    require(terms[k].coeff == want, "leading coefficients do not alternate");
  }
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  require(u.ru_maxrss < kE8MemoryKiB, "peak memory " + std::to_string(u.ru_maxrss) + " KiB");
  return "248 x 248 = 27000 + 30380 + 3875 + 248 + 1, singlet leads " + render(terms[0].coeff) +
         " x (1,-1,1) (" + std::to_string(seconds_since(t0)).substr(0, 5) + " s, " +
         std::to_string(u.ru_maxrss / 1024) + " MiB)";
}

std::string su4_pipeline() {
  auto t0 = std::chrono::steady_clock::now();
  LieAlgebra a3(Family::A, 3);
  auto r4 = irrep(a3, {1, 0, 0}), r6 = irrep(a3, {0, 1, 0}), r15 = irrep(a3, {1, 0, 1});

  // exactly two singlets, by the character oracle
  auto ch = oracle::product_character(
      oracle::product_character(oracle::character(a3, {1, 0, 0}), oracle::character(a3, {1, 0, 0})),
      oracle::product_character(oracle::character(a3, {0, 1, 0}), oracle::character(a3, {1, 0, 1})));
  require(oracle::peel(a3, ch)[{0, 0, 0}] == 2, "4x4x6x15 does not hold two singlets");

  StateVector vev = StateVector::from_terms({{7, 1L}, {8, -2L}, {9, 3L}}).scaled(number(1, 6, 6));
  auto zero = gram(*r15, {vev}, {StateVector::unit(8), StateVector::unit(9).scaled(number(1, 3, 3))});
  std::vector<StateVector> basis{vev};
  basis.insert(basis.end(), zero.begin(), zero.end());
  auto trafo = chbasis_list(basis, 7);

  auto t4 = TensorNode::wrap(r4), t6 = TensorNode::wrap(r6), t15 = TensorNode::wrap(r15);
  auto tt1 = t4.otimes(t4, 1).otimes(t6, 2).otimes(t15, 7);
  auto tt2 = t4.otimes(t4, 2).otimes(t6, 2).otimes(t15, 7);
  require(tt1.dim() == 1 && tt2.dim() == 1, "not singlets");
  require(tt1.is_sym(1, 2) == 1, "tt1 not symmetric");
  require(tt2.is_sym(1, 2) == -1, "tt2 not antisymmetric");

  using Terms = std::vector<std::pair<long, std::string>>;
  auto match = [&](const TensorNode& t, const Terms& want, const std::string& name) {
    auto got = t.filter(4, {7, 8, 9}).chbasis(4, trafo).filter(4, {-1}).untree().at(0).second;
    require(got.size() == want.size(), name + ": " + std::to_string(got.size()) + " terms");
    std::map<std::string, FieldElem> g;
    for (const auto& [c, s] : got) g[s] = c;
    require(g.count(want[0].second) == 1, name + ": missing " + want[0].second);
    const FieldElem scale = g[want[0].second] / FieldElem(want[0].first);
    for (const auto& [c, s] : want)
      require(g.count(s) == 1 && g[s] == scale * FieldElem(c), name + ": term " + s + " differs");
  };
  match(tt1, {{-1, "(((4,3),1),-1)"}, {-1, "(((3,4),1),-1)"}, {1, "(((4,2),2),-1)"},
              {1, "(((2,4),2),-1)"}, {-1, "(((4,1),4),-1)"}, {-1, "(((1,4),4),-1)"}}, "tt1");
  match(tt2, {{1, "(((1,3),5),-1)"}, {-1, "(((3,1),5),-1)"}, {-1, "(((1,2),6),-1)"},
              {1, "(((2,1),6),-1)"}, {1, "(((3,4),1),-1)"}, {-1, "(((4,3),1),-1)"},
              {-1, "(((2,4),2),-1)"}, {1, "(((4,2),2),-1)"}, {1, "(((1,4),4),-1)"},
              {-1, "(((4,1),4),-1)"}, {-1, "(((2,3),3),-1)"}, {1, "(((3,2),3),-1)"}}, "tt2");
  require(seconds_since(t0) < kSu4Seconds, "too slow");
  return "two singlets, is_sym +1/-1, 6 and 12 vev terms match";
}

std::vector<LieAlgebra> small_algebras() {
  std::vector<LieAlgebra> out;
  for (int n = 1; n <= 4; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= 4; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= 4; ++n) out.emplace_back(Family::C, n);
  for (int n = 3; n <= 4; ++n) out.emplace_back(Family::D, n);
  out.emplace_back(Family::F4);
  out.emplace_back(Family::G2);
  out.emplace_back(Family::E6);
  return out;
}

std::string dimension_suite() {
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const LieAlgebra& la : small_algebras()) {
    const int n = la.rank();
    std::vector<HighestWeight> irreps{adjoint_hw(la)};
    for (int i = 0; i < n; ++i) {
      HighestWeight f(n, 0);
      f[i] = 1;
      irreps.push_back(f);
    }
    for (const auto& hw : irreps) {
      long sum = 0;
      for (const auto& r : freudenthal(la, hw)) sum += r.degeneracy;
      require(sum == weyl_dim(la, hw), la.code() + " " + format_weight(hw) + ": multiplicities sum to " +
                                           std::to_string(sum));
      ++checked;
    }
    const long adim = weyl_dim(la, adjoint_hw(la));
    const auto& pos = positive_roots(la);
    require(static_cast<long>(pos.size()) * 2 == adim - n, la.code() + ": wrong number of positive roots");
    std::multiset<Weight> want, got;
    for (const auto& r : pos) {
      Weight w = root_dynkin(la, r);
      want.insert(w);
      for (int& x : w) x = -x;
      want.insert(w);
    }
    int zero = 0;
    for (const auto& r : freudenthal(la, adjoint_hw(la))) {
      if (std::all_of(r.dynkin.begin(), r.dynkin.end(), [](int x) { return x == 0; })) zero = r.degeneracy;
      else
        for (int k = 0; k < r.degeneracy; ++k) got.insert(r.dynkin);
    }
    require(got == want && zero == n, la.code() + ": adjoint weights are not the roots");
  }
  const double s = seconds_since(t0);
  require(s < kDimensionSeconds, "took " + std::to_string(s) + " s");
  return std::to_string(small_algebras().size()) + " algebras, " + std::to_string(checked) + " irreps";
}

std::string tensor_suite() {
  auto t0 = std::chrono::steady_clock::now();
  int products = 0;
  for (const LieAlgebra& la : {LieAlgebra(Family::A, 1), LieAlgebra(Family::A, 2), LieAlgebra(Family::B, 2),
                               LieAlgebra(Family::C, 2), LieAlgebra(Family::G2)}) {
    std::vector<std::shared_ptr<const Irrep>> irreps;
    const int n = la.rank();
    const int top = n == 1 ? 13 : 3;
    HighestWeight hw(n, 0);
    std::function<void(int)> gen = [&](int i) {
      if (i == n) {
        const long dim = weyl_dim(la, hw);
        if (dim > 1 && dim <= kMaxTensorDim && (is_nondegenerate(la, hw) || hw == adjoint_hw(la)))
          irreps.push_back(irrep(la, hw));
        return;
      }
      for (hw[i] = 0; hw[i] <= top; ++hw[i]) gen(i + 1);
      hw[i] = 0;
    };
    gen(0);
    for (const auto& a : irreps)
      for (const auto& b : irreps) {
        Decomposition d(a, b), swapped(b, a);
        d.decompose();
        swapped.decompose();
        const std::string tag = la.code() + " " + format_weight(a->highest_weight()) + " x " +
                                format_weight(b->highest_weight());
        long total = 0;
        for (const auto& p : d.found()) total += p.dim();
        require(total == static_cast<long>(a->dim()) * b->dim(), tag + ": dimensions do not add up");
        require(d.multiplicities() == swapped.multiplicities(), tag + ": not commutative");
        auto want = oracle::product_character(oracle::character(la, a->highest_weight()),
                                              oracle::character(la, b->highest_weight()));
        oracle::Character got;
        for (const auto& p : d.found())
          for (const auto& w : p.weights) ++got[w];
        require(got == want, tag + ": weight counts differ from the convolution");
        require(d.multiplicities() == oracle::peel(la, want), tag + ": differs from character peeling");
        for (std::size_t j = 1; j < d.found().size(); ++j) {
          const auto& top_state = d.found()[j].states[0];
          for (std::size_t i = 0; i < j; ++i)
            for (std::size_t k : d.found()[i].indices_of(d.found()[j].hw))
              require(d.product_scp(top_state, d.found()[i].states[k]).is_zero(),
                      tag + ": highest weight states not orthogonal");
        }
        ++products;
      }
  }
  const double s = seconds_since(t0);
  require(s < kTensorSeconds, "took " + std::to_string(s) + " s");
  return std::to_string(products) + " products on A1, A2, B2, C2, G2";
}

mpf_class approx(const FieldElem& x) {
  mpf_class s(0, 512);
  for (const auto& t : x.num().terms()) {
    mpf_class r(t.radicand, 512);
    r = sqrt(r);
    s += mpf_class(t.coeff, 512) * r;
  }
  return s;
}

std::string arithmetic_suite() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(kNumberSeed);
  std::uniform_int_distribution<long> c(-9, 9), den(1, 7), rad(1, 30), nterms(0, 4);
  auto random_elem = [&] {
    FieldElem x;
    for (long k = nterms(rng); k > 0; --k) x += number(c(rng), den(rng), rad(rng));
    return x;
  };
  std::vector<FieldElem> xs;
  for (int i = 0; i < kRandomElements; ++i) xs.push_back(random_elem());
  const mpf_class tol(kSignTolerance, 512);
  for (int i = 0; i < kRandomElements; ++i) {
    const FieldElem& a = xs[i];
    const FieldElem& b = xs[(i + 1) % kRandomElements];
    const FieldElem& e = xs[(i + 2) % kRandomElements];
    require(a + b == b + a && a * b == b * a, "commutativity");
    require((a + b) + e == a + (b + e) && (a * b) * e == a * (b * e), "associativity");
    require(a * (b + e) == a * b + a * e, "distributivity");
    require((a - a).is_zero() && a * FieldElem(1L) == a, "identities");
    if (!a.is_zero()) require((a * invert(a)).is_one() && (b / a) * a == b, "inverse");
    require(simplify(simplify(a)) == simplify(a) && simplify(a) == a, "simplify not idempotent");
    const mpf_class v = approx(a);
    const Sign sg = sign(a);
    if (sg == Sign::zero) require(a.is_zero(), "sign zero of nonzero element");
    else if (sg == Sign::positive) require(v > tol, "sign disagrees with numeric value");
    else require(v < -tol, "sign disagrees with numeric value");
  }
  LieAlgebra g2(Family::G2);
  require(scp_zero_weights(g2, 0, 1) == number(1, 2, 3), "G2 zero-weight scp is not sqrt3/2");
  Irrep adj(g2, adjoint_hw(g2));
  const auto& zl = adj.labels_of({0, 0});
  require(zl.size() == 2 && adj.scalar_product(zl[0], zl[1]) == number(1, 2, 3), "G2 adjoint scp");
  require(check_consistency(adj).empty(), "G2 adjoint inconsistent");
  const double s = seconds_since(t0);
  require(s < kArithmeticSeconds, "took " + std::to_string(s) + " s");
  return std::to_string(kRandomElements) + " random elements, G2 <0_1|0_2> = sqrt(3)/2";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"transcript fidelity", transcripts},
      {"worked example 3 x 3bar", worked_example},
      {"E6 27 x 27bar", e6_case},
      {"E8 248 x 248", e8_case},
      {"SU(4) multiple product", su4_pipeline},
      {"dimension suite", dimension_suite},
      {"tensor product suite", tensor_suite},
      {"exact arithmetic", arithmetic_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& [name, fn] = criteria[k];
    std::string line;
    bool ok = false;
    try {
      line = fn();
      ok = true;
    } catch (const std::exception& e) {
      line = e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << k + 1 << " " << name << ": " << line << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed;
}

#include "liecg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "liecg/errors.hpp"
#include "liecg/irrep_io.hpp"
#include "liecg/multitensor.hpp"

namespace liecg::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kUsage =
    "usage: lie ALGEBRA -rep LABELS                 weight system\n"
    "       lie ALGEBRA --decompose LABELSxLABELS   tensor product decomposition\n"
    "       lie --script FILE                       multiple tensor products\n"
    "ALGEBRA: -su n | -so n | -sp n | -d n | -e6 | -e7 | -e8 | -f4 | -g2\n"
    "LABELS:  digits (11) or comma separated (1,1)\n"
    "options: --import FILE      use imported irrep data (repeatable)\n"
    "         --dump DIR         write coefficients and irrep data of every irrep found\n"
    "         --dump-singlet     write the singlet coefficients (into --dump DIR or .)\n"
    "         --format F         plain | tex | mathematica | json\n"
    "exit: 0 ok, 1 user error, 2 internal inconsistency\n";

int to_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("bad " + what + ": '" + std::string(s) + "'");
  return v;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw UsageError("cannot write " + p.string());
  out << text;
}

const char* extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::plain: return ".txt";
    case OutputFormat::tex: return ".tex";
    case OutputFormat::mathematica: return ".m";
    case OutputFormat::json: return ".json";
  }
  return ".txt";
}

NumberFormat number_format(OutputFormat f) {
  if (f == OutputFormat::tex) return NumberFormat::tex;
  if (f == OutputFormat::mathematica) return NumberFormat::mathematica;
  return NumberFormat::plain;
}

std::string unsupported_message(const LieAlgebra& la, const HighestWeight& hw) {
  return "irrep " + format_weight(hw) + " of " + la.name() +
         " is degenerate and not the adjoint, so no generic lowering data exist.\n"
         "Build it inside a tensor product, write its data with --dump DIR and pass the\n"
         "resulting .irrep.json file with --import.";
}

// Imported irreps by highest weight, else generic construction.
std::shared_ptr<const Irrep> make_irrep(const LieAlgebra& la, const HighestWeight& hw,
                                        const std::vector<std::shared_ptr<const Irrep>>& imported) {
  for (const auto& r : imported)
    if (r->highest_weight() == hw) return r;
  try {
    return std::make_shared<const Irrep>(la, hw);
  } catch (const UnsupportedIrrep&) {
    throw UnsupportedIrrep(unsupported_message(la, hw));
  }
}

std::vector<std::shared_ptr<const Irrep>> load_imports(const CliRequest& req) {
  std::vector<std::shared_ptr<const Irrep>> out;
  for (const auto& f : req.imports) {
    auto r = std::make_shared<const Irrep>(load_irrep(f));
    if (req.algebra && !(r->algebra() == *req.algebra))
      throw UsageError(f.string() + " holds an irrep of " + r->algebra().name() + ", not " +
                       req.algebra->name());
    out.push_back(std::move(r));
  }
  return out;
}

LieAlgebra algebra_of(const CliRequest& req,
                      const std::vector<std::shared_ptr<const Irrep>>& imported) {
  if (req.algebra) return *req.algebra;
  if (!imported.empty()) return imported.front()->algebra();
  throw UsageError("no Lie algebra given");
}

std::string coefficient_text(const Decomposition& d, const std::vector<const ProductIrrep*>& ps,
                             OutputFormat f) {
  if (f == OutputFormat::json) return coefficients_to_json(d, ps) + "\n";
  std::string s;
  for (const auto* p : ps) {
    if (!s.empty()) s += "\n";
    s += format_coefficients(*p, d, number_format(f)) + "\n";
  }
  return s;
}

}  // namespace

// ------------------------------------------------------------- arguments

LieAlgebra algebra_from_flag(std::string_view flag, std::string_view arg) {
  try {
    if (flag == "-e6") return LieAlgebra(Family::E6);
    if (flag == "-e7") return LieAlgebra(Family::E7);
    if (flag == "-e8") return LieAlgebra(Family::E8);
    if (flag == "-f4") return LieAlgebra(Family::F4);
    if (flag == "-g2") return LieAlgebra(Family::G2);
    const int n = to_int(arg, std::string(flag) + " argument");
    if (flag == "-su") return LieAlgebra(Family::A, n - 1);
    if (flag == "-so") return n % 2 ? LieAlgebra(Family::B, (n - 1) / 2) : LieAlgebra(Family::D, n / 2);
    if (flag == "-sp") {
      if (n % 2) throw UsageError("-sp needs an even dimension");
      return LieAlgebra(Family::C, n / 2);
    }
    if (flag == "-d") return LieAlgebra(Family::D, n);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + " " + std::string(arg) + ": " + e.what());
  }
  throw UsageError("unknown algebra flag " + std::string(flag));
}

HighestWeight parse_labels(std::string_view text, int rank) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  HighestWeight hw;
  if (s.find(',') != std::string::npos) {
    if (!s.empty() && s.back() == ',') s.pop_back();
    std::size_t pos = 0;
    while (true) {
      std::size_t c = s.find(',', pos);
      hw.push_back(to_int(std::string_view(s).substr(pos, c - pos), "Dynkin label"));
      if (c == std::string::npos) break;
      pos = c + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw UsageError("bad Dynkin labels '" + std::string(text) + "'");
      hw.push_back(c - '0');
    }
  }
  if (static_cast<int>(hw.size()) != rank)
    throw UsageError("'" + std::string(text) + "' has " + std::to_string(hw.size()) +
                     " labels, the algebra has rank " + std::to_string(rank) +
                     " (use commas for labels above 9)");
  for (int v : hw)
    if (v < 0) throw UsageError("Dynkin labels of a highest weight are non-negative");
  return hw;
}

CliRequest parse_args(const std::vector<std::string>& args) {
  CliRequest req;
  std::optional<std::string> rep, product;
  auto value = [&](std::size_t& i) -> const std::string& {
    if (i + 1 >= args.size()) throw UsageError(args[i] + " needs an argument");
    return args[++i];
  };
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-h" || a == "--help") {
      req.mode = Mode::help;
      return req;
    } else if (a == "-su" || a == "-so" || a == "-sp" || a == "-d" || a == "-e6" || a == "-e7" ||
               a == "-e8" || a == "-f4" || a == "-g2") {
      if (req.algebra) throw UsageError("more than one algebra given");
      const bool takes = a == "-su" || a == "-so" || a == "-sp" || a == "-d";
      req.algebra = algebra_from_flag(a, takes ? value(i) : "");
    } else if (a == "-rep") {
      rep = value(i);
    } else if (a == "--decompose") {
      product = value(i);
    } else if (a == "--import") {
      req.imports.emplace_back(value(i));
    } else if (a == "--dump") {
      req.dump_dir = value(i);
    } else if (a == "--dump-singlet") {
      req.dump_singlet = true;
    } else if (a == "--format") {
      const std::string& f = value(i);
      if (f == "plain") req.format = OutputFormat::plain;
      else if (f == "tex") req.format = OutputFormat::tex;
      else if (f == "mathematica") req.format = OutputFormat::mathematica;
      else if (f == "json") req.format = OutputFormat::json;
      else throw UsageError("unknown format " + f);
    } else if (a == "--script") {
      req.script = value(i);
      req.mode = Mode::multi;
    } else {
      throw UsageError("unknown argument " + a);
    }
  }

  if (req.mode == Mode::multi) {
    if (rep || product || req.algebra) throw UsageError("--script takes no algebra or irreps");
    return req;
  }
  if (rep && product) throw UsageError("-rep and --decompose exclude each other");
  if (!req.algebra && (rep || product)) throw UsageError("no Lie algebra given");
  if (product) {
    req.mode = Mode::decompose;
    std::size_t x = product->find_first_of("xX*");
    if (x == std::string::npos) throw UsageError("--decompose expects AxB, got " + *product);
    req.reps.push_back(parse_labels(product->substr(0, x), req.algebra->rank()));
    req.reps.push_back(parse_labels(product->substr(x + 1), req.algebra->rank()));
  } else {
    req.mode = Mode::weights;
    if (rep) req.reps.push_back(parse_labels(*rep, req.algebra->rank()));
    else if (req.imports.size() != 1) throw UsageError("give -rep, --decompose or --script");
  }
  if (req.dump_singlet && req.mode != Mode::decompose)
    throw UsageError("--dump-singlet needs --decompose");
  if (req.dump_dir && req.mode != Mode::decompose) throw UsageError("--dump needs --decompose");
  return req;
}

// ------------------------------------------------------------- modes

std::string weight_listing(const LieAlgebra& la, const HighestWeight& hw,
                           const std::vector<WeightRecord>& records) {
  long dim = 0;
  for (const auto& r : records) dim += r.degeneracy;
  std::ostringstream os;
  os << "Lie algebra   :   " << la.name() << "\n"
     << "==================================\n"
     << "Highest weight:   " << format_weight(hw) << "\n"
     << "Dim. of irrep :   " << dim << "\n"
     << "==================================\n";
  long idx = 1;
  for (const auto& r : records) {
    os << idx << ", Lev:" << r.level << ", Deg:" << r.degeneracy << "  " << format_weight(r.dynkin)
       << "," << r.lowest_root_label << "  " << format_weight(r.descent) << "\n";
    idx += r.degeneracy;
  }
  return os.str();
}

int run_weights(const CliRequest& req, std::ostream& out) {
  auto imported = load_imports(req);
  const LieAlgebra la = algebra_of(req, imported);
  HighestWeight hw = req.reps.empty() ? imported.front()->highest_weight() : req.reps.front();
  check_highest_weight(la, hw);
  std::vector<WeightRecord> recs;
  const Irrep* from_file = nullptr;
  for (const auto& r : imported)
    if (r->highest_weight() == hw) from_file = r.get();
  recs = from_file ? from_file->weights() : freudenthal(la, hw);
  if (req.format == OutputFormat::json) out << weights_to_json(la, hw, recs) << "\n";
  else out << weight_listing(la, hw, recs);
  return 0;
}

int run_decompose(const CliRequest& req, std::ostream& out, std::ostream& err) {
  auto imported = load_imports(req);
  const LieAlgebra la = algebra_of(req, imported);
  auto left = make_irrep(la, req.reps[0], imported);
  auto right = make_irrep(la, req.reps[1], imported);
  Decomposition d(left, right);
  d.decompose();
  out << "Dimensions match.\n"
      << "Clebsch-Gordan decomposition successfully done!\n"
      << d.result();

  if (req.dump_dir) {
    fs::create_directories(*req.dump_dir);
    for (std::size_t k = 0; k < d.found().size(); ++k) {
      const ProductIrrep& p = d.found()[k];
      const std::string stem = "irrep" + std::to_string(k + 1) + "_" + std::to_string(p.dim());
      write_file(*req.dump_dir / (stem + extension(req.format)), coefficient_text(d, {&p}, req.format));
      try {
        save_irrep(*req.dump_dir / (stem + ".irrep.json"), la, prepare(p, d).data);
      } catch (const InconsistencyError& e) {
        err << "warning: no import data for irrep " << k + 1 << ": " << e.what() << "\n";
      }
    }
  }
  if (req.dump_singlet) {
    std::vector<const ProductIrrep*> singlets;
    for (const auto& p : d.found())
      if (p.dim() == 1) singlets.push_back(&p);
    if (singlets.empty()) {
      err << "the product contains no singlet\n";
      return 1;
    }
    fs::path dir = req.dump_dir.value_or(".");
    fs::create_directories(dir);
    write_file(dir / (std::string("singlet") + extension(req.format)),
               coefficient_text(d, singlets, req.format));
  }
  return 0;
}

int run_multi(const CliRequest& req, std::ostream& out) {
  std::ifstream in(req.script);
  if (!in) throw UsageError("cannot read " + req.script.string());
  run_script(in, out, req.script.parent_path().empty() ? fs::path(".") : req.script.parent_path());
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    CliRequest req = parse_args(args);
    switch (req.mode) {
      case Mode::help: out << kUsage; return 0;
      case Mode::weights: return run_weights(req, out);
      case Mode::decompose: return run_decompose(req, out, err);
      case Mode::multi: return run_multi(req, out);
    }
  } catch (const UsageError& e) {
    err << "lie: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const InconsistencyError& e) {
    err << "lie: internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "lie: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "lie: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "lie: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// ------------------------------------------------------------- json

std::string weights_to_json(const LieAlgebra& la, const HighestWeight& hw,
                            const std::vector<WeightRecord>& records) {
  json ws = json::array();
  long dim = 0;
  for (const auto& r : records) {
    ws.push_back({{"level", r.level}, {"deg", r.degeneracy}, {"dynkin", r.dynkin},
                  {"l0", r.lowest_root_label}, {"descent", r.descent}});
    dim += r.degeneracy;
  }
  json j = {{"format", "liecg-weights"}, {"version", 1}, {"algebra", la.code()},
            {"highest_weight", hw}, {"dimension", dim}, {"weights", std::move(ws)}};
  return j.dump(1);
}

WeightListing weights_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "liecg-weights") throw InvalidImport("not a weight listing");
    WeightListing w{LieAlgebra::parse(j.at("algebra").get<std::string>()),
                    j.at("highest_weight").get<HighestWeight>(), {}};
    for (const auto& e : j.at("weights")) {
      WeightRecord r;
      r.level = e.at("level").get<int>();
      r.degeneracy = e.at("deg").get<int>();
      r.dynkin = e.at("dynkin").get<Weight>();
      r.lowest_root_label = e.at("l0").get<int>();
      r.descent = e.at("descent").get<Weight>();
      w.records.push_back(std::move(r));
    }
    return w;
  } catch (const json::exception& e) {
    throw InvalidImport(std::string("weight listing: ") + e.what());
  }
}

std::string coefficients_to_json(const Decomposition& d, const std::vector<const ProductIrrep*>& ps) {
  json irreps = json::array();
  for (const auto* p : ps) {
    json states = json::array();
    for (std::size_t k = 0; k < p->states.size(); ++k) {
      json terms = json::array();
      for (const auto& t : p->states[k].terms())
        terms.push_back({t.label.first, t.label.second, render(t.coeff)});
      states.push_back({{"weight", p->weights[k]}, {"level", p->levels[k]}, {"terms", std::move(terms)}});
    }
    irreps.push_back({{"highest_weight", p->hw}, {"dim", p->dim()},
                      {"hw_normalized", p->hw_normalized}, {"states", std::move(states)}});
  }
  json j = {{"format", "liecg-coefficients"}, {"version", 1}, {"algebra", d.algebra().code()},
            {"left", d.left().highest_weight()}, {"right", d.right().highest_weight()},
            {"irreps", std::move(irreps)}};
  return j.dump(1);
}

CoefficientTable coefficients_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "liecg-coefficients")
      throw InvalidImport("not a coefficient table");
    CoefficientTable t{LieAlgebra::parse(j.at("algebra").get<std::string>()),
                       j.at("left").get<HighestWeight>(), j.at("right").get<HighestWeight>(), {}};
    for (const auto& e : j.at("irreps")) {
      ProductIrrep p;
      p.hw = e.at("highest_weight").get<HighestWeight>();
      p.hw_normalized = e.at("hw_normalized").get<bool>();
      for (const auto& s : e.at("states")) {
        std::vector<ProductState::Term> terms;
        for (const auto& term : s.at("terms"))
          terms.push_back({{term.at(0).get<int>(), term.at(1).get<int>()},
                           parse_number(term.at(2).get<std::string>())});
        p.states.push_back(ProductState::from_terms(std::move(terms)));
        p.weights.push_back(s.at("weight").get<Weight>());
        p.levels.push_back(s.at("level").get<int>());
      }
      if (p.dim() != e.at("dim").get<long>()) throw InvalidImport("state count differs from dim");
      t.irreps.push_back(std::move(p));
    }
    return t;
  } catch (const json::exception& e) {
    throw InvalidImport(std::string("coefficient table: ") + e.what());
  }
}

// ------------------------------------------------------------- scripts

ScriptError::ScriptError(int l, const std::string& step, const std::string& what)
    : std::invalid_argument("line " + std::to_string(l) + (step.empty() ? "" : " (" + step + ")") +
                            ": " + what),
      line(l) {}

namespace {

using VectorList = std::vector<StateVector>;
using Trafo = std::vector<std::pair<int, StateVector>>;
using Value = std::variant<std::shared_ptr<const Irrep>, TensorNode, StateVector, VectorList, Trafo>;

std::string render_vector(const StateVector& v) {
  std::string s = "[";
  for (const auto& t : v.terms()) {
    if (s.size() > 1) s += "; ";
    s += "(\"" + render(t.coeff) + "\", " + std::to_string(t.label) + ")";
  }
  return s + "]";
}

class Script {
 public:
  Script(std::ostream& out, fs::path base) : out_(out), base_(std::move(base)) {}

  void step(const std::vector<std::string>& w) {
    const std::string& cmd = w[0];
    if (cmd == "algebra") {
      arity(w, 2);
      la_ = LieAlgebra::parse(w[1]);
    } else if (cmd == "irrep") {
      arity(w, 3);
      const LieAlgebra& la = algebra();
      HighestWeight hw = parse_labels(w[2], la.rank());
      try {
        define(w[1], std::make_shared<const Irrep>(la, hw));
      } catch (const UnsupportedIrrep&) {
        throw UnsupportedIrrep(unsupported_message(la, hw));
      }
    } else if (cmd == "import") {
      arity(w, 3);
      auto r = std::make_shared<const Irrep>(load_irrep(base_ / w[2]));
      if (la_ && !(r->algebra() == *la_)) throw std::invalid_argument("irrep of another algebra");
      if (!la_) la_ = r->algebra();
      define(w[1], std::move(r));
    } else if (cmd == "wrap") {
      arity(w, 3);
      define(w[1], TensorNode::wrap(get<std::shared_ptr<const Irrep>>(w[2])));
    } else if (cmd == "otimes") {
      arity(w, 5);
      define(w[1], get<TensorNode>(w[2]).otimes(get<TensorNode>(w[3]), to_int(w[4], "irrep index")));
    } else if (cmd == "vector") {
      if (w.size() < 3) throw std::invalid_argument("vector needs at least one label:coeff term");
      std::vector<StateVector::Term> terms;
      for (std::size_t i = 2; i < w.size(); ++i) {
        auto c = w[i].find(':');
        if (c == std::string::npos) throw std::invalid_argument("expected label:coeff, got " + w[i]);
        terms.push_back({to_int(std::string_view(w[i]).substr(0, c), "label"),
                         parse_number(std::string_view(w[i]).substr(c + 1))});
      }
      define(w[1], StateVector::from_terms(std::move(terms)));
    } else if (cmd == "vscale") {
      arity(w, 4);
      define(w[1], get<StateVector>(w[2]).scaled(parse_number(w[3])));
    } else if (cmd == "list") {
      if (w.size() < 3) throw std::invalid_argument("list needs items");
      define(w[1], vectors(w, 2, w.size()));
    } else if (cmd == "gram") {
      // gram NAME IRREP ORTHO... / REST...
      auto slash = std::find(w.begin(), w.end(), "/");
      if (w.size() < 4 || slash == w.end()) throw std::invalid_argument("expected gram NAME IRREP ORTHO... / REST...");
      const std::size_t s = static_cast<std::size_t>(slash - w.begin());
      const auto& r = get<std::shared_ptr<const Irrep>>(w[2]);
      define(w[1], gram(*r, vectors(w, 3, s), vectors(w, s + 1, w.size())));
    } else if (cmd == "independent") {
      if (w.size() < 2) throw std::invalid_argument("independent needs items");
      out_ << "independent = " << (linearly_dependent<StateLabel>(vectors(w, 1, w.size())) ? "false" : "true")
           << "\n";
    } else if (cmd == "chbasis_list") {
      if (w.size() < 4) throw std::invalid_argument("expected chbasis_list NAME OFFSET ITEMS...");
      define(w[1], chbasis_list(vectors(w, 3, w.size()), to_int(w[2], "offset")));
    } else if (cmd == "filter") {
      if (w.size() < 5) throw std::invalid_argument("expected filter NAME NODE FACTOR LABELS...");
      std::vector<int> keep;
      for (std::size_t i = 4; i < w.size(); ++i) keep.push_back(to_int(w[i], "label"));
      define(w[1], get<TensorNode>(w[2]).filter(to_int(w[3], "factor"), keep));
    } else if (cmd == "chbasis") {
      arity(w, 5);
      define(w[1], get<TensorNode>(w[2]).chbasis(to_int(w[3], "factor"), get<Trafo>(w[4])));
    } else if (cmd == "scale") {
      arity(w, 4);
      define(w[1], get<TensorNode>(w[2]).scale(parse_number(w[3])));
    } else if (cmd == "lower") {
      arity(w, 4);
      const auto& r = get<std::shared_ptr<const Irrep>>(w[1]);
      const int root = to_int(w[2], "root");
      out_ << "lower " << w[1] << " " << root << " " << w[3] << " = "
           << render_vector(e_lower(r, root - 1)(get<StateVector>(w[3]))) << "\n";
    } else if (cmd == "scp") {
      arity(w, 4);
      out_ << "scp " << w[2] << " " << w[3] << " = "
           << render(scp(*get<std::shared_ptr<const Irrep>>(w[1]), get<StateVector>(w[2]),
                         get<StateVector>(w[3])))
           << "\n";
    } else if (cmd == "is_sym") {
      arity(w, 4);
      out_ << "is_sym " << w[1] << " " << w[2] << " " << w[3] << " = "
           << get<TensorNode>(w[1]).is_sym(to_int(w[2], "factor"), to_int(w[3], "factor")) << "\n";
    } else if (cmd == "dims") {
      arity(w, 2);
      const auto& t = get<TensorNode>(w[1]);
      out_ << w[1] << ": " << format_weight_trailing(t.irrep().highest_weight()) << t.irrep().dim() << "\n";
    } else if (cmd == "print") {
      arity(w, 2);
      for (const auto& [l, terms] : get<TensorNode>(w[1]).untree()) {
        out_ << w[1] << " " << l << ": [";
        for (std::size_t i = 0; i < terms.size(); ++i)
          out_ << (i ? "; " : "") << "(\"" << render(terms[i].first) << "\", \"" << terms[i].second << "\")";
        out_ << "]\n";
      }
    } else {
      throw std::invalid_argument("unknown command '" + cmd + "'");
    }
  }

 private:
  static void arity(const std::vector<std::string>& w, std::size_t n) {
    if (w.size() != n)
      throw std::invalid_argument(w[0] + " takes " + std::to_string(n - 1) + " arguments");
  }

  const LieAlgebra& algebra() const {
    if (!la_) throw std::invalid_argument("no algebra declared");
    return *la_;
  }

  void define(const std::string& name, Value v) { env_.insert_or_assign(name, std::move(v)); }

  template <class T>
  const T& get(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end()) throw std::invalid_argument("undefined name '" + name + "'");
    if (const T* p = std::get_if<T>(&it->second)) return *p;
    throw std::invalid_argument("'" + name + "' has the wrong kind");
  }

  // vector and list names, lists spliced in
  VectorList vectors(const std::vector<std::string>& w, std::size_t from, std::size_t to) const {
    VectorList out;
    for (std::size_t i = from; i < to; ++i) {
      auto it = env_.find(w[i]);
      if (it == env_.end()) throw std::invalid_argument("undefined name '" + w[i] + "'");
      if (const auto* v = std::get_if<StateVector>(&it->second)) out.push_back(*v);
      else if (const auto* l = std::get_if<VectorList>(&it->second)) out.insert(out.end(), l->begin(), l->end());
      else throw std::invalid_argument("'" + w[i] + "' is not a vector or list");
    }
    return out;
  }

  std::ostream& out_;
  fs::path base_;
  std::optional<LieAlgebra> la_;
  std::map<std::string, Value> env_;
};

}  // namespace

void run_script(std::istream& in, std::ostream& out, const fs::path& base_dir) {
  Script s(out, base_dir);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream is(line);
    std::vector<std::string> words;
    for (std::string t; is >> t;) words.push_back(t);
    if (words.empty()) continue;
    const std::string step = words[0] + (words.size() > 1 ? " " + words[1] : "");
    try {
      s.step(words);
    } catch (const InconsistencyError& e) {
      throw InconsistencyError("line " + std::to_string(n) + " (" + step + "): " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ScriptError(n, step, e.what());
    } catch (const std::domain_error& e) {
      throw ScriptError(n, step, e.what());
    } catch (const SingularMatrix& e) {
      throw ScriptError(n, step, e.what());
    }
  }
}

}  // namespace liecg::cli

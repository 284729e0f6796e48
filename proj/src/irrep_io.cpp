#include "liecg/irrep_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liecg/errors.hpp"

namespace liecg {

using nlohmann::json;

std::string irrep_to_json(const LieAlgebra& la, const ImportedIrrepData& data) {
  json j;
  j["format"] = "liecg-irrep";
  j["version"] = 1;
  j["algebra"] = la.code();
  j["highest_weight"] = data.hw;
  json states = json::array();
  for (std::size_t l = 0; l < data.kets.size(); ++l) {
    const Ket& k = data.kets[l];
    states.push_back({{"label", l + 1}, {"weight", k.dynkin}, {"deg", k.deg_index}, {"level", k.level}});
  }
  j["states"] = std::move(states);
  json low = json::array();
  for (std::size_t l = 0; l < data.lowering.size(); ++l)
    for (std::size_t i = 0; i < data.lowering[l].size(); ++i) {
      const auto& v = data.lowering[l][i];
      if (v.is_zero()) continue;
      json img = json::array();
      for (const auto& t : v.terms()) img.push_back({t.label, render(t.coeff)});
      low.push_back({{"state", l + 1}, {"root", i + 1}, {"image", std::move(img)}});
    }
  j["lowering"] = std::move(low);
  json scp = json::array();
  for (const auto& [ab, v] : data.scp)
    if (!v.is_zero() && ab.first != ab.second)
      scp.push_back({{"a", ab.first}, {"b", ab.second}, {"value", render(v)}});
  j["scalar_products"] = std::move(scp);
  return j.dump(1);
}

std::pair<LieAlgebra, ImportedIrrepData> irrep_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "liecg-irrep")
      throw InvalidImport("not an irrep file");
    LieAlgebra la = LieAlgebra::parse(j.at("algebra").get<std::string>());
    ImportedIrrepData d;
    d.hw = j.at("highest_weight").get<Weight>();
    const auto& states = j.at("states");
    for (std::size_t l = 0; l < states.size(); ++l) {
      const auto& s = states[l];
      if (s.at("label").get<std::size_t>() != l + 1)
        throw InvalidImport("state labels must be 1..dim in order");
      d.kets.push_back({s.at("weight").get<Weight>(), s.at("deg").get<int>(), s.at("level").get<int>()});
    }
    d.lowering.assign(d.kets.size(), std::vector<StateVector>(la.rank()));
    for (const auto& e : j.at("lowering")) {
      auto l = e.at("state").get<std::size_t>();
      auto i = e.at("root").get<std::size_t>();
      if (l < 1 || l > d.kets.size() || i < 1 || i > static_cast<std::size_t>(la.rank()))
        throw InvalidImport("lowering entry out of range");
      std::vector<StateVector::Term> terms;
      for (const auto& t : e.at("image"))
        terms.push_back({t.at(0).get<int>(), parse_number(t.at(1).get<std::string>())});
      d.lowering[l - 1][i - 1] = StateVector::from_terms(std::move(terms));
    }
    for (const auto& e : j.at("scalar_products"))
      d.scp[{e.at("a").get<int>(), e.at("b").get<int>()}] =
          parse_number(e.at("value").get<std::string>());
    return {la, std::move(d)};
  } catch (const json::exception& e) {
    throw InvalidImport(std::string("malformed irrep file: ") + e.what());
  } catch (const InvalidImport&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidImport(std::string("malformed irrep file: ") + e.what());
  }
}

void save_irrep(const std::filesystem::path& file, const LieAlgebra& la,
                const ImportedIrrepData& data) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << irrep_to_json(la, data) << '\n';
}

Irrep load_irrep(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidImport("cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto [la, d] = irrep_from_json(ss.str());
  return Irrep(la, d);
}

}  // namespace liecg

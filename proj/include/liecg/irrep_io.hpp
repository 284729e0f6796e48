#pragma once

// JSON form of ImportedIrrepData. Schema (roots 1-based, numbers in the
// plain exactnum grammar):
//
//   { "format": "liecg-irrep", "version": 1, "algebra": "E6",
//     "highest_weight": [1,0,0,0,1,0],
//     "states":   [ {"label": 1, "weight": [...], "deg": 1, "level": 0}, ... ],
//     "lowering": [ {"state": 1, "root": 2, "image": [[label, "coeff"], ...]}, ... ],
//     "scalar_products": [ {"a": 4, "b": 5, "value": "1/2"}, ... ] }
//
// Lowering entries that are zero and scalar products that are zero or
// diagonal are omitted.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

#include "liecg/irrep.hpp"

namespace liecg {

std::string irrep_to_json(const LieAlgebra& la, const ImportedIrrepData& data);
/// Throws InvalidImport on malformed text.
std::pair<LieAlgebra, ImportedIrrepData> irrep_from_json(std::string_view text);

void save_irrep(const std::filesystem::path& file, const LieAlgebra& la,
                const ImportedIrrepData& data);
/// Reads and builds the irrep; throws InvalidImport.
Irrep load_irrep(const std::filesystem::path& file);

}  // namespace liecg

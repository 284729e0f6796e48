#pragma once

// Command-line front end: weight listings, two-factor decompositions with
// coefficient dumps, and batch scripts for multiple tensor products.
//
// Exit codes: 0 ok, 1 user error, 2 internal inconsistency.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecg/liealg.hpp"
#include "liecg/tensor.hpp"

namespace liecg::cli {

enum class Mode { weights, decompose, multi, help };
enum class OutputFormat { plain, tex, mathematica, json };

struct CliRequest {
  std::optional<LieAlgebra> algebra;
  std::vector<HighestWeight> reps;  // one for weights, two for decompose
  Mode mode = Mode::weights;
  OutputFormat format = OutputFormat::plain;
  std::optional<std::filesystem::path> dump_dir;
  bool dump_singlet = false;
  std::vector<std::filesystem::path> imports;
  std::filesystem::path script;
};

/// Bad command line, bad input file or unsupported request.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError.
CliRequest parse_args(const std::vector<std::string>& args);

/// "11", "1,1" or "(1,1,)" into {1,1}. Digit strings need one digit per
/// label. Throws UsageError unless the length is rank.
HighestWeight parse_labels(std::string_view text, int rank);

/// -su n, -so n, -sp n, -d n (rank), -e6 ... ; throws UsageError.
LieAlgebra algebra_from_flag(std::string_view flag, std::string_view arg);

/// Runs the request; messages for errors go to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_weights(const CliRequest& req, std::ostream& out);
int run_decompose(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_multi(const CliRequest& req, std::ostream& out);

/// Header plus one line per state: "idx, Lev:l, Deg:d  (dynkin),l0  (descent)".
/// idx advances by the degeneracy of each weight.
std::string weight_listing(const LieAlgebra& la, const HighestWeight& hw,
                           const std::vector<WeightRecord>& records);

// ------------------------------------------------------------- json

struct WeightListing {
  LieAlgebra algebra;
  HighestWeight hw;
  std::vector<WeightRecord> records;
};
std::string weights_to_json(const LieAlgebra& la, const HighestWeight& hw,
                            const std::vector<WeightRecord>& records);
/// Throws InvalidImport.
WeightListing weights_from_json(std::string_view text);

struct CoefficientTable {
  LieAlgebra algebra;
  HighestWeight left, right;
  std::vector<ProductIrrep> irreps;
};
/// Product states with ket labels of both factors.
std::string coefficients_to_json(const Decomposition& d, const std::vector<const ProductIrrep*>& ps);
/// Throws InvalidImport.
CoefficientTable coefficients_from_json(std::string_view text);

// ------------------------------------------------------------- scripts

/// Script failure; line 0 means the file itself.
struct ScriptError : std::invalid_argument {
  ScriptError(int line, const std::string& step, const std::string& what);
  int line;
};

/// Executes a script (grammar in README.md). Files named in import steps
/// are resolved against base_dir. Throws ScriptError.
void run_script(std::istream& in, std::ostream& out,
                const std::filesystem::path& base_dir = ".");

}  // namespace liecg::cli

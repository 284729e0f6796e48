#pragma once

#include <stdexcept>
#include <string>

namespace liecg {

/// Linear system without solution.
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Irrep that has neither generic lowering rules nor imported data.
struct UnsupportedIrrep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidImport : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency violated (wrong root data, inconsistent lowering,
/// dimension mismatch). Indicates a bug or corrupt input, never user error.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DecompositionFailure : InconsistencyError {
  using InconsistencyError::InconsistencyError;
};

}  // namespace liecg

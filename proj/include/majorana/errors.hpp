#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

/// Invalid model/experiment configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical contract was violated, e.g. non-Hermitian input where Hermitian
/// is required, or broken spectral pairing (CLI exit code 3).
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure that contradicts a proved property, e.g. a
/// kernel dimension below 2 (CLI exit code 4).
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace majorana

#pragma once

#include <stdexcept>
#include <string>

namespace corrclust {

/// Malformed or inconsistent input data (CSV parse failures, non-finite
/// entries, mismatched row keys). Maps to CLI exit code 3.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid problem that cannot be solved as posed (too few rows
/// for the requested cluster sizes, all restarts failed). Maps to CLI exit
/// code 4. Invalid configuration values throw std::invalid_argument instead
/// and map to exit code 2.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace corrclust

#pragma once

#include <stdexcept>
#include <string>

namespace shearlf {

// Error classes map to CLI exit codes: ConfigError -> 2, DataError -> 3,
// NumericError -> 4. Library-level contract violations throw
// std::invalid_argument / std::out_of_range and are reported as config errors.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Smallest multiple of m that is >= v.
inline int round_up(int v, int m) { return ((v + m - 1) / m) * m; }

}  // namespace shearlf

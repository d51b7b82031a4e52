#pragma once

#include <stdexcept>
#include <string>

namespace partfn {

// invalid parameters / malformed input
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// input exceeds a size guard; lift with PARTFN_CAPACITY
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& m) : std::runtime_error(m) {}
};

// reads PARTFN_CAPACITY once; 0 when unset
int capacity_override();

}  // namespace partfn

#pragma once

#include <stdexcept>

namespace diraclab {

/** Raised when two routes that must agree disagree, or when a quantity the
 *  theory guarantees fails to show up numerically.  Callers should treat it
 *  as a bug in the library or its inputs, not as a recoverable condition. */
class internal_inconsistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diraclab

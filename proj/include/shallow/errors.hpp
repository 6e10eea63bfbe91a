#pragma once

#include <stdexcept>
#include <string>

namespace shallow {

// Raised for bad inputs and failed preconditions (out-of-range endpoints,
// nonplanar input where a planar one is required, invalid decompositions).
// The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rotation system does not describe a valid orientable embedding.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// Oracle called on an instance larger than its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace shallow

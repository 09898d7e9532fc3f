#pragma once

#include <stdexcept>
#include <string>

namespace hetsim {

enum class ErrorCategory {
  Config,       // invalid specification or configuration field
  Shape,        // dimension mismatch between tensors/vectors
  Numeric,      // NaN/Inf or otherwise unusable numeric result
  Constraint,   // batch-plan constraint could not be satisfied
  Infeasible,   // requested allocation has no valid solution
  Io,           // file read/write failure
};

class HetsimError : public std::runtime_error {
 public:
  HetsimError(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class ConfigError : public HetsimError {
 public:
  explicit ConfigError(const std::string& msg)
      : HetsimError(ErrorCategory::Config, msg) {}
};

class ShapeError : public HetsimError {
 public:
  explicit ShapeError(const std::string& msg)
      : HetsimError(ErrorCategory::Shape, msg) {}
};

class NumericError : public HetsimError {
 public:
  explicit NumericError(const std::string& msg)
      : HetsimError(ErrorCategory::Numeric, msg) {}
};

class InfeasibleError : public HetsimError {
 public:
  explicit InfeasibleError(const std::string& msg)
      : HetsimError(ErrorCategory::Infeasible, msg) {}
};

class IoError : public HetsimError {
 public:
  explicit IoError(const std::string& msg)
      : HetsimError(ErrorCategory::Io, msg) {}
};

inline const char* category_name(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Config:     return "config";
    case ErrorCategory::Shape:      return "shape";
    case ErrorCategory::Numeric:    return "numeric";
    case ErrorCategory::Constraint: return "constraint";
    case ErrorCategory::Infeasible: return "infeasible";
    case ErrorCategory::Io:         return "io";
  }
  return "unknown";
}

}  // namespace hetsim

#ifndef FAIRFLOW_ERRORS_H_
#define FAIRFLOW_ERRORS_H_

#include <stdexcept>
#include <string>

#include "fairflow/ext_int.h"

namespace fairflow {

// Malformed or out-of-contract input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The base-flow polyhedron is empty. Carries the violating set.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::uint32_t violator,
                  ExtInt deficit)
      : std::runtime_error(what), violator_(violator), deficit_(deficit) {}

  std::uint32_t violator() const { return violator_; }
  ExtInt deficit() const { return deficit_; }

 private:
  std::uint32_t violator_;
  ExtInt deficit_;
};

// An enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal certificate equality failed. Always an engine bug.
class CertificateMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairflow

#endif  // FAIRFLOW_ERRORS_H_

#pragma once

#include <stdexcept>
#include <string>

namespace exactpot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma-function pole, or a hypergeometric denominator (gamma)_k hitting zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested on [1, inf) without opting into the principal branch,
// or at z = 1 where the hypergeometric limit diverges.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// z too close to a singular point {0, 1} of the hypergeometric equation.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace exactpot

#pragma once

#include <stdexcept>
#include <string>

namespace fusionlim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

/// A diagram or functor fails a functoriality law; the message names the
/// offending composable pair.
class FunctorialityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusionlim

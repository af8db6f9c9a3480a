#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a map (e.g. x not in [0,1]).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A model parameter is outside the range where the construction is valid.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A root-finding bracket does not enclose a sign change.
class BracketError : public Error {
public:
  using Error::Error;
};

/// File could not be written or read.
class IoError : public Error {
public:
  using Error::Error;
};

/// Command-line or configuration problem; maps to exit status 2.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace cascade

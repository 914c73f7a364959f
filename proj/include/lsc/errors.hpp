#pragma once

#include <stdexcept>
#include <string>

namespace lsc {

// Root of the library's error hierarchy. Everything thrown on purpose
// derives from Error, so CLI boundaries can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol fell outside the active alphabet (encoders).
class InvalidSymbolError : public Error {
 public:
  using Error::Error;
};

// A window is empty or not a power of two (tree construction, plans).
class InvalidWindowError : public Error {
 public:
  using Error::Error;
};

// Serialized data (LZW index stream, packed bit file, bracketed string)
// is not something a conforming writer could have produced.
class CorruptStreamError : public Error {
 public:
  using Error::Error;
};

// An argument is outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. These checks stay on in release builds:
// the solver's correctness argument depends on them.
class LogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsc

#define LSC_CHECK(cond, msg)          \
  do {                                \
    if (!(cond)) {                    \
      throw ::lsc::LogicError(msg);   \
    }                                 \
  } while (0)

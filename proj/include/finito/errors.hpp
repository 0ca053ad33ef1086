#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finito {

// Base of every error thrown by the library. Callers that only need to tell
// "bad input" apart from bugs can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyError : public Error {
 public:
  EmptyError() : Error("the empty space is not a valid finite space") {}
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class NotPartialOrderError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  using Error::Error;
};

class LastPointError : public Error {
 public:
  LastPointError() : Error("cannot remove the only point of a space") {}
};

class NotT0Error : public Error {
 public:
  using Error::Error;
};

class NotContinuousError : public Error {
 public:
  NotContinuousError(std::size_t lower, std::size_t upper, std::string what)
      : Error(std::move(what)), lower_(lower), upper_(upper) {}
  // Violating pair: lower <= upper in the source but the images are not ordered.
  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

class IllFormedPathError : public Error {
 public:
  using Error::Error;
};

class IllFormedMoveError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace finito

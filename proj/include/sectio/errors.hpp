#pragma once

#include <stdexcept>
#include <string>

namespace sectio {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class CodomainMismatch : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class KernelNotAbelian : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Parse failure for the expression grammars; carries the byte offset of the
// offending token and a description of what would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at offset " + std::to_string(offset) +
              ": expected " + expected),
        offset(offset),
        expected(std::move(expected)) {}

  std::size_t offset;
  std::string expected;
};

// A syntactically valid spec that does not elaborate to a real object
// (non-normal generator set in a quotient, images that are not a hom, ...).
class ElaborationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sectio

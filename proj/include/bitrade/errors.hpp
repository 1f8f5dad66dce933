#pragma once

#include <stdexcept>
#include <string>

namespace bitrade {

class BitradeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An (R1)-(R3) witness is missing or duplicated.
class NotABitrade : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

// A row, column or symbol of a trade pair induces more than one cycle.
class NotSeparated : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class NonIntegralGenus : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class InvalidSite : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class NoParent : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class InvalidSize : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class BoundExceeded : public BitradeError {
 public:
  using BitradeError::BitradeError;
};

class ParseError : public BitradeError {
 public:
  ParseError(int line, int column, const std::string& what)
      : BitradeError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bitrade

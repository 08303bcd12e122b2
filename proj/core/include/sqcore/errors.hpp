#pragma once

#include <stdexcept>
#include <string>

namespace sqcore {

enum class ErrorKind {
  kLetterOutOfRange,
  kRankMismatch,
  kNotABasis,
  kNotTrivalent,
  kWrongCellCounts,
  kNotSpanning,
  kInvalidCell,
  kHypothesisViolated,
  kInternalBoundExceeded,
  kDegreeOutOfRange,
  kInvalidLink,
  kHyperplaneNotTree,
  kComplementNotThreeHoled,
  kIncidence,
  kNotStandardForm,
  kParse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sqcore

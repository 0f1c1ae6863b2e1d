#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goedel {

// Base of every error the library raises on purpose. kind() is the stable
// name used by the CLI and the report.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GOEDEL_ERROR(Name)                                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

GOEDEL_ERROR(ArityMismatch)
GOEDEL_ERROR(NotAVariable)
GOEDEL_ERROR(NotAFormula)
GOEDEL_ERROR(NotATerm)
GOEDEL_ERROR(NotClosed)
GOEDEL_ERROR(NotASentence)
GOEDEL_ERROR(IllFormedPayload)
GOEDEL_ERROR(NotInPairImage)
GOEDEL_ERROR(NotInImage)
GOEDEL_ERROR(NotMonotoneH)
GOEDEL_ERROR(OracleIncomplete)
GOEDEL_ERROR(UnsupportedShape)
GOEDEL_ERROR(NotTermLayer)
GOEDEL_ERROR(CodeTooLarge)
GOEDEL_ERROR(MissingSyntacticForm)
GOEDEL_ERROR(MissingPsi)
GOEDEL_ERROR(NotEquivalent)
GOEDEL_ERROR(FixedPointOutsideFragment)
GOEDEL_ERROR(UnknownName)
GOEDEL_ERROR(IoError)

#undef GOEDEL_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("SyntaxError", what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class CorpusParseError : public Error {
 public:
  CorpusParseError(const std::string& what, std::size_t line)
      : Error("CorpusParseError", "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace goedel

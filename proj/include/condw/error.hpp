#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "condw/conditional_set.hpp"

namespace condw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or knowledge-base text. `offset` is a 0-based byte
/// offset into the text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& symbol, std::size_t offset)
      : ParseError("unknown variable '" + symbol + "'", offset), symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Invalid signature: empty, duplicate or reserved names, or too many
/// variables to enumerate.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Raised when a knowledge base has no tolerance partition. `residue` holds
/// the conditionals none of which is tolerated by the rest of the residue.
class InconsistentKnowledgeBase : public Error {
 public:
  explicit InconsistentKnowledgeBase(ConditionalSet residue)
      : Error("knowledge base is inconsistent"), residue_(residue) {}

  ConditionalSet residue() const { return residue_; }

 private:
  ConditionalSet residue_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
      : Error("enumeration of " + (candidates == UINT64_MAX ? std::string(">2^64") : std::to_string(candidates)) +
              " impact vectors exceeds budget " + std::to_string(budget)),
        candidates_(candidates),
        budget_(budget) {}

  std::uint64_t candidates() const { return candidates_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace condw

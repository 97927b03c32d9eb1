#pragma once

// Line-oriented knowledge-base files:
//
//   # birds
//   signature: p, b, f
//   (f | b)
//   (!f | p)
//   query flying_birds: (!p | b & f)
//
// A conditional is `(B | A)` with exactly one top-level `|`; disjunctions
// inside B or A must be parenthesized. `#` starts a comment.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "condw/compare.hpp"
#include "condw/error.hpp"
#include "condw/knowledge_base.hpp"

namespace condw {

/// Parse failure in a document; line and column are 1-based.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct KbDocument {
  Alphabet signature;
  std::vector<ConditionalDecl> conditionals;
  std::vector<NamedQuery> queries;

  KnowledgeBase knowledge_base() const;
};

KbDocument parse_kb_document(std::string_view text);

/// Query lines are `query NAME: (B | A)`, `NAME: (B | A)` or a bare
/// `(B | A)`, which is named `qN` after its position.
std::vector<NamedQuery> parse_queries(std::string_view text, const Alphabet& alphabet);

/// Parses `(B | A)`; offsets in errors are relative to `text`.
ConditionalDecl parse_conditional(std::string_view text, const Alphabet& alphabet);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace condw

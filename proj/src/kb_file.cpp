#include "condw/kb_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace condw {

namespace {

struct Line {
  std::size_t number;
  std::size_t indent;  // offset of `text` within the raw line
  std::string_view text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Strips comments and surrounding whitespace.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t b = 0;
    while (b < raw.size() && is_space(raw[b])) ++b;
    std::size_t e = raw.size();
    while (e > b && is_space(raw[e - 1])) --e;
    if (e > b) out.push_back(Line{number, b, raw.substr(b, e - b)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Formula parse_part(std::string_view text, std::size_t offset, const Alphabet& alphabet) {
  try {
    return parse_formula(text, alphabet);
  } catch (const UnknownSymbolError& e) {
    throw UnknownSymbolError(e.symbol(), offset + e.offset());
  } catch (const ParseError& e) {
    std::string message = e.what();
    message = message.substr(0, message.rfind(" at offset"));
    throw ParseError(message, offset + e.offset());
  }
}

// Runs `f`, translating offsets in formula errors to line/column.
template <typename F>
auto at_line(const Line& line, std::size_t column_base, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    std::string message = e.what();
    message = message.substr(0, message.rfind(" at offset"));
    throw DocumentError(message, line.number, line.indent + column_base + e.offset() + 1);
  }
}

std::optional<std::string_view> strip_prefix(std::string_view s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
  return s.substr(prefix.size());
}

NamedQuery parse_query_line(const Line& line, std::string_view body, std::size_t body_offset, std::string default_name,
                            const Alphabet& alphabet) {
  std::string name = std::move(default_name);
  if (!body.empty() && body.front() != '(') {
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) throw DocumentError("expected 'NAME: (B | A)'", line.number, line.indent + body_offset + 1);
    std::size_t name_offset = body_offset;
    name = std::string(trim(body.substr(0, colon), name_offset));
    if (name.empty()) throw DocumentError("empty query name", line.number, line.indent + body_offset + 1);
    body_offset += colon + 1;
    body = trim(body.substr(colon + 1), body_offset);
  }
  ConditionalDecl decl = at_line(line, body_offset, [&] { return parse_conditional(body, alphabet); });
  return NamedQuery{std::move(name), std::move(decl.antecedent), std::move(decl.consequent)};
}

}  // namespace

ConditionalDecl parse_conditional(std::string_view text, const Alphabet& alphabet) {
  if (text.empty() || text.front() != '(') throw ParseError("expected '(' opening a conditional", 0);
  if (text.back() != ')') throw ParseError("expected ')' closing the conditional", text.size());
  int depth = 0;
  std::vector<std::size_t> bars;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) throw ParseError("unbalanced ')'", i);
    if (text[i] == '|' && depth == 0) bars.push_back(i);
  }
  if (depth != 0) throw ParseError("unbalanced '('", text.size() - 1);
  if (bars.empty()) throw ParseError("conditional needs a '|' between consequent and antecedent", 1);
  if (bars.size() > 1) throw ParseError("ambiguous conditional: parenthesize disjunctions", bars[1]);

  std::size_t c_off = 1;
  const std::string_view consequent = trim(text.substr(1, bars[0] - 1), c_off);
  std::size_t a_off = bars[0] + 1;
  const std::string_view antecedent = trim(text.substr(bars[0] + 1, text.size() - bars[0] - 2), a_off);
  return ConditionalDecl{parse_part(consequent, c_off, alphabet), parse_part(antecedent, a_off, alphabet)};
}

KnowledgeBase KbDocument::knowledge_base() const { return KnowledgeBase(signature, conditionals); }

KbDocument parse_kb_document(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DocumentError("missing 'signature:' line", 1, 1);
  const Line& first = lines.front();
  auto decl = strip_prefix(first.text, "signature:");
  if (!decl) throw DocumentError("expected 'signature:' before anything else", first.number, first.indent + 1);

  std::vector<std::string> symbols;
  std::size_t pos = 0;
  const std::string_view list = *decl;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::size_t offset = pos;
    const std::string_view name = trim(list.substr(pos, comma - pos), offset);
    if (name.empty()) {
      throw DocumentError("empty variable name", first.number, first.indent + 10 + offset + 1);
    }
    symbols.emplace_back(name);
    pos = comma + 1;
  }
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(std::move(symbols));
  } catch (const AlphabetError& e) {
    throw DocumentError(e.what(), first.number, first.indent + 1);
  }

  std::vector<ConditionalDecl> conditionals;
  std::vector<NamedQuery> queries;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto rest = strip_prefix(line.text, "query");
    if (rest && (rest->empty() || is_space(rest->front()))) {
      std::size_t offset = 5;
      const std::string_view body = trim(*rest, offset);
      queries.push_back(parse_query_line(line, body, offset, "q" + std::to_string(queries.size() + 1), *alphabet));
      continue;
    }
    ConditionalDecl c = at_line(line, 0, [&] { return parse_conditional(line.text, *alphabet); });
    if (worlds_of(c.antecedent, *alphabet).empty()) {
      throw DocumentError("conditional has an unsatisfiable antecedent", line.number, line.indent + 1);
    }
    conditionals.push_back(std::move(c));
  }
  if (conditionals.size() > kMaxConditionals) {
    throw DocumentError("too many conditionals (limit " + std::to_string(kMaxConditionals) + ")", lines.back().number, 1);
  }
  return KbDocument{std::move(*alphabet), std::move(conditionals), std::move(queries)};
}

std::vector<NamedQuery> parse_queries(std::string_view text, const Alphabet& alphabet) {
  std::vector<NamedQuery> out;
  for (const Line& line : split_lines(text)) {
    std::string_view body = line.text;
    std::size_t offset = 0;
    if (const auto rest = strip_prefix(body, "query"); rest && !rest->empty() && is_space(rest->front())) {
      offset = 5;
      body = trim(*rest, offset);
    }
    out.push_back(parse_query_line(line, body, offset, "q" + std::to_string(out.size() + 1), alphabet));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace condw

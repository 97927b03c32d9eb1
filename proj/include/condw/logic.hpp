#pragma once

// Propositional substrate: signatures, worlds, world sets and formulas.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace condw {

inline constexpr std::size_t kDefaultMaxVariables = 20;
inline constexpr std::size_t kHardMaxVariables = 30;

/// Ordered propositional signature.
class Alphabet {
 public:
  /// Throws AlphabetError on an empty list, duplicate or malformed names, the
  /// reserved words `true`/`false`, or more than `max_variables` symbols.
  explicit Alphabet(std::vector<std::string> symbols, std::size_t max_variables = kDefaultMaxVariables);

  std::size_t size() const { return symbols_.size(); }
  std::uint64_t world_count() const { return std::uint64_t{1} << symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

/// A complete truth assignment. Bit i is the value of symbol i, so worlds
/// enumerate in ascending order with symbol 0 as the least significant bit.
class World {
 public:
  constexpr World() = default;
  constexpr explicit World(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t index() const { return bits_; }
  constexpr bool holds(std::size_t variable) const { return (bits_ >> variable) & 1U; }

  friend constexpr auto operator<=>(World, World) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Literal rendering such as `p !b f`, in signature order.
std::string world_label(const Alphabet& alphabet, World w);

/// Subset of the 2^m worlds of an alphabet, stored as a characteristic
/// bit vector.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t variables);

  static WorldSet none(std::size_t variables) { return WorldSet(variables); }
  static WorldSet all(std::size_t variables);

  std::size_t variables() const { return variables_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << variables_; }

  bool contains(World w) const { return (words_[w.index() >> 6] >> (w.index() & 63)) & 1U; }
  void insert(World w) { words_[w.index() >> 6] |= std::uint64_t{1} << (w.index() & 63); }
  void erase(World w) { words_[w.index() >> 6] &= ~(std::uint64_t{1} << (w.index() & 63)); }

  std::uint64_t count() const;
  bool empty() const;
  std::optional<World> first() const;
  bool intersects(const WorldSet& other) const;
  bool is_subset_of(const WorldSet& other) const;

  WorldSet complement() const;
  WorldSet& operator&=(const WorldSet& other);
  WorldSet& operator|=(const WorldSet& other);
  WorldSet& operator-=(const WorldSet& other);
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }
  friend bool operator==(const WorldSet&, const WorldSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Calls `f(World)` for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t rest = words_[k]; rest != 0; rest &= rest - 1) {
        f(World(static_cast<std::uint32_t>(k * 64 + std::countr_zero(rest))));
      }
    }
  }

  std::vector<World> to_vector() const;

 private:
  void mask_tail();

  std::size_t variables_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Propositional formula over variable indices of some alphabet. And/Or
/// nodes are n-ary.
class Formula {
 public:
  enum class Kind { Top, Bot, Var, Not, And, Or };

  static Formula top();
  static Formula bot();
  static Formula var(std::size_t index);
  static Formula negation(Formula child);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);

  Kind kind() const { return kind_; }
  std::size_t variable() const { return variable_; }
  std::span<const Formula> children() const { return children_; }

  /// Largest variable index used plus one; 0 for closed formulas.
  std::size_t arity() const;

  bool eval(World w) const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Kind kind, std::size_t variable, std::vector<Formula> children)
      : kind_(kind), variable_(variable), children_(std::move(children)) {}

  Kind kind_ = Kind::Top;
  std::size_t variable_ = 0;
  std::vector<Formula> children_;
};

/// Parses the ASCII formula grammar (`!`, `&`, `|`, `true`, `false`,
/// parentheses; `!` binds tightest, then `&`, then `|`). Throws ParseError
/// with the offending offset, or UnknownSymbolError.
Formula parse_formula(std::string_view text, const Alphabet& alphabet);

/// Prints with the minimal parentheses needed to parse back to the same tree.
std::string to_string(const Formula& f, const Alphabet& alphabet);

/// Ω_A: every world of `alphabet` satisfying `f`.
WorldSet worlds_of(const Formula& f, const Alphabet& alphabet);

bool is_contradiction(const Formula& f, const Alphabet& alphabet);

}  // namespace condw

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace condw {

/// Maximum number of conditionals in a knowledge base; sets of conditionals
/// are single machine words.
inline constexpr std::size_t kMaxConditionals = 64;

/// A set of conditionals identified by their 0-based position in a
/// knowledge base.
class ConditionalSet {
 public:
  constexpr ConditionalSet() = default;

  static constexpr ConditionalSet from_bits(std::uint64_t bits) {
    ConditionalSet s;
    s.bits_ = bits;
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr ConditionalSet first(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr ConditionalSet single(std::size_t i) { return from_bits(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool is_subset_of(ConditionalSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(ConditionalSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  friend constexpr ConditionalSet operator&(ConditionalSet a, ConditionalSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ConditionalSet operator|(ConditionalSet a, ConditionalSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ConditionalSet operator-(ConditionalSet a, ConditionalSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr ConditionalSet& operator|=(ConditionalSet o) { bits_ |= o.bits_; return *this; }
  constexpr ConditionalSet& operator&=(ConditionalSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ConditionalSet, ConditionalSet) = default;
  friend constexpr auto operator<=>(ConditionalSet a, ConditionalSet b) { return a.bits_ <=> b.bits_; }

  /// Calls `f(i)` for each member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace condw

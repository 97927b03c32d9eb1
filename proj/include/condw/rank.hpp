#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace condw {

/// Degree of implausibility in ℕ₀ ∪ {∞}. Addition saturates at ∞.
class Rank {
 public:
  constexpr Rank() = default;
  constexpr explicit Rank(std::uint64_t value) : value_(value < kInfinity ? value : kInfinity) {}

  static constexpr Rank infinity() { return Rank(kInfinity); }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  /// Finite value; meaningless for ∞.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr Rank operator+(Rank a, Rank b) {
    if (a.is_infinite() || b.is_infinite() || a.value_ > kInfinity - b.value_) return infinity();
    return Rank(a.value_ + b.value_);
  }
  constexpr Rank& operator+=(Rank b) { return *this = *this + b; }

  friend constexpr auto operator<=>(Rank, Rank) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, Rank r) { return os << r.to_string(); }

 private:
  static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

}  // namespace condw

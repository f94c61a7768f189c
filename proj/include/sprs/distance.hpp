#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace sprs {

using Weight = std::uint64_t;

/// A path length that is either a finite exact integer or unreachable.
/// Infinity compares greater than every finite value and absorbs addition.
class Distance {
 public:
  constexpr Distance() noexcept = default;  // infinity
  constexpr explicit Distance(Weight w) noexcept : raw_(w) {}

  static constexpr Distance infinity() noexcept { return Distance(); }

  constexpr bool is_finite() const noexcept { return raw_ != kInfRaw; }
  constexpr bool is_infinite() const noexcept { return raw_ == kInfRaw; }
  constexpr Weight value() const noexcept { return raw_; }

  constexpr Distance operator+(Weight w) const noexcept {
    if (!is_finite()) return *this;
    return Distance(raw_ + w);
  }
  constexpr Distance operator+(Distance d) const noexcept {
    if (!is_finite() || !d.is_finite()) return infinity();
    return Distance(raw_ + d.raw_);
  }

  friend constexpr auto operator<=>(Distance a, Distance b) noexcept = default;
  friend constexpr bool operator==(Distance a, Distance b) noexcept = default;

  std::string str() const { return is_finite() ? std::to_string(raw_) : std::string("inf"); }

 private:
  static constexpr Weight kInfRaw = std::numeric_limits<Weight>::max();
  Weight raw_ = kInfRaw;
};

inline std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.str(); }

}  // namespace sprs

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tough {

/// Non-negative exact rational extended with +infinity.
///
/// Finite values are kept in lowest terms with a positive denominator, so
/// equality is structural. Infinity compares greater than every finite value;
/// it is the toughness of complete graphs.
class ExtendedRational {
 public:
  constexpr ExtendedRational() noexcept = default;

  /// Throws std::invalid_argument for a negative numerator or a non-positive denominator.
  ExtendedRational(std::int64_t num, std::int64_t den = 1);

  static constexpr ExtendedRational infinity() noexcept {
    ExtendedRational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && num_ == 0; }

  /// Only meaningful for finite values.
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// Smallest integer >= the value. Throws std::domain_error for infinity.
  std::int64_t ceil() const;

  /// "p/q", "p" when q == 1, or "inf".
  std::string to_string() const;

  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static ExtendedRational parse(const std::string& text);

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  /// inf * 0 is undefined and throws std::domain_error.
  friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b);

 private:
  bool infinite_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace tough

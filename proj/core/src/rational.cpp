#include "tough/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tough {

namespace {
__extension__ using Wide = __int128;
}  // namespace

ExtendedRational::ExtendedRational(std::int64_t num, std::int64_t den) {
  if (num < 0) throw std::invalid_argument("ExtendedRational: negative numerator");
  if (den <= 0) throw std::invalid_argument("ExtendedRational: denominator must be positive");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t ExtendedRational::ceil() const {
  if (infinite_) throw std::domain_error("ceil of infinity");
  return (num_ + den_ - 1) / den_;
}

std::string ExtendedRational::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtendedRational ExtendedRational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  const auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const long long num = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return ExtendedRational(num);
    }
    const std::string head = text.substr(0, slash);
    const std::string tail = text.substr(slash + 1);
    const long long num = std::stoll(head, &used);
    if (used != head.size()) throw std::invalid_argument(text);
    const long long den = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
    return ExtendedRational(num, den);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return ExtendedRational::infinity();
  const std::int64_t g = std::gcd(a.den_, b.den_);
  return ExtendedRational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("0 * inf is undefined");
    return ExtendedRational::infinity();
  }
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return ExtendedRational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.to_string(); }

}  // namespace tough

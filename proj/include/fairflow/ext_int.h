#ifndef FAIRFLOW_EXT_INT_H_
#define FAIRFLOW_EXT_INT_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fairflow {

// An integer extended with -inf and +inf. Bounds and set-function values live
// here. Infinities absorb under addition; mixing -inf with +inf throws.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the domain

  static constexpr ExtInt NegInf() { return ExtInt(Kind::kNegInf); }
  static constexpr ExtInt PosInf() { return ExtInt(Kind::kPosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Throws std::domain_error when infinite.
  std::int64_t value() const {
    if (!is_finite()) throw std::domain_error("ExtInt::value() on infinite value");
    return value_;
  }

  constexpr ExtInt operator-() const {
    switch (kind_) {
      case Kind::kNegInf: return PosInf();
      case Kind::kPosInf: return NegInf();
      default: return ExtInt(-value_);
    }
  }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ + b.value_);
    if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf())) {
      throw std::domain_error("ExtInt: -inf + +inf is undefined");
    }
    return a.is_finite() ? b : a;
  }
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }
  ExtInt& operator+=(ExtInt o) { return *this = *this + o; }
  ExtInt& operator-=(ExtInt o) { return *this = *this - o; }

  // Scaling by a nonnegative integer; 0 * inf is taken as 0.
  friend ExtInt Scale(std::int64_t k, ExtInt a) {
    if (k < 0) throw std::invalid_argument("ExtInt Scale: negative factor");
    if (k == 0) return ExtInt(0);
    if (!a.is_finite()) return a;
    return ExtInt(k * a.value_);
  }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ == Kind::kFinite) return a.value_ <=> b.value_;
    return std::strong_ordering::equal;
  }

  std::string ToString() const {
    switch (kind_) {
      case Kind::kNegInf: return "-inf";
      case Kind::kPosInf: return "+inf";
      default: return std::to_string(value_);
    }
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    return os << v.ToString();
  }

 private:
  explicit constexpr ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  std::int64_t value_ = 0;
};

inline ExtInt Min(ExtInt a, ExtInt b) { return b < a ? b : a; }
inline ExtInt Max(ExtInt a, ExtInt b) { return a < b ? b : a; }

}  // namespace fairflow

#endif  // FAIRFLOW_EXT_INT_H_

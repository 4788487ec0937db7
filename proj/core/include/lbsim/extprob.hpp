#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "lbsim/errors.hpp"

namespace lbsim {

// Nonnegative real with an extended binary exponent, for probabilities far
// below double range (think 2^-500000).  Value is mant * 2^exp2 with
// mant in [0.5, 1), or exactly zero (mant == 0, exp2 == 0).
//
// Mantissas are doubles and every multiply/square/add/sub rounds once, so the
// relative error per operation is <= 2^-52.  Chained squaring amplifies
// first-order error: after N squarings the natural log of the value carries
// absolute error <= (2^N - 1) * 2^-52.  Comparisons are exact lexicographic
// order on (exp2, mant) and therefore deterministic.
//
// Exponent range: |exp2| <= 2^62.  Results that would fall below -2^62 flush
// to exact zero; results above +2^62 throw CapacityError.
class ExtProb {
 public:
  constexpr ExtProb() = default;

  static ExtProb zero() { return ExtProb(); }
  static ExtProb one() { return normalized(0.5, 1); }

  /// Exact conversion; requires a finite v >= 0.
  static ExtProb from_double(double v) {
    if (!std::isfinite(v) || v < 0.0) throw Error("ExtProb: value must be finite and nonnegative");
    return normalized(v, 0);
  }

  /// Exact 2^e.
  static ExtProb pow2(std::int64_t e) { return normalized(0.5, e + 1); }

  /// Rebuild from serialized (mantissa, exp2); validates normalization.
  static ExtProb from_parts(double mant, std::int64_t exp2) {
    if (mant == 0.0) {
      if (exp2 != 0) throw Error("ExtProb: zero must have exp2 == 0");
      return zero();
    }
    if (!(mant >= 0.5 && mant < 1.0)) throw Error("ExtProb: mantissa out of [0.5, 1)");
    check_range(exp2);
    ExtProb r;
    r.mant_ = mant;
    r.exp2_ = exp2;
    return r;
  }

  /// e^natural_log.  Accurate to ~2^-60 relative for |natural_log| <= 2^31;
  /// -infinity maps to zero.
  static ExtProb from_ln(long double natural_log);

  double mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp2_; }
  bool is_zero() const { return mant_ == 0.0; }
  bool is_one() const { return mant_ == 0.5 && exp2_ == 1; }

  /// Nearest double; underflows to 0 and overflows to +inf silently.
  double to_double() const;

  /// Natural log; -infinity for zero.
  long double ln() const;
  double log10() const;

  /// Scientific decimal rendering, e.g. "1.603811e-28".
  std::string decimal_string(int significant_digits = 6) const;

  ExtProb squared() const { return normalized2(mant_ * mant_, exp2_, exp2_); }

  friend ExtProb operator*(const ExtProb& a, const ExtProb& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return normalized2(a.mant_ * b.mant_, a.exp2_, b.exp2_);
  }

  friend ExtProb operator+(const ExtProb& a, const ExtProb& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ExtProb& hi = (b < a) ? a : b;
    const ExtProb& lo = (b < a) ? b : a;
    std::int64_t diff = hi.exp2_ - lo.exp2_;
    if (diff > 64) return hi;
    return normalized2(hi.mant_ + std::ldexp(lo.mant_, -static_cast<int>(diff)), hi.exp2_, 0);
  }

  /// a - b; throws on a negative result.
  friend ExtProb operator-(const ExtProb& a, const ExtProb& b) {
    if (b.is_zero()) return a;
    if (a < b) throw Error("ExtProb: negative subtraction result");
    if (a == b) return zero();
    std::int64_t diff = a.exp2_ - b.exp2_;
    if (diff > 64) return a;
    return normalized2(a.mant_ - std::ldexp(b.mant_, -static_cast<int>(diff)), a.exp2_, 0);
  }

  /// Exact scaling by 2^s.
  ExtProb scaled_pow2(std::int64_t s) const {
    if (is_zero()) return zero();
    return normalized2(mant_, exp2_, s);
  }

  friend bool operator==(const ExtProb& a, const ExtProb& b) = default;

  friend std::strong_ordering operator<=>(const ExtProb& a, const ExtProb& b) {
    bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return (az ? 0 : 1) <=> (bz ? 0 : 1);
    if (auto c = a.exp2_ <=> b.exp2_; c != 0) return c;
    return a.mant_ < b.mant_   ? std::strong_ordering::less
           : a.mant_ > b.mant_ ? std::strong_ordering::greater
                               : std::strong_ordering::equal;
  }

 private:
  static constexpr std::int64_t kExpLimit = std::int64_t(1) << 62;

  static void check_range(std::int64_t e) {
    if (e > kExpLimit || e < -kExpLimit) throw CapacityError("ExtProb: exponent out of range");
  }

  // Normalize m * 2^(e1 + e2); the split exponent keeps intermediate sums of
  // two in-range exponents away from int64 overflow.
  static ExtProb normalized2(double m, std::int64_t e1, std::int64_t e2) {
    if (m == 0.0) return zero();
    int k = 0;
    m = std::frexp(m, &k);
    // e1, e2 and k are each within +-2^62, so the signed 128-bit sum is exact.
    __int128 e = static_cast<__int128>(e1) + e2 + k;
    if (e < -static_cast<__int128>(kExpLimit)) return zero();
    if (e > static_cast<__int128>(kExpLimit)) throw CapacityError("ExtProb: exponent out of range");
    ExtProb r;
    r.mant_ = m;
    r.exp2_ = static_cast<std::int64_t>(e);
    return r;
  }

  static ExtProb normalized(double m, std::int64_t e) { return normalized2(m, e, 0); }

  double mant_ = 0.0;
  std::int64_t exp2_ = 0;
};

}  // namespace lbsim

#include "lbsim/extprob.hpp"

#include <cstdio>
#include <limits>

namespace lbsim {

namespace {
constexpr long double kLn2 = 0.69314718055994530941723212145817656808L;
constexpr long double kLog2E = 1.44269504088896340735992468100189213743L;
// Split of ln2 with a 32-bit head so that e * head is exact for |e| < 2^31.
constexpr long double kLn2Hi = 0x1.62e42fep-1L;
constexpr long double kLn2Lo = kLn2 - kLn2Hi;
}  // namespace

ExtProb ExtProb::from_ln(long double natural_log) {
  if (std::isinf(natural_log) && natural_log < 0) return zero();
  if (!std::isfinite(natural_log)) throw Error("ExtProb::from_ln: log must be finite or -inf");
  long double t = natural_log * kLog2E;
  if (t >= static_cast<long double>(kExpLimit - 2)) throw CapacityError("ExtProb: exponent out of range");
  if (t <= -static_cast<long double>(kExpLimit - 2)) return zero();
  auto e = static_cast<std::int64_t>(std::floor(t));
  // Residual exponent via the split constant; exact head product keeps the
  // residual accurate even when natural_log is large.
  long double r = (natural_log - static_cast<long double>(e) * kLn2Hi) -
                  static_cast<long double>(e) * kLn2Lo;
  return normalized2(static_cast<double>(std::exp(r)), e, 0);
}

double ExtProb::to_double() const {
  if (is_zero()) return 0.0;
  if (exp2_ > 1100) return std::numeric_limits<double>::infinity();
  if (exp2_ < -1100) return 0.0;
  return std::ldexp(mant_, static_cast<int>(exp2_));
}

long double ExtProb::ln() const {
  if (is_zero()) return -std::numeric_limits<long double>::infinity();
  return std::log(static_cast<long double>(mant_)) + static_cast<long double>(exp2_) * kLn2;
}

double ExtProb::log10() const {
  return static_cast<double>(ln() * 0.43429448190325182765112891891660508230L);
}

std::string ExtProb::decimal_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (significant_digits > 17) significant_digits = 17;
  if (is_zero()) return "0";
  long double t = static_cast<long double>(exp2_) * 0.30102999566398119521373889472449303L +
                  std::log10(static_cast<long double>(mant_));
  auto d10 = std::floor(t);
  long double lead = std::pow(10.0L, t - d10);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", significant_digits - 1, lead);
  if (buf[0] == '1' && buf[1] == '0') {  // rounded up to 10.000...
    lead /= 10.0L;
    d10 += 1;
    std::snprintf(buf, sizeof buf, "%.*Lf", significant_digits - 1, lead);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%se%+lld", buf, static_cast<long long>(d10));
  return out;
}

}  // namespace lbsim

#pragma once

// Test-only interval evaluation with MPFR. Independent of the exact sign
// routines it checks: every value is enclosed in [lo, hi] with directed
// rounding, and precision is raised until the enclosure excludes zero.

#include <fibsum/exact.hpp>

#include <mpfr.h>

#include <optional>

namespace fibsum::mpfr_check {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;

  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  void set(const Rational& q) {
    mpfr_set_q(lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
  }

  /// Sign if the enclosure excludes zero (or is exactly zero).
  std::optional<int> sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Encloses a + b*sqrt(5) at `prec` bits.
inline std::optional<int> interval_surd_sign(const Rational& a, const Rational& b, mpfr_prec_t prec) {
  if (b.is_zero()) return a.sign();
  Interval s5(prec);
  mpfr_set_ui(s5.lo(), 5, MPFR_RNDN);
  mpfr_set_ui(s5.hi(), 5, MPFR_RNDN);
  mpfr_sqrt(s5.lo(), s5.lo(), MPFR_RNDD);
  mpfr_sqrt(s5.hi(), s5.hi(), MPFR_RNDU);

  Interval out(prec);
  // b * sqrt5 with outward rounding; endpoints swap for negative b.
  if (b.sign() > 0) {
    mpfr_mul_q(out.lo(), s5.lo(), b.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi(), s5.hi(), b.mpq().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(out.lo(), s5.hi(), b.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi(), s5.lo(), b.mpq().get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add_q(out.lo(), out.lo(), a.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(out.hi(), out.hi(), a.mpq().get_mpq_t(), MPFR_RNDU);
  return out.sign();
}

/// Raises precision from 64 bits until the sign is determined.
inline int interval_surd_sign(const Rational& a, const Rational& b) {
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    if (auto s = interval_surd_sign(a, b, prec)) return *s;
  }
  throw std::runtime_error("interval evaluation did not settle");
}

/// Decides |w|^2 phi^{2n} < 1 by interval evaluation at 64 decimal digits
/// (213 bits) and beyond, using phi = (1 + sqrt5)/2 directly.
inline bool interval_converges(const Rational& norm, int n) {
  for (mpfr_prec_t prec = 213; prec <= (1 << 16); prec *= 2) {
    Interval phi(prec);
    mpfr_set_ui(phi.lo(), 5, MPFR_RNDN);
    mpfr_set_ui(phi.hi(), 5, MPFR_RNDN);
    mpfr_sqrt(phi.lo(), phi.lo(), MPFR_RNDD);
    mpfr_sqrt(phi.hi(), phi.hi(), MPFR_RNDU);
    mpfr_add_ui(phi.lo(), phi.lo(), 1, MPFR_RNDD);
    mpfr_add_ui(phi.hi(), phi.hi(), 1, MPFR_RNDU);
    mpfr_div_ui(phi.lo(), phi.lo(), 2, MPFR_RNDD);
    mpfr_div_ui(phi.hi(), phi.hi(), 2, MPFR_RNDU);
    Interval v(prec);
    mpfr_pow_ui(v.lo(), phi.lo(), static_cast<unsigned long>(2 * n), MPFR_RNDD);
    mpfr_pow_ui(v.hi(), phi.hi(), static_cast<unsigned long>(2 * n), MPFR_RNDU);
    mpfr_mul_q(v.lo(), v.lo(), norm.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(v.hi(), v.hi(), norm.mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_sub_ui(v.lo(), v.lo(), 1, MPFR_RNDD);
    mpfr_sub_ui(v.hi(), v.hi(), 1, MPFR_RNDU);
    if (mpfr_sgn(v.hi()) < 0) return true;
    if (mpfr_sgn(v.lo()) >= 0) return false;
  }
  throw std::runtime_error("interval evaluation did not settle");
}

}  // namespace fibsum::mpfr_check

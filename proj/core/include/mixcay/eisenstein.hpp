#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <numbers>
#include <string>

namespace mixcay {

using Rational = boost::rational<long long>;

namespace unity {
// omega_m = exp(2 pi i / m)
inline const std::complex<double> omega3{-0.5, std::numbers::sqrt3 / 2.0};
inline const std::complex<double> omega6{0.5, std::numbers::sqrt3 / 2.0};
inline const std::complex<double> omega6_5{0.5, -std::numbers::sqrt3 / 2.0};
/// 1/2 - i sqrt(3)/6, the weight splitting a skew sum into its Eisenstein parts.
inline const std::complex<double> eisenstein_split{0.5, -std::numbers::sqrt3 / 6.0};
}  // namespace unity

/// Exact element a + b*omega3 of Q(omega3), omega3 = (-1 + i sqrt 3)/2.
class EisensteinRational {
 public:
  constexpr EisensteinRational() = default;
  EisensteinRational(Rational a, Rational b = 0) : a_(a), b_(b) {}

  static EisensteinRational omega() { return {0, 1}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  Rational real_part() const { return a_ - b_ / 2; }
  /// Imaginary part divided by sqrt(3)/2, so Im = imag_over_half_sqrt3 * sqrt(3)/2.
  const Rational& imag_over_half_sqrt3() const noexcept { return b_; }
  bool is_rational() const noexcept { return b_.numerator() == 0; }
  bool is_zero() const noexcept { return a_.numerator() == 0 && b_.numerator() == 0; }

  /// Complex conjugate: omega3 -> omega3^2 = -1 - omega3.
  EisensteinRational conj() const { return {a_ - b_, -b_}; }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  EisensteinRational& operator+=(const EisensteinRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisensteinRational& operator-=(const EisensteinRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  friend EisensteinRational operator+(EisensteinRational x, const EisensteinRational& y) { return x += y; }
  friend EisensteinRational operator-(EisensteinRational x, const EisensteinRational& y) { return x -= y; }
  friend EisensteinRational operator-(const EisensteinRational& x) { return {-x.a_, -x.b_}; }
  friend EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y) {
    // omega^2 = -1 - omega
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
  }
  friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace mixcay

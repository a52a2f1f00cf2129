#include "mixcay/eisenstein.hpp"

namespace mixcay {

namespace {
double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}
}  // namespace

std::complex<double> EisensteinRational::to_complex() const {
  return to_double(a_) + to_double(b_) * unity::omega3;
}

std::string EisensteinRational::to_string() const {
  if (b_.numerator() == 0) return rational_string(a_);
  std::string out = a_.numerator() == 0 ? "" : rational_string(a_) + (b_ > 0 ? "+" : "");
  if (b_ == Rational(1)) return out + "w";
  if (b_ == Rational(-1)) return out + "-w";
  return out + rational_string(b_) + "w";
}

}  // namespace mixcay

#include "qfock/spin.hpp"

#include <algorithm>

namespace qfock {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const auto even = std::count_if(parts.begin(), parts.end(), [](int a) { return a % 2 == 0; });
  return even % 2 == 0 ? Parity::even : Parity::odd;
}

Parity h_parity(const Partition& lambda, const HParams& p) {
  long nonzero = 0;
  for (int a : lambda.parts())
    for (int c = 1; c <= a; ++c)
      if (residue(c, p) != 0) ++nonzero;
  return nonzero % 2 == 0 ? Parity::even : Parity::odd;
}

int n_h(const Partition& lambda, const HParams& p) {
  const auto& parts = lambda.parts();
  return static_cast<int>(
      std::count_if(parts.begin(), parts.end(), [&](int a) { return a % p.h() == 0; }));
}

int x_h(const Partition& lambda, const HParams& p) {
  const bool even = parity(lambda) == Parity::even;
  const bool h_even = h_parity(lambda, p) == Parity::even;
  const int base = n_h(lambda, p);
  if (even) return h_even ? base : base + 1;
  return h_even ? base - 1 : base;
}

SpinPrediction predict_reduced(const Partition& lambda, const Partition& mu, const LaurentPoly& d,
                               const HParams& p) {
  SpinPrediction s{lambda, mu, d.eval_at_one(), x_h(lambda, p), 0, 0, false, is_strict(lambda)};
  s.mantissa = s.d_at_one;
  if (s.mantissa != 0) {
    s.half_power = s.x_h;
    s.odd_half_power = s.half_power % 2 != 0;
  }
  return s;
}

std::string to_string(const SpinPrediction& s) {
  if (s.mantissa == 0) return "0";
  if (s.half_power >= 0 && s.half_power % 2 == 0) {
    mpz_class v = s.mantissa;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(s.half_power / 2));
    return v.get_str();
  }
  const std::string power = s.half_power % 2 == 0 ? std::to_string(s.half_power / 2)
                                                  : "(" + std::to_string(s.half_power) + "/2)";
  return (s.mantissa == 1 ? "" : s.mantissa.get_str() + "*") + "2^" + power;
}

}  // namespace qfock

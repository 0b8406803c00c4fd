#ifndef QFOCK_SPIN_HPP
#define QFOCK_SPIN_HPP

#include <gmpxx.h>

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

enum class Parity { even, odd };
std::string to_string(Parity p);

/// Parity of the number of positive even parts.
Parity parity(const Partition& lambda);
/// Parity of the number of nodes of non-zero residue.
Parity h_parity(const Partition& lambda, const HParams& p);
/// Number of positive parts divisible by h, counted with multiplicity.
int n_h(const Partition& lambda, const HParams& p);
int x_h(const Partition& lambda, const HParams& p);

/// The predicted reduced decomposition number mantissa * 2^(half_power/2),
/// kept exact.  odd_half_power marks predictions that are not integers of
/// that shape; they are reported as computed, never rounded.
struct SpinPrediction {
  Partition lambda;
  Partition mu;
  mpz_class d_at_one;
  int x_h = 0;
  mpz_class mantissa;
  int half_power = 0;
  bool odd_half_power = false;
  /// The prediction is only meaningful for strict lambda.
  bool lambda_strict = true;
};

SpinPrediction predict_reduced(const Partition& lambda, const Partition& mu, const LaurentPoly& d,
                               const HParams& p);

/// An exact integer when possible, otherwise e.g. "3*2^(1/2)", "2^(-1/2)".
std::string to_string(const SpinPrediction& s);

}  // namespace qfock

#endif  // QFOCK_SPIN_HPP

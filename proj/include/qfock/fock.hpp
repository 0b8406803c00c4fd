#ifndef QFOCK_FOCK_HPP
#define QFOCK_FOCK_HPP

#include <map>
#include <utility>
#include <vector>

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

/// A finite linear combination of h-strict partitions with Laurent-polynomial
/// coefficients.  Zero coefficients are never stored.
class FockVector {
 public:
  explicit FockVector(HParams params) : params_(params) {}
  /// The basis vector lambda.
  FockVector(HParams params, const Partition& lambda);

  const HParams& params() const noexcept { return params_; }
  const std::map<Partition, LaurentPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const Partition& lambda) const;

  void add(const Partition& lambda, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector scaled(const LaurentPoly& c) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  HParams params_;
  std::map<Partition, LaurentPoly> terms_;
};

/// N(lambda, mu) for the f-action: mu is lambda plus some i-nodes.  Throws
/// std::invalid_argument if the difference is not made of i-nodes.
LaurentPoly n_coefficient_f(const Partition& lambda, const Partition& mu, int i,
                            const HParams& p);
/// The e-side coefficient: mu is lambda minus some i-nodes.
LaurentPoly n_coefficient_e(const Partition& lambda, const Partition& mu, int i,
                            const HParams& p);

/// Divided powers f_i^(k), e_i^(k); k = 0 is the identity.
FockVector apply_f(const FockVector& v, int i, int k);
FockVector apply_e(const FockVector& v, int i, int k);

/// (residue, multiplicity) pairs in application order: the first entry acts
/// on the empty partition first.
using Monomial = std::vector<std::pair<int, int>>;
FockVector monomial_apply(const Monomial& seq, const HParams& p);

std::string to_string(const FockVector& v);

}  // namespace qfock

#endif  // QFOCK_FOCK_HPP

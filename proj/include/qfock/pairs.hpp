#ifndef QFOCK_PAIRS_HPP
#define QFOCK_PAIRS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfock/abacus.hpp"
#include "qfock/canonical.hpp"
#include "qfock/partition.hpp"

namespace qfock {

/// A, B, C classify pairs with one addable node of residue 1 <= i < n by the
/// column of that node (i+h*a+1 with a >= 1, i+1, h*a-i respectively).
enum class PairKind { A, B, C, zero_residue, generic };
std::string to_string(PairKind k);

/// sigma has k >= 1 addable i-nodes and tau = psi_i(sigma).
struct PairDescriptor {
  HParams params;
  Partition sigma;
  Partition tau;
  int residue = 0;
  int k = 0;
  PairKind kind = PairKind::generic;
};

/// One descriptor per residue at which the core sigma has addable nodes.
std::vector<PairDescriptor> detect_pairs(const Partition& sigma, const HParams& p);

enum class Side { source, target };

/// Source side: no removable i-nodes.  Target side: no addable i-nodes.
bool is_unexceptional(const Partition& lambda, const PairDescriptor& d, Side side);

/// True when the residue/multiplicity criteria guarantee that the two
/// blocks of weight w have no exceptional partitions.
bool scopes_kessar_predicted(const PairDescriptor& d, int weight);

/// True for the shapes whose exceptional partitions are classified:
/// k = 1 with 1 <= i < n, and k = 3 with i = 0.
bool has_exceptional_triples(const PairDescriptor& d);

struct ExceptionalTriples {
  Partition alpha, beta, gamma;
  Partition alpha_hat, beta_hat, gamma_hat;
};

/// The exceptional partitions of the two weight-2 blocks, each triple
/// ascending in dominance.  Throws std::invalid_argument for unsupported
/// shapes and InvariantViolation if the classification fails.
ExceptionalTriples exceptional_triples(const PairDescriptor& d);

/// Abacus tags the classification assigns to alpha..gamma_hat, in order.
std::vector<AbacusTag> expected_triple_tags(const PairDescriptor& d);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty on success
};

struct PairReport {
  PairDescriptor pair;
  int weight = 0;
  bool supported = true;
  bool scopes_kessar = false;  // no exceptional partitions in the source block
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs every check that applies to a pair of blocks of the given weight,
/// computing both canonical bases with the oracle.  Pairs with k = 1 and
/// residue 0 at weight 2 are reported unsupported.
PairReport verify_pair(const PairDescriptor& d, int weight,
                       std::size_t max_rows = kDefaultEnumerationCap);

}  // namespace qfock

#endif  // QFOCK_PAIRS_HPP

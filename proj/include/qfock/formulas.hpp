#ifndef QFOCK_FORMULAS_HPP
#define QFOCK_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfock/canonical.hpp"
#include "qfock/fock.hpp"
#include "qfock/partition.hpp"

namespace qfock {

/// A closed-form matrix together with the rule that produced each entry
/// (empty string for structural zeros).
struct FormulaMatrix {
  CanonicalBasisMatrix matrix;
  std::vector<std::vector<std::string>> provenance;
};

// ---- bar-weight 0 and 1 ---------------------------------------------------

FormulaMatrix weight0_matrix(const BlockId& b);

/// The n+1 partitions of bar-weight 1 over the core tau, ascending in
/// dominance (which is total here); all but the last are restricted.
std::vector<Partition> weight1_chain(const Partition& tau, const HParams& p);
FormulaMatrix weight1_matrix(const Partition& tau, const HParams& p);

// ---- bar-weight 2 -----------------------------------------------------------

enum class Colour { black, white, grey };
std::string to_string(Colour c);

struct Weight2Profile {
  Partition lambda;
  std::pair<int, int> barpos;  // a <= b
  std::pair<int, int> legs;    // leg lengths for a and for b
  int ddd = 0;                 // |legs.first - legs.second|
  Colour colour = Colour::grey;
};

/// Leg length attached to the bar value c of lambda in a weight-2 block.
int leg_length(const Partition& lambda, int c, const BlockId& b);
/// Throws std::invalid_argument unless b has weight 2 and contains lambda.
Weight2Profile weight2_profile(const Partition& lambda, const BlockId& b);

/// True for a 2h-bar: b = a + h, or a < b with a + b = 2h.  A pair (h, h)
/// counts as two h-bars.
bool has_2h_bar(const std::pair<int, int>& barpos, const HParams& p);

struct SpecialSet {
  std::optional<Partition> xx, shp, nat, flt, ppi, yy;
};

/// The special partitions over the core tau, each present only when defined.
SpecialSet special_partitions(const Partition& tau, const HParams& p);

/// The least dominant partition strictly dominating mu with the same ddd
/// and colour.  Throws InvariantViolation if none exists or the minimum is
/// not unique.
Partition mu_plus(const Partition& mu, const BlockId& b);

/// Predicted G(mu) in a weight-2 block, with the rule name for each term.
struct FormulaColumn {
  FockVector vector;
  std::vector<std::pair<Partition, std::string>> provenance;
};
FormulaColumn weight2_column(const Partition& mu, const BlockId& b);
FormulaMatrix weight2_matrix(const BlockId& b);

/// Dispatches on the block weight (0, 1 or 2); throws std::invalid_argument
/// otherwise.
FormulaMatrix formula_matrix(const BlockId& b);

}  // namespace qfock

#endif  // QFOCK_FORMULAS_HPP

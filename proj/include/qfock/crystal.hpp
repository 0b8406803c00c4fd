#ifndef QFOCK_CRYSTAL_HPP
#define QFOCK_CRYSTAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/partition.hpp"

namespace qfock {

struct SignedNode {
  Node node;
  char sign;  // '+' addable, '-' removable
};

/// Addable and removable i-nodes in node order, as signed symbols.
std::vector<SignedNode> i_signature(const Partition& lambda, int i, const HParams& p);
/// What survives after repeatedly deleting adjacent "+-" pairs; always of
/// the form -...-+...+.
std::vector<SignedNode> reduced_i_signature(const Partition& lambda, int i, const HParams& p);
std::string signature_string(const std::vector<SignedNode>& sig);

std::vector<Node> normal_nodes(const Partition& lambda, int i, const HParams& p);
std::vector<Node> conormal_nodes(const Partition& lambda, int i, const HParams& p);

/// The involution psi_i.
Partition psi(const Partition& lambda, int i, const HParams& p);

/// Which residue string_top strips first.
enum class PeelPolicy { smallest_residue, largest_residue };

struct PeelStep {
  Partition rest;
  int residue;
  int count;
};

/// One step of stripping all normal i-nodes; std::nullopt for the empty
/// partition.  Throws InvariantViolation if a non-empty restricted partition
/// has no normal node or the result is not restricted.
std::optional<PeelStep> string_top(const Partition& mu, const HParams& p,
                                   PeelPolicy policy = PeelPolicy::smallest_residue);

/// The full peel of mu, reversed into application order, so that
/// monomial_apply(peel_monomial(mu)) has leading term mu.
Monomial peel_monomial(const Partition& mu, const HParams& p,
                       PeelPolicy policy = PeelPolicy::smallest_residue);

/// Partition obtained by adding / removing a set of nodes.
Partition add_nodes(const Partition& lambda, const std::vector<Node>& nodes);
Partition remove_nodes(const Partition& lambda, const std::vector<Node>& nodes);

}  // namespace qfock

#endif  // QFOCK_CRYSTAL_HPP

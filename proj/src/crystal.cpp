#include "qfock/crystal.hpp"

#include <algorithm>

namespace qfock {

std::vector<SignedNode> i_signature(const Partition& lambda, int i, const HParams& p) {
  std::vector<SignedNode> sig;
  for (const Node& x : addable_nodes(lambda, i, p)) sig.push_back({x, '+'});
  for (const Node& x : removable_nodes(lambda, i, p)) sig.push_back({x, '-'});
  std::sort(sig.begin(), sig.end(),
            [](const SignedNode& a, const SignedNode& b) { return node_before(a.node, b.node); });
  return sig;
}

std::vector<SignedNode> reduced_i_signature(const Partition& lambda, int i, const HParams& p) {
  // A '+' waiting on the stack cancels the next '-'.
  std::vector<SignedNode> minus, plus;
  for (const SignedNode& s : i_signature(lambda, i, p)) {
    if (s.sign == '+') {
      plus.push_back(s);
    } else if (!plus.empty()) {
      plus.pop_back();
    } else {
      minus.push_back(s);
    }
  }
  minus.insert(minus.end(), plus.begin(), plus.end());
  return minus;
}

std::string signature_string(const std::vector<SignedNode>& sig) {
  std::string s;
  for (const auto& x : sig) s += x.sign;
  return s;
}

namespace {

std::vector<Node> nodes_with_sign(const Partition& lambda, int i, const HParams& p, char sign) {
  std::vector<Node> out;
  for (const auto& s : reduced_i_signature(lambda, i, p))
    if (s.sign == sign) out.push_back(s.node);
  return out;
}

}  // namespace

std::vector<Node> normal_nodes(const Partition& lambda, int i, const HParams& p) {
  return nodes_with_sign(lambda, i, p, '-');
}

std::vector<Node> conormal_nodes(const Partition& lambda, int i, const HParams& p) {
  return nodes_with_sign(lambda, i, p, '+');
}

Partition add_nodes(const Partition& lambda, const std::vector<Node>& nodes) {
  std::vector<int> parts(lambda.vec());
  for (const Node& x : nodes) {
    if (x.row > static_cast<int>(parts.size())) parts.resize(x.row, 0);
    ++parts[x.row - 1];
  }
  // The constructor rejects gaps and rows longer than the row above.
  return Partition(std::move(parts));
}

Partition remove_nodes(const Partition& lambda, const std::vector<Node>& nodes) {
  std::vector<int> parts(lambda.vec());
  for (const Node& x : nodes) {
    if (x.row > static_cast<int>(parts.size()) || parts[x.row - 1] == 0)
      throw std::invalid_argument("removing a node outside the diagram");
    --parts[x.row - 1];
  }
  std::erase(parts, 0);
  return Partition(std::move(parts));
}

Partition psi(const Partition& lambda, int i, const HParams& p) {
  const auto normal = normal_nodes(lambda, i, p);
  const auto conormal = conormal_nodes(lambda, i, p);
  const int r = static_cast<int>(normal.size()), s = static_cast<int>(conormal.size());
  Partition out = s >= r ? add_nodes(lambda, {conormal.begin(), conormal.begin() + (s - r)})
                         : remove_nodes(lambda, {normal.end() - (r - s), normal.end()});
  if (!is_h_strict(out, p))
    throw InvariantViolation("psi_" + std::to_string(i) + " of " + to_string(lambda) +
                             " is not h-strict");
  return out;
}

std::optional<PeelStep> string_top(const Partition& mu, const HParams& p, PeelPolicy policy) {
  if (mu.empty()) return std::nullopt;
  const int n = p.n();
  for (int t = 0; t <= n; ++t) {
    const int i = policy == PeelPolicy::smallest_residue ? t : n - t;
    const auto normal = normal_nodes(mu, i, p);
    if (normal.empty()) continue;
    Partition rest = remove_nodes(mu, normal);
    if (!is_h_strict(rest, p) || !is_restricted(rest, p))
      throw InvariantViolation("stripping normal " + std::to_string(i) + "-nodes from " +
                               to_string(mu) + " leaves a non-restricted partition");
    return PeelStep{std::move(rest), i, static_cast<int>(normal.size())};
  }
  throw InvariantViolation(to_string(mu) + " has no normal node of any residue");
}

Monomial peel_monomial(const Partition& mu, const HParams& p, PeelPolicy policy) {
  Monomial seq;
  Partition cur = mu;
  while (auto step = string_top(cur, p, policy)) {
    seq.emplace_back(step->residue, step->count);
    cur = std::move(step->rest);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace qfock

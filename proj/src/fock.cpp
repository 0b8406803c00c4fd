#include "qfock/fock.hpp"

#include <algorithm>

namespace qfock {

FockVector::FockVector(HParams params, const Partition& lambda) : params_(params) {
  terms_.emplace(lambda, LaurentPoly(1));
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
  FockVector out(params_);
  if (c.is_zero()) return out;
  for (const auto& [lambda, x] : terms_) out.terms_.emplace(lambda, x * c);
  return out;
}

namespace {

// Nodes of [big] \ [small]; throws unless small fits inside big.
std::vector<Node> skew_nodes(const Partition& small, const Partition& big) {
  std::vector<Node> nodes;
  for (int r = 1; r <= std::max(small.length(), big.length()); ++r) {
    if (small.part(r) > big.part(r))
      throw std::invalid_argument(to_string(small) + " is not contained in " + to_string(big));
    for (int c = small.part(r) + 1; c <= big.part(r); ++c) nodes.push_back({r, c});
  }
  return nodes;
}

int count_if_col(const std::vector<Node>& nodes, auto pred) {
  return static_cast<int>(
      std::count_if(nodes.begin(), nodes.end(), [&](const Node& y) { return pred(y.col); }));
}

bool has_col(const std::vector<Node>& nodes, int col) {
  return std::any_of(nodes.begin(), nodes.end(), [&](const Node& x) { return x.col == col; });
}

void require_residue(const std::vector<Node>& nodes, int i, const HParams& p) {
  for (const Node& x : nodes)
    if (residue(x.col, p) != i)
      throw std::invalid_argument("node (" + std::to_string(x.row) + "," +
                                  std::to_string(x.col) + ") is not an " + std::to_string(i) +
                                  "-node");
}

// Product over m of 1 - (-q^2)^{b_m}, where m ranges over the multiples mh
// selected by `selects`.
LaurentPoly zero_residue_factor(const std::vector<Node>& nodes, const Partition& lambda,
                                const HParams& p, bool f_side) {
  const int h = p.h();
  LaurentPoly out(1);
  int max_col = 0;
  for (const Node& x : nodes) max_col = std::max(max_col, x.col);
  for (int m = 1; m * h <= max_col; ++m) {
    const bool at = has_col(nodes, m * h), after = has_col(nodes, m * h + 1);
    const bool selected = f_side ? (after && !at) : (at && !after);
    if (!selected) continue;
    const int b = lambda.multiplicity(m * h);
    LaurentPoly term = LaurentPoly::q_power(2 * b);
    if (b % 2 == 1) term = -term;  // (-q^2)^b
    out *= LaurentPoly(1) - term;
  }
  return out;
}

}  // namespace

LaurentPoly n_coefficient_f(const Partition& lambda, const Partition& mu, int i,
                            const HParams& p) {
  const auto added = skew_nodes(lambda, mu);
  require_residue(added, i, p);
  const auto addable_mu = addable_nodes(mu, i, p);
  const auto removable_lambda = removable_nodes(lambda, i, p);
  int s = 0;
  for (const Node& x : added) {
    s += count_if_col(addable_mu, [&](int c) { return c < x.col; });
    s -= count_if_col(removable_lambda, [&](int c) { return c < x.col; });
  }
  LaurentPoly out = LaurentPoly::q_power(q_exponent_of_residue(i, p) * s);
  if (i == 0) out *= zero_residue_factor(added, lambda, p, true);
  return out;
}

LaurentPoly n_coefficient_e(const Partition& lambda, const Partition& mu, int i,
                            const HParams& p) {
  const auto removed = skew_nodes(mu, lambda);
  require_residue(removed, i, p);
  const auto removable_mu = removable_nodes(mu, i, p);
  const auto addable_lambda = addable_nodes(lambda, i, p);
  int s = 0;
  for (const Node& x : removed) {
    s += count_if_col(removable_mu, [&](int c) { return c > x.col; });
    s -= count_if_col(addable_lambda, [&](int c) { return c > x.col; });
  }
  LaurentPoly out = LaurentPoly::q_power(q_exponent_of_residue(i, p) * s);
  if (i == 0) out *= zero_residue_factor(removed, lambda, p, false);
  return out;
}

namespace {

// Every h-strict partition obtained from lambda by adding (sign = +1) or
// removing (sign = -1) exactly k of the candidate nodes.
std::vector<Partition> k_subsets(const Partition& lambda, const std::vector<Node>& candidates,
                                 int k, int sign, const HParams& p) {
  std::vector<Partition> out;
  const int m = static_cast<int>(candidates.size());
  if (k > m) return out;
  std::vector<char> pick(m, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> parts(lambda.vec());
    int rows = lambda.length();
    for (int t = 0; t < m; ++t)
      if (pick[t]) rows = std::max(rows, candidates[t].row);
    parts.resize(rows, 0);
    std::vector<int> delta(rows, 0);
    for (int t = 0; t < m; ++t)
      if (pick[t]) ++delta[candidates[t].row - 1];
    bool ok = true;
    for (int r = 0; r < rows && ok; ++r) {
      if (delta[r] == 0) continue;
      // The chosen nodes of a row must form one segment at its end.
      const int lo = sign > 0 ? parts[r] + 1 : parts[r] - delta[r] + 1;
      const int hi = lo + delta[r] - 1;
      for (int t = 0; t < m; ++t)
        if (pick[t] && candidates[t].row == r + 1 && (candidates[t].col < lo || candidates[t].col > hi))
          ok = false;
      parts[r] += sign * delta[r];
    }
    if (!ok) continue;
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) continue;
    Partition mu = Partition::from_unsorted(std::move(parts));
    if (is_h_strict(mu, p)) out.push_back(std::move(mu));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

FockVector apply_f(const FockVector& v, int i, int k) {
  if (k < 0) throw std::invalid_argument("negative divided power");
  if (k == 0) return v;
  const HParams& p = v.params();
  FockVector out(p);
  for (const auto& [lambda, c] : v.terms())
    for (const auto& mu : k_subsets(lambda, addable_nodes(lambda, i, p), k, +1, p))
      out.add(mu, c * n_coefficient_f(lambda, mu, i, p));
  return out;
}

FockVector apply_e(const FockVector& v, int i, int k) {
  if (k < 0) throw std::invalid_argument("negative divided power");
  if (k == 0) return v;
  const HParams& p = v.params();
  FockVector out(p);
  for (const auto& [lambda, c] : v.terms())
    for (const auto& mu : k_subsets(lambda, removable_nodes(lambda, i, p), k, -1, p))
      out.add(mu, c * n_coefficient_e(lambda, mu, i, p));
  return out;
}

FockVector monomial_apply(const Monomial& seq, const HParams& p) {
  FockVector v(p, Partition());
  for (const auto& [i, k] : seq) v = apply_f(v, i, k);
  return v;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + to_string(lambda);
  }
  return out;
}

}  // namespace qfock

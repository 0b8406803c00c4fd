#include "qfock/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qfock {

CanonicalBasisMatrix::CanonicalBasisMatrix(BlockId block, std::vector<Partition> rows,
                                           std::vector<Partition> cols)
    : block_(std::move(block)), rows_(std::move(rows)), cols_(std::move(cols)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) row_pos_.emplace(rows_[r], r);
  for (std::size_t c = 0; c < cols_.size(); ++c) col_pos_.emplace(cols_[c], c);
  entries_.assign(rows_.size(), std::vector<LaurentPoly>(cols_.size()));
}

std::size_t CanonicalBasisMatrix::row_index(const Partition& lambda) const {
  auto it = row_pos_.find(lambda);
  if (it == row_pos_.end()) throw std::out_of_range(to_string(lambda) + " is not a row");
  return it->second;
}

std::size_t CanonicalBasisMatrix::col_index(const Partition& mu) const {
  auto it = col_pos_.find(mu);
  if (it == col_pos_.end()) throw std::out_of_range(to_string(mu) + " is not a column");
  return it->second;
}

const LaurentPoly& CanonicalBasisMatrix::at(const Partition& lambda, const Partition& mu) const {
  return entries_[row_index(lambda)][col_index(mu)];
}

void CanonicalBasisMatrix::set(const Partition& lambda, const Partition& mu, LaurentPoly value) {
  entries_[row_index(lambda)][col_index(mu)] = std::move(value);
}

FockVector CanonicalBasisMatrix::column(const Partition& mu) const {
  const std::size_t c = col_index(mu);
  FockVector v(block_.params());
  for (std::size_t r = 0; r < rows_.size(); ++r) v.add(rows_[r], entries_[r][c]);
  return v;
}

std::vector<Partition> restricted_partitions(const std::vector<Partition>& rows,
                                             const HParams& p) {
  std::vector<Partition> out;
  for (const auto& lambda : rows)
    if (is_restricted(lambda, p)) out.push_back(lambda);
  return out;
}

namespace {

// Computes G(mu) from the monomial seed of mu.  The seed equals G(mu) plus
// bar-invariant multiples of other G(nu), and the lexicographically
// smallest such nu always shows up as the smallest offending coefficient
// (nothing below it can contribute), so its correction is exact.  Those nu
// may lie on either side of mu, hence the on-demand recursion.
class Reducer {
 public:
  Reducer(const HParams& p, PeelPolicy policy, std::size_t bound)
      : p_(p), policy_(policy), bound_(bound) {}

  const FockVector& get(const Partition& mu) {
    if (auto it = done_.find(mu); it != done_.end()) return it->second;
    if (!is_restricted(mu, p_))
      throw InvariantViolation("reduction needs G" + to_string(mu) +
                               ", but it is not restricted");
    if (!active_.insert(mu).second)
      throw InvariantViolation("reduction of G" + to_string(mu) + " depends on itself");
    FockVector g = monomial_apply(peel_monomial(mu, p_, policy_), p_);
    for (std::size_t iter = 0;; ++iter) {
      if (iter > bound_)
        throw InvariantViolation("reduction of " + to_string(mu) + " does not terminate");
      auto pivot = std::find_if(g.terms().begin(), g.terms().end(), [&](const auto& t) {
        return t.first != mu && !t.second.in_q_zq();
      });
      if (pivot == g.terms().end()) break;
      const Partition nu = pivot->first;
      const LaurentPoly c = symmetric_correction(pivot->second);
      g -= get(nu).scaled(c);
    }
    active_.erase(mu);
    return done_.emplace(mu, std::move(g)).first->second;
  }

 private:
  HParams p_;
  PeelPolicy policy_;
  std::size_t bound_;
  std::map<Partition, FockVector> done_;
  std::set<Partition> active_;
};

}  // namespace

CanonicalBasisMatrix canonical_basis(const BlockId& b, PeelPolicy policy, std::size_t max_rows) {
  const HParams& p = b.params();
  auto rows = enumerate_block(b, max_rows);
  auto cols = restricted_partitions(rows, p);
  CanonicalBasisMatrix m(b, rows, cols);
  Reducer reducer(p, policy, rows.size() * rows.size() + 1);
  for (auto col = cols.rbegin(); col != cols.rend(); ++col) {
    const Partition& mu = *col;
    for (const auto& [lambda, coeff] : reducer.get(mu).terms()) {
      if (!m.has_row(lambda))
        throw InvariantViolation("G" + to_string(mu) + " has a term " + to_string(lambda) +
                                 " outside the block");
      m.set(lambda, mu, coeff);
    }
  }
  check_canonical_properties(m);
  return m;
}

void check_canonical_properties(const CanonicalBasisMatrix& m) {
  const HParams& p = m.block().params();
  for (std::size_t c = 0; c < m.cols().size(); ++c) {
    const Partition& mu = m.cols()[c];
    const auto mu_content = h_content(mu, p);
    for (std::size_t r = 0; r < m.rows().size(); ++r) {
      const Partition& lambda = m.rows()[r];
      const LaurentPoly& d = m.entries()[r][c];
      auto fail = [&](const std::string& what) {
        throw InvariantViolation("d" + to_string(lambda) + to_string(mu) + " = " + to_string(d) +
                                 ": " + what);
      };
      if (lambda == mu) {
        if (d != LaurentPoly(1)) fail("diagonal entry is not 1");
        continue;
      }
      if (d.is_zero()) continue;
      if (!d.in_q_zq()) fail("off-diagonal entry not in qZ[q]");
      if (!dominated_by(mu, lambda)) fail("row does not dominate column");
      if (h_content(lambda, p) != mu_content) fail("row and column differ in content");
    }
  }
}

}  // namespace qfock

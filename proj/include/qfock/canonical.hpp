#ifndef QFOCK_CANONICAL_HPP
#define QFOCK_CANONICAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "qfock/crystal.hpp"
#include "qfock/fock.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

/// d_{lambda mu} for one block.  Rows are every partition of the block and
/// columns its restricted partitions, both in ascending lexicographic order.
class CanonicalBasisMatrix {
 public:
  CanonicalBasisMatrix(BlockId block, std::vector<Partition> rows, std::vector<Partition> cols);

  const BlockId& block() const noexcept { return block_; }
  const std::vector<Partition>& rows() const noexcept { return rows_; }
  const std::vector<Partition>& cols() const noexcept { return cols_; }
  /// entries()[r][c] = d_{rows[r], cols[c]}.
  const std::vector<std::vector<LaurentPoly>>& entries() const noexcept { return entries_; }

  /// Throws std::out_of_range for partitions outside the block.
  const LaurentPoly& at(const Partition& lambda, const Partition& mu) const;
  void set(const Partition& lambda, const Partition& mu, LaurentPoly value);
  bool has_row(const Partition& lambda) const { return row_pos_.contains(lambda); }
  bool has_col(const Partition& mu) const { return col_pos_.contains(mu); }
  std::size_t row_index(const Partition& lambda) const;
  std::size_t col_index(const Partition& mu) const;
  /// G(mu) as a Fock-space vector.
  FockVector column(const Partition& mu) const;

  friend bool operator==(const CanonicalBasisMatrix& a, const CanonicalBasisMatrix& b) {
    return a.block_ == b.block_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  BlockId block_;
  std::vector<Partition> rows_;
  std::vector<Partition> cols_;
  std::map<Partition, std::size_t> row_pos_;
  std::map<Partition, std::size_t> col_pos_;
  std::vector<std::vector<LaurentPoly>> entries_;
};

/// The restricted partitions of a block, ascending lexicographically.
std::vector<Partition> restricted_partitions(const std::vector<Partition>& rows,
                                             const HParams& p);

/// Computes G(mu) for every restricted mu of the block by reducing the
/// bar-invariant monomial vectors built from crystal peels.  Every defining
/// property of the canonical basis is asserted on the result
/// (InvariantViolation on failure).  Throws ResourceLimit if the block has
/// more than max_rows partitions.
CanonicalBasisMatrix canonical_basis(const BlockId& b,
                                     PeelPolicy policy = PeelPolicy::smallest_residue,
                                     std::size_t max_rows = kDefaultEnumerationCap);

/// Checks unitriangularity, off-diagonal entries in qZ[q], and that nonzero
/// entries lie weakly above the diagonal in dominance within one block.
/// Throws InvariantViolation naming the first failure.
void check_canonical_properties(const CanonicalBasisMatrix& m);

}  // namespace qfock

#endif  // QFOCK_CANONICAL_HPP

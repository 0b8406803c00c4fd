#ifndef QFOCK_ABACUS_HPP
#define QFOCK_ABACUS_HPP

#include <map>
#include <string>
#include <utility>

#include "qfock/partition.hpp"

namespace qfock {

/// The symmetric h-runner abacus.  Runners are numbered -n..n; position p
/// lies on runner runner_of(p).  Position 0 carries the white bead and is
/// never counted.
///
/// Stored as the difference from the vacuum display (every negative position
/// holds one bead, every non-negative position is empty), so only finitely
/// many entries are non-zero.  A part ah repeated t times gives t beads at ah
/// and "t vacancies" at -ah, i.e. an occupancy of 1 - t there.
class AbacusDisplay {
 public:
  AbacusDisplay(HParams params, std::map<int, int> delta);

  /// Requires lambda h-strict.
  static AbacusDisplay from_partition(const Partition& lambda, const HParams& p);
  /// Throws std::invalid_argument on a display that is not the image of an
  /// h-strict partition.
  Partition to_partition() const;

  const HParams& params() const noexcept { return params_; }
  int occupancy(int pos) const;
  int runner_of(int pos) const;
  const std::map<int, int>& delta() const noexcept { return delta_; }

  /// Pushes every bead up its runner as far as it goes.
  AbacusDisplay pushed_up() const;

  /// Row-major grid, runners -n..n left to right, rows increasing downward:
  /// 'b' occupied, 'n' empty, 'x' the origin, a digit for multiplicities > 1
  /// and '-' for the negative occupancy mirroring a repeated part.
  std::string render() const;

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  HParams params_;
  std::map<int, int> delta_;
};

/// Partition of the pushed-up display; agrees with bar_core.
Partition core_via_abacus(const AbacusDisplay& a);

/// The two recorded integers (a <= b) of a bar-weight-2 partition.  Throws
/// std::invalid_argument if lambda is not in the weight-2 block b, and
/// InvariantViolation if two removal orders record different values.
std::pair<int, int> bar_positions(const Partition& lambda, const BlockId& b);

/// Abacus notation of a bar-weight-2 partition.
struct AbacusTag {
  enum class Kind { pair, single, zero_zero };
  Kind kind = Kind::zero_zero;
  /// pair: 0 <= first <= second (runner magnitudes).  single: signed value in
  /// first.  zero_zero: both 0.
  int first = 0;
  int second = 0;

  static AbacusTag pair_of(int a, int b);
  static AbacusTag single_of(int s) { return {Kind::single, s, 0}; }
  static AbacusTag zero_zero() { return {Kind::zero_zero, 0, 0}; }

  friend bool operator==(const AbacusTag&, const AbacusTag&) = default;
};

std::string to_string(const AbacusTag& tag);

/// Throws std::invalid_argument if the block weight is not 2.
AbacusTag abacus_notation(const Partition& lambda, const BlockId& b);

}  // namespace qfock

#endif  // QFOCK_ABACUS_HPP

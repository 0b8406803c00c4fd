#ifndef QFOCK_PARTITION_HPP
#define QFOCK_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfock {

/// Raised when a result that the theory guarantees fails to hold.  Always a
/// bug somewhere (input validation happens before any of these can fire).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an enumeration or computation would exceed a configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The odd modulus h = 2n+1 (h >= 3).
class HParams {
 public:
  explicit HParams(int h);

  int h() const noexcept { return h_; }
  int n() const noexcept { return (h_ - 1) / 2; }

  friend bool operator==(const HParams&, const HParams&) = default;

 private:
  int h_;
};

/// A node (row, col) of a Young diagram, both 1-based.
struct Node {
  int row = 1;
  int col = 1;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Ordering used everywhere nodes are listed: by column, then by row.
inline bool node_before(const Node& a, const Node& b) noexcept {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

/// A partition stored as its positive parts in weakly decreasing order.
///
/// operator< is the lexicographic order on the part sequence, which agrees
/// with the usual lexicographic order on partitions (trailing zeros compare
/// below any positive part).  It is used as the key order of every map.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts, drops zeros.  Rejects negative entries.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// |lambda|
  int size() const noexcept;
  /// lambda_r with r 1-based; 0 beyond the length.
  int part(int r) const noexcept;
  int multiplicity(int a) const noexcept;
  bool contains(int a) const noexcept { return multiplicity(a) > 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Strict lexicographic and colexicographic total orders.
std::strong_ordering compare_lex(const Partition& a, const Partition& b);
std::strong_ordering compare_colex(const Partition& a, const Partition& b);

enum class Dominance { less, equal, greater, incomparable };

/// Dominance comparison of two partitions of the same size; throws
/// std::invalid_argument on a size mismatch.
Dominance compare_dominance(const Partition& a, const Partition& b);
/// a dominated by b (a ⊴ b).
bool dominated_by(const Partition& a, const Partition& b);
/// a strictly dominated by b (a ◁ b).
bool strictly_dominated_by(const Partition& a, const Partition& b);

Partition union_of(const Partition& a, const Partition& b);
Partition intersect(const Partition& a, const Partition& b);
/// a \ b for b strict with every part present in a.
Partition subtract(const Partition& a, const Partition& b);

/// Number of parts of tau lying strictly between x and y (counted with multiplicity).
int count_between(const Partition& tau, int x, int y);
/// Parts of the bar-core lying strictly between 0 and h.
int gamma(const Partition& tau, const HParams& p);

bool is_strict(const Partition& lambda);
bool is_h_strict(const Partition& lambda, const HParams& p);
/// Throws std::invalid_argument if lambda is not h-strict.
bool is_restricted(const Partition& lambda, const HParams& p);

/// Residue of column c (1-based), in 0..n.
int residue(int col, const HParams& p);

/// Removable / addable i-nodes, ordered by column then row.
std::vector<Node> removable_nodes(const Partition& lambda, int i, const HParams& p);
std::vector<Node> addable_nodes(const Partition& lambda, int i, const HParams& p);

/// Residue counts of all nodes, indexed 0..n.
std::vector<int> h_content(const Partition& lambda, const HParams& p);

struct BarRemoval {
  Partition result;
  /// a when a -> a-h (a part equal to h records h); h-a when a, h-a are removed.
  int recorded = 0;

  friend bool operator==(const BarRemoval&, const BarRemoval&) = default;
};

/// Every h-strict partition reachable by removing one h-bar, without duplicates.
std::vector<BarRemoval> remove_h_bar_all(const Partition& lambda, const HParams& p);

bool is_bar_core(const Partition& lambda, const HParams& p);
/// Computed by pushing beads up the abacus.
Partition bar_core(const Partition& lambda, const HParams& p);
int bar_weight(const Partition& lambda, const HParams& p);

/// Names a block: an h-bar-core together with a bar-weight.
class BlockId {
 public:
  /// Throws std::invalid_argument unless core is an h-bar-core and weight >= 0.
  BlockId(HParams params, Partition core, int weight);

  const HParams& params() const noexcept { return params_; }
  int h() const noexcept { return params_.h(); }
  int n() const noexcept { return params_.n(); }
  const Partition& core() const noexcept { return core_; }
  int weight() const noexcept { return weight_; }
  int partition_size() const noexcept { return core_.size() + params_.h() * weight_; }

  friend bool operator==(const BlockId&, const BlockId&) = default;

 private:
  HParams params_;
  Partition core_;
  int weight_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

/// All h-strict partitions of m, ascending lexicographically.
std::vector<Partition> enumerate_h_strict(int m, const HParams& p,
                                          std::size_t cap = kDefaultEnumerationCap);
/// All partitions of the block, ascending lexicographically.
std::vector<Partition> enumerate_block(const BlockId& b,
                                       std::size_t cap = kDefaultEnumerationCap);
/// All h-bar-cores of size at most max_size, ascending by size then lex.
std::vector<Partition> enumerate_cores(int max_size, const HParams& p);

std::string to_string(const Partition& lambda);
/// Accepts "(11,8,6,5,5)", "()", "11,8,6", with optional whitespace.
Partition parse_partition(const std::string& text);

}  // namespace qfock

#endif  // QFOCK_PARTITION_HPP

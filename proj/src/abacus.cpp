#include "qfock/abacus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

namespace qfock {

namespace {

int vacuum(int pos) { return pos < 0 ? 1 : 0; }

}  // namespace

AbacusDisplay::AbacusDisplay(HParams params, std::map<int, int> delta)
    : params_(params), delta_(std::move(delta)) {
  std::erase_if(delta_, [](const auto& kv) { return kv.second == 0 || kv.first == 0; });
}

AbacusDisplay AbacusDisplay::from_partition(const Partition& lambda, const HParams& p) {
  if (!is_h_strict(lambda, p))
    throw std::invalid_argument("abacus: " + to_string(lambda) + " is not h-strict");
  std::map<int, int> delta;
  for (int a : lambda.parts()) {
    ++delta[a];
    --delta[-a];
  }
  return AbacusDisplay(p, std::move(delta));
}

int AbacusDisplay::occupancy(int pos) const {
  auto it = delta_.find(pos);
  return vacuum(pos) + (it == delta_.end() ? 0 : it->second);
}

int AbacusDisplay::runner_of(int pos) const {
  const int h = params_.h();
  int r = ((pos % h) + h) % h;
  return r > params_.n() ? r - h : r;
}

Partition AbacusDisplay::to_partition() const {
  const int h = params_.h();
  std::vector<int> parts;
  for (const auto& [pos, d] : delta_) {
    auto mirror = delta_.find(-pos);
    if (mirror == delta_.end() || mirror->second != -d)
      throw std::invalid_argument("abacus display is not symmetric at position " +
                                  std::to_string(pos));
    if (pos < 0) continue;
    const int occ = occupancy(pos);
    if (occ < 0 || (pos % h != 0 && occ > 1))
      throw std::invalid_argument("abacus display has an invalid occupancy at position " +
                                  std::to_string(pos));
    parts.insert(parts.end(), occ, pos);
  }
  return Partition::from_unsorted(std::move(parts));
}

AbacusDisplay AbacusDisplay::pushed_up() const {
  const int h = params_.h();
  std::map<int, int> charge;
  for (const auto& [pos, d] : delta_) charge[runner_of(pos)] += d;
  if (charge.contains(0) && charge[0] != 0)
    throw InvariantViolation("abacus runner 0 carries non-zero charge");
  std::map<int, int> delta;
  for (const auto& [j, c] : charge) {
    if (j == 0) continue;
    // Vacuum on runner j fills positions j + kh for k < k0.
    const int k0 = j > 0 ? 0 : 1;
    for (int k = k0; k < k0 + c; ++k) delta[j + k * h] += 1;
    for (int k = k0 + c; k < k0; ++k) delta[j + k * h] -= 1;
  }
  return AbacusDisplay(params_, std::move(delta));
}

std::string AbacusDisplay::render() const {
  const int h = params_.h(), n = params_.n();
  auto row_of = [&](int pos) {
    // Row k holds positions kh-n .. kh+n.
    return static_cast<int>(std::floor((pos + n) / static_cast<double>(h)));
  };
  int lo = -1, hi = 1;
  for (const auto& kv : delta_) {
    lo = std::min(lo, row_of(kv.first) - 1);
    hi = std::max(hi, row_of(kv.first) + 1);
  }
  std::string out;
  for (int k = lo; k <= hi; ++k) {
    for (int j = -n; j <= n; ++j) {
      const int pos = k * h + j;
      char cell;
      if (pos == 0) {
        cell = 'x';
      } else {
        const int occ = occupancy(pos);
        if (occ == 0) cell = 'n';
        else if (occ == 1) cell = 'b';
        else if (occ < 0) cell = '-';
        else cell = occ <= 9 ? static_cast<char>('0' + occ) : '+';
      }
      if (j > -n) out += ' ';
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Partition core_via_abacus(const AbacusDisplay& a) { return a.pushed_up().to_partition(); }

std::pair<int, int> bar_positions(const Partition& lambda, const BlockId& b) {
  const HParams& p = b.params();
  if (b.weight() != 2)
    throw std::invalid_argument("bar positions need a weight-2 block");
  if (lambda.size() != b.partition_size() || !is_h_strict(lambda, p) ||
      bar_core(lambda, p) != b.core())
    throw std::invalid_argument(to_string(lambda) + " does not lie in the block");
  std::optional<std::pair<int, int>> found;
  for (const auto& first : remove_h_bar_all(lambda, p)) {
    for (const auto& second : remove_h_bar_all(first.result, p)) {
      if (second.result != b.core())
        throw InvariantViolation("two bar removals from " + to_string(lambda) +
                                 " do not reach the core");
      std::pair<int, int> got = std::minmax(first.recorded, second.recorded);
      if (found && *found != got)
        throw InvariantViolation("bar positions of " + to_string(lambda) +
                                 " depend on the removal order");
      found = got;
    }
  }
  if (!found) throw InvariantViolation("no bar removal found for " + to_string(lambda));
  return *found;
}

AbacusTag AbacusTag::pair_of(int a, int b) {
  const int x = std::abs(a), y = std::abs(b);
  return {Kind::pair, std::min(x, y), std::max(x, y)};
}

std::string to_string(const AbacusTag& tag) {
  switch (tag.kind) {
    case AbacusTag::Kind::pair:
      return "<" + std::to_string(tag.first) + "," + std::to_string(tag.second) + ">";
    case AbacusTag::Kind::single:
      return "<" + std::to_string(tag.first) + ">";
    case AbacusTag::Kind::zero_zero:
      break;
  }
  return "<0,0>";
}

AbacusTag abacus_notation(const Partition& lambda, const BlockId& b) {
  const HParams& p = b.params();
  const int h = p.h();
  auto [a, c] = bar_positions(lambda, b);
  AbacusDisplay display(p, {});
  const int i = display.runner_of(a), j = display.runner_of(c);
  if (a == h && c == h) return AbacusTag::zero_zero();
  if (i != j && i != -j) return AbacusTag::pair_of(i, j);
  if (c == a + h) return AbacusTag::single_of(lambda.contains(a) ? -i : i);
  if (a < c && a + c == 2 * h) return AbacusTag::single_of(lambda.contains(h - a) ? i : -i);
  throw InvariantViolation("no abacus notation for " + to_string(lambda) + " with bars (" +
                           std::to_string(a) + "," + std::to_string(c) + ")");
}

}  // namespace qfock

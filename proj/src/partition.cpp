#include "qfock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "qfock/abacus.hpp"

namespace qfock {

HParams::HParams(int h) : h_(h) {
  if (h < 3 || h % 2 == 0)
    throw std::invalid_argument("h must be an odd integer >= 3, got " + std::to_string(h));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int r) const noexcept {
  return (r >= 1 && r <= length()) ? parts_[r - 1] : 0;
}

int Partition::multiplicity(int a) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), a));
}

std::strong_ordering compare_lex(const Partition& a, const Partition& b) {
  return a.vec() <=> b.vec();
}

std::strong_ordering compare_colex(const Partition& a, const Partition& b) {
  for (int r = std::max(a.length(), b.length()); r >= 1; --r) {
    if (a.part(r) != b.part(r))
      return a.part(r) > b.part(r) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Dominance compare_dominance(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance comparison of partitions of different sizes: " +
                                to_string(a) + " vs " + to_string(b));
  bool a_below = true;  // every prefix sum of a <= that of b
  bool b_below = true;
  int sa = 0, sb = 0;
  for (int r = 1; r <= std::max(a.length(), b.length()); ++r) {
    sa += a.part(r);
    sb += b.part(r);
    if (sa > sb) a_below = false;
    if (sb > sa) b_below = false;
  }
  if (a_below && b_below) return Dominance::equal;
  if (a_below) return Dominance::less;
  if (b_below) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominated_by(const Partition& a, const Partition& b) {
  auto d = compare_dominance(a, b);
  return d == Dominance::less || d == Dominance::equal;
}

bool strictly_dominated_by(const Partition& a, const Partition& b) {
  return compare_dominance(a, b) == Dominance::less;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.vec());
  parts.insert(parts.end(), b.vec().begin(), b.vec().end());
  return Partition::from_unsorted(std::move(parts));
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  auto ia = a.vec().begin(), ib = b.vec().begin();
  while (ia != a.vec().end() && ib != b.vec().end()) {
    if (*ia == *ib) {
      parts.push_back(*ia);
      ++ia;
      ++ib;
    } else if (*ia > *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return Partition(std::move(parts));
}

Partition subtract(const Partition& a, const Partition& b) {
  if (!is_strict(b))
    throw std::invalid_argument("subtract: " + to_string(b) + " is not strict");
  std::vector<int> parts(a.vec());
  for (int x : b.parts()) {
    auto it = std::find(parts.begin(), parts.end(), x);
    if (it == parts.end())
      throw std::invalid_argument("subtract: part " + std::to_string(x) + " missing from " +
                                  to_string(a));
    parts.erase(it);
  }
  return Partition(std::move(parts));
}

int count_between(const Partition& tau, int x, int y) {
  return static_cast<int>(
      std::count_if(tau.vec().begin(), tau.vec().end(), [&](int a) { return x < a && a < y; }));
}

int gamma(const Partition& tau, const HParams& p) { return count_between(tau, 0, p.h()); }

bool is_strict(const Partition& lambda) {
  return std::adjacent_find(lambda.vec().begin(), lambda.vec().end()) == lambda.vec().end();
}

bool is_h_strict(const Partition& lambda, const HParams& p) {
  for (int r = 1; r < lambda.length(); ++r)
    if (lambda.part(r) == lambda.part(r + 1) && lambda.part(r) % p.h() != 0) return false;
  return true;
}

bool is_restricted(const Partition& lambda, const HParams& p) {
  if (!is_h_strict(lambda, p))
    throw std::invalid_argument("is_restricted: " + to_string(lambda) + " is not h-strict");
  const int h = p.h();
  for (int r = 1; r <= lambda.length(); ++r) {
    int cur = lambda.part(r), next = lambda.part(r + 1);
    if (next > cur - h) continue;
    if (next == cur - h && cur % h != 0) continue;
    return false;
  }
  return true;
}

int residue(int col, const HParams& p) {
  const int h = p.h();
  int a = ((col - 1) % h + h) % h;
  int b = ((-col) % h + h) % h;
  return std::min(a, b);
}

namespace {

// Row r may take the new length `len` given the (final) length `above` of
// row r-1.
bool fits_below(int above, int len, int h) {
  if (len > above) return false;
  return len < above || above % h == 0;
}

}  // namespace

// The smallest h-strict partition obtained by deleting i-nodes is found
// greedily from the bottom row up: each row removes as long an i-node
// suffix as the (already minimal) row beneath allows.  Rows only constrain
// their neighbours monotonically, so the result is componentwise minimal.
std::vector<Node> removable_nodes(const Partition& lambda, int i, const HParams& p) {
  const int h = p.h();
  const int l = lambda.length();
  std::vector<int> target(l + 2, 0);
  for (int r = l; r >= 1; --r) {
    const int len = lambda.part(r);
    int suffix = 0;
    while (len - suffix >= 1 && residue(len - suffix, p) == i) ++suffix;
    const int below = target[r + 1];
    int chosen = len;
    for (int t = suffix; t >= 0; --t) {
      int cand = len - t;
      if (fits_below(cand, below, h)) {
        chosen = cand;
        break;
      }
    }
    target[r] = chosen;
  }
  std::vector<Node> nodes;
  for (int r = 1; r <= l; ++r)
    for (int c = target[r] + 1; c <= lambda.part(r); ++c) nodes.push_back({r, c});
  std::sort(nodes.begin(), nodes.end(), node_before);
  return nodes;
}

// Dual greedy, top row down: each row adds as long an i-node suffix as the
// (already maximal) row above allows.
std::vector<Node> addable_nodes(const Partition& lambda, int i, const HParams& p) {
  const int h = p.h();
  const int l = lambda.length();
  std::vector<Node> nodes;
  int above = std::numeric_limits<int>::max();
  bool above_is_top = true;
  for (int r = 1; r <= l + 1; ++r) {
    const int len = lambda.part(r);
    int suffix = 0;
    while (residue(len + suffix + 1, p) == i) ++suffix;
    int chosen = len;
    for (int t = suffix; t >= 0; --t) {
      int cand = len + t;
      if (above_is_top || fits_below(above, cand, h)) {
        chosen = cand;
        break;
      }
    }
    for (int c = len + 1; c <= chosen; ++c) nodes.push_back({r, c});
    above = chosen;
    above_is_top = false;
  }
  std::sort(nodes.begin(), nodes.end(), node_before);
  return nodes;
}

std::vector<int> h_content(const Partition& lambda, const HParams& p) {
  std::vector<int> counts(p.n() + 1, 0);
  for (int len : lambda.parts())
    for (int c = 1; c <= len; ++c) ++counts[residue(c, p)];
  return counts;
}

std::vector<BarRemoval> remove_h_bar_all(const Partition& lambda, const HParams& p) {
  const int h = p.h();
  std::vector<BarRemoval> out;
  auto push = [&](Partition result, int recorded) {
    BarRemoval br{std::move(result), recorded};
    if (std::find(out.begin(), out.end(), br) == out.end()) out.push_back(std::move(br));
  };
  const auto& v = lambda.vec();
  for (std::size_t r = 0; r < v.size(); ++r) {
    const int a = v[r];
    if (a < h || (r > 0 && v[r - 1] == a)) continue;
    std::vector<int> parts(v);
    parts[r] = a - h;
    Partition mu = Partition::from_unsorted(std::move(parts));
    if (is_h_strict(mu, p)) push(std::move(mu), a);
  }
  for (int a = 1; a <= p.n(); ++a) {
    if (lambda.contains(a) && lambda.contains(h - a))
      push(subtract(lambda, Partition{h - a, a}), h - a);
  }
  return out;
}

bool is_bar_core(const Partition& lambda, const HParams& p) {
  return is_h_strict(lambda, p) && remove_h_bar_all(lambda, p).empty();
}

Partition bar_core(const Partition& lambda, const HParams& p) {
  if (!is_h_strict(lambda, p))
    throw std::invalid_argument("bar_core: " + to_string(lambda) + " is not h-strict");
  return core_via_abacus(AbacusDisplay::from_partition(lambda, p));
}

int bar_weight(const Partition& lambda, const HParams& p) {
  return (lambda.size() - bar_core(lambda, p).size()) / p.h();
}

BlockId::BlockId(HParams params, Partition core, int weight)
    : params_(params), core_(std::move(core)), weight_(weight) {
  if (weight_ < 0) throw std::invalid_argument("block weight must be non-negative");
  if (!is_bar_core(core_, params_))
    throw std::invalid_argument(to_string(core_) + " is not a " + std::to_string(params_.h()) +
                                "-bar-core");
}

namespace {

void h_strict_rec(int remaining, int prev, const HParams& p, std::vector<int>& cur,
                  std::vector<Partition>& out, std::size_t cap) {
  if (remaining == 0) {
    if (out.size() >= cap)
      throw ResourceLimit("enumeration exceeded cap of " + std::to_string(cap) + " partitions");
    out.emplace_back(cur);
    return;
  }
  // prev == 0 marks the first part.
  int hi = remaining;
  if (prev > 0) hi = std::min(hi, prev % p.h() == 0 ? prev : prev - 1);
  for (int x = 1; x <= hi; ++x) {
    cur.push_back(x);
    h_strict_rec(remaining - x, x, p, cur, out, cap);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_h_strict(int m, const HParams& p, std::size_t cap) {
  if (m < 0) throw std::invalid_argument("enumerate_h_strict: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  h_strict_rec(m, 0, p, cur, out, cap);
  return out;
}

std::vector<Partition> enumerate_block(const BlockId& b, std::size_t cap) {
  std::vector<Partition> out;
  for (auto& lambda : enumerate_h_strict(b.partition_size(), b.params(), cap))
    if (bar_core(lambda, b.params()) == b.core()) out.push_back(std::move(lambda));
  return out;
}

std::vector<Partition> enumerate_cores(int max_size, const HParams& p) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m)
    for (auto& lambda : enumerate_h_strict(m, p))
      if (is_strict(lambda) && is_bar_core(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (int r = 0; r < lambda.length(); ++r) {
    if (r) s += ',';
    s += std::to_string(lambda.vec()[r]);
  }
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty()) return Partition();
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty part in '" + text + "'");
    int reps = 1;
    auto caret = item.find('^');
    std::string value = item.substr(0, caret);
    std::size_t used = 0;
    int part = 0;
    try {
      part = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        std::string e = item.substr(caret + 1);
        reps = std::stoi(e, &used);
        if (used != e.size() || reps < 1) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad part '" + item + "' in '" + text + "'");
    }
    parts.insert(parts.end(), reps, part);
  }
  return Partition(std::move(parts));
}

}  // namespace qfock

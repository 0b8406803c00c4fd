#include "qfock/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "qfock/abacus.hpp"

namespace qfock {

namespace {

FormulaMatrix empty_formula(const BlockId& b, std::vector<Partition> rows) {
  auto cols = restricted_partitions(rows, b.params());
  CanonicalBasisMatrix m(b, rows, cols);
  std::vector<std::vector<std::string>> prov(rows.size(), std::vector<std::string>(cols.size()));
  return {std::move(m), std::move(prov)};
}

void put(FormulaMatrix& f, const Partition& lambda, const Partition& mu, LaurentPoly value,
         std::string rule) {
  f.provenance[f.matrix.row_index(lambda)][f.matrix.col_index(mu)] = std::move(rule);
  f.matrix.set(lambda, mu, std::move(value));
}

void require_in_block(const Partition& lambda, const BlockId& b) {
  if (lambda.size() != b.partition_size() || !is_h_strict(lambda, b.params()) ||
      bar_core(lambda, b.params()) != b.core())
    throw InvariantViolation(to_string(lambda) + " does not lie in the block of core " +
                             to_string(b.core()));
}

const LaurentPoly kOne(1);

}  // namespace

FormulaMatrix weight0_matrix(const BlockId& b) {
  if (b.weight() != 0) throw std::invalid_argument("weight0_matrix needs a weight-0 block");
  FormulaMatrix f = empty_formula(b, {b.core()});
  put(f, b.core(), b.core(), kOne, "core");
  return f;
}

std::vector<Partition> weight1_chain(const Partition& tau, const HParams& p) {
  if (!is_bar_core(tau, p)) throw std::invalid_argument(to_string(tau) + " is not a bar-core");
  const int h = p.h();
  std::vector<Partition> chain;
  for (int a : tau.parts()) {
    if (tau.contains(a + h)) continue;
    std::vector<int> parts(tau.vec());
    *std::find(parts.begin(), parts.end(), a) = a + h;
    chain.push_back(Partition::from_unsorted(std::move(parts)));
  }
  chain.push_back(union_of(tau, Partition{h}));
  for (int c = p.n() + 1; c < h; ++c)
    if (!tau.contains(c) && !tau.contains(h - c)) chain.push_back(union_of(tau, Partition{c, h - c}));
  std::sort(chain.begin(), chain.end());

  const BlockId b(p, tau, 1);
  if (static_cast<int>(chain.size()) != p.n() + 1)
    throw InvariantViolation("weight-1 block of " + to_string(tau) + " has " +
                             std::to_string(chain.size()) + " partitions");
  for (std::size_t r = 0; r < chain.size(); ++r) {
    require_in_block(chain[r], b);
    if (r > 0 && !strictly_dominated_by(chain[r - 1], chain[r]))
      throw InvariantViolation("weight-1 partitions are not totally ordered by dominance");
    if (is_restricted(chain[r], p) != (r + 1 < chain.size()))
      throw InvariantViolation("unexpected restrictedness of " + to_string(chain[r]));
  }
  return chain;
}

FormulaMatrix weight1_matrix(const Partition& tau, const HParams& p) {
  const auto chain = weight1_chain(tau, p);
  FormulaMatrix f = empty_formula(BlockId(p, tau, 1), chain);
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    put(f, chain[s], chain[s], kOne, "diagonal");
    const Partition& below = chain[s + 1];
    if (below.contains(p.h()))
      put(f, below, chain[s], LaurentPoly::q_power(1), "next in chain, contains h");
    else
      put(f, below, chain[s], LaurentPoly::q_power(2), "next in chain, lacks h");
  }
  return f;
}

std::string to_string(Colour c) {
  switch (c) {
    case Colour::black:
      return "black";
    case Colour::white:
      return "white";
    case Colour::grey:
      break;
  }
  return "grey";
}

int leg_length(const Partition& lambda, int c, const BlockId& b) {
  const int h = b.h();
  const Partition common = intersect(lambda, b.core());
  if (c >= h) return count_between(common, c - h, c);
  if (c > b.n()) return h - c + count_between(common, h - c, c);
  throw InvariantViolation("bar value " + std::to_string(c) + " is too small");
}

bool has_2h_bar(const std::pair<int, int>& barpos, const HParams& p) {
  const auto [a, c] = barpos;
  return c == a + p.h() || (a < c && a + c == 2 * p.h());
}

Weight2Profile weight2_profile(const Partition& lambda, const BlockId& b) {
  Weight2Profile w;
  w.lambda = lambda;
  w.barpos = bar_positions(lambda, b);
  const auto [a, c] = w.barpos;
  w.legs = {leg_length(lambda, a, b), leg_length(lambda, c, b)};
  w.ddd = std::abs(w.legs.first - w.legs.second);
  const int h = b.h();
  const int g = gamma(b.core(), b.params());
  if (w.ddd == 0) {
    if (has_2h_bar(w.barpos, b.params())) {
      const Partition common = intersect(lambda, b.core());
      const int l = c >= 2 * h ? count_between(common, c - 2 * h, c)
                               : 2 * h - c + count_between(common, 2 * h - c, c);
      const int r = (l + 2 * g) % 4;
      w.colour = (r == 0 || r == 3) ? Colour::black : Colour::white;
    } else {
      w.colour = (w.legs.first + g) % 2 == 1 ? Colour::black : Colour::white;
    }
  } else if (w.ddd == 1 && c <= h) {
    const int l = std::min(w.legs.first, w.legs.second);
    w.colour = (l + g) % 2 == 1 ? Colour::black : Colour::white;
  } else {
    w.colour = Colour::grey;
  }
  return w;
}

SpecialSet special_partitions(const Partition& tau, const HParams& p) {
  if (!is_bar_core(tau, p)) throw std::invalid_argument(to_string(tau) + " is not a bar-core");
  const int h = p.h(), n = p.n();
  const int g = gamma(tau, p);
  SpecialSet s;
  // Small values a in 1..n with neither a nor h-a in tau, ascending.
  std::vector<int> free_small;
  for (int a = 1; a <= n; ++a)
    if (!tau.contains(a) && !tau.contains(h - a)) free_small.push_back(a);

  if (g <= n - 2) {
    const int a = free_small.at(0), c = free_small.at(1);
    s.xx = union_of(tau, Partition{h - a, h - c, c, a});
  }
  if (g <= n - 1) {
    const int a = free_small.at(0);
    s.shp = union_of(tau, Partition{h, h - a, a});
    int f = h + 1;
    while (tau.contains(f) || tau.contains(2 * h - f)) ++f;
    s.flt = union_of(tau, Partition{f, 2 * h - f});
  }
  s.nat = union_of(tau, Partition{h, h});
  {
    const Partition with_h = union_of(tau, Partition{h});
    int a = 1;
    while (!(with_h.contains(a) && !tau.contains(a + h))) ++a;
    s.ppi = subtract(union_of(tau, Partition{a + h, h}), Partition{a});
  }
  if (g >= 1) {
    int a = h + 1;
    while (tau.contains(a) || !tau.contains(a - h)) ++a;
    const Partition with_a = union_of(tau, Partition{a});
    int c = a + 1;
    while (tau.contains(c) || !with_a.contains(c - h)) ++c;
    s.yy = subtract(union_of(tau, Partition{c, a}), Partition{c - h, a - h});
  }
  const BlockId b(p, tau, 2);
  for (const auto* x : {&s.xx, &s.shp, &s.nat, &s.flt, &s.ppi, &s.yy})
    if (*x) require_in_block(**x, b);
  return s;
}

namespace {

struct Weight2Block {
  BlockId block;
  std::vector<Partition> rows;
  std::map<Partition, Weight2Profile> profile;
  SpecialSet specials;

  explicit Weight2Block(const BlockId& b)
      : block(b), rows(enumerate_block(b)), specials(special_partitions(b.core(), b.params())) {
    if (b.weight() != 2) throw std::invalid_argument("weight-2 formulas need a weight-2 block");
    for (const auto& lambda : rows) profile.emplace(lambda, weight2_profile(lambda, b));
  }
};

Partition mu_plus_in(const Partition& mu, const Weight2Block& wb) {
  const auto& pm = wb.profile.at(mu);
  std::vector<Partition> candidates;
  for (const auto& lambda : wb.rows) {
    const auto& pl = wb.profile.at(lambda);
    if (pl.ddd == pm.ddd && pl.colour == pm.colour && strictly_dominated_by(mu, lambda))
      candidates.push_back(lambda);
  }
  for (const auto& m : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](const Partition& c) { return dominated_by(m, c); }))
      return m;
  }
  throw InvariantViolation("no least dominant partition above " + to_string(mu) +
                           " with the same ddd and colour (" + std::to_string(candidates.size()) +
                           " candidates)");
}

bool has_h_or_2h(const Partition& lambda, int h) {
  return lambda.contains(h) || lambda.contains(2 * h);
}

// x strictly below lambda strictly below y, with y possibly undefined.
bool between(const Partition& x, const Partition& lambda, const std::optional<Partition>& y) {
  return y && strictly_dominated_by(x, lambda) && strictly_dominated_by(lambda, *y);
}

bool is(const Partition& lambda, const std::optional<Partition>& s) { return s && lambda == *s; }

struct Rule {
  bool applies;
  LaurentPoly value;
  const char* name;
};

FormulaColumn column_in(const Partition& mu, const Weight2Block& wb) {
  const HParams& p = wb.block.params();
  if (!is_restricted(mu, p))
    throw std::invalid_argument(to_string(mu) + " is not restricted");
  const int h = p.h();
  const auto& sp = wb.specials;
  const auto q = [](int e) { return LaurentPoly::q_power(e); };
  const auto ddd = [&](const Partition& lambda) { return wb.profile.at(lambda).ddd; };

  FormulaColumn out{FockVector(p), {}};
  auto emit = [&](const Partition& lambda, const std::vector<Rule>& rules) {
    const Rule* hit = nullptr;
    for (const Rule& r : rules) {
      if (!r.applies) continue;
      if (hit)
        throw InvariantViolation("two rules (" + std::string(hit->name) + ", " + r.name +
                                 ") apply to d" + to_string(lambda) + to_string(mu));
      hit = &r;
    }
    if (!hit) return;
    out.vector.add(lambda, hit->value);
    out.provenance.emplace_back(lambda, hit->name);
  };

  if (is(mu, sp.nat)) {
    for (const auto& lambda : wb.rows) {
      const int d = ddd(lambda);
      emit(lambda, {{lambda == mu, q(0), "nat: diagonal"},
                    {between(*sp.nat, lambda, sp.ppi) && d == 1, q(3) + q(1),
                     "nat: between nat and ppi, ddd 1"},
                    {is(lambda, sp.ppi), q(2), "nat: ppi"},
                    {sp.ppi && between(*sp.ppi, lambda, sp.yy) && d == 1, q(2),
                     "nat: between ppi and yy, ddd 1"},
                    {is(lambda, sp.yy), q(4), "nat: yy"}});
    }
  } else if (is(mu, sp.shp)) {
    for (const auto& lambda : wb.rows) {
      const int d = ddd(lambda);
      emit(lambda, {{lambda == mu, q(0), "shp: diagonal"},
                    {is(lambda, sp.nat), q(1), "shp: nat"},
                    {between(*sp.shp, lambda, sp.flt) && d == 2, q(2),
                     "shp: between shp and flt, ddd 2"},
                    {is(lambda, sp.flt), q(4) + q(2), "shp: flt"},
                    {sp.flt && between(*sp.flt, lambda, sp.ppi) && d == 1, q(2),
                     "shp: between flt and ppi, ddd 1"},
                    {is(lambda, sp.ppi), q(3), "shp: ppi"}});
    }
  } else if (is(mu, sp.xx)) {
    for (const auto& lambda : wb.rows) {
      const int d = ddd(lambda);
      emit(lambda, {{lambda == mu, q(0), "xx: diagonal"},
                    {between(*sp.xx, lambda, sp.shp) && d == 2, q(1),
                     "xx: between xx and shp, ddd 2"},
                    {is(lambda, sp.shp), q(1), "xx: shp"},
                    {is(lambda, sp.nat), q(2), "xx: nat"},
                    {sp.shp && between(*sp.shp, lambda, sp.flt) && d == 2, q(3) + q(1),
                     "xx: between shp and flt, ddd 2"},
                    {is(lambda, sp.flt), q(5) + q(3), "xx: flt"}});
    }
  } else {
    const Partition plus = mu_plus_in(mu, wb);
    const int dmu = ddd(mu);
    for (const auto& lambda : wb.rows) {
      const bool shift = has_h_or_2h(lambda, h) && !has_h_or_2h(mu, h);
      // The tabulated value is q_{lambda mu} d_{lambda mu}; undo the shift.
      const auto tab = [&](int e) { return q(shift ? e - 1 : e); };
      emit(lambda, {{lambda == mu, q(0), "generic: diagonal"},
                    {between(mu, lambda, plus) && std::abs(ddd(lambda) - dmu) == 1, tab(2),
                     shift ? "generic: between mu and mu+, ddd differs by 1, shifted"
                           : "generic: between mu and mu+, ddd differs by 1"},
                    {lambda == plus, tab(4), shift ? "generic: mu+, shifted" : "generic: mu+"}});
    }
  }
  return out;
}

}  // namespace

Partition mu_plus(const Partition& mu, const BlockId& b) {
  Weight2Block wb(b);
  if (!wb.profile.contains(mu))
    throw std::invalid_argument(to_string(mu) + " does not lie in the block");
  return mu_plus_in(mu, wb);
}

FormulaColumn weight2_column(const Partition& mu, const BlockId& b) {
  Weight2Block wb(b);
  if (!wb.profile.contains(mu))
    throw std::invalid_argument(to_string(mu) + " does not lie in the block");
  return column_in(mu, wb);
}

FormulaMatrix weight2_matrix(const BlockId& b) {
  Weight2Block wb(b);
  FormulaMatrix f = empty_formula(b, wb.rows);
  for (const auto& mu : f.matrix.cols()) {
    auto col = column_in(mu, wb);
    for (auto& [lambda, rule] : col.provenance) put(f, lambda, mu, col.vector.coeff(lambda), rule);
  }
  return f;
}

FormulaMatrix formula_matrix(const BlockId& b) {
  switch (b.weight()) {
    case 0:
      return weight0_matrix(b);
    case 1:
      return weight1_matrix(b.core(), b.params());
    case 2:
      return weight2_matrix(b);
    default:
      throw std::invalid_argument("closed formulas exist only for weights 0, 1 and 2");
  }
}

}  // namespace qfock

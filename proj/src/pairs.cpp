#include "qfock/pairs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "qfock/crystal.hpp"
#include "qfock/fock.hpp"
#include "qfock/formulas.hpp"

namespace qfock {

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::A:
      return "A";
    case PairKind::B:
      return "B";
    case PairKind::C:
      return "C";
    case PairKind::zero_residue:
      return "zero-residue";
    case PairKind::generic:
      break;
  }
  return "generic";
}

std::vector<PairDescriptor> detect_pairs(const Partition& sigma, const HParams& p) {
  if (!is_bar_core(sigma, p)) throw std::invalid_argument(to_string(sigma) + " is not a bar-core");
  const int h = p.h(), n = p.n();
  std::vector<PairDescriptor> out;
  for (int i = 0; i <= n; ++i) {
    const auto addable = addable_nodes(sigma, i, p);
    if (addable.empty()) continue;
    PairDescriptor d{p, sigma, psi(sigma, i, p), i, static_cast<int>(addable.size()),
                     PairKind::generic};
    if (!is_bar_core(d.tau, p))
      throw InvariantViolation("psi_" + std::to_string(i) + " of the core " + to_string(sigma) +
                               " is not a core");
    if (i == 0) {
      d.kind = PairKind::zero_residue;
    } else if (d.k == 1 && i < n) {
      const int c = addable.front().col;
      if (c == i + 1)
        d.kind = PairKind::B;
      else if (c > h && (c - i - 1) % h == 0)
        d.kind = PairKind::A;
      else if ((c + i) % h == 0)
        d.kind = PairKind::C;
      else
        throw InvariantViolation("addable " + std::to_string(i) + "-node of " + to_string(sigma) +
                                 " in unexpected column " + std::to_string(c));
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool is_unexceptional(const Partition& lambda, const PairDescriptor& d, Side side) {
  return side == Side::source ? removable_nodes(lambda, d.residue, d.params).empty()
                              : addable_nodes(lambda, d.residue, d.params).empty();
}

bool scopes_kessar_predicted(const PairDescriptor& d, int weight) {
  const int i = d.residue, n = d.params.n();
  if (weight <= 0) return true;
  if (weight == 1) return i != 0 || d.k >= 3;
  if (weight == 2) return i == n || (i >= 1 && d.k >= 2) || (i == 0 && d.k >= 5);
  return false;
}

bool has_exceptional_triples(const PairDescriptor& d) {
  const int i = d.residue, n = d.params.n();
  return (d.k == 1 && i >= 1 && i < n) || (d.k == 3 && i == 0);
}

std::vector<AbacusTag> expected_triple_tags(const PairDescriptor& d) {
  if (!has_exceptional_triples(d))
    throw std::invalid_argument("no exceptional triples for this pair");
  const int i = d.residue;
  const auto s = AbacusTag::single_of;
  const AbacusTag mid = AbacusTag::pair_of(i, i + 1);
  switch (d.kind) {
    case PairKind::A:
      return {s(-i), mid, s(i + 1), s(i), mid, s(-i - 1)};
    case PairKind::B:
      return {mid, s(-i), s(i + 1), s(i), s(-i - 1), mid};
    case PairKind::C:
      return {s(i + 1), mid, s(-i), s(-i - 1), mid, s(i)};
    default:
      return {s(1), mid, s(0), s(0), mid, s(-1)};
  }
}

namespace {

std::vector<Partition> exceptional_in(const std::vector<Partition>& block, const PairDescriptor& d,
                                      Side side) {
  std::vector<Partition> out;
  for (const auto& lambda : block)
    if (!is_unexceptional(lambda, d, side)) out.push_back(lambda);
  return out;
}

void sort_chain(std::vector<Partition>& v, const std::string& what) {
  std::sort(v.begin(), v.end());
  for (std::size_t r = 1; r < v.size(); ++r)
    if (!strictly_dominated_by(v[r - 1], v[r]))
      throw InvariantViolation(what + " are not a dominance chain");
}

}  // namespace

ExceptionalTriples exceptional_triples(const PairDescriptor& d) {
  if (!has_exceptional_triples(d))
    throw std::invalid_argument("exceptional triples need k = 1 with 1 <= i < n, or k = 3 with i = 0");
  const HParams& p = d.params;
  auto src = exceptional_in(enumerate_block(BlockId(p, d.sigma, 2)), d, Side::source);
  auto tgt = exceptional_in(enumerate_block(BlockId(p, d.tau, 2)), d, Side::target);
  if (src.size() != 3 || tgt.size() != 3)
    throw InvariantViolation("expected three exceptional partitions on each side, found " +
                             std::to_string(src.size()) + " and " + std::to_string(tgt.size()));
  sort_chain(src, "source exceptional partitions");
  sort_chain(tgt, "target exceptional partitions");
  return {src[0], src[1], src[2], tgt[0], tgt[1], tgt[2]};
}

bool PairReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Checks {
 public:
  explicit Checks(std::vector<CheckResult>& out) : out_(out) {}

  // Registers a named check; failures after the first keep the first detail.
  CheckResult& named(const std::string& name) {
    for (auto& c : out_)
      if (c.name == name) return c;
    out_.push_back({name, true, ""});
    return out_.back();
  }
  void expect(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    CheckResult& c = named(name);
    if (!ok && c.passed) {
      c.passed = false;
      c.detail = detail();
    }
  }

 private:
  std::vector<CheckResult>& out_;
};

// mu and nu differ only in i-nodes.
bool linked(const Partition& mu, const Partition& nu, int i, const HParams& p) {
  for (int r = 1; r <= std::max(mu.length(), nu.length()); ++r) {
    const int lo = std::min(mu.part(r), nu.part(r)), hi = std::max(mu.part(r), nu.part(r));
    for (int c = lo + 1; c <= hi; ++c)
      if (residue(c, p) != i) return false;
  }
  return true;
}

LaurentPoly lp(const char* s) { return parse_laurent(s); }

using Row = std::array<LaurentPoly, 6>;

std::vector<Row> table_rows(bool zero_residue) {
  const std::vector<std::array<const char*, 6>> one = {
      {"0", "0", "0", "0", "0", "0"},
      {"0", "0", "1", "0", "1", "q^2"},
      {"0", "1", "q^2", "0", "0", "1"},
      {"0", "q^2", "0", "q^2", "0", "q^2"},
      {"1", "q^2", "q^4", "1", "q^2", "q^4"},
      {"q^2", "0", "q^2", "0", "q^2", "0"},
      {"q^2", "q^4", "0", "q^4", "0", "0"},
      {"q^4", "0", "0", "q^2", "q^4", "0"},
      {"0", "q^3 + q", "0", "q^3 + q", "0", "q^3 + q"},
      {"q^2", "q^4 + q^2", "0", "q^4 + q^2", "0", "q^2"},
      {"q^3 + q", "q^5 + q^3", "0", "q^5 + q^3", "0", "0"},
      {"q^3 + q", "0", "q^3 + q", "0", "q^3 + q", "0"}};
  const std::vector<std::array<const char*, 6>> zero = {
      {"0", "0", "0", "0", "0", "0"},
      {"0", "0", "1", "0", "1", "q^2"},
      {"0", "1", "q^2", "0", "0", "1"},
      {"0", "q^2", "0", "q^2", "0", "q^2"},
      {"1", "q", "q^3", "1", "q^2", "q^4"},
      {"q^2", "0", "q", "0", "q", "0"},
      {"q^2", "q^3", "0", "q^3", "0", "0"},
      {"q^4", "0", "0", "q", "q^3", "0"},
      {"0", "q^3 + q", "0", "q^3 + q", "0", "q^3 + q"},
      {"q^3 + q", "q^2", "q^2", "q^2", "q^2", "0"}};
  std::vector<Row> rows;
  for (const auto& r : zero_residue ? zero : one) {
    Row row;
    for (int t = 0; t < 6; ++t) row[t] = lp(r[t]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::array<LaurentPoly, 3>> forbidden_triples(bool zero_residue) {
  const std::vector<std::array<const char*, 3>> one = {
      {"0", "q", "0"}, {"q", "0", "q"}, {"q^2", "q^3", "0"}, {"q^3 + q", "q^2", "q^2"}};
  const std::vector<std::array<const char*, 3>> zero = {
      {"q^2", "q^4 + q^2", "0"}, {"q^3 + q", "0", "q^3 + q"}, {"q^3 + q", "q^5 + q^3", "0"}};
  std::vector<std::array<LaurentPoly, 3>> out;
  for (const auto& r : zero_residue ? zero : one) out.push_back({lp(r[0]), lp(r[1]), lp(r[2])});
  return out;
}

std::string triple_string(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
  return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
}

FockVector combo(const HParams& p, std::initializer_list<std::pair<const char*, Partition>> terms) {
  FockVector v(p);
  for (const auto& [c, lambda] : terms) v.add(lambda, lp(c));
  return v;
}

void check_triples(const PairDescriptor& d, const CanonicalBasisMatrix& ms,
                   const CanonicalBasisMatrix& mt, Checks& ck) {
  const HParams& p = d.params;
  const int i = d.residue;
  const bool zero = i == 0;
  ExceptionalTriples t;
  try {
    t = exceptional_triples(d);
  } catch (const std::exception& e) {
    ck.expect("exceptional partitions", false, [&] { return std::string(e.what()); });
    return;
  }
  ck.named("exceptional partitions");
  const std::array<const Partition*, 6> six = {&t.alpha,     &t.beta,     &t.gamma,
                                               &t.alpha_hat, &t.beta_hat, &t.gamma_hat};
  const auto tags = expected_triple_tags(d);
  for (int s = 0; s < 6; ++s) {
    const BlockId& b = s < 3 ? ms.block() : mt.block();
    const AbacusTag got = abacus_notation(*six[s], b);
    ck.expect("abacus notation of exceptional partitions", got == tags[s], [&] {
      return to_string(*six[s]) + " has " + to_string(got) + ", expected " + to_string(tags[s]);
    });
  }
  ck.expect("psi on exceptional partitions",
            psi(t.alpha, i, p) == t.alpha_hat && psi(t.beta, i, p) == t.gamma_hat &&
                psi(t.gamma, i, p) == t.beta_hat,
            [] { return std::string("psi does not pair the triples as classified"); });

  // Operator identities.
  const int k = d.k;
  const auto f = [&](const Partition& x) { return apply_f(FockVector(p, x), i, k); };
  std::array<FockVector, 3> want_f =
      zero ? std::array<FockVector, 3>{combo(p, {{"q^-3", t.alpha_hat}, {"q^-1", t.beta_hat}}),
                                       combo(p, {{"1 + q^-2", t.alpha_hat},
                                                 {"1", t.beta_hat},
                                                 {"q^2 + 1", t.gamma_hat}}),
                                       combo(p, {{"1", t.alpha_hat},
                                                 {"q^2 + 1", t.beta_hat},
                                                 {"q^4 + q^2", t.gamma_hat}})}
           : std::array<FockVector, 3>{combo(p, {{"q^-2", t.alpha_hat}, {"1", t.beta_hat}}),
                                       combo(p, {{"1", t.alpha_hat}, {"1", t.gamma_hat}}),
                                       combo(p, {{"1", t.beta_hat}, {"q^2", t.gamma_hat}})};
  const std::array<const Partition*, 3> src = {&t.alpha, &t.beta, &t.gamma};
  for (int s = 0; s < 3; ++s) {
    const FockVector got = f(*src[s]);
    ck.expect("f-action on exceptional partitions", got == want_f[s], [&] {
      return "f on " + to_string(*src[s]) + " gives " + to_string(got) + ", expected " +
             to_string(want_f[s]);
    });
  }
  const Partition delta =
      zero ? union_of(d.sigma, Partition{2 * p.h() - 1})
           : remove_nodes(t.alpha, removable_nodes(t.alpha, i, p));
  const std::array<const char*, 3> want_e =
      zero ? std::array<const char*, 3>{"q^-4", "q^-1 + q^-3", "q + q^-1"}
           : std::array<const char*, 3>{"q^-4", "q^-2", "1"};
  for (int s = 0; s < 3; ++s) {
    const FockVector got = apply_e(FockVector(p, *src[s]), i, 1);
    const FockVector want = combo(p, {{want_e[s], delta}});
    ck.expect("e-action on exceptional partitions", got == want, [&] {
      return "e on " + to_string(*src[s]) + " gives " + to_string(got) + ", expected " +
             to_string(want);
    });
  }

  // Canonical basis vectors of alpha and alpha-hat.
  const FockVector g_alpha = ms.column(t.alpha);
  const FockVector want_alpha =
      zero ? combo(p, {{"1", t.alpha}, {"q", t.beta}, {"q^3", t.gamma}})
           : combo(p, {{"1", t.alpha}, {"q^2", t.beta}, {"q^4", t.gamma}});
  ck.expect("canonical basis vector of alpha", g_alpha == want_alpha,
            [&] { return "G" + to_string(t.alpha) + " = " + to_string(g_alpha); });
  const FockVector g_alpha_hat = mt.column(t.alpha_hat);
  const FockVector want_alpha_hat =
      combo(p, {{"1", t.alpha_hat}, {"q^2", t.beta_hat}, {"q^4", t.gamma_hat}});
  ck.expect("canonical basis vector of alpha-hat", g_alpha_hat == want_alpha_hat,
            [&] { return "G" + to_string(t.alpha_hat) + " = " + to_string(g_alpha_hat); });

  // Table rows and forbidden triples.
  const auto rows = table_rows(zero);
  const auto forbidden = forbidden_triples(zero);
  for (const auto& mu : ms.cols()) {
    const Partition mu_hat = psi(mu, i, p);
    const LaurentPoly& a = ms.at(t.alpha, mu);
    const LaurentPoly& b = ms.at(t.beta, mu);
    const LaurentPoly& c = ms.at(t.gamma, mu);
    const auto hit = std::find_if(rows.begin(), rows.end(), [&](const Row& r) {
      return r[0] == a && r[1] == b && r[2] == c;
    });
    ck.expect("table rows", hit != rows.end(), [&] {
      return "column " + to_string(mu) + " has triple " + triple_string(a, b, c);
    });
    if (hit != rows.end()) {
      const LaurentPoly& x = mt.at(t.alpha_hat, mu_hat);
      const LaurentPoly& y = mt.at(t.beta_hat, mu_hat);
      const LaurentPoly& z = mt.at(t.gamma_hat, mu_hat);
      ck.expect("table rows", (*hit)[3] == x && (*hit)[4] == y && (*hit)[5] == z, [&] {
        return "column " + to_string(mu_hat) + " has triple " + triple_string(x, y, z) +
               ", expected " + triple_string((*hit)[3], (*hit)[4], (*hit)[5]);
      });
    }
    for (const auto& lambda : ms.rows()) {
      if (!is_unexceptional(lambda, d, Side::source)) continue;
      const LaurentPoly& u = ms.at(lambda, mu);
      const LaurentPoly& v = mt.at(psi(lambda, i, p), mu_hat);
      ck.expect("table rows", u == v, [&] {
        return "d" + to_string(lambda) + to_string(mu) + " = " + to_string(u) +
               " but its image is " + to_string(v);
      });
    }
    for (const auto& bad : forbidden) {
      ck.expect("forbidden triples", !(bad[0] == a && bad[1] == b && bad[2] == c), [&] {
        return "column " + to_string(mu) + " has triple " + triple_string(a, b, c);
      });
    }
  }

  // ddd values, colours and dominance around the exceptional partitions.
  const auto prof = [&](const Partition& x, const CanonicalBasisMatrix& m) {
    return weight2_profile(x, m.block());
  };
  const auto pa = prof(t.alpha, ms), pb = prof(t.beta, ms), pc = prof(t.gamma, ms);
  const auto pah = prof(t.alpha_hat, mt), pbh = prof(t.beta_hat, mt), pch = prof(t.gamma_hat, mt);
  const int dd = pa.ddd;
  ck.expect("ddd and colour of exceptional partitions",
            dd >= 1 && pc.ddd == dd && pbh.ddd == dd && pah.ddd == dd - 1 && pb.ddd == dd - 1 &&
                pch.ddd == dd - 1 && pa.colour == pbh.colour && pa.colour == pc.colour &&
                pah.colour == pb.colour && pah.colour == pch.colour,
            [&] {
              return "ddd (" + std::to_string(pa.ddd) + "," + std::to_string(pb.ddd) + "," +
                     std::to_string(pc.ddd) + " | " + std::to_string(pah.ddd) + "," +
                     std::to_string(pbh.ddd) + "," + std::to_string(pch.ddd) + ")";
            });
  for (const auto& lambda : ms.rows()) {
    if (!is_unexceptional(lambda, d, Side::source)) continue;
    const int dl = prof(lambda, ms).ddd;
    const Partition image = psi(lambda, i, p);
    auto below = [](const Partition& x, const Partition& y) { return strictly_dominated_by(x, y); };
    if (std::abs(dl - dd) <= 1) {
      ck.expect("dominance around exceptional partitions",
                (below(t.gamma, lambda) && below(t.beta_hat, image)) ||
                    (below(lambda, t.alpha) && below(image, t.beta_hat)),
                [&] { return to_string(lambda) + " sits between alpha and gamma"; });
    }
    if (std::abs(dl - (dd - 1)) <= 1) {
      ck.expect("dominance around exceptional partitions",
                (below(t.beta, lambda) && below(t.gamma_hat, image)) ||
                    (below(lambda, t.beta) && below(image, t.alpha_hat)),
                [&] { return to_string(lambda) + " is not separated by beta"; });
    }
  }
}

}  // namespace

PairReport verify_pair(const PairDescriptor& d, int weight, std::size_t max_rows) {
  PairReport report{d, weight, true, false, {}};
  const HParams& p = d.params;
  const int i = d.residue;
  if (weight == 2 && d.k == 1 && i == 0) {
    report.supported = false;
    return report;
  }
  Checks ck(report.checks);
  const BlockId bs(p, d.sigma, weight), bt(p, d.tau, weight);
  const CanonicalBasisMatrix ms = canonical_basis(bs, PeelPolicy::smallest_residue, max_rows);
  const CanonicalBasisMatrix mt = canonical_basis(bt, PeelPolicy::smallest_residue, max_rows);

  // psi is a bijection between the blocks preserving restrictedness.
  std::map<Partition, Partition> image;
  for (const auto& lambda : ms.rows()) {
    const Partition x = psi(lambda, i, p);
    image.emplace(lambda, x);
    ck.expect("psi maps block to block", mt.has_row(x) && psi(x, i, p) == lambda &&
                                             is_restricted(x, p) == is_restricted(lambda, p),
              [&] { return to_string(lambda) + " maps to " + to_string(x); });
  }
  ck.expect("psi maps block to block", ms.rows().size() == mt.rows().size(),
            [] { return std::string("blocks differ in size"); });

  const auto exc_src = exceptional_in(ms.rows(), d, Side::source);
  report.scopes_kessar = exc_src.empty();

  for (const auto& lambda : ms.rows()) {
    if (!is_unexceptional(lambda, d, Side::source)) continue;
    const int addable = static_cast<int>(addable_nodes(lambda, i, p).size());
    const FockVector got = apply_f(FockVector(p, lambda), i, d.k);
    ck.expect("f-action on unexceptional partitions",
              addable == d.k && got == FockVector(p, image.at(lambda)), [&] {
                return "f on " + to_string(lambda) + " gives " + to_string(got);
              });
  }

  if (scopes_kessar_predicted(d, weight))
    ck.expect("equivalence criteria", report.scopes_kessar, [&] {
      return to_string(exc_src.front()) + " is exceptional although the criteria hold";
    });

  // Columns supported on unexceptional partitions move across unchanged.
  for (const auto& mu : ms.cols()) {
    const FockVector g = ms.column(mu);
    const bool clean = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
      return is_unexceptional(t.first, d, Side::source);
    });
    if (!clean) continue;
    FockVector moved(p);
    for (const auto& [lambda, c] : g.terms()) moved.add(image.at(lambda), c);
    const FockVector target = mt.column(image.at(mu));
    ck.expect("unexceptional columns", moved == target,
              [&] { return "G" + to_string(image.at(mu)) + " = " + to_string(target); });
  }

  // Lexicographic and colexicographic orders through psi.
  std::map<Partition, std::vector<Partition>> links;
  for (const auto& mu : ms.rows())
    for (const auto& nu : mt.rows())
      if (linked(mu, nu, i, p)) links[mu].push_back(nu);
  for (const auto& lambda : ms.rows()) {
    if (!is_unexceptional(lambda, d, Side::source)) continue;
    const Partition& lh = image.at(lambda);
    for (const auto& mu : ms.rows()) {
      for (const auto& mh : links[mu]) {
        if (compare_lex(lambda, mu) > 0)
          ck.expect("lexicographic order", compare_lex(lh, mh) > 0, [&] {
            return to_string(lambda) + ", " + to_string(mu) + " -> " + to_string(lh) + ", " +
                   to_string(mh);
          });
        if (compare_colex(lambda, mu) < 0)
          ck.expect("colexicographic order", compare_colex(lh, mh) < 0, [&] {
            return to_string(lambda) + ", " + to_string(mu) + " -> " + to_string(lh) + ", " +
                   to_string(mh);
          });
      }
    }
  }

  if (weight == 2 && (i >= 1 || d.k >= 3)) {
    const int h = p.h();
    for (const auto& lambda : ms.rows()) {
      if (!is_unexceptional(lambda, d, Side::source)) continue;
      const Partition& x = image.at(lambda);
      const bool a = lambda.contains(h) || lambda.contains(2 * h);
      const bool b = x.contains(h) || x.contains(2 * h);
      ck.expect("parts h and 2h", a == b,
                [&] { return to_string(lambda) + " -> " + to_string(x); });
    }

    const SpecialSet ss = special_partitions(d.sigma, p), st = special_partitions(d.tau, p);
    std::optional<ExceptionalTriples> t;
    if (has_exceptional_triples(d)) t = exceptional_triples(d);
    const std::array<std::pair<const char*, std::pair<const std::optional<Partition>*,
                                                        const std::optional<Partition>*>>,
                     6>
        named = {{{"xx", {&ss.xx, &st.xx}},
                  {"shp", {&ss.shp, &st.shp}},
                  {"nat", {&ss.nat, &st.nat}},
                  {"flt", {&ss.flt, &st.flt}},
                  {"ppi", {&ss.ppi, &st.ppi}},
                  {"yy", {&ss.yy, &st.yy}}}};
    for (std::size_t s = 0; s < named.size(); ++s) {
      const auto& [name, pr] = named[s];
      const auto& from = *pr.first;
      const auto& to = *pr.second;
      bool ok;
      if (!from || !to) {
        ok = !from && !to;
      } else {
        ok = is_unexceptional(*from, d, Side::source) && psi(*from, i, p) == *to;
        if (!ok && s >= 3 && t) ok = *from == t->beta && *to == t->alpha_hat;
      }
      ck.expect("special partitions", ok, [&] {
        return std::string(name) + ": " + (from ? to_string(*from) : "undefined") + " vs " +
               (to ? to_string(*to) : "undefined");
      });
    }
  }

  if (weight == 2 && has_exceptional_triples(d)) check_triples(d, ms, mt, ck);

  if (report.scopes_kessar) {
    for (const auto& mu : ms.cols())
      for (const auto& lambda : ms.rows()) {
        const LaurentPoly& u = ms.at(lambda, mu);
        const LaurentPoly& v = mt.at(image.at(lambda), image.at(mu));
        ck.expect("equivalent blocks have equal matrices", u == v, [&] {
          return "d" + to_string(lambda) + to_string(mu) + " = " + to_string(u) +
                 " but its image is " + to_string(v);
        });
      }
  }
  return report;
}

}  // namespace qfock

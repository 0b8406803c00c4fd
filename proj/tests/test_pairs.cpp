#include <doctest.h>

#include "qfock/pairs.hpp"

using namespace qfock;

namespace {

PairDescriptor pair_for(int h, const Partition& sigma, int i) {
  for (const auto& d : detect_pairs(sigma, HParams(h)))
    if (d.residue == i) return d;
  throw std::logic_error("no such pair");
}

std::string failures(const PairReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.detail + "\n";
  return out;
}

}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("kinds of the h=7 examples") {
    const auto a = pair_for(7, Partition{8, 2, 1}, 1);
    CHECK(a.kind == PairKind::A);
    CHECK(a.k == 1);
    CHECK(a.tau == Partition{9, 2, 1});
    const auto b = pair_for(7, Partition{3, 1}, 1);
    CHECK(b.kind == PairKind::B);
    CHECK(b.tau == Partition{3, 2});
    const auto c = pair_for(7, Partition{5, 4}, 1);
    CHECK(c.kind == PairKind::C);
    CHECK(c.tau == Partition{6, 4});
  }

  TEST_CASE("the kind A pair at h=7 passes every check") {
    const auto r = verify_pair(pair_for(7, Partition{8, 2, 1}, 1), 2);
    CHECK(r.supported);
    CHECK_FALSE(r.scopes_kessar);
    INFO(failures(r));
    CHECK(r.all_passed());
    const auto t = exceptional_triples(r.pair);
    CHECK(strictly_dominated_by(t.alpha, t.beta));
    CHECK(strictly_dominated_by(t.beta, t.gamma));
  }

  TEST_CASE("zero-residue pairs with three addable nodes") {
    const auto d = pair_for(5, Partition{4}, 0);
    CHECK(d.k == 3);
    const auto t = exceptional_triples(d);
    const auto tags = expected_triple_tags(d);
    CHECK(to_string(tags.front()) == "<1>");
    CHECK(to_string(tags.back()) == "<-1>");
    const auto r = verify_pair(d, 2);
    INFO(failures(r));
    CHECK(r.all_passed());
    CHECK(psi(t.alpha, 0, d.params) == t.alpha_hat);
  }

  TEST_CASE("residue-0 pairs with one addable node are declined") {
    const auto d = pair_for(5, Partition{}, 0);
    CHECK(d.k == 1);
    CHECK_FALSE(verify_pair(d, 2).supported);
    CHECK_THROWS_AS(exceptional_triples(d), std::invalid_argument);
  }

  TEST_CASE("every pair over small cores") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (const auto& sigma : enumerate_cores(h == 7 ? 8 : 10, p))
        for (const auto& d : detect_pairs(sigma, p)) {
          CHECK(psi(sigma, d.residue, p) == d.tau);
          for (int w : {1, 2}) {
            const auto r = verify_pair(d, w);
            if (!r.supported) continue;
            INFO("h=", h, " sigma=", to_string(sigma), " i=", d.residue, " w=", w);
            INFO(failures(r));
            CHECK(r.all_passed());
            if (scopes_kessar_predicted(d, w)) CHECK(r.scopes_kessar);
          }
        }
    }
  }

  TEST_CASE("[2:2] pairs of non-zero residue are equivalent") {
    int seen = 0;
    for (int h : {5, 7}) {
      const HParams p(h);
      for (const auto& sigma : enumerate_cores(10, p))
        for (const auto& d : detect_pairs(sigma, p))
          if (d.k == 2 && d.residue >= 1) {
            ++seen;
            const auto r = verify_pair(d, 2);
            CHECK(r.scopes_kessar);
            CHECK(r.all_passed());
          }
    }
    CHECK(seen > 0);
  }

  TEST_CASE("detect_pairs rejects non-cores") {
    CHECK_THROWS_AS(detect_pairs(Partition{6}, HParams(5)), std::invalid_argument);
  }
}

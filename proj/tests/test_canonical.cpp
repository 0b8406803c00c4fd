#include <doctest.h>

#include "oracles.hpp"
#include "qfock/canonical.hpp"

using namespace qfock;

namespace {

FockVector vec(const HParams& p, std::initializer_list<std::pair<const char*, Partition>> terms) {
  FockVector v(p);
  for (const auto& [c, l] : terms) v.add(l, parse_laurent(c));
  return v;
}

// Defining properties checked with the brute-force helpers.
void check_properties(const CanonicalBasisMatrix& m) {
  const int h = m.block().h();
  for (const auto& mu : m.cols()) {
    const auto mv = oracle::parts_of(mu);
    CHECK(oracle::restricted(mv, h));
    for (const auto& l : m.rows()) {
      const LaurentPoly& d = m.at(l, mu);
      if (l == mu) {
        CHECK(d == LaurentPoly(1));
        continue;
      }
      if (d.is_zero()) continue;
      CHECK(d.in_q_zq());
      CHECK(oracle::dominated_by(mv, oracle::parts_of(l)));
      CHECK(oracle::content(oracle::parts_of(l), h) == oracle::content(mv, h));
    }
  }
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("G(6,4) and G(5,3,2) at h=5") {
    const HParams p(5);
    const auto m = canonical_basis(BlockId(p, Partition{}, 2));
    CHECK(m.column(Partition{6, 4}) ==
          vec(p, {{"1", {6, 4}}, {"q^2", {7, 3}}, {"q^2", {8, 2}}, {"q^4", {9, 1}}}));
    CHECK(m.column(Partition{5, 3, 2}) ==
          vec(p, {{"1", {5, 3, 2}}, {"q^2", {5, 4, 1}}, {"q^2", {6, 4}}, {"q^4", {7, 3}}}));
  }

  TEST_CASE("weight 0 is the identity") {
    const HParams p(7);
    const auto m = canonical_basis(BlockId(p, Partition{4, 2}, 0));
    CHECK(m.rows().size() == 1);
    CHECK(m.entries()[0][0] == LaurentPoly(1));
  }

  TEST_CASE("defining properties on blocks of weight up to 3") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (int w = 0; w <= 3; ++w) {
        const int max_core = w <= 1 ? 15 : w == 2 ? (h == 7 ? 8 : 10) : 6;
        for (const auto& core : enumerate_cores(max_core, p)) check_properties(canonical_basis(BlockId(p, core, w)));
      }
    }
  }

  TEST_CASE("both peel policies give the same matrix") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (int w = 1; w <= 3; ++w) {
        const int max_core = w == 1 ? 15 : w == 2 ? (h == 7 ? 8 : 10) : 6;
        for (const auto& core : enumerate_cores(max_core, p)) {
          const BlockId b(p, core, w);
          CHECK(canonical_basis(b, PeelPolicy::smallest_residue) ==
                canonical_basis(b, PeelPolicy::largest_residue));
        }
      }
    }
  }

  TEST_CASE("block size cap") {
    CHECK_THROWS_AS(canonical_basis(BlockId(HParams(3), Partition{}, 3), PeelPolicy::smallest_residue, 2),
                    ResourceLimit);
  }
}

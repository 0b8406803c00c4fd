#include <doctest.h>

#include "qfock/canonical.hpp"
#include "qfock/formulas.hpp"

using namespace qfock;

namespace {

std::vector<std::string> strings(const std::vector<Partition>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

TEST_SUITE("formulas") {
  TEST_CASE("weight-1 chain and matrix over (4,2) at h=7") {
    const HParams p(7);
    CHECK(strings(weight1_chain(Partition{4, 2}, p)) ==
          std::vector<std::string>{"(6,4,2,1)", "(7,4,2)", "(9,4)", "(11,2)"});
    const auto fm = weight1_matrix(Partition{4, 2}, p);
    const auto& m = fm.matrix;
    CHECK(m.rows().size() == 4);
    CHECK(m.cols().size() == 3);
    CHECK(m.at(Partition{7, 4, 2}, Partition{6, 4, 2, 1}) == parse_laurent("q"));
    CHECK(m.at(Partition{9, 4}, Partition{7, 4, 2}) == parse_laurent("q^2"));
    CHECK(m.at(Partition{11, 2}, Partition{9, 4}) == parse_laurent("q^2"));
    CHECK(m.at(Partition{9, 4}, Partition{6, 4, 2, 1}).is_zero());
  }

  TEST_CASE("weight-1 chains have n+1 totally ordered members") {
    for (int h : {3, 5, 7, 9}) {
      const HParams p(h);
      for (const auto& core : enumerate_cores(12, p)) {
        const auto chain = weight1_chain(core, p);
        CHECK(static_cast<int>(chain.size()) == p.n() + 1);
        for (std::size_t r = 0; r + 1 < chain.size(); ++r) {
          CHECK(strictly_dominated_by(chain[r], chain[r + 1]));
          CHECK(is_restricted(chain[r], p));
        }
        CHECK_FALSE(is_restricted(chain.back(), p));
      }
    }
  }

  TEST_CASE("leg lengths of (10,5,4) at h=7") {
    const HParams p(7);
    const BlockId b(p, bar_core(Partition{10, 5, 4}, p), 2);
    const auto prof = weight2_profile(Partition{10, 5, 4}, b);
    CHECK(prof.legs == std::pair{3, 1});  // a=4 gives 3, b=10 gives 1
    CHECK(prof.ddd == 2);
    CHECK(prof.colour == Colour::grey);
  }

  TEST_CASE("special partitions over (1) at h=5") {
    const HParams p(5);
    const auto s = special_partitions(Partition{1}, p);
    CHECK_FALSE(s.xx.has_value());
    CHECK(s.shp == Partition{5, 3, 2, 1});
    CHECK(s.nat == Partition{5, 5, 1});
    CHECK(s.flt == Partition{6, 4, 1});
    CHECK(s.ppi == Partition{6, 5});
    CHECK(s.yy == Partition{11});
    const auto e = special_partitions(Partition{}, p);
    CHECK(e.nat == Partition{5, 5});
    CHECK_FALSE(e.yy.has_value());
  }

  TEST_CASE("special xx for staircase cores") {
    for (int h : {7, 9, 11}) {
      const HParams p(h);
      for (int l = 0; l <= p.n() - 2; ++l) {
        std::vector<int> parts;
        for (int r = l; r >= 1; --r) parts.push_back(r);
        const Partition tau(parts);
        parts.insert(parts.end(), {h - l - 1, h - l - 2, l + 2, l + 1});
        CHECK(special_partitions(tau, p).xx == Partition::from_unsorted(parts));
      }
    }
  }

  TEST_CASE("mu plus over (1) at h=5") {
    const BlockId b(HParams(5), Partition{1}, 2);
    CHECK(mu_plus(Partition{6, 3, 2}, b) == Partition{7, 3, 1});
    CHECK(mu_plus(Partition{6, 4, 1}, b) == Partition{10, 1});
  }

  TEST_CASE("weight-2 matrix over (1) at h=5 equals the oracle") {
    const BlockId b(HParams(5), Partition{1}, 2);
    const auto fm = weight2_matrix(b);
    CHECK(fm.matrix == canonical_basis(b));
    const auto& m = fm.matrix;
    CHECK(m.at(Partition{6, 4, 1}, Partition{5, 3, 2, 1}) == parse_laurent("q^2 + q^4"));
    CHECK(m.at(Partition{6, 4, 1}, Partition{5, 5, 1}) == parse_laurent("q + q^3"));
    CHECK(fm.provenance[m.row_index(Partition{5, 5, 1})][m.col_index(Partition{5, 3, 2, 1})] ==
          "shp: nat");
  }

  TEST_CASE("domination, ddd and colour invariants on weight-2 blocks") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (const auto& core : enumerate_cores(h == 7 ? 8 : 10, p)) {
        const BlockId b(p, core, 2);
        const auto rows = enumerate_block(b);
        std::vector<Weight2Profile> prof;
        for (const auto& l : rows) prof.push_back(weight2_profile(l, b));
        for (const auto& x : prof) {
          CHECK(x.ddd == std::abs(x.legs.first - x.legs.second));
          if (x.ddd >= 2) CHECK(x.colour == Colour::grey);
          if (x.ddd == 1 && x.barpos.second > h) CHECK(x.colour == Colour::grey);
          if (x.ddd == 0 && has_2h_bar(x.barpos, p)) CHECK(x.barpos.first >= h);
        }
        for (const auto& x : prof)
          for (const auto& y : prof) {
            if (x.barpos.first <= y.barpos.first && x.barpos.second <= y.barpos.second)
              CHECK(dominated_by(x.lambda, y.lambda));
            if (compare_dominance(x.lambda, y.lambda) == Dominance::incomparable)
              CHECK(std::abs(x.ddd - y.ddd) >= 2);
          }
      }
    }
  }

  TEST_CASE("weight guard") {
    CHECK_THROWS_AS(formula_matrix(BlockId(HParams(5), Partition{}, 3)), std::invalid_argument);
  }
}

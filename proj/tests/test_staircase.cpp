#include <doctest.h>

#include <map>
#include <set>

#include "qfock/canonical.hpp"
#include "qfock/formulas.hpp"
#include "staircase_cases.hpp"

using namespace qfock;

TEST_SUITE("staircase") {
  TEST_CASE("every column over a staircase core is one tabulated case") {
    std::set<int> families;
    for (int h : {3, 5, 7, 9}) {
      const HParams p(h);
      for (int l = 0; l <= p.n(); ++l) {
        const BlockId b(p, staircase::staircase_core(l), 2);
        const auto m = canonical_basis(b);
        const auto f = weight2_matrix(b).matrix;
        std::map<Partition, int> covered;
        for (const auto& c : staircase::instances(h, l)) {
          families.insert(c.family);
          const Partition mu = staircase::mu_of(c, l);
          INFO("h=", h, " l=", l, " case ", c.family, " ", c.params);
          REQUIRE(m.has_col(mu));
          ++covered[mu];
          CHECK(m.column(mu) == staircase::vector_of(c, l, p));
          CHECK(f.column(mu) == staircase::vector_of(c, l, p));
        }
        for (const auto& mu : m.cols()) CHECK(covered[mu] == 1);
      }
    }
    CHECK(families.size() == 23);
  }
}

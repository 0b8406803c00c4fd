#include <doctest.h>

#include "qfock/canonical.hpp"
#include "qfock/crystal.hpp"

using namespace qfock;

TEST_SUITE("crystal") {
  TEST_CASE("signature and psi on (5,4,2,1) at h=3") {
    const HParams p(3);
    const Partition l{5, 4, 2, 1};
    CHECK(signature_string(i_signature(l, 0, p)) == "-+-++");
    CHECK(psi(l, 0, p) == Partition{6, 4, 2, 1});
  }

  TEST_CASE("psi is an involution preserving restrictedness and cores") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (int m = 0; m <= 15; ++m)
        for (const auto& l : enumerate_h_strict(m, p))
          for (int i = 0; i <= p.n(); ++i) {
            const Partition x = psi(l, i, p);
            CHECK(psi(x, i, p) == l);
            CHECK(is_restricted(x, p) == is_restricted(l, p));
            CHECK(bar_core(x, p) == psi(bar_core(l, p), i, p));
            CHECK(bar_weight(x, p) == bar_weight(l, p));
          }
    }
  }

  TEST_CASE("reduced signature has the form -...-+...+") {
    const HParams p(7);
    for (int m = 0; m <= 14; ++m)
      for (const auto& l : enumerate_h_strict(m, p))
        for (int i = 0; i <= p.n(); ++i) {
          const std::string s = signature_string(reduced_i_signature(l, i, p));
          CHECK(s.find("+-") == std::string::npos);
          CHECK(normal_nodes(l, i, p).size() + conormal_nodes(l, i, p).size() == s.size());
        }
  }

  TEST_CASE("peeled monomials are G(mu) plus bar-invariant multiples of other G(nu)") {
    for (int h : {3, 5, 7}) {
      const HParams p(h);
      for (int m = 0; m <= 12; ++m)
        for (const auto& mu : enumerate_h_strict(m, p)) {
          if (!is_restricted(mu, p)) continue;
          const auto g = canonical_basis(BlockId(p, bar_core(mu, p), bar_weight(mu, p)));
          for (auto policy : {PeelPolicy::smallest_residue, PeelPolicy::largest_residue}) {
            FockVector v = monomial_apply(peel_monomial(mu, p, policy), p);
            // G(nu) has leading term nu at the lexicographic bottom of its support.
            while (!v.terms().empty()) {
              const auto [nu, c] = *v.terms().begin();
              REQUIRE(g.has_col(nu));
              CHECK(c.is_bar_invariant());
              if (nu == mu) CHECK(c == LaurentPoly(1));
              v -= g.column(nu).scaled(c);
            }
          }
        }
    }
  }

  TEST_CASE("string_top refuses nothing on the empty partition") {
    CHECK_FALSE(string_top(Partition{}, HParams(5)).has_value());
  }
}

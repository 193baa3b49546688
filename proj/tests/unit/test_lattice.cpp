#include <doctest.h>

#include "hyperring/corpus.hpp"
#include "hyperring/lattice.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  std::vector<ElementSubset> from_oracle(HyperringTable const& R) {
    std::vector<ElementSubset> out;
    for (auto const& m : oracle::all_hyperideals(R)) {
      out.push_back(ElementSubset::from(R.size(), m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> formatted(HyperringTable const& R, std::vector<ElementSubset> const& v) {
    std::vector<std::string> out;
    for (auto const& s : v) {
      out.push_back(R.format(s));
    }
    return out;
  }

}  // namespace

TEST_CASE("enumeration matches the brute-force filter") {
  for (auto const& e : builtin_corpus()) {
    if (e.ring.size() > 12) {
      continue;
    }
    INFO(e.ring.name());
    CHECK(formatted(e.ring, enumerate_hyperideals(e.ring)) == formatted(e.ring, from_oracle(e.ring)));
  }
}

TEST_CASE("G has exactly six hyperideals") {
  auto G = builtin_G();
  CHECK(formatted(G, enumerate_hyperideals(G))
        == std::vector<std::string>{"{0}", "{0,4}", "{0,6}", "{0,3,6}", "{0,2,4,6}", "{0,1,2,3,4,6}"});
}

TEST_CASE("H has only the trivial hyperideals") {
  auto H = builtin_H();
  CHECK(formatted(H, enumerate_hyperideals(H)) == std::vector<std::string>{"{0}", "{0,1,2}"});
  // {0,2} is not closed under inverses: 0 is in f(2,1,0).
  CHECK_FALSE(is_hyperideal(H, H.subset("0,2")));
}

TEST_CASE("is_hyperideal and closure agree with the oracle on every subset") {
  for (auto const& R : {builtin_G(), builtin_H(), trivial_hyperring()}) {
    auto ideals = from_oracle(R);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << R.size()); ++mask) {
      ElementSubset     S(R.size());
      std::vector<bool> in(R.size());
      for (Element x = 0; x < R.size(); ++x) {
        if ((mask >> x) & 1u) {
          S.insert(x);
          in[x] = true;
        }
      }
      INFO(R.name() << " " << R.format(S));
      CHECK(is_hyperideal(R, S) == oracle::is_hyperideal(R, in));
      auto closure = hyperideal_closure(R, S);
      std::optional<ElementSubset> smallest;
      for (auto const& I : ideals) {
        if (S.is_subset_of(I) && (!smallest || I.size() < smallest->size())) {
          smallest = I;
        }
      }
      REQUIRE(smallest);
      CHECK(closure == *smallest);
    }
  }
}

TEST_CASE("radical properties on every corpus structure") {
  for (auto const& e : builtin_corpus()) {
    auto const& R = e.ring;
    INFO(R.name());
    Lattice L(R);
    auto const& ideals = L.hyperideals();
    for (auto const& I : ideals) {
      auto r = radical_by_primes(R, I);
      CHECK(r == radical_by_powers(R, I));
      CHECK(r == L.radical(I));
      CHECK(I.is_subset_of(r));
      CHECK(radical_by_primes(R, r) == r);
      for (auto const& J : ideals) {
        if (I.is_subset_of(J)) {
          CHECK(r.is_subset_of(radical_by_primes(R, J)));
        }
      }
    }
  }
}

TEST_CASE("radicals, primes and maximal hyperideals of G") {
  auto G = builtin_G();
  Lattice L(G);
  CHECK(formatted(G, L.primes()) == std::vector<std::string>{"{0,3,6}", "{0,2,4,6}"});
  CHECK(G.format(radical_by_primes(G, G.subset("0,4"))) == "{0,2,4,6}");
  CHECK(G.format(radical_by_primes(G, G.subset("0,6"))) == "{0,6}");
  CHECK(G.format(radical_by_primes(G, G.subset("0"))) == "{0,6}");
  CHECK(formatted(G, maximal_hyperideals(G)) == std::vector<std::string>{"{0,3,6}", "{0,2,4,6}"});
  CHECK(G.format(jacobson_radical(G)) == "{0,6}");
}

TEST_CASE("H: {0} is the only maximal hyperideal") {
  auto H = builtin_H();
  CHECK(formatted(H, maximal_hyperideals(H)) == std::vector<std::string>{"{0}"});
  CHECK(H.format(jacobson_radical(H)) == "{0}");
}

TEST_CASE("principal hyperideals and colon sets in G") {
  auto G  = builtin_G();
  auto g2 = generated_by(G, G.element("2"));
  CHECK(G.format(g2.raw) == "{0,2,4,6}");
  CHECK(g2.raw_is_hyperideal);
  CHECK(G.format(generated_by(G, G.element("3")).closure) == "{0,3,6}");
  CHECK(generated_by(G, G.one()).closure.is_full());

  auto q = quotient_sets(G, G.subset("0,4"), G.element("2"));
  CHECK(G.format(q.colon) == "{0,2,4,6}");
  CHECK(G.format(q.annihilator) == "{0,6}");
  CHECK(q.colon_is_hyperideal);
}

TEST_CASE("hyperideal products in G") {
  auto G = builtin_G();
  std::vector<ElementSubset> two{G.subset("0,2,4,6"), G.subset("0,3,6")};
  auto p = hyperideal_product(G, two);
  CHECK(G.format(p.raw) == "{0,6}");
  CHECK(G.format(p.hyperideal) == "{0,6}");
  CHECK_FALSE(p.closure_added);

  std::vector<ElementSubset> one{G.subset("0,3,6")};
  CHECK(hyperideal_product(G, one).raw == G.subset("0,3,6"));

  std::vector<ElementSubset> three(3, G.subset("0,6"));
  CHECK_THROWS_AS(hyperideal_product(G, three), ArityError);
  std::vector<ElementSubset> empty{G.empty_set()};
  CHECK_THROWS_AS(hyperideal_product(G, empty), PreconditionError);
}

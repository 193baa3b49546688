#include <doctest.h>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/corpus.hpp"
#include "hyperring/document.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  std::vector<std::vector<Element>> brute_force_homomorphisms(HyperringTable const& A,
                                                              HyperringTable const& B) {
    std::vector<std::vector<Element>> out;
    for (auto const& m : oracle::all_tuples(B.size(), A.size())) {
      if (is_homomorphism(A, B, m).passed()) {
        out.push_back(m);
      }
    }
    return out;
  }

  std::vector<std::vector<Element>> maps(HomomorphismSearch const& s) {
    std::vector<std::vector<Element>> out;
    for (auto const& h : s.found) {
      out.push_back(h.map);
    }
    return out;
  }

}  // namespace

TEST_CASE("direct product layout") {
  auto G  = builtin_G();
  auto GG = direct_product(G, G);
  CHECK(GG.size() == 36);
  CHECK(GG.name() == "GxG");
  CHECK(GG.label(0) == "(0;0)");
  CHECK(GG.label(1 * 6 + 5) == "(1;6)");
  CHECK(GG.label(GG.one()) == "(1;1)");
  CHECK(validate_krasner(GG).passed());
  for (auto const& t : oracle::all_tuples(G.size(), 4)) {
    Element x = t[0] * 6 + t[1];
    Element y = t[2] * 6 + t[3];
    CHECK(GG.g_eval({x, y}) == G.g_eval({t[0], t[2]}) * 6 + G.g_eval({t[1], t[3]}));
    CHECK(GG.hyperop({x, y})
          == product_subset(G.hyperop({t[0], t[2]}), G.hyperop({t[1], t[3]})));
  }
  CHECK_THROWS_AS(direct_product(G, builtin_H()), ArityError);
}

TEST_CASE("product subsets project back") {
  auto G  = builtin_G();
  auto P1 = G.subset("0,3,6");
  auto P2 = G.subset("0,4");
  auto P  = product_subset(P1, P2);
  CHECK(P.size() == 6);
  auto [a, b] = project(P, 6, 6);
  CHECK(a == P1);
  CHECK(b == P2);
}

TEST_CASE("homomorphism search matches brute force") {
  auto corpus = builtin_corpus();
  auto G      = corpus[0].ring;
  auto Q      = corpus[3].ring;
  auto Q2     = corpus[4].ring;
  for (auto const& [A, B] : std::vector<std::pair<HyperringTable, HyperringTable>>{
           {G, G}, {G, Q}, {Q, G}, {Q, Q}, {G, Q2}, {Q2, G}}) {
    INFO(A.name() << " -> " << B.name());
    auto s = enumerate_homomorphisms(A, B);
    CHECK(s.complete);
    CHECK(maps(s) == brute_force_homomorphisms(A, B));
  }
}

TEST_CASE("homomorphism search respects its node limit") {
  auto G = builtin_G();
  auto s = enumerate_homomorphisms(G, G, 3);
  CHECK_FALSE(s.complete);
}

TEST_CASE("identity and its description") {
  auto                 G = builtin_G();
  std::vector<Element> id{0, 1, 2, 3, 4, 5};
  auto                 h = make_homomorphism(G, G, id);
  CHECK(h.injective);
  CHECK(h.surjective);
  CHECK(h.kernel == G.singleton(G.zero()));
  std::vector<Element> bad{0, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(make_homomorphism(G, G, bad), ValidationFailedError);
}

TEST_CASE("quotient of G by {0,6}") {
  auto G = builtin_G();
  auto q = quotient(G, G.subset("0,6"));
  CHECK(q.ring.labels() == std::vector<std::string>{"[0|6]", "[1]", "[2|4]", "[3]"});
  CHECK(q.ring.name() == "G/[0|6]");
  CHECK(validate_krasner(q.ring).passed());
  CHECK(q.projection.surjective);
  CHECK(q.projection.kernel == G.subset("0,6"));
  CHECK(is_homomorphism(G, q.ring, q.projection.map).passed());
  CHECK(q.ring.format(q.ring.hyperop({q.ring.element("[1]"), q.ring.element("[1]")}))
        == "{[0|6],[2|4]}");
  // Loads back through the document format.
  auto text = serialize_document(q.ring);
  CHECK(serialize_document(parse_document(text)) == text);
}

TEST_CASE("quotient of G by {0,2,4,6}") {
  auto G = builtin_G();
  auto q = quotient(G, G.subset("0,2,4,6"));
  CHECK(q.ring.labels() == std::vector<std::string>{"[0|2|4|6]", "[1|3]"});
  CHECK(validate_krasner(q.ring).passed());
}

TEST_CASE("quotient preconditions") {
  auto G = builtin_G();
  CHECK_THROWS_AS(quotient(G, G.full_set()), ImproperIdealError);
  CHECK_THROWS_AS(quotient(G, G.subset("0,2")), NotAHyperidealError);
}

TEST_CASE("preimages and images under the projection") {
  auto G  = builtin_G();
  auto q  = quotient(G, G.subset("0,6"));
  auto Qr = q.ring;
  CHECK(preimage_ideal(G, q.projection, Qr.subset("[0|6]")) == G.subset("0,6"));
  CHECK(preimage_ideal(G, q.projection, Qr.subset("[0|6],[2|4]")) == G.subset("0,2,4,6"));
  CHECK(image_ideal(Qr, q.projection, G.subset("0,3,6")) == Qr.subset("[0|6],[3]"));
  CHECK_THROWS_AS(image_ideal(Qr, q.projection, G.subset("0,4")), KernelNotContainedError);
}

TEST_CASE("the diagonal is not a homomorphism") {
  // f(x,y) is a set, so (x,x) + (y,y) holds off-diagonal pairs.
  auto                 G  = builtin_G();
  auto                 GG = direct_product(G, G);
  std::vector<Element> diag;
  for (Element x = 0; x < 6; ++x) {
    diag.push_back(x * 6 + x);
  }
  auto rep = is_homomorphism(G, GG, diag);
  CHECK_FALSE(rep.passed());
  CHECK(rep.counts().contains("preserves-f"));
  CHECK_FALSE(rep.counts().contains("preserves-g"));
}

TEST_CASE("image needs an epimorphism") {
  // No corpus pair has a non-surjective homomorphism; the guard is checked
  // on a hand-built value.
  auto         G = builtin_G();
  Homomorphism h{{0, 1, 2, 3, 4, 5}, true, false, G.singleton(G.zero())};
  CHECK_THROWS_AS(image_ideal(G, h, G.subset("0,6")), NotSurjectiveError);
  h.surjective = true;
  CHECK(image_ideal(G, h, G.subset("0,6")) == G.subset("0,6"));
}

TEST_CASE("subhyperrings and multiplicative subsets") {
  auto G = builtin_G();
  CHECK(is_subhyperring(G, G.full_set()));
  CHECK(is_subhyperring(G, G.subset("0,2,4,6")));
  CHECK_FALSE(is_subhyperring(G, G.subset("0,1")));
  CHECK_FALSE(is_subhyperring(G, G.subset("1")));
  auto same = restrict_to(G, G.full_set(), "G'");
  CHECK(same == G);
  CHECK_THROWS_AS(restrict_to(G, G.subset("0,2,4,6"), "E"), PreconditionError);
  CHECK(is_multiplicative_subset(G, G.subset("1")));
  CHECK(is_multiplicative_subset(G, G.subset("1,3")));
  CHECK_FALSE(is_multiplicative_subset(G, G.subset("1,2")));
  CHECK_FALSE(is_multiplicative_subset(G, G.empty_set()));
}

// With a one-element factor, P1 x R2 is P1 again, and {0} of G is wsq but
// not sq. The full-factor product statement needs 1 != 0 in R2.
TEST_CASE("product with the one-element ring") {
  auto    G  = builtin_G();
  auto    T  = trivial_hyperring();
  auto    GT = direct_product(G, T);
  Lattice L(GT);
  auto    P = product_subset(G.singleton(G.zero()), T.full_set());
  CHECK(is_wsq_primary(L, P));
  CHECK_FALSE(is_sq_primary(L, P));
}

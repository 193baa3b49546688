#include <doctest.h>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/corpus.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  // Textbook definitions for a commutative structure, radical by powers.
  struct Reference {
    HyperringTable const& R;
    ElementSubset         P;
    ElementSubset         rad;

    Reference(HyperringTable const& ring, ElementSubset p) : R(ring), P(std::move(p)), rad(ring.size()) {
      for (Element x = 0; x < R.size(); ++x) {
        Element y = x;
        for (std::size_t s = 0; s <= R.size(); ++s) {
          if (P.contains(y)) {
            rad.insert(x);
          }
          Tuple t(R.n(), R.one());
          t[0] = y;
          t[1] = x;
          y    = R.g_eval(t);
        }
      }
    }

    Element g(Tuple t) const {
      t.resize(R.n(), R.one());
      return R.g_eval(t);
    }
    Element sq(Element a) const {
      return g({a, a});
    }
    bool in(Element x) const {
      return P.contains(x);
    }

    std::vector<Tuple> tuples() const {
      return oracle::all_tuples(R.size(), R.n());
    }

    bool prime_condition(ElementSubset const& Q) const {
      for (auto const& t : tuples()) {
        bool some = false;
        for (auto a : t) {
          some = some || Q.contains(a);
        }
        if (Q.contains(R.g_eval(t)) && !some) {
          return false;
        }
      }
      return true;
    }

    bool prime() const {
      return prime_condition(P);
    }
    bool weakly_prime() const {
      for (auto const& t : tuples()) {
        bool some = false;
        for (auto a : t) {
          some = some || in(a);
        }
        Element p = R.g_eval(t);
        if (p != R.zero() && in(p) && !some) {
          return false;
        }
      }
      return true;
    }

    // For each i: a_i in P or the product without a_i in rad.
    bool primary_like(bool weak) const {
      for (auto const& t : tuples()) {
        Element p = R.g_eval(t);
        if (!in(p) || (weak && p == R.zero())) {
          continue;
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
          Tuple u = t;
          u[i]    = R.one();
          if (!in(t[i]) && !rad.contains(R.g_eval(u))) {
            return false;
          }
        }
      }
      return true;
    }

    // For some i: a_i^2 in P or the product without a_i in rad.
    bool sq_like(bool weak) const {
      for (auto const& t : tuples()) {
        Element p = R.g_eval(t);
        if (!in(p) || (weak && p == R.zero())) {
          continue;
        }
        bool some = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
          Tuple u = t;
          u[i]    = R.one();
          some    = some || in(sq(t[i])) || rad.contains(R.g_eval(u));
        }
        if (!some) {
          return false;
        }
      }
      return true;
    }

    bool q_primary() const {
      return !rad.is_full() && prime_condition(rad);
    }

    // k = 2, n = 2 only.
    bool absorbing(ElementSubset const& Q, ElementSubset const& other) const {
      for (auto const& t : oracle::all_tuples(R.size(), 3)) {
        if (!Q.contains(g({g({t[0], t[1]}), t[2]}))) {
          continue;
        }
        Element ab = g({t[0], t[1]});
        Element bc = g({t[1], t[2]});
        Element ac = g({t[0], t[2]});
        if (!Q.contains(ab) && !other.contains(bc) && !other.contains(ac)) {
          return false;
        }
      }
      return true;
    }
  };

}  // namespace

TEST_CASE("predicates match the definitions on every proper hyperideal") {
  for (auto const& e : builtin_corpus()) {
    auto const& R = e.ring;
    if (!e.report.passed()) {
      continue;
    }
    Lattice L(R);
    for (auto const& P : L.proper_hyperideals()) {
      INFO(R.name() << " " << R.format(P));
      Reference ref(R, P);
      REQUIRE(L.radical(P) == ref.rad);
      CHECK(is_prime(L, P) == ref.prime());
      CHECK(is_weakly_prime(L, P) == ref.weakly_prime());
      CHECK(is_primary(L, P) == ref.primary_like(false));
      CHECK(is_weakly_primary(L, P) == ref.primary_like(true));
      CHECK(is_q_primary(L, P) == ref.q_primary());
      CHECK(is_sq_primary(L, P) == ref.sq_like(false));
      CHECK(is_wsq_primary(L, P) == ref.sq_like(true));
      if (R.n() == 2 && R.size() <= 12) {
        CHECK(is_kn_absorbing(L, P, 2) == ref.absorbing(P, P));
        CHECK(is_kn_absorbing_primary(L, P, 2) == ref.absorbing(P, ref.rad));
        CHECK(is_kn_absorbing_q_primary(L, P, 2) == ref.absorbing(ref.rad, ref.rad));
      }
    }
  }
}

TEST_CASE("G: named hyperideals") {
  auto    G = builtin_G();
  Lattice L(G);
  auto    P04  = G.subset("0,4");
  auto    P036 = G.subset("0,3,6");
  CHECK(is_q_primary(L, P04));
  CHECK(is_sq_primary(L, P04));
  CHECK_FALSE(is_prime(L, P04));
  CHECK(is_prime(L, G.subset("0,2,4,6")));
  CHECK(is_wsq_primary(L, P036));
  CHECK(is_sq_primary(L, P036));
  CHECK(is_prime(L, P036));
  // {0,6}: 2*3 = 6 with 2 and 3 outside the radical {0,6}.
  CHECK_FALSE(is_q_primary(L, G.subset("0,6")));
  CHECK_FALSE(is_primary(L, G.subset("0,6")));
  CHECK(is_kn_absorbing(L, G.subset("0,6"), 2));
}

TEST_CASE("H: {0,2} under the best-effort table") {
  auto    H = builtin_H();
  Lattice L(H);
  auto    P = H.subset("0,2");
  CHECK(is_sq_primary(L, P));
  CHECK(is_wsq_primary(L, P));
  CHECK(Reference(H, P).sq_like(false));
}

TEST_CASE("witness is the first violating tuple") {
  auto    G = builtin_G();
  Lattice L(G);
  auto    o = check_prime(L, G.subset("0,4"));
  REQUIRE_FALSE(o.holds);
  REQUIRE(o.witness);
  CHECK(*o.witness == Tuple{G.element("2"), G.element("2")});
  CHECK_FALSE(check_prime(L, G.subset("0,3,6")).witness);
}

TEST_CASE("predicate preconditions") {
  auto    G = builtin_G();
  Lattice L(G);
  CHECK_THROWS_AS(check_prime(L, G.full_set()), ImproperIdealError);
  CHECK_THROWS_AS(check_sq_primary(L, G.subset("2,4")), PreconditionError);
  CHECK_THROWS_AS(check_prime(L, ElementSubset(3, {0})), PreconditionError);
  CHECK_THROWS_AS(check_kn_absorbing(L, G.subset("0,4"), 0), PreconditionError);
}

TEST_CASE("classification record") {
  auto    G   = builtin_G();
  Lattice L(G);
  auto    rec = classify(L, G.subset("0,3,6"), 3);
  CHECK(rec.get("prime"));
  CHECK(rec.get("kn_absorbing_q_primary(k=3)"));
  CHECK_THROWS_AS(rec.get("semiprime"), PreconditionError);
  CHECK(rec.outcomes.size() == predicate_names(3).size());
  auto text = rec.to_text(G);
  CHECK(text.rfind("ideal={0,3,6}\nprime=true\n", 0) == 0);
  CHECK(text == classify(L, G.subset("0,3,6"), 3).to_text(G));
}

TEST_CASE("higher k is weaker for absorbing predicates") {
  for (auto const& R : {builtin_G(), builtin_corpus()[3].ring}) {
    Lattice L(R);
    for (auto const& P : L.proper_hyperideals()) {
      for (std::size_t k = 1; k < 4; ++k) {
        if (is_kn_absorbing(L, P, k)) {
          CHECK(is_kn_absorbing(L, P, k + 1));
        }
      }
      CHECK(is_kn_absorbing(L, P, 1) == is_prime(L, P));
    }
  }
}

TEST_CASE("classify on a structure failing validation records misses") {
  auto    H   = builtin_H();
  Lattice L(H);
  auto    rec = classify(L, H.subset("0,2"));
  CHECK(rec.get("primary"));
  CHECK_FALSE(rec.get("q_primary"));
  REQUIRE_FALSE(rec.notes.empty());
  CHECK(rec.to_text(H).find("note=primary holds but q_primary fails") != std::string::npos);
}

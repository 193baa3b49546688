#include "hyperring/lattice.hpp"

#include <algorithm>
#include <set>

namespace hyperring {

  namespace {
    void check_universe(HyperringTable const& R, ElementSubset const& S) {
      if (S.universe() != R.size()) {
        throw PreconditionError("subset is over a carrier of size " + std::to_string(S.universe())
                                + ", expected " + std::to_string(R.size()));
      }
    }

    // Places x at position i among the others.
    Element g_with(HyperringTable const& R,
                   std::span<Element const> others,
                   std::size_t              i,
                   Element                  x,
                   Tuple&                   scratch) {
      for (std::size_t j = 0, k = 0; j < scratch.size(); ++j) {
        scratch[j] = (j == i) ? x : others[k++];
      }
      return R.g_eval(scratch);
    }

    ElementSubset absorb_once(HyperringTable const& R, ElementSubset const& S) {
      ElementSubset out = S;
      Tuple         scratch(R.n());
      for (std::size_t i = 0; i < R.n(); ++i) {
        for_each_tuple(R.size(), R.n() - 1, [&](std::span<Element const> a) {
          S.for_each([&](Element x) { out.insert(g_with(R, a, i, x, scratch)); });
          return true;
        });
      }
      return out;
    }
  }  // namespace

  ElementSubset inverse_candidates(HyperringTable const& R, Element x) {
    ElementSubset out = R.empty_set();
    Tuple         t(R.m(), R.zero());
    for (Element y = 0; y < R.size(); ++y) {
      t[0] = x;
      t[1] = y;
      if (R.hyperop(t).contains(R.zero())) {
        out.insert(y);
      }
    }
    return out;
  }

  bool is_hyperideal(HyperringTable const& R, ElementSubset const& S) {
    check_universe(R, S);
    if (!S.contains(R.zero())) {
      return false;
    }
    std::vector<ElementSubset> args(R.m(), S);
    if (!R.f_extend(args).is_subset_of(S)) {
      return false;
    }
    bool ok = true;
    S.for_each([&](Element x) {
      if (ok && !inverse_candidates(R, x).is_subset_of(S)) {
        ok = false;
      }
    });
    return ok && absorb_once(R, S) == S;
  }

  ElementSubset hyperideal_closure(HyperringTable const& R, ElementSubset const& S) {
    check_universe(R, S);
    ElementSubset              cur = S;
    std::vector<ElementSubset> args(R.m(), cur);
    cur.insert(R.zero());
    while (true) {
      std::fill(args.begin(), args.end(), cur);
      ElementSubset next = cur | R.f_extend(args);
      cur.for_each([&](Element x) { next |= inverse_candidates(R, x); });
      next = absorb_once(R, next);
      if (next == cur) {
        return cur;
      }
      cur = std::move(next);
    }
  }

  std::vector<ElementSubset> enumerate_hyperideals(HyperringTable const& R) {
    std::vector<ElementSubset> principal;
    principal.reserve(R.size());
    for (Element x = 0; x < R.size(); ++x) {
      principal.push_back(hyperideal_closure(R, R.singleton(x)));
    }
    std::unordered_map<ElementSubset, bool, ElementSubsetHash> seen;
    std::vector<ElementSubset>                                 found;
    std::vector<ElementSubset>                                 work;
    auto add = [&](ElementSubset const& I) {
      if (seen.emplace(I, true).second) {
        found.push_back(I);
        work.push_back(I);
      }
    };
    add(hyperideal_closure(R, R.empty_set()));
    for (auto const& P : principal) {
      add(P);
    }
    while (!work.empty()) {
      ElementSubset I = std::move(work.back());
      work.pop_back();
      for (auto const& P : principal) {
        if (P.is_subset_of(I)) {
          continue;
        }
        add(hyperideal_closure(R, I | P));
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  bool satisfies_prime_condition(HyperringTable const& R, ElementSubset const& P) {
    check_universe(R, P);
    auto ok = [&](std::span<Element const> t) {
      if (!P.contains(R.g_eval(t))) {
        return true;
      }
      return std::any_of(t.begin(), t.end(), [&](Element a) { return P.contains(a); });
    };
    return R.g_is_commutative() ? for_each_sorted_tuple(R.size(), R.n(), ok)
                                : for_each_tuple(R.size(), R.n(), ok);
  }

  GeneratedSet generated_by(HyperringTable const& R, Element x) {
    ElementSubset raw = R.empty_set();
    Tuple         t(R.n(), R.one());
    t[1] = x;
    for (Element r = 0; r < R.size(); ++r) {
      t[0] = r;
      raw.insert(R.g_eval(t));
    }
    bool is_ideal = is_hyperideal(R, raw);
    return {raw, is_ideal, is_ideal ? raw : hyperideal_closure(R, raw)};
  }

  ElementSubset radical_by_primes(HyperringTable const& R, ElementSubset const& I) {
    check_universe(R, I);
    ElementSubset out = R.full_set();
    for (auto const& P : enumerate_hyperideals(R)) {
      if (!P.is_full() && I.is_subset_of(P) && satisfies_prime_condition(R, P)) {
        out &= P;
      }
    }
    return out;
  }

  ElementSubset radical_by_powers(HyperringTable const& R, ElementSubset const& I) {
    check_universe(R, I);
    ElementSubset out = R.empty_set();
    for (Element a = 0; a < R.size(); ++a) {
      for (std::size_t s = 1; s <= R.size(); ++s) {
        if (I.contains(R.g_power(a, s))) {
          out.insert(a);
          break;
        }
      }
    }
    return out;
  }

  std::vector<ElementSubset> maximal_hyperideals(HyperringTable const& R) {
    auto                       all = enumerate_hyperideals(R);
    std::vector<ElementSubset> out;
    for (auto const& M : all) {
      if (M.is_full()) {
        continue;
      }
      bool maximal = std::none_of(all.begin(), all.end(), [&](ElementSubset const& N) {
        return !N.is_full() && !(N == M) && M.is_subset_of(N);
      });
      if (maximal) {
        out.push_back(M);
      }
    }
    return out;
  }

  ElementSubset jacobson_radical(HyperringTable const& R) {
    ElementSubset out = R.full_set();
    for (auto const& M : maximal_hyperideals(R)) {
      out &= M;
    }
    return out;
  }

  IdealSetPair quotient_sets(HyperringTable const& R, ElementSubset const& P, Element r) {
    check_universe(R, P);
    if (r >= R.size()) {
      throw PreconditionError("anchor outside the carrier");
    }
    ElementSubset colon = R.empty_set();
    ElementSubset ann   = R.empty_set();
    Tuple         t(R.n(), R.one());
    t[0] = r;
    for (Element a = 0; a < R.size(); ++a) {
      t[1]      = a;
      Element v = R.g_eval(t);
      if (P.contains(v)) {
        colon.insert(a);
      }
      if (v == R.zero()) {
        ann.insert(a);
      }
    }
    bool colon_ok = is_hyperideal(R, colon);
    return {r, std::move(colon), std::move(ann), colon_ok};
  }

  ProductResult hyperideal_product(HyperringTable const&          R,
                                   std::span<ElementSubset const> factors) {
    if (factors.size() > R.n()) {
      throw ArityError("hyperideal_product takes at most n factors");
    }
    std::vector<std::vector<Element>> choices;
    for (auto const& F : factors) {
      check_universe(R, F);
      if (F.empty()) {
        throw PreconditionError("hyperideal_product on an empty factor");
      }
      choices.push_back(F.members());
    }
    while (choices.size() < R.n()) {
      choices.push_back({R.one()});
    }
    ElementSubset            raw = R.empty_set();
    std::vector<std::size_t> pos(choices.size(), 0);
    Tuple                    t(choices.size());
    bool                     done = false;
    while (!done) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = choices[i][pos[i]];
      }
      raw.insert(R.g_eval(t));
      std::size_t i = pos.size();
      done          = true;
      while (i > 0) {
        --i;
        if (++pos[i] < choices[i].size()) {
          done = false;
          break;
        }
        pos[i] = 0;
      }
    }
    ElementSubset closed = hyperideal_closure(R, raw);
    bool          added  = !(closed == raw);
    return {std::move(raw), std::move(closed), added};
  }

  Lattice::Lattice(HyperringTable const& R) : _ring(R), _hyperideals(enumerate_hyperideals(R)) {
    for (std::size_t i = 0; i < _hyperideals.size(); ++i) {
      _index.emplace(_hyperideals[i], i);
      auto const& P = _hyperideals[i];
      if (!P.is_full() && satisfies_prime_condition(R, P)) {
        _primes.push_back(P);
      }
    }
    _radicals.reserve(_hyperideals.size());
    for (auto const& I : _hyperideals) {
      ElementSubset out = R.full_set();
      for (auto const& P : _primes) {
        if (I.is_subset_of(P)) {
          out &= P;
        }
      }
      _radicals.push_back(std::move(out));
    }
  }

  std::vector<ElementSubset> Lattice::proper_hyperideals() const {
    std::vector<ElementSubset> out;
    for (auto const& I : _hyperideals) {
      if (!I.is_full()) {
        out.push_back(I);
      }
    }
    return out;
  }

  ElementSubset Lattice::radical(ElementSubset const& I) const {
    check_universe(_ring, I);
    if (auto it = _index.find(I); it != _index.end()) {
      return _radicals[it->second];
    }
    ElementSubset out = _ring.full_set();
    for (auto const& P : _primes) {
      if (I.is_subset_of(P)) {
        out &= P;
      }
    }
    return out;
  }

  ElementSubset radical_by_primes(Lattice const& L, ElementSubset const& I) {
    return L.radical(I);
  }

}  // namespace hyperring

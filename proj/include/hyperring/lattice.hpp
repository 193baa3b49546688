#ifndef HYPERRING_LATTICE_HPP_
#define HYPERRING_LATTICE_HPP_

#include <span>
#include <unordered_map>
#include <vector>

#include "hyperring.hpp"

namespace hyperring {

  // All y with 0 in f(x, y, 0, ..., 0). A singleton in a valid structure.
  ElementSubset inverse_candidates(HyperringTable const& R, Element x);

  // 0 in S, f(S, ..., S) within S, inverses of members in S, and
  // g(a_1, ..., S, ..., a_n) within S for every position and every a_j.
  bool is_hyperideal(HyperringTable const& R, ElementSubset const& S);

  // The smallest hyperideal containing S.
  ElementSubset hyperideal_closure(HyperringTable const& R, ElementSubset const& S);

  // Every hyperideal of R (including R), sorted by size then members.
  // Generated from principal closures and their joins.
  std::vector<ElementSubset> enumerate_hyperideals(HyperringTable const& R);

  // g(a_1^n) in P implies some a_i in P, over all n-tuples. Says nothing
  // about properness.
  bool satisfies_prime_condition(HyperringTable const& R, ElementSubset const& P);

  struct GeneratedSet {
    ElementSubset raw;  // {g(r, x, 1, ..., 1) : r in R}
    bool          raw_is_hyperideal;
    ElementSubset closure;  // hyperideal closure of raw
  };

  GeneratedSet generated_by(HyperringTable const& R, Element x);

  // Intersection of the prime hyperideals containing I, or R if there are
  // none.
  ElementSubset radical_by_primes(HyperringTable const& R, ElementSubset const& I);

  // Elements some g-power of which lies in I, powers 1..|R|.
  ElementSubset radical_by_powers(HyperringTable const& R, ElementSubset const& I);

  std::vector<ElementSubset> maximal_hyperideals(HyperringTable const& R);

  // Intersection of the maximal hyperideals, or R if there are none.
  ElementSubset jacobson_radical(HyperringTable const& R);

  struct IdealSetPair {
    Element       anchor;
    ElementSubset colon;        // {a : g(r, a, 1, ..., 1) in P}
    ElementSubset annihilator;  // {a : g(r, a, 1, ..., 1) = 0}
    bool          colon_is_hyperideal;
  };

  IdealSetPair quotient_sets(HyperringTable const& R, ElementSubset const& P, Element r);

  struct ProductResult {
    ElementSubset raw;         // {g(p_1, ..., p_n) : p_i in the i-th factor}
    ElementSubset hyperideal;  // closure of raw
    bool          closure_added;
  };

  // Fewer than n factors are padded with {1}. Throws ArityError for more
  // than n factors and PreconditionError for an empty factor.
  ProductResult hyperideal_product(HyperringTable const& R, std::span<ElementSubset const> factors);

  // Hyperideals, primes and radicals of one structure, computed once.
  // Keeps a reference to R, which must outlive it.
  class Lattice {
   public:
    explicit Lattice(HyperringTable const& R);

    HyperringTable const& ring() const noexcept {
      return _ring;
    }
    std::vector<ElementSubset> const& hyperideals() const noexcept {
      return _hyperideals;
    }
    std::vector<ElementSubset> proper_hyperideals() const;
    std::vector<ElementSubset> const& primes() const noexcept {
      return _primes;
    }
    bool is_enumerated_hyperideal(ElementSubset const& S) const {
      return _index.contains(S);
    }

    // radical_by_primes, memoised for enumerated hyperideals.
    ElementSubset radical(ElementSubset const& I) const;

   private:
    HyperringTable const&      _ring;
    std::vector<ElementSubset> _hyperideals;
    std::vector<ElementSubset> _primes;
    std::vector<ElementSubset> _radicals;
    std::unordered_map<ElementSubset, std::size_t, ElementSubsetHash> _index;
  };

  ElementSubset radical_by_primes(Lattice const& L, ElementSubset const& I);

}  // namespace hyperring

#endif  // HYPERRING_LATTICE_HPP_

#ifndef HYPERRING_CONSTRUCTIONS_HPP_
#define HYPERRING_CONSTRUCTIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hyperring.hpp"
#include "validate.hpp"

namespace hyperring {

  // Carrier R1 x R2 with pair (a,b) at index a*|R2| + b, labelled "(a;b)".
  // Throws ArityError if the arities differ.
  HyperringTable direct_product(HyperringTable const& R1, HyperringTable const& R2);

  // P1 x P2 as a subset of the product carrier.
  ElementSubset product_subset(ElementSubset const& P1, ElementSubset const& P2);

  // Coordinate projections of a subset of R1 x R2.
  std::pair<ElementSubset, ElementSubset> project(ElementSubset const& P,
                                                  std::size_t          size1,
                                                  std::size_t          size2);

  struct Homomorphism {
    std::vector<Element> map;
    bool                 injective  = false;
    bool                 surjective = false;
    ElementSubset        kernel;  // preimage of the target zero

    Element operator()(Element x) const {
      return map.at(x);
    }
  };

  // Checks h(1) = 1, h(f1(x)) = f2(h(x)) as sets, h(g1(y)) = g2(h(y)).
  ValidationReport is_homomorphism(HyperringTable const&       R1,
                                   HyperringTable const&       R2,
                                   std::vector<Element> const& map);

  // Throws ValidationFailedError when the axioms fail.
  Homomorphism make_homomorphism(HyperringTable const& R1,
                                 HyperringTable const& R2,
                                 std::vector<Element>  map);

  // All homomorphisms R1 -> R2 in lexicographic order of their maps, by
  // backtracking. Stops after `node_limit` search nodes; `complete` reports
  // whether the search finished.
  struct HomomorphismSearch {
    std::vector<Homomorphism> found;
    bool                      complete = true;
  };
  HomomorphismSearch enumerate_homomorphisms(HyperringTable const& R1,
                                             HyperringTable const& R2,
                                             std::size_t           node_limit = 1'000'000);

  struct Quotient {
    HyperringTable             ring;
    Homomorphism               projection;
    std::vector<ElementSubset> classes;  // classes[i] is element i of ring
  };

  // Classes f({r}, Q, {0}, ..., {0}) keyed by their member lists, ordered
  // by smallest member. Induced f and g are checked to be independent of
  // representatives (IllDefinedQuotientError with a witness otherwise).
  Quotient quotient(HyperringTable const& R, ElementSubset const& Q);

  // {x : h(x) in P2}. Throws NotAHyperidealError if it is not a hyperideal.
  ElementSubset preimage_ideal(HyperringTable const& R1,
                               Homomorphism const&   h,
                               ElementSubset const&  P2);

  // h(P1). Needs h surjective (NotSurjectiveError) and Ker h within P1
  // (KernelNotContainedError); throws NotAHyperidealError if the image is
  // not a hyperideal.
  ElementSubset image_ideal(HyperringTable const& R2,
                            Homomorphism const&   h,
                            ElementSubset const&  P1);

  // Contains 0, closed under f, inverses and g.
  bool is_subhyperring(HyperringTable const& R, ElementSubset const& S);

  // S as a hyperring in its own right, labels kept. S must be closed under f
  // and g and contain 0 and 1.
  HyperringTable restrict_to(HyperringTable const& R,
                             ElementSubset const&  S,
                             std::string           name);

  // Non-empty and closed under g.
  bool is_multiplicative_subset(HyperringTable const& R, ElementSubset const& S);

}  // namespace hyperring

#endif  // HYPERRING_CONSTRUCTIONS_HPP_

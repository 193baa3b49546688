#ifndef HYPERRING_CLASSIFY_HPP_
#define HYPERRING_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace hyperring {

  // Outcome of one predicate. A failed tuple predicate carries the first
  // violating tuple in lexicographic carrier order.
  struct Outcome {
    bool                 holds = true;
    std::optional<Tuple> witness;
    std::string          note;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Every predicate below requires P to be a proper subset of the carrier
  // containing 0 (ImproperIdealError / PreconditionError otherwise). They
  // evaluate the defining tuple condition on P; they do not check that P is
  // a hyperideal. Radicals are taken by intersecting primes of the lattice.

  Outcome check_prime(Lattice const& L, ElementSubset const& P);
  // 0 != g(a_1^n) in P implies some a_i in P.
  Outcome check_weakly_prime(Lattice const& L, ElementSubset const& P);
  // g(a_1^n) in P implies, for each i, a_i in P or g(a with a_i -> 1) in
  // the radical.
  Outcome check_primary(Lattice const& L, ElementSubset const& P);
  Outcome check_weakly_primary(Lattice const& L, ElementSubset const& P);
  // The radical is proper and prime.
  Outcome check_q_primary(Lattice const& L, ElementSubset const& P);

  // g of kn-k+1 factors in P implies some (k-1)n-k+2 of them have product
  // in P.
  Outcome check_kn_absorbing(Lattice const& L, ElementSubset const& P, std::size_t k);
  // Leading (k-1)n-k+2 factors have product in P, or some other choice of
  // that many factors has product in the radical.
  Outcome check_kn_absorbing_primary(Lattice const& L, ElementSubset const& P, std::size_t k);
  // The radical is (k,n)-absorbing.
  Outcome check_kn_absorbing_q_primary_by_radical(Lattice const&       L,
                                                  ElementSubset const& P,
                                                  std::size_t          k);
  // The radical is proper, and g of kn-k+1 factors in P implies some
  // (k-1)n-k+2 of them have product in the radical.
  Outcome check_kn_absorbing_q_primary_by_tuples(Lattice const&       L,
                                                 ElementSubset const& P,
                                                 std::size_t          k);
  // Both of the above; throws InconsistencyError if they disagree.
  Outcome check_kn_absorbing_q_primary(Lattice const& L, ElementSubset const& P, std::size_t k);

  // g(r_1^n) in P implies, for some i, g(r_i, r_i, 1, ...) in P or
  // g(r with r_i -> 1) in the radical.
  Outcome check_sq_primary(Lattice const& L, ElementSubset const& P);
  // As above for nonzero products only.
  Outcome check_wsq_primary(Lattice const& L, ElementSubset const& P);

  inline bool is_prime(Lattice const& L, ElementSubset const& P) {
    return check_prime(L, P).holds;
  }
  inline bool is_weakly_prime(Lattice const& L, ElementSubset const& P) {
    return check_weakly_prime(L, P).holds;
  }
  inline bool is_primary(Lattice const& L, ElementSubset const& P) {
    return check_primary(L, P).holds;
  }
  inline bool is_weakly_primary(Lattice const& L, ElementSubset const& P) {
    return check_weakly_primary(L, P).holds;
  }
  inline bool is_q_primary(Lattice const& L, ElementSubset const& P) {
    return check_q_primary(L, P).holds;
  }
  inline bool is_kn_absorbing(Lattice const& L, ElementSubset const& P, std::size_t k) {
    return check_kn_absorbing(L, P, k).holds;
  }
  inline bool is_kn_absorbing_primary(Lattice const& L, ElementSubset const& P, std::size_t k) {
    return check_kn_absorbing_primary(L, P, k).holds;
  }
  inline bool is_kn_absorbing_q_primary(Lattice const& L, ElementSubset const& P, std::size_t k) {
    return check_kn_absorbing_q_primary(L, P, k).holds;
  }
  inline bool is_sq_primary(Lattice const& L, ElementSubset const& P) {
    return check_sq_primary(L, P).holds;
  }
  inline bool is_wsq_primary(Lattice const& L, ElementSubset const& P) {
    return check_wsq_primary(L, P).holds;
  }

  class ClassificationRecord {
   public:
    ElementSubset                                 ideal;
    std::size_t                                   k_max = 2;
    std::vector<std::pair<std::string, Outcome>>  outcomes;
    std::vector<std::string>                      notes;

    // Throws PreconditionError for an unknown predicate name.
    bool        get(std::string const& name) const;
    std::string to_text(HyperringTable const& R) const;
  };

  // Runs every predicate (absorbing ones for k = 2..k_max) and asserts
  // prime => primary => q-primary, sq => wsq and sq => q. On a structure
  // failing validate_krasner a miss is recorded in `notes` instead.
  ClassificationRecord classify(Lattice const& L, ElementSubset const& P, std::size_t k_max = 2);

  // Predicate names in the order classify records them.
  std::vector<std::string> predicate_names(std::size_t k_max = 2);

  std::string absorbing_name(std::string const& base, std::size_t k);

}  // namespace hyperring

#endif  // HYPERRING_CLASSIFY_HPP_

#ifndef HYPERRING_VALIDATE_HPP_
#define HYPERRING_VALIDATE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hyperring.hpp"

namespace hyperring {

  struct Violation {
    std::string axiom;
    std::string witness;
    std::string expected;
    std::string found;
  };

  class ValidationReport {
   public:
    // Violations kept per axiom; the rest are only counted.
    static constexpr std::size_t max_kept_per_axiom = 32;

    explicit ValidationReport(std::string structure = {}) : _structure(std::move(structure)) {}

    bool passed() const noexcept {
      return _violations.empty();
    }
    std::string const& structure() const noexcept {
      return _structure;
    }
    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }
    // Total number of violations per axiom, including ones not kept.
    std::map<std::string, std::size_t> const& counts() const noexcept {
      return _counts;
    }

    void add(Violation v);
    void merge(ValidationReport const& that);

    // Deterministic multi-line rendering; the last line ends in '\n'.
    std::string to_text() const;

   private:
    std::string                        _structure;
    std::vector<Violation>             _violations;
    std::map<std::string, std::size_t> _counts;
  };

  // Thrown by loaders that refuse unvalidated structures.
  class ValidationFailedError : public Error {
   public:
    explicit ValidationFailedError(ValidationReport report)
        : Error("validation failed for " + report.structure()), _report(std::move(report)) {}
    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  // Commutativity, associativity, scalar neutral zero, unique inverses and
  // reversibility of f. Also reports empty outputs.
  ValidationReport validate_canonical_hypergroup(HyperringTable const& R);

  // The hypergroup axioms plus associativity and commutativity of g,
  // distributivity of g over f in every position, absorbing zero and scalar
  // identity.
  ValidationReport validate_krasner(HyperringTable const& R);

}  // namespace hyperring

#endif  // HYPERRING_VALIDATE_HPP_

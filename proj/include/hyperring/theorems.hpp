#ifndef HYPERRING_THEOREMS_HPP_
#define HYPERRING_THEOREMS_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"

namespace hyperring {

  enum class TheoremStatus { pass, fail, vacuous };

  std::string_view to_string(TheoremStatus s) noexcept;

  struct TheoremFailure {
    std::string ideals;   // the hyperideal(s) of the instance, formatted
    std::string witness;  // tuple, element or short description
  };

  struct TheoremReport {
    std::string                 id;
    std::string                 structure;
    std::size_t                 instances = 0;  // instances meeting the hypothesis
    std::vector<TheoremFailure> failures;
    std::vector<std::string>    notes;
    bool                        asserted = true;  // false: outcome is recorded, not required

    TheoremStatus status() const noexcept {
      if (!failures.empty()) {
        return TheoremStatus::fail;
      }
      return instances == 0 ? TheoremStatus::vacuous : TheoremStatus::pass;
    }
    std::string to_text() const;
  };

  struct TheoremInfo {
    std::string id;
    std::string statement;
    bool        asserted;
  };

  // Every registered checker, in report order.
  std::vector<TheoremInfo> const& registered_theorems();

  struct ImplicationEntry {
    std::string antecedent;
    std::string consequent;
    bool        known;             // one of the implications that must hold
    std::size_t antecedent_count;  // hyperideals satisfying the antecedent
    std::size_t counterexamples;
    std::string first_counterexample;  // "structure ideal", empty if none

    bool holds() const noexcept {
      return counterexamples == 0;
    }
  };

  struct ImplicationMatrix {
    std::vector<std::string>      predicates;
    std::vector<ImplicationEntry> entries;  // every ordered pair, row-major

    // Number of known implications that failed.
    std::size_t known_failures() const;
    std::string to_text() const;
  };

  namespace detail {
    struct HarnessState;
  }

  // Theorem instances over a fixed list of structures. Products of pairs,
  // quotients and homomorphisms are built on first use. Structures that fail
  // validation are admitted only if the entry carries that same report;
  // constructions are never built from them.
  class Harness {
   public:
    // Throws ValidationFailedError if a structure fails validation and its
    // entry does not carry the identical report.
    explicit Harness(std::vector<CorpusEntry> structures);
    // Throws ValidationFailedError for any structure failing validation.
    explicit Harness(std::vector<HyperringTable> const& structures);
    ~Harness();
    Harness(Harness&&) noexcept;
    Harness& operator=(Harness&&) noexcept;

    // One report per structure. Throws PreconditionError for an unknown id.
    std::vector<TheoremReport> run(std::string_view id);
    std::vector<TheoremReport> run_all();
    ImplicationMatrix          implication_matrix();

   private:
    std::unique_ptr<detail::HarnessState> _state;
  };

  std::vector<TheoremReport> run_theorem(std::string_view id, std::vector<CorpusEntry> structures);
  std::vector<TheoremReport> run_all(std::vector<CorpusEntry> structures);
  ImplicationMatrix          implication_matrix(std::vector<CorpusEntry> structures);

  // Report lines followed by one summary line. Asserted failures only are
  // counted in `asserted_failures`.
  struct HarnessSummary {
    std::size_t reports           = 0;
    std::size_t pass              = 0;
    std::size_t fail              = 0;
    std::size_t vacuous           = 0;
    std::size_t asserted_failures = 0;
  };
  HarnessSummary summarize(std::vector<TheoremReport> const& reports);
  std::string    render(std::vector<TheoremReport> const& reports);

}  // namespace hyperring

#endif  // HYPERRING_THEOREMS_HPP_

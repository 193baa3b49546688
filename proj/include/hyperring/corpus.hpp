#ifndef HYPERRING_CORPUS_HPP_
#define HYPERRING_CORPUS_HPP_

#include <string_view>
#include <vector>

#include "hyperring.hpp"
#include "validate.hpp"

namespace hyperring {

  // Z12 modulo its units, a (2,2)-hyperring on {0,1,2,3,4,6}.
  HyperringTable builtin_G();

  // The three-element (3,3) table on {0,1,2} with f(0,2,2) read as {2}.
  // Does not pass validate_krasner; its notes say why.
  HyperringTable builtin_H();

  // The one-element (2,2)-hyperring.
  HyperringTable trivial_hyperring();

  struct CorpusEntry {
    HyperringTable   ring;
    ValidationReport report;
  };

  // G, H, GxG, G/[0|6], G/[0|2|4|6] and the trivial ring, in that order,
  // each with its validation report.
  std::vector<CorpusEntry> builtin_corpus();

  // nullptr if no entry has that name.
  CorpusEntry const* find_entry(std::vector<CorpusEntry> const& corpus, std::string_view name);

}  // namespace hyperring

#endif  // HYPERRING_CORPUS_HPP_

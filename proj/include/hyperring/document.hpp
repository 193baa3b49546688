#ifndef HYPERRING_DOCUMENT_HPP_
#define HYPERRING_DOCUMENT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperring.hpp"
#include "validate.hpp"

namespace hyperring {

  // Documents are JSON objects with the fields
  //
  //   name           string
  //   comment        optional array of strings, kept as notes
  //   m, n           integers >= 2
  //   elements       array of distinct labels, none containing ','
  //   zero, one      labels
  //   commutative_f  boolean
  //   commutative_g  boolean
  //   f              object: "a,b,..." -> array of labels
  //   g              object: "a,b,..." -> label
  //
  // With a commutative flag set, a tuple missing from the table takes the
  // entry of its sorted rearrangement. No other field is accepted and no
  // object may repeat a key.

  struct ParseOptions {
    bool validate = true;
  };

  // Throws ParseError, UnknownLabelError, NonTotalTableError, and
  // ValidationFailedError when validation is on and fails.
  HyperringTable parse_document(std::string_view text, ParseOptions options = {});

  // Reads and parses a file. Throws std::runtime_error if it cannot be read.
  HyperringTable load_document(std::filesystem::path const& path, ParseOptions options = {});

  // Canonical text: fixed field order, tuples in lexicographic order of the
  // element list, only sorted tuples for a commutative table.
  std::string serialize_document(HyperringTable const& R);

  void save_document(HyperringTable const& R, std::filesystem::path const& path);

}  // namespace hyperring

#endif  // HYPERRING_DOCUMENT_HPP_

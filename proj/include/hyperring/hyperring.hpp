#ifndef HYPERRING_HYPERRING_HPP_
#define HYPERRING_HYPERRING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "subset.hpp"

namespace hyperring {

  using Tuple = std::vector<Element>;

  // Calls fn(span) for every k-tuple over {0..N-1} in lexicographic order.
  // Stops early if fn returns false.
  template <typename Func>
  bool for_each_tuple(std::size_t N, std::size_t k, Func&& fn) {
    if (N == 0) {
      return true;
    }
    Tuple t(k, 0);
    while (true) {
      if (!fn(std::span<Element const>(t))) {
        return false;
      }
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++t[i] < N) {
          break;
        }
        t[i] = 0;
        if (i == 0) {
          return true;
        }
      }
      if (k == 0) {
        return true;
      }
    }
  }

  // As for_each_tuple but only non-decreasing tuples, still in lex order.
  template <typename Func>
  bool for_each_sorted_tuple(std::size_t N, std::size_t k, Func&& fn) {
    if (N == 0) {
      return true;
    }
    Tuple t(k, 0);
    while (true) {
      if (!fn(std::span<Element const>(t))) {
        return false;
      }
      std::size_t i = k;
      while (i > 0 && t[i - 1] == N - 1) {
        --i;
      }
      if (i == 0) {
        return true;
      }
      Element v = t[i - 1] + 1;
      for (std::size_t j = i - 1; j < k; ++j) {
        t[j] = v;
      }
    }
  }

  // Dense total table of an m-ary hyperoperation.
  class HyperOperationTable {
   public:
    HyperOperationTable() = default;
    HyperOperationTable(std::size_t carrier, std::size_t arity);

    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t carrier_size() const noexcept {
      return _carrier;
    }
    std::size_t tuple_count() const noexcept {
      return _entries.size();
    }

    std::size_t index_of(std::span<Element const> t) const;

    ElementSubset const& at(std::span<Element const> t) const {
      return _entries[index_of(t)];
    }
    ElementSubset& at(std::span<Element const> t) {
      return _entries[index_of(t)];
    }
    ElementSubset const& at_index(std::size_t i) const {
      return _entries[i];
    }

    bool operator==(HyperOperationTable const&) const = default;

   private:
    std::size_t                _carrier = 0;
    std::size_t                _arity   = 0;
    std::vector<ElementSubset> _entries;
  };

  // Dense total table of an n-ary single-valued operation.
  class NaryOperationTable {
   public:
    NaryOperationTable() = default;
    NaryOperationTable(std::size_t carrier, std::size_t arity);

    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t carrier_size() const noexcept {
      return _carrier;
    }
    std::size_t tuple_count() const noexcept {
      return _entries.size();
    }

    std::size_t index_of(std::span<Element const> t) const;

    Element at(std::span<Element const> t) const {
      return _entries[index_of(t)];
    }
    Element& at(std::span<Element const> t) {
      return _entries[index_of(t)];
    }
    Element at_index(std::size_t i) const {
      return _entries[i];
    }

    bool operator==(NaryOperationTable const&) const = default;

   private:
    std::size_t          _carrier = 0;
    std::size_t          _arity   = 0;
    std::vector<Element> _entries;
  };

  // A finite Krasner (m,n)-hyperring given by explicit tables. Construction
  // only checks that the data is well-formed; the axioms are checked by
  // validate_krasner. Instances are immutable.
  class HyperringTable {
   public:
    HyperringTable(std::string              name,
                   std::vector<std::string> labels,
                   HyperOperationTable      f,
                   NaryOperationTable       g,
                   Element                  zero,
                   Element                  one);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t m() const noexcept {
      return _f.arity();
    }
    std::size_t n() const noexcept {
      return _g.arity();
    }
    std::size_t size() const noexcept {
      return _labels.size();
    }
    Element zero() const noexcept {
      return _zero;
    }
    Element one() const noexcept {
      return _one;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Element x) const {
      return _labels.at(x);
    }
    std::optional<Element> find(std::string_view label) const;
    // Throws UnknownLabelError.
    Element element(std::string_view label) const;

    HyperOperationTable const& f_table() const noexcept {
      return _f;
    }
    NaryOperationTable const& g_table() const noexcept {
      return _g;
    }

    // Whether f (resp. g) agrees on all permutations of every tuple.
    // Computed from the tables, not declared.
    bool f_is_commutative() const noexcept {
      return _f_commutative;
    }
    bool g_is_commutative() const noexcept {
      return _g_commutative;
    }

    // Free-form comment lines carried through the document format.
    std::vector<std::string> const& notes() const noexcept {
      return _notes;
    }
    HyperringTable with_notes(std::vector<std::string> notes) const;
    HyperringTable with_name(std::string name) const;

    ElementSubset empty_set() const {
      return ElementSubset(size());
    }
    ElementSubset full_set() const {
      return ElementSubset::full(size());
    }
    ElementSubset singleton(Element x) const {
      return ElementSubset::singleton(size(), x);
    }
    // Parses "a,b,c" (labels) into a subset. Empty string is the empty set.
    ElementSubset subset(std::string_view comma_joined) const;
    std::string format(ElementSubset const& s) const;
    std::string format(std::span<Element const> t) const;

    // f on a single tuple. Throws ArityError.
    ElementSubset const& hyperop(std::span<Element const> args) const;
    ElementSubset const& hyperop(std::initializer_list<Element> args) const {
      return hyperop(std::span<Element const>(args.begin(), args.size()));
    }

    // Union of f over all choice tuples.
    ElementSubset f_extend(std::span<ElementSubset const> sets) const;

    Element g_eval(std::span<Element const> args) const;
    Element g_eval(std::initializer_list<Element> args) const {
      return g_eval(std::span<Element const>(args.begin(), args.size()));
    }

    // Left-nested fold over l(n-1)+1 arguments.
    Element g_iterated(std::span<Element const> args) const;

    // The s-fold g-power of a, padded with the identity where the count is
    // not a representable arity.
    Element g_power(Element a, std::size_t s) const;

    // g-product of any number of factors, identity padded. Zero factors
    // is the identity.
    Element g_product(std::span<Element const> factors) const;

    // The additive inverse, if exactly one x' has 0 in f(x, x', 0, ..., 0).
    std::optional<Element> inverse(Element x) const {
      return _inverse.at(x);
    }

    bool operator==(HyperringTable const& that) const {
      return _labels == that._labels && _f == that._f && _g == that._g
             && _zero == that._zero && _one == that._one;
    }

   private:
    std::string                              _name;
    std::vector<std::string>                 _labels;
    std::unordered_map<std::string, Element> _index;
    HyperOperationTable                      _f;
    NaryOperationTable                       _g;
    Element                                  _zero;
    Element                                  _one;
    bool                                     _f_commutative;
    bool                                     _g_commutative;
    std::vector<std::optional<Element>>      _inverse;
    std::vector<std::string>                 _notes;
  };

  // True iff s = l(n-1)+1 for some l >= 1.
  constexpr bool is_iterated_arity(std::size_t s, std::size_t n) noexcept {
    return s >= n && (s - 1) % (n - 1) == 0;
  }

}  // namespace hyperring

#endif  // HYPERRING_HYPERRING_HPP_

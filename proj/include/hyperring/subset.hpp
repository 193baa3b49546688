#ifndef HYPERRING_SUBSET_HPP_
#define HYPERRING_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hyperring {

  // Elements are ordinal positions in a carrier; labels live on the table.
  using Element = std::uint32_t;

  // A subset of a fixed carrier {0, ..., universe-1}, stored as a bitset.
  class ElementSubset {
   public:
    ElementSubset() = default;
    explicit ElementSubset(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}
    ElementSubset(std::size_t universe, std::initializer_list<Element> xs)
        : ElementSubset(universe) {
      for (Element x : xs) {
        insert(x);
      }
    }

    static ElementSubset full(std::size_t universe) {
      ElementSubset s(universe);
      for (Element x = 0; x < universe; ++x) {
        s.insert(x);
      }
      return s;
    }

    static ElementSubset singleton(std::size_t universe, Element x) {
      ElementSubset s(universe);
      s.insert(x);
      return s;
    }

    static ElementSubset from(std::size_t universe, std::vector<Element> const& xs) {
      ElementSubset s(universe);
      for (Element x : xs) {
        s.insert(x);
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(Element x) const noexcept {
      return x < _universe && ((_words[x >> 6] >> (x & 63)) & 1u);
    }

    void insert(Element x) {
      _words[x >> 6] |= std::uint64_t(1) << (x & 63);
    }

    void erase(Element x) {
      _words[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }

    std::size_t size() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += std::popcount(w);
      }
      return c;
    }

    bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_full() const noexcept {
      return size() == _universe;
    }

    ElementSubset& operator|=(ElementSubset const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    ElementSubset& operator&=(ElementSubset const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    friend ElementSubset operator|(ElementSubset a, ElementSubset const& b) {
      return a |= b;
    }

    friend ElementSubset operator&(ElementSubset a, ElementSubset const& b) {
      return a &= b;
    }

    bool is_subset_of(ElementSubset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    // Members in increasing order.
    std::vector<Element> members() const {
      std::vector<Element> out;
      out.reserve(size());
      for_each([&out](Element x) { out.push_back(x); });
      return out;
    }

    template <typename Func>
    void for_each(Func&& fn) const {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        std::uint64_t w = _words[i];
        while (w != 0) {
          int b = std::countr_zero(w);
          fn(static_cast<Element>(i * 64 + b));
          w &= w - 1;
        }
      }
    }

    // The smallest member; undefined on the empty set.
    Element first() const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] != 0) {
          return static_cast<Element>(i * 64 + std::countr_zero(_words[i]));
        }
      }
      return static_cast<Element>(_universe);
    }

    bool operator==(ElementSubset const&) const = default;

    // Total order: by cardinality, then by sorted member list. Used to make
    // every listing of subsets deterministic.
    std::strong_ordering operator<=>(ElementSubset const& that) const {
      if (auto c = size() <=> that.size(); c != 0) {
        return c;
      }
      auto a = members();
      auto b = that.members();
      return a <=> b;
    }

    std::size_t hash() const noexcept {
      std::size_t h = _universe;
      for (auto w : _words) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  struct ElementSubsetHash {
    std::size_t operator()(ElementSubset const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace hyperring

#endif  // HYPERRING_SUBSET_HPP_

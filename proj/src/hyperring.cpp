#include "hyperring/hyperring.hpp"

#include <algorithm>
#include <sstream>

namespace hyperring {

  namespace {
    std::size_t table_size(std::size_t carrier, std::size_t arity) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < arity; ++i) {
        total *= carrier;
      }
      return total;
    }

    std::size_t lex_index(std::span<Element const> t,
                          std::size_t              carrier,
                          std::size_t              arity) {
      if (t.size() != arity) {
        throw ArityError("expected " + std::to_string(arity) + " arguments, got "
                         + std::to_string(t.size()));
      }
      std::size_t idx = 0;
      for (Element x : t) {
        if (x >= carrier) {
          throw PreconditionError("element index " + std::to_string(x)
                                  + " outside carrier of size " + std::to_string(carrier));
        }
        idx = idx * carrier + x;
      }
      return idx;
    }

    // Checks every tuple against each adjacent transposition; these generate
    // the symmetric group, so this covers all permutations.
    template <typename Table>
    bool table_is_symmetric(Table const& table) {
      std::size_t N = table.carrier_size();
      std::size_t k = table.arity();
      Tuple       swapped(k);
      return for_each_tuple(N, k, [&](std::span<Element const> t) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
          if (t[i] <= t[i + 1]) {
            continue;
          }
          std::copy(t.begin(), t.end(), swapped.begin());
          std::swap(swapped[i], swapped[i + 1]);
          if (!(table.at(t) == table.at(swapped))) {
            return false;
          }
        }
        return true;
      });
    }
  }  // namespace

  HyperOperationTable::HyperOperationTable(std::size_t carrier, std::size_t arity)
      : _carrier(carrier),
        _arity(arity),
        _entries(table_size(carrier, arity), ElementSubset(carrier)) {
    if (arity < 2) {
      throw ArityError("hyperoperation arity must be at least 2");
    }
  }

  std::size_t HyperOperationTable::index_of(std::span<Element const> t) const {
    return lex_index(t, _carrier, _arity);
  }

  NaryOperationTable::NaryOperationTable(std::size_t carrier, std::size_t arity)
      : _carrier(carrier), _arity(arity), _entries(table_size(carrier, arity), 0) {
    if (arity < 2) {
      throw ArityError("operation arity must be at least 2");
    }
  }

  std::size_t NaryOperationTable::index_of(std::span<Element const> t) const {
    return lex_index(t, _carrier, _arity);
  }

  HyperringTable::HyperringTable(std::string              name,
                                 std::vector<std::string> labels,
                                 HyperOperationTable      f,
                                 NaryOperationTable       g,
                                 Element                  zero,
                                 Element                  one)
      : _name(std::move(name)),
        _labels(std::move(labels)),
        _f(std::move(f)),
        _g(std::move(g)),
        _zero(zero),
        _one(one) {
    std::size_t N = _labels.size();
    if (N == 0) {
      throw PreconditionError("carrier must be non-empty");
    }
    if (_f.carrier_size() != N || _g.carrier_size() != N) {
      throw PreconditionError("table carrier size does not match the label list");
    }
    for (Element i = 0; i < N; ++i) {
      auto const& l = _labels[i];
      if (l.empty() || l.find(',') != std::string::npos) {
        throw PreconditionError("label must be non-empty and must not contain ',': \"" + l
                                + "\"");
      }
      if (!_index.emplace(l, i).second) {
        throw PreconditionError("duplicate label \"" + l + "\"");
      }
    }
    if (zero >= N || one >= N) {
      throw PreconditionError("zero and one must be carrier members");
    }
    for (std::size_t i = 0; i < _g.tuple_count(); ++i) {
      if (_g.at_index(i) >= N) {
        throw PreconditionError("g table entry outside the carrier");
      }
    }
    _f_commutative = table_is_symmetric(_f);
    _g_commutative = table_is_symmetric(_g);

    _inverse.assign(N, std::nullopt);
    Tuple t(m(), _zero);
    for (Element x = 0; x < N; ++x) {
      std::size_t found = 0;
      for (Element y = 0; y < N; ++y) {
        t[0] = x;
        t[1] = y;
        if (_f.at(t).contains(_zero)) {
          ++found;
          _inverse[x] = y;
        }
      }
      if (found != 1) {
        _inverse[x] = std::nullopt;
      }
    }
  }

  HyperringTable HyperringTable::with_notes(std::vector<std::string> notes) const {
    HyperringTable copy = *this;
    copy._notes         = std::move(notes);
    return copy;
  }

  HyperringTable HyperringTable::with_name(std::string name) const {
    HyperringTable copy = *this;
    copy._name          = std::move(name);
    return copy;
  }

  std::optional<Element> HyperringTable::find(std::string_view label) const {
    auto it = _index.find(std::string(label));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Element HyperringTable::element(std::string_view label) const {
    auto x = find(label);
    if (!x) {
      throw UnknownLabelError("unknown label \"" + std::string(label) + "\" in " + _name);
    }
    return *x;
  }

  ElementSubset HyperringTable::subset(std::string_view comma_joined) const {
    ElementSubset s = empty_set();
    if (comma_joined.empty()) {
      return s;
    }
    std::size_t start = 0;
    while (true) {
      std::size_t end = comma_joined.find(',', start);
      auto        tok = comma_joined.substr(start, end - start);
      s.insert(element(tok));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return s;
  }

  std::string HyperringTable::format(ElementSubset const& s) const {
    std::string out;
    s.for_each([&](Element x) {
      if (!out.empty()) {
        out += ',';
      }
      out += _labels[x];
    });
    return "{" + out + "}";
  }

  std::string HyperringTable::format(std::span<Element const> t) const {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += _labels.at(t[i]);
    }
    return out + ")";
  }

  ElementSubset const& HyperringTable::hyperop(std::span<Element const> args) const {
    return _f.at(args);
  }

  ElementSubset HyperringTable::f_extend(std::span<ElementSubset const> sets) const {
    if (sets.size() != m()) {
      throw ArityError("f_extend expects " + std::to_string(m()) + " subsets, got "
                       + std::to_string(sets.size()));
    }
    std::vector<std::vector<Element>> choices;
    choices.reserve(sets.size());
    for (auto const& s : sets) {
      if (s.universe() != size()) {
        throw PreconditionError("subset is over a different carrier");
      }
      if (s.empty()) {
        throw PreconditionError("f_extend on an empty subset");
      }
      choices.push_back(s.members());
    }
    ElementSubset            out = empty_set();
    std::vector<std::size_t> pos(sets.size(), 0);
    Tuple                    t(sets.size());
    while (true) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = choices[i][pos[i]];
      }
      out |= _f.at(t);
      std::size_t i = pos.size();
      while (i > 0) {
        --i;
        if (++pos[i] < choices[i].size()) {
          break;
        }
        pos[i] = 0;
        if (i == 0) {
          return out;
        }
      }
    }
  }

  Element HyperringTable::g_eval(std::span<Element const> args) const {
    return _g.at(args);
  }

  Element HyperringTable::g_iterated(std::span<Element const> args) const {
    std::size_t k = n();
    if (!is_iterated_arity(args.size(), k)) {
      throw ArityError("g_iterated expects l(n-1)+1 arguments, got "
                       + std::to_string(args.size()));
    }
    Tuple   t(args.begin(), args.begin() + k);
    Element acc = _g.at(t);
    for (std::size_t pos = k; pos < args.size(); pos += k - 1) {
      t[0] = acc;
      std::copy(args.begin() + pos, args.begin() + pos + (k - 1), t.begin() + 1);
      acc = _g.at(t);
    }
    return acc;
  }

  Element HyperringTable::g_product(std::span<Element const> factors) const {
    std::size_t k = n();
    Tuple       args(factors.begin(), factors.end());
    std::size_t target = k;
    while (target < args.size()) {
      target += k - 1;
    }
    args.resize(target, _one);
    return target == k ? _g.at(args) : g_iterated(args);
  }

  Element HyperringTable::g_power(Element a, std::size_t s) const {
    if (s == 0) {
      throw ArityError("g_power requires a positive power count");
    }
    Tuple args(s, a);
    return g_product(args);
  }

}  // namespace hyperring

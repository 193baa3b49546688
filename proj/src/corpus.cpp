#include "hyperring/corpus.hpp"

#include <algorithm>

#include "hyperring/constructions.hpp"

namespace hyperring {

  namespace {
    // Row-major over the element order 0,1,2,3,4,6.
    constexpr char const* g_sums[6][6] = {
        {"0", "1", "2", "3", "4", "6"},
        {"1", "0,2,4,6", "1,3", "2,4", "1,3", "1"},
        {"2", "1,3", "0,4", "1", "2,6", "4"},
        {"3", "2,4", "1", "0,6", "1", "3"},
        {"4", "1,3", "2,6", "1", "0,4", "2"},
        {"6", "1", "4", "3", "2", "0"},
    };

    Element unit_class(int residue) {
      switch (residue % 12) {
        case 0: return 0;
        case 1: case 5: case 7: case 11: return 1;
        case 2: case 10: return 2;
        case 3: case 9: return 3;
        case 4: case 8: return 4;
        default: return 5;  // 6
      }
    }
  }  // namespace

  HyperringTable builtin_G() {
    std::vector<std::string> labels = {"0", "1", "2", "3", "4", "6"};
    int const                reps[6] = {0, 1, 2, 3, 4, 6};
    HyperOperationTable      f(6, 2);
    NaryOperationTable       g(6, 2);
    for (Element a = 0; a < 6; ++a) {
      for (Element b = 0; b < 6; ++b) {
        Element const t[2] = {a, b};
        ElementSubset s(6);
        std::string_view cell = g_sums[a][b];
        for (std::size_t start = 0; start <= cell.size();) {
          auto comma = cell.find(',', start);
          auto part  = cell.substr(start, comma == std::string_view::npos ? cell.size() - start : comma - start);
          for (Element x = 0; x < 6; ++x) {
            if (labels[x] == part) {
              s.insert(x);
            }
          }
          if (comma == std::string_view::npos) {
            break;
          }
          start = comma + 1;
        }
        f.at(t) = s;
        g.at(t) = unit_class(reps[a] * reps[b]);
      }
    }
    return HyperringTable("G", std::move(labels), std::move(f), std::move(g), 0, 1);
  }

  HyperringTable builtin_H() {
    std::vector<std::string> labels = {"0", "1", "2"};
    HyperOperationTable      f(3, 3);
    NaryOperationTable       g(3, 3);
    ElementSubset const      all = ElementSubset::full(3);
    auto                     one_of = [](Element x) { return ElementSubset::singleton(3, x); };
    // Entries on sorted tuples; everything else by symmetry.
    auto f_sorted = [&](Element a, Element b, Element c) -> ElementSubset {
      int ones = (a == 1) + (b == 1) + (c == 1);
      int twos = (a == 2) + (b == 2) + (c == 2);
      if (ones == 0 && twos == 0) return one_of(0);
      if (twos == 0) return one_of(1);
      if (ones == 0) return one_of(2);
      return all;  // 0,1,2 and 1,1,2 and 1,2,2
    };
    for_each_tuple(3, 3, [&](std::span<Element const> t) {
      Tuple s(t.begin(), t.end());
      std::sort(s.begin(), s.end());
      f.at(t) = f_sorted(s[0], s[1], s[2]);
      if (s[0] == 0) {
        g.at(t) = 0;
      } else {
        g.at(t) = s[1] == 1 && s[2] == 1 ? 1 : 2;
      }
      return true;
    });
    HyperringTable H("H", std::move(labels), std::move(f), std::move(g), 0, 1);
    return H.with_notes({
        "f(0,2,2) is missing from the printed table, which instead lists f(0,a,a) = 2",
        "with a unbound; this table reads it as f(0,2,2) = {2}.",
        "Then g(2,1,f(1,1,2)) = {0,2} while f(2,2,2) = {2}, so distributivity fails",
        "and the inverse of 2 is 1, not 2. No completion of the missing entry repairs",
        "both because f(0,1,2) = {0,1,2} is printed explicitly.",
    });
  }

  HyperringTable trivial_hyperring() {
    HyperOperationTable f(1, 2);
    NaryOperationTable  g(1, 2);
    Element const       t[2] = {0, 0};
    f.at(t)                  = ElementSubset::singleton(1, 0);
    g.at(t)                  = 0;
    return HyperringTable("Trivial", {"0"}, std::move(f), std::move(g), 0, 0);
  }

  std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](HyperringTable R) {
      auto rep = validate_krasner(R);
      out.push_back({std::move(R), std::move(rep)});
    };
    HyperringTable G = builtin_G();
    add(G);
    add(builtin_H());
    add(direct_product(G, G));
    add(quotient(G, G.subset("0,6")).ring);
    add(quotient(G, G.subset("0,2,4,6")).ring);
    add(trivial_hyperring());
    return out;
  }

  CorpusEntry const* find_entry(std::vector<CorpusEntry> const& corpus, std::string_view name) {
    for (auto const& e : corpus) {
      if (e.ring.name() == name) {
        return &e;
      }
    }
    return nullptr;
  }

}  // namespace hyperring

#include "hyperring/validate.hpp"

#include <algorithm>

namespace hyperring {

  void ValidationReport::add(Violation v) {
    if (++_counts[v.axiom] <= max_kept_per_axiom) {
      _violations.push_back(std::move(v));
    }
  }

  void ValidationReport::merge(ValidationReport const& that) {
    for (auto const& v : that._violations) {
      _violations.push_back(v);
    }
    for (auto const& [axiom, c] : that._counts) {
      _counts[axiom] += c;
    }
  }

  std::string ValidationReport::to_text() const {
    std::string out = "structure: " + _structure + "\n";
    if (passed()) {
      return out + "status: passed\n";
    }
    std::size_t total = 0;
    for (auto const& [axiom, c] : _counts) {
      total += c;
    }
    out += "status: failed\n";
    out += "violations: " + std::to_string(total) + "\n";
    for (auto const& [axiom, c] : _counts) {
      out += "  " + axiom + ": " + std::to_string(c) + "\n";
    }
    for (auto const& v : _violations) {
      out += v.axiom + " " + v.witness + ": expected " + v.expected + ", found " + v.found
             + "\n";
    }
    for (auto const& [axiom, c] : _counts) {
      if (c > max_kept_per_axiom) {
        out += axiom + ": " + std::to_string(c - max_kept_per_axiom) + " more not shown\n";
      }
    }
    return out;
  }

  namespace {

    // f_extend that yields the empty set when any argument is empty, so that
    // a table with empty outputs can still be checked for everything else.
    ElementSubset extend(HyperringTable const& R, std::vector<ElementSubset> const& sets) {
      for (auto const& s : sets) {
        if (s.empty()) {
          return R.empty_set();
        }
      }
      return R.f_extend(sets);
    }

    void check_nonempty(HyperringTable const& R, ValidationReport& rep) {
      for_each_tuple(R.size(), R.m(), [&](std::span<Element const> t) {
        if (R.hyperop(t).empty()) {
          rep.add({"f-nonempty", "f" + R.format(t), "non-empty subset", "{}"});
        }
        return true;
      });
    }

    template <typename Lookup, typename Render>
    void check_commutative(HyperringTable const& R,
                           std::size_t           arity,
                           std::string const&    axiom,
                           Lookup&&              at,
                           Render&&              render,
                           ValidationReport&     rep) {
      Tuple swapped(arity);
      for_each_tuple(R.size(), arity, [&](std::span<Element const> t) {
        for (std::size_t i = 0; i + 1 < arity; ++i) {
          if (t[i] <= t[i + 1]) {
            continue;
          }
          std::copy(t.begin(), t.end(), swapped.begin());
          std::swap(swapped[i], swapped[i + 1]);
          auto lhs = at(t);
          auto rhs = at(std::span<Element const>(swapped));
          if (!(lhs == rhs)) {
            rep.add({axiom, R.format(t) + " vs " + R.format(swapped), render(rhs), render(lhs)});
          }
        }
        return true;
      });
    }

    void check_f_associative(HyperringTable const& R, ValidationReport& rep) {
      std::size_t                m = R.m();
      std::vector<ElementSubset> args(m, R.empty_set());
      auto nested = [&](std::span<Element const> x, std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
          args[j] = R.singleton(x[j]);
        }
        args[i] = R.hyperop(x.subspan(i, m));
        for (std::size_t j = i + 1; j < m; ++j) {
          args[j] = R.singleton(x[j + m - 1]);
        }
        return extend(R, args);
      };
      for_each_tuple(R.size(), 2 * m - 1, [&](std::span<Element const> x) {
        auto first = nested(x, 0);
        for (std::size_t i = 1; i < m; ++i) {
          auto other = nested(x, i);
          if (!(first == other)) {
            rep.add({"f-associativity",
                     R.format(x) + " inner at 1 vs " + std::to_string(i + 1),
                     R.format(first),
                     R.format(other)});
          }
        }
        return true;
      });
    }

    void check_zero_neutral(HyperringTable const& R, ValidationReport& rep) {
      Tuple t(R.m(), R.zero());
      for (Element x = 0; x < R.size(); ++x) {
        t[0]           = x;
        auto const& fx = R.hyperop(t);
        if (!(fx == R.singleton(x))) {
          rep.add({"zero-neutral", "f" + R.format(t), R.format(R.singleton(x)), R.format(fx)});
        }
      }
    }

    void check_inverses(HyperringTable const& R, ValidationReport& rep) {
      Tuple t(R.m(), R.zero());
      for (Element x = 0; x < R.size(); ++x) {
        ElementSubset candidates = R.empty_set();
        for (Element y = 0; y < R.size(); ++y) {
          t[0] = x;
          t[1] = y;
          if (R.hyperop(t).contains(R.zero())) {
            candidates.insert(y);
          }
        }
        if (candidates.size() != 1) {
          rep.add({"inverse",
                   "(" + R.label(x) + ")",
                   "exactly one y with " + R.label(R.zero()) + " in f(x,y,0...)",
                   R.format(candidates)});
        }
      }
    }

    void check_reversibility(HyperringTable const& R, ValidationReport& rep) {
      std::size_t m = R.m();
      Tuple       probe(m);
      for_each_tuple(R.size(), m, [&](std::span<Element const> y) {
        for (Element yi : y) {
          if (!R.inverse(yi)) {
            return true;  // reported by check_inverses
          }
        }
        R.hyperop(y).for_each([&](Element x) {
          for (std::size_t i = 0; i < m; ++i) {
            probe[0]      = x;
            std::size_t k = 1;
            for (std::size_t j = 0; j < m; ++j) {
              if (j != i) {
                probe[k++] = *R.inverse(y[j]);
              }
            }
            if (!R.hyperop(probe).contains(y[i])) {
              rep.add({"reversibility",
                       R.label(x) + " in f" + R.format(y) + " at position " + std::to_string(i + 1),
                       R.label(y[i]) + " in f" + R.format(probe),
                       R.format(R.hyperop(probe))});
            }
          }
        });
        return true;
      });
    }

    void check_g_associative(HyperringTable const& R, ValidationReport& rep) {
      std::size_t n = R.n();
      Tuple       args(n);
      auto        nested = [&](std::span<Element const> x, std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
          args[j] = x[j];
        }
        args[i] = R.g_eval(x.subspan(i, n));
        for (std::size_t j = i + 1; j < n; ++j) {
          args[j] = x[j + n - 1];
        }
        return R.g_eval(args);
      };
      for_each_tuple(R.size(), 2 * n - 1, [&](std::span<Element const> x) {
        Element first = nested(x, 0);
        for (std::size_t i = 1; i < n; ++i) {
          Element other = nested(x, i);
          if (first != other) {
            rep.add({"g-associativity",
                     R.format(x) + " inner at 1 vs " + std::to_string(i + 1),
                     R.label(first),
                     R.label(other)});
          }
        }
        return true;
      });
    }

    void check_distributive(HyperringTable const& R, ValidationReport& rep) {
      std::size_t m = R.m();
      std::size_t n = R.n();
      Tuple       prod(n);
      Tuple       rhs_args(m);
      for (std::size_t i = 0; i < n; ++i) {
        for_each_tuple(R.size(), n - 1, [&](std::span<Element const> a) {
          auto at = [&](Element x) {
            for (std::size_t j = 0, k = 0; j < n; ++j) {
              prod[j] = (j == i) ? x : a[k++];
            }
            return R.g_eval(prod);
          };
          for_each_tuple(R.size(), m, [&](std::span<Element const> x) {
            ElementSubset lhs = R.empty_set();
            R.hyperop(x).for_each([&](Element t) { lhs.insert(at(t)); });
            for (std::size_t j = 0; j < m; ++j) {
              rhs_args[j] = at(x[j]);
            }
            auto const& rhs = R.hyperop(rhs_args);
            if (!(lhs == rhs)) {
              std::string w = "g(";
              for (std::size_t j = 0, k = 0; j < n; ++j) {
                if (j != 0) {
                  w += ',';
                }
                w += (j == i) ? "f" + R.format(x) : R.label(a[k++]);
              }
              rep.add({"distributivity", w + ")", R.format(rhs), R.format(lhs)});
            }
            return true;
          });
          return true;
        });
      }
    }

    void check_zero_absorbing(HyperringTable const& R, ValidationReport& rep) {
      std::size_t n = R.n();
      Tuple       t(n);
      for (std::size_t i = 0; i < n; ++i) {
        for_each_tuple(R.size(), n - 1, [&](std::span<Element const> a) {
          for (std::size_t j = 0, k = 0; j < n; ++j) {
            t[j] = (j == i) ? R.zero() : a[k++];
          }
          Element v = R.g_eval(t);
          if (v != R.zero()) {
            rep.add({"zero-absorbing", "g" + R.format(t), R.label(R.zero()), R.label(v)});
          }
          return true;
        });
      }
    }

    void check_scalar_identity(HyperringTable const& R, ValidationReport& rep) {
      Tuple t(R.n(), R.one());
      for (Element x = 0; x < R.size(); ++x) {
        t.back()  = x;
        Element v = R.g_eval(t);
        if (v != x) {
          rep.add({"scalar-identity", "g" + R.format(t), R.label(x), R.label(v)});
        }
      }
    }

  }  // namespace

  ValidationReport validate_canonical_hypergroup(HyperringTable const& R) {
    ValidationReport rep(R.name());
    check_nonempty(R, rep);
    check_commutative(
        R,
        R.m(),
        "f-commutativity",
        [&](std::span<Element const> t) { return R.hyperop(t); },
        [&](ElementSubset const& s) { return R.format(s); },
        rep);
    check_f_associative(R, rep);
    check_zero_neutral(R, rep);
    check_inverses(R, rep);
    check_reversibility(R, rep);
    return rep;
  }

  ValidationReport validate_krasner(HyperringTable const& R) {
    ValidationReport rep = validate_canonical_hypergroup(R);
    check_g_associative(R, rep);
    check_commutative(
        R,
        R.n(),
        "g-commutativity",
        [&](std::span<Element const> t) { return R.g_eval(t); },
        [&](Element x) { return R.label(x); },
        rep);
    check_distributive(R, rep);
    check_zero_absorbing(R, rep);
    check_scalar_identity(R, rep);
    return rep;
  }

}  // namespace hyperring

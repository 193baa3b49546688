#include "hyperring/classify.hpp"

#include <algorithm>
#include <optional>

#include "hyperring/validate.hpp"

namespace hyperring {

  namespace {

    void check_proper(HyperringTable const& R, ElementSubset const& P) {
      if (P.universe() != R.size()) {
        throw PreconditionError("subset is over a different carrier");
      }
      if (P.is_full()) {
        throw ImproperIdealError("predicate requires a proper hyperideal, got the whole of "
                                 + R.name());
      }
      if (!P.contains(R.zero())) {
        throw PreconditionError("subset " + R.format(P) + " does not contain zero");
      }
    }

    // First tuple (lex order) of the given arity for which ok() is false.
    // With a commutative g and a permutation-invariant condition, only
    // sorted tuples are visited; the first violator is sorted in either case.
    template <typename Ok>
    Outcome scan(HyperringTable const& R, std::size_t arity, bool symmetric, Ok&& ok) {
      Outcome out;
      auto    visit = [&](std::span<Element const> t) {
        if (ok(t)) {
          return true;
        }
        out.holds   = false;
        out.witness = Tuple(t.begin(), t.end());
        return false;
      };
      if (symmetric && R.g_is_commutative()) {
        for_each_sorted_tuple(R.size(), arity, visit);
      } else {
        for_each_tuple(R.size(), arity, visit);
      }
      return out;
    }

    // g(t) with t_i replaced by the identity.
    Element complement(HyperringTable const& R, std::span<Element const> t, std::size_t i) {
      Tuple c(t.begin(), t.end());
      c[i] = R.one();
      return R.g_eval(c);
    }

    Element square(HyperringTable const& R, Element x) {
      return R.g_power(x, 2);
    }

    Outcome prime_like(Lattice const& L, ElementSubset const& P, bool weak) {
      auto const& R = L.ring();
      check_proper(R, P);
      return scan(R, R.n(), true, [&](std::span<Element const> t) {
        Element v = R.g_eval(t);
        if (!P.contains(v) || (weak && v == R.zero())) {
          return true;
        }
        return std::any_of(t.begin(), t.end(), [&](Element a) { return P.contains(a); });
      });
    }

    Outcome primary_like(Lattice const& L, ElementSubset const& P, bool weak) {
      auto const& R   = L.ring();
      check_proper(R, P);
      ElementSubset rad = L.radical(P);
      return scan(R, R.n(), true, [&](std::span<Element const> t) {
        Element v = R.g_eval(t);
        if (!P.contains(v) || (weak && v == R.zero())) {
          return true;
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (!P.contains(t[i]) && !rad.contains(complement(R, t, i))) {
            return false;
          }
        }
        return true;
      });
    }

    Outcome sq_like(Lattice const& L, ElementSubset const& P, bool weak) {
      auto const& R   = L.ring();
      check_proper(R, P);
      ElementSubset rad = L.radical(P);
      return scan(R, R.n(), true, [&](std::span<Element const> t) {
        Element v = R.g_eval(t);
        if (!P.contains(v) || (weak && v == R.zero())) {
          return true;
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (P.contains(square(R, t[i])) || rad.contains(complement(R, t, i))) {
            return true;
          }
        }
        return false;
      });
    }

    // All index subsets of {0..total-1} of the given size, lex order.
    std::vector<std::vector<std::size_t>> combinations(std::size_t total, std::size_t size) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              c(size);
      for (std::size_t i = 0; i < size; ++i) {
        c[i] = i;
      }
      while (true) {
        out.push_back(c);
        std::size_t i = size;
        while (i > 0 && c[i - 1] == total - size + (i - 1)) {
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < size; ++j) {
          c[j] = c[j - 1] + 1;
        }
      }
    }

    struct AbsorbingShape {
      std::size_t                           long_len;   // kn - k + 1
      std::size_t                           short_len;  // (k-1)n - k + 2
      std::vector<std::vector<std::size_t>> subsets;
    };

    AbsorbingShape absorbing_shape(HyperringTable const& R, std::size_t k) {
      if (k < 1) {
        throw PreconditionError("absorbing predicates need k >= 1");
      }
      std::size_t n         = R.n();
      std::size_t long_len  = k * n - k + 1;
      std::size_t short_len = (k - 1) * n - k + 2;
      return {long_len, short_len, combinations(long_len, short_len)};
    }

    Element sub_product(HyperringTable const&           R,
                        std::span<Element const>        t,
                        std::vector<std::size_t> const& idx,
                        Tuple&                          scratch) {
      scratch.clear();
      for (auto i : idx) {
        scratch.push_back(t[i]);
      }
      return R.g_product(scratch);
    }

    // g(t) in `hyp` implies some short product in `target`.
    Outcome absorbing_scan(HyperringTable const& R,
                           AbsorbingShape const& shape,
                           ElementSubset const&  hyp,
                           ElementSubset const&  target) {
      Tuple scratch;
      return scan(R, shape.long_len, true, [&](std::span<Element const> t) {
        if (!hyp.contains(R.g_iterated(t))) {
          return true;
        }
        return std::any_of(shape.subsets.begin(), shape.subsets.end(), [&](auto const& idx) {
          return target.contains(sub_product(R, t, idx, scratch));
        });
      });
    }

  }  // namespace

  Outcome check_prime(Lattice const& L, ElementSubset const& P) {
    return prime_like(L, P, false);
  }

  Outcome check_weakly_prime(Lattice const& L, ElementSubset const& P) {
    return prime_like(L, P, true);
  }

  Outcome check_primary(Lattice const& L, ElementSubset const& P) {
    return primary_like(L, P, false);
  }

  Outcome check_weakly_primary(Lattice const& L, ElementSubset const& P) {
    return primary_like(L, P, true);
  }

  Outcome check_q_primary(Lattice const& L, ElementSubset const& P) {
    auto const& R = L.ring();
    check_proper(R, P);
    ElementSubset rad = L.radical(P);
    if (rad.is_full()) {
      return {false, std::nullopt, "radical is the whole carrier"};
    }
    Outcome out = check_prime(L, rad);
    if (!out) {
      out.note = "radical " + R.format(rad) + " is not prime";
    }
    return out;
  }

  Outcome check_kn_absorbing(Lattice const& L, ElementSubset const& P, std::size_t k) {
    auto const& R = L.ring();
    check_proper(R, P);
    return absorbing_scan(R, absorbing_shape(R, k), P, P);
  }

  Outcome check_kn_absorbing_primary(Lattice const& L, ElementSubset const& P, std::size_t k) {
    auto const& R = L.ring();
    check_proper(R, P);
    auto          shape = absorbing_shape(R, k);
    ElementSubset rad   = L.radical(P);
    Tuple         scratch;
    // The leading factors are singled out, so this is not symmetric.
    return scan(R, shape.long_len, false, [&](std::span<Element const> t) {
      if (!P.contains(R.g_iterated(t))) {
        return true;
      }
      if (P.contains(sub_product(R, t, shape.subsets.front(), scratch))) {
        return true;
      }
      return std::any_of(shape.subsets.begin() + 1, shape.subsets.end(), [&](auto const& idx) {
        return rad.contains(sub_product(R, t, idx, scratch));
      });
    });
  }

  Outcome check_kn_absorbing_q_primary_by_radical(Lattice const&       L,
                                                  ElementSubset const& P,
                                                  std::size_t          k) {
    auto const& R = L.ring();
    check_proper(R, P);
    ElementSubset rad = L.radical(P);
    if (rad.is_full()) {
      return {false, std::nullopt, "radical is the whole carrier"};
    }
    return absorbing_scan(R, absorbing_shape(R, k), rad, rad);
  }

  Outcome check_kn_absorbing_q_primary_by_tuples(Lattice const&       L,
                                                 ElementSubset const& P,
                                                 std::size_t          k) {
    auto const& R = L.ring();
    check_proper(R, P);
    ElementSubset rad = L.radical(P);
    if (rad.is_full()) {
      return {false, std::nullopt, "radical is the whole carrier"};
    }
    return absorbing_scan(R, absorbing_shape(R, k), P, rad);
  }

  Outcome check_kn_absorbing_q_primary(Lattice const& L, ElementSubset const& P, std::size_t k) {
    Outcome by_radical = check_kn_absorbing_q_primary_by_radical(L, P, k);
    Outcome by_tuples  = check_kn_absorbing_q_primary_by_tuples(L, P, k);
    if (by_radical.holds != by_tuples.holds) {
      auto const& R = L.ring();
      throw InconsistencyError("(k,n)-absorbing q-primary characterisations disagree on "
                               + R.format(P) + " in " + R.name() + " for k="
                               + std::to_string(k));
    }
    return by_radical;
  }

  Outcome check_sq_primary(Lattice const& L, ElementSubset const& P) {
    return sq_like(L, P, false);
  }

  Outcome check_wsq_primary(Lattice const& L, ElementSubset const& P) {
    return sq_like(L, P, true);
  }

  std::string absorbing_name(std::string const& base, std::size_t k) {
    return base + "(k=" + std::to_string(k) + ")";
  }

  std::vector<std::string> predicate_names(std::size_t k_max) {
    std::vector<std::string> out
        = {"prime", "weakly_prime", "primary", "weakly_primary", "q_primary", "sq_primary", "wsq_primary"};
    for (std::size_t k = 2; k <= k_max; ++k) {
      out.push_back(absorbing_name("kn_absorbing", k));
      out.push_back(absorbing_name("kn_absorbing_primary", k));
      out.push_back(absorbing_name("kn_absorbing_q_primary", k));
    }
    return out;
  }

  bool ClassificationRecord::get(std::string const& name) const {
    for (auto const& [key, o] : outcomes) {
      if (key == name) {
        return o.holds;
      }
    }
    throw PreconditionError("no predicate named \"" + name + "\"");
  }

  std::string ClassificationRecord::to_text(HyperringTable const& R) const {
    std::string out = "ideal=" + R.format(ideal) + "\n";
    for (auto const& [key, o] : outcomes) {
      out += key + "=" + (o.holds ? "true" : "false") + "\n";
    }
    for (auto const& [key, o] : outcomes) {
      if (o.holds) {
        continue;
      }
      out += "witness." + key + "=";
      out += o.witness ? R.format(*o.witness) : std::string("-");
      if (!o.note.empty()) {
        out += " (" + o.note + ")";
      }
      out += "\n";
    }
    for (auto const& n : notes) {
      out += "note=" + n + "\n";
    }
    return out;
  }

  ClassificationRecord classify(Lattice const& L, ElementSubset const& P, std::size_t k_max) {
    auto const& R = L.ring();
    check_proper(R, P);
    ClassificationRecord rec;
    rec.ideal = P;
    rec.k_max = k_max;
    rec.outcomes.emplace_back("prime", check_prime(L, P));
    rec.outcomes.emplace_back("weakly_prime", check_weakly_prime(L, P));
    rec.outcomes.emplace_back("primary", check_primary(L, P));
    rec.outcomes.emplace_back("weakly_primary", check_weakly_primary(L, P));
    rec.outcomes.emplace_back("q_primary", check_q_primary(L, P));
    rec.outcomes.emplace_back("sq_primary", check_sq_primary(L, P));
    rec.outcomes.emplace_back("wsq_primary", check_wsq_primary(L, P));
    for (std::size_t k = 2; k <= k_max; ++k) {
      rec.outcomes.emplace_back(absorbing_name("kn_absorbing", k), check_kn_absorbing(L, P, k));
      rec.outcomes.emplace_back(absorbing_name("kn_absorbing_primary", k),
                                check_kn_absorbing_primary(L, P, k));
      rec.outcomes.emplace_back(absorbing_name("kn_absorbing_q_primary", k),
                                check_kn_absorbing_q_primary(L, P, k));
    }
    // These follow from the axioms, so a miss on a valid structure is a bug.
    std::optional<bool> valid;
    auto implies = [&](char const* a, char const* b) {
      if (rec.get(a) && !rec.get(b)) {
        std::string what = std::string(a) + " holds but " + b + " fails for " + R.format(P) + " in "
                           + R.name();
        if (!valid) {
          valid = validate_krasner(R).passed();
        }
        if (*valid) {
          throw InconsistencyError(what);
        }
        rec.notes.push_back(what + " (structure fails validation)");
      }
    };
    implies("prime", "primary");
    implies("primary", "q_primary");
    implies("sq_primary", "wsq_primary");
    implies("sq_primary", "q_primary");
    return rec;
  }

}  // namespace hyperring

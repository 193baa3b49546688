#include "hyperring/constructions.hpp"

#include <algorithm>
#include <map>

#include "hyperring/lattice.hpp"

namespace hyperring {

  HyperringTable direct_product(HyperringTable const& R1, HyperringTable const& R2) {
    if (R1.m() != R2.m() || R1.n() != R2.n()) {
      throw ArityError("direct product needs equal arities, got (" + std::to_string(R1.m()) + ","
                       + std::to_string(R1.n()) + ") and (" + std::to_string(R2.m()) + ","
                       + std::to_string(R2.n()) + ")");
    }
    std::size_t const N1 = R1.size();
    std::size_t const N2 = R2.size();
    std::size_t const N  = N1 * N2;
    auto pair_of = [&](Element x) { return std::pair<Element, Element>(x / N2, x % N2); };

    std::vector<std::string> labels;
    labels.reserve(N);
    for (Element a = 0; a < N1; ++a) {
      for (Element b = 0; b < N2; ++b) {
        labels.push_back("(" + R1.label(a) + ";" + R2.label(b) + ")");
      }
    }

    std::size_t const   m = R1.m();
    std::size_t const   n = R1.n();
    HyperOperationTable f(N, m);
    Tuple               left(m), right(m);
    for_each_tuple(N, m, [&](std::span<Element const> t) {
      for (std::size_t i = 0; i < m; ++i) {
        std::tie(left[i], right[i]) = pair_of(t[i]);
      }
      auto& out = f.at(t);
      R1.hyperop(left).for_each([&](Element a) {
        R2.hyperop(right).for_each([&](Element b) { out.insert(a * N2 + b); });
      });
      return true;
    });

    NaryOperationTable g(N, n);
    Tuple              gl(n), gr(n);
    for_each_tuple(N, n, [&](std::span<Element const> t) {
      for (std::size_t i = 0; i < n; ++i) {
        std::tie(gl[i], gr[i]) = pair_of(t[i]);
      }
      g.at(t) = R1.g_eval(gl) * N2 + R2.g_eval(gr);
      return true;
    });

    return HyperringTable(R1.name() + "x" + R2.name(),
                          std::move(labels),
                          std::move(f),
                          std::move(g),
                          R1.zero() * N2 + R2.zero(),
                          R1.one() * N2 + R2.one());
  }

  ElementSubset product_subset(ElementSubset const& P1, ElementSubset const& P2) {
    std::size_t   N2 = P2.universe();
    ElementSubset out(P1.universe() * N2);
    P1.for_each([&](Element a) { P2.for_each([&](Element b) { out.insert(a * N2 + b); }); });
    return out;
  }

  std::pair<ElementSubset, ElementSubset> project(ElementSubset const& P,
                                                  std::size_t          size1,
                                                  std::size_t          size2) {
    if (P.universe() != size1 * size2) {
      throw PreconditionError("subset is not over a product carrier of the given sizes");
    }
    ElementSubset a(size1), b(size2);
    P.for_each([&](Element x) {
      a.insert(static_cast<Element>(x / size2));
      b.insert(static_cast<Element>(x % size2));
    });
    return {a, b};
  }

  namespace {
    void check_map(HyperringTable const&       R1,
                   HyperringTable const&       R2,
                   std::vector<Element> const& map) {
      if (map.size() != R1.size()) {
        throw PreconditionError("map must be defined on every element of " + R1.name());
      }
      for (Element y : map) {
        if (y >= R2.size()) {
          throw PreconditionError("map value outside " + R2.name());
        }
      }
    }

    ElementSubset image_of(HyperringTable const&       R2,
                           std::vector<Element> const& map,
                           ElementSubset const&        S) {
      ElementSubset out = R2.empty_set();
      S.for_each([&](Element x) { out.insert(map[x]); });
      return out;
    }
  }  // namespace

  ValidationReport is_homomorphism(HyperringTable const&       R1,
                                   HyperringTable const&       R2,
                                   std::vector<Element> const& map) {
    check_map(R1, R2, map);
    ValidationReport rep(R1.name() + " -> " + R2.name());
    if (map[R1.one()] != R2.one()) {
      rep.add({"preserves-one",
               "h(" + R1.label(R1.one()) + ")",
               R2.label(R2.one()),
               R2.label(map[R1.one()])});
    }
    Tuple image(R1.m());
    for_each_tuple(R1.size(), R1.m(), [&](std::span<Element const> x) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        image[i] = map[x[i]];
      }
      ElementSubset lhs = image_of(R2, map, R1.hyperop(x));
      auto const&   rhs = R2.hyperop(image);
      if (!(lhs == rhs)) {
        rep.add({"preserves-f", "h(f" + R1.format(x) + ")", R2.format(rhs), R2.format(lhs)});
      }
      return true;
    });
    Tuple gimage(R1.n());
    for_each_tuple(R1.size(), R1.n(), [&](std::span<Element const> y) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        gimage[i] = map[y[i]];
      }
      Element lhs = map[R1.g_eval(y)];
      Element rhs = R2.g_eval(gimage);
      if (lhs != rhs) {
        rep.add({"preserves-g", "h(g" + R1.format(y) + ")", R2.label(rhs), R2.label(lhs)});
      }
      return true;
    });
    return rep;
  }

  namespace {
    Homomorphism describe(HyperringTable const& R1,
                          HyperringTable const& R2,
                          std::vector<Element>  map) {
      Homomorphism h;
      h.kernel            = R1.empty_set();
      ElementSubset image = R2.empty_set();
      for (Element x = 0; x < R1.size(); ++x) {
        image.insert(map[x]);
        if (map[x] == R2.zero()) {
          h.kernel.insert(x);
        }
      }
      h.injective  = image.size() == R1.size();
      h.surjective = image.is_full();
      h.map        = std::move(map);
      return h;
    }
  }  // namespace

  Homomorphism make_homomorphism(HyperringTable const& R1,
                                 HyperringTable const& R2,
                                 std::vector<Element>  map) {
    auto rep = is_homomorphism(R1, R2, map);
    if (!rep.passed()) {
      throw ValidationFailedError(std::move(rep));
    }
    return describe(R1, R2, std::move(map));
  }

  HomomorphismSearch enumerate_homomorphisms(HyperringTable const& R1,
                                             HyperringTable const& R2,
                                             std::size_t           node_limit) {
    std::size_t const N1 = R1.size();
    // Each tuple is checked at the first depth where everything it touches
    // has been assigned.
    std::vector<std::vector<Tuple>> f_ready(N1), g_ready(N1);
    for_each_tuple(N1, R1.m(), [&](std::span<Element const> x) {
      Element mx = *std::max_element(x.begin(), x.end());
      R1.hyperop(x).for_each([&](Element t) { mx = std::max(mx, t); });
      f_ready[mx].emplace_back(x.begin(), x.end());
      return true;
    });
    for_each_tuple(N1, R1.n(), [&](std::span<Element const> y) {
      Element mx = std::max(*std::max_element(y.begin(), y.end()), R1.g_eval(y));
      g_ready[mx].emplace_back(y.begin(), y.end());
      return true;
    });

    HomomorphismSearch   result;
    std::vector<Element> map(N1, 0);
    std::size_t          nodes = 0;
    Tuple                fimg(R1.m()), gimg(R1.n());

    auto consistent = [&](Element depth) {
      for (auto const& x : f_ready[depth]) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          fimg[i] = map[x[i]];
        }
        if (!(image_of(R2, map, R1.hyperop(x)) == R2.hyperop(fimg))) {
          return false;
        }
      }
      for (auto const& y : g_ready[depth]) {
        for (std::size_t i = 0; i < y.size(); ++i) {
          gimg[i] = map[y[i]];
        }
        if (map[R1.g_eval(y)] != R2.g_eval(gimg)) {
          return false;
        }
      }
      return true;
    };

    auto search = [&](auto&& self, Element depth) -> void {
      if (!result.complete) {
        return;
      }
      if (depth == N1) {
        result.found.push_back(describe(R1, R2, map));
        return;
      }
      Element lo = 0, hi = static_cast<Element>(R2.size());
      if (depth == R1.one()) {
        lo = R2.one();
        hi = lo + 1;
      }
      for (Element v = lo; v < hi; ++v) {
        if (++nodes > node_limit) {
          result.complete = false;
          return;
        }
        map[depth] = v;
        if (consistent(depth)) {
          self(self, depth + 1);
        }
      }
    };
    search(search, 0);
    return result;
  }

  Quotient quotient(HyperringTable const& R, ElementSubset const& Q) {
    if (Q.universe() != R.size()) {
      throw PreconditionError("subset is over a different carrier");
    }
    if (Q.is_full()) {
      throw ImproperIdealError("quotient by the whole of " + R.name());
    }
    if (!is_hyperideal(R, Q)) {
      throw NotAHyperidealError(R.format(Q) + " is not a hyperideal of " + R.name());
    }
    std::size_t const N = R.size();
    std::size_t const m = R.m();
    std::size_t const n = R.n();

    std::vector<ElementSubset> sets(m, R.singleton(R.zero()));
    std::map<std::vector<Element>, Element> by_members;
    std::vector<ElementSubset>              classes;
    std::vector<Element>                    class_of(N, 0);
    std::vector<bool>                       placed(N, false);
    for (Element r = 0; r < N; ++r) {
      sets[0] = R.singleton(r);
      sets[1] = Q;
      ElementSubset cls = R.f_extend(sets);
      auto [it, fresh] = by_members.emplace(cls.members(), static_cast<Element>(classes.size()));
      if (fresh) {
        classes.push_back(cls);
      }
      if (!cls.contains(r)) {
        throw IllDefinedQuotientError("class of " + R.label(r) + " does not contain it");
      }
    }
    for (Element c = 0; c < classes.size(); ++c) {
      classes[c].for_each([&](Element x) {
        if (placed[x]) {
          throw IllDefinedQuotientError("classes " + R.format(classes[class_of[x]]) + " and "
                                        + R.format(classes[c]) + " overlap at " + R.label(x));
        }
        placed[x]   = true;
        class_of[x] = c;
      });
    }

    std::size_t const K = classes.size();
    std::vector<std::string> labels;
    for (auto const& cls : classes) {
      std::string l = "[";
      cls.for_each([&](Element x) {
        if (l.size() > 1) {
          l += "|";
        }
        l += R.label(x);
      });
      labels.push_back(l + "]");
    }

    HyperOperationTable f(K, m);
    std::vector<bool>   f_set(f.tuple_count(), false);
    Tuple               ct(m);
    for_each_tuple(N, m, [&](std::span<Element const> x) {
      for (std::size_t i = 0; i < m; ++i) {
        ct[i] = class_of[x[i]];
      }
      ElementSubset img(K);
      R.hyperop(x).for_each([&](Element t) { img.insert(class_of[t]); });
      std::size_t idx = f.index_of(ct);
      if (!f_set[idx]) {
        f.at(ct)   = img;
        f_set[idx] = true;
      } else if (!(f.at(ct) == img)) {
        throw IllDefinedQuotientError("induced f depends on representatives at f" + R.format(x));
      }
      return true;
    });

    NaryOperationTable g(K, n);
    std::vector<bool>  g_set(g.tuple_count(), false);
    Tuple              gt(n);
    for_each_tuple(N, n, [&](std::span<Element const> y) {
      for (std::size_t i = 0; i < n; ++i) {
        gt[i] = class_of[y[i]];
      }
      Element     v   = class_of[R.g_eval(y)];
      std::size_t idx = g.index_of(gt);
      if (!g_set[idx]) {
        g.at(gt)   = v;
        g_set[idx] = true;
      } else if (g.at(gt) != v) {
        throw IllDefinedQuotientError("induced g depends on representatives at g" + R.format(y));
      }
      return true;
    });

    std::string    name = R.name() + "/" + labels[class_of[Q.first()]];
    HyperringTable ring(std::move(name),
                        std::move(labels),
                        std::move(f),
                        std::move(g),
                        class_of[R.zero()],
                        class_of[R.one()]);
    Homomorphism proj = describe(R, ring, class_of);
    return {std::move(ring), std::move(proj), std::move(classes)};
  }

  ElementSubset preimage_ideal(HyperringTable const& R1,
                               Homomorphism const&   h,
                               ElementSubset const&  P2) {
    ElementSubset out = R1.empty_set();
    for (Element x = 0; x < R1.size(); ++x) {
      if (P2.contains(h(x))) {
        out.insert(x);
      }
    }
    if (!is_hyperideal(R1, out)) {
      throw NotAHyperidealError("preimage " + R1.format(out) + " is not a hyperideal");
    }
    return out;
  }

  ElementSubset image_ideal(HyperringTable const& R2,
                            Homomorphism const&   h,
                            ElementSubset const&  P1) {
    if (!h.surjective) {
      throw NotSurjectiveError("image_ideal needs an epimorphism");
    }
    if (!h.kernel.is_subset_of(P1)) {
      throw KernelNotContainedError("kernel is not contained in the hyperideal");
    }
    ElementSubset out = image_of(R2, h.map, P1);
    if (!is_hyperideal(R2, out)) {
      throw NotAHyperidealError("image " + R2.format(out) + " is not a hyperideal");
    }
    return out;
  }

  bool is_subhyperring(HyperringTable const& R, ElementSubset const& S) {
    if (S.empty() || !S.contains(R.zero())) {
      return false;
    }
    std::vector<ElementSubset> args(R.m(), S);
    if (!R.f_extend(args).is_subset_of(S)) {
      return false;
    }
    bool ok = true;
    S.for_each([&](Element x) { ok = ok && inverse_candidates(R, x).is_subset_of(S); });
    return ok && is_multiplicative_subset(R, S);
  }

  HyperringTable restrict_to(HyperringTable const& R, ElementSubset const& S, std::string name) {
    if (!S.contains(R.zero()) || !S.contains(R.one())) {
      throw PreconditionError("restriction must contain zero and one");
    }
    auto                     members = S.members();
    std::vector<Element>     local(R.size(), 0);
    std::vector<std::string> labels;
    for (Element i = 0; i < members.size(); ++i) {
      local[members[i]] = i;
      labels.push_back(R.label(members[i]));
    }
    std::size_t const   K = members.size();
    HyperOperationTable f(K, R.m());
    Tuple               x(R.m());
    for_each_tuple(K, R.m(), [&](std::span<Element const> t) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        x[i] = members[t[i]];
      }
      ElementSubset out(K);
      R.hyperop(x).for_each([&](Element v) {
        if (!S.contains(v)) {
          throw PreconditionError("subset is not closed under f");
        }
        out.insert(local[v]);
      });
      f.at(t) = out;
      return true;
    });
    NaryOperationTable g(K, R.n());
    Tuple              y(R.n());
    for_each_tuple(K, R.n(), [&](std::span<Element const> t) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        y[i] = members[t[i]];
      }
      Element v = R.g_eval(y);
      if (!S.contains(v)) {
        throw PreconditionError("subset is not closed under g");
      }
      g.at(t) = local[v];
      return true;
    });
    return HyperringTable(
        std::move(name), std::move(labels), std::move(f), std::move(g), local[R.zero()], local[R.one()]);
  }

  bool is_multiplicative_subset(HyperringTable const& R, ElementSubset const& S) {
    if (S.empty()) {
      return false;
    }
    auto members = S.members();
    Tuple y(R.n());
    return for_each_tuple(members.size(), R.n(), [&](std::span<Element const> t) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        y[i] = members[t[i]];
      }
      return S.contains(R.g_eval(y));
    });
  }

}  // namespace hyperring

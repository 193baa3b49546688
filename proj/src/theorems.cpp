#include "hyperring/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/lattice.hpp"

namespace hyperring {

  std::string_view to_string(TheoremStatus s) noexcept {
    switch (s) {
      case TheoremStatus::pass: return "pass";
      case TheoremStatus::fail: return "FAIL";
      case TheoremStatus::vacuous: return "vacuous";
    }
    return "?";
  }

  std::string TheoremReport::to_text() const {
    constexpr std::size_t shown = 10;
    std::ostringstream    out;
    out << id << " on " << structure << ": " << hyperring::to_string(status()) << ", " << instances
        << (instances == 1 ? " instance" : " instances");
    if (!failures.empty()) {
      out << ", " << failures.size() << (failures.size() == 1 ? " failure" : " failures");
    }
    if (!asserted) {
      out << " [informational]";
    }
    out << "\n";
    for (std::size_t i = 0; i < failures.size() && i < shown; ++i) {
      out << "  counterexample " << failures[i].ideals << ": " << failures[i].witness << "\n";
    }
    if (failures.size() > shown) {
      out << "  ... " << failures.size() - shown << " more\n";
    }
    for (auto const& note : notes) {
      out << "  note: " << note << "\n";
    }
    return out.str();
  }

  namespace {

    // Products are only formed up to this many elements.
    constexpr std::size_t max_product_size = 36;
    // Subhyperrings are enumerated by brute force up to this carrier size.
    constexpr std::size_t max_subring_carrier = 12;
    // Larger k for the absorbing predicates only on carriers this small.
    constexpr std::size_t max_carrier_for_k3 = 12;
    constexpr std::size_t hom_node_limit     = 200'000;
    // Skip a u-absorbing check when it would visit more tuples than this.
    constexpr double max_absorbing_work = 4e6;

    enum class Pred {
      prime,
      weakly_prime,
      primary,
      weakly_primary,
      q_primary,
      sq,
      wsq,
      kn_absorbing,
      kn_absorbing_primary,
      kn_absorbing_q_primary,
      kn_absorbing_q_primary_by_tuples,
    };

    // A structure together with its lattice and memoised predicate outcomes.
    class Facts {
     public:
      Facts(HyperringTable R, bool valid)
          : _ring(std::make_unique<HyperringTable>(std::move(R))),
            _lattice(std::make_unique<Lattice>(*_ring)),
            _valid(valid),
            _proper(_lattice->proper_hyperideals()) {}

      HyperringTable const& ring() const {
        return *_ring;
      }
      Lattice const& lattice() const {
        return *_lattice;
      }
      bool valid() const {
        return _valid;
      }
      std::vector<ElementSubset> const& proper() const {
        return _proper;
      }
      std::vector<ElementSubset> const& all() const {
        return _lattice->hyperideals();
      }
      ElementSubset radical(ElementSubset const& P) const {
        return _lattice->radical(P);
      }

      Outcome const& outcome(Pred p, ElementSubset const& P, std::size_t k = 2) {
        auto& slot = _cache[P];
        auto  key  = std::pair(static_cast<int>(p), k);
        if (auto it = slot.find(key); it != slot.end()) {
          return it->second;
        }
        return slot.emplace(key, compute(p, P, k)).first->second;
      }
      bool holds(Pred p, ElementSubset const& P, std::size_t k = 2) {
        return outcome(p, P, k).holds;
      }

      std::vector<std::size_t> ks() const {
        if (_ring->size() <= max_carrier_for_k3) {
          return {2, 3};
        }
        return {2};
      }

     private:
      Outcome compute(Pred p, ElementSubset const& P, std::size_t k) const {
        auto const& L = *_lattice;
        switch (p) {
          case Pred::prime: return check_prime(L, P);
          case Pred::weakly_prime: return check_weakly_prime(L, P);
          case Pred::primary: return check_primary(L, P);
          case Pred::weakly_primary: return check_weakly_primary(L, P);
          case Pred::q_primary: return check_q_primary(L, P);
          case Pred::sq: return check_sq_primary(L, P);
          case Pred::wsq: return check_wsq_primary(L, P);
          case Pred::kn_absorbing: return check_kn_absorbing(L, P, k);
          case Pred::kn_absorbing_primary: return check_kn_absorbing_primary(L, P, k);
          case Pred::kn_absorbing_q_primary:
            return check_kn_absorbing_q_primary_by_radical(L, P, k);
          case Pred::kn_absorbing_q_primary_by_tuples:
            return check_kn_absorbing_q_primary_by_tuples(L, P, k);
        }
        throw InconsistencyError("unhandled predicate");
      }

      std::unique_ptr<HyperringTable> _ring;
      std::unique_ptr<Lattice>        _lattice;
      bool                            _valid;
      std::vector<ElementSubset>      _proper;
      std::unordered_map<ElementSubset, std::map<std::pair<int, std::size_t>, Outcome>, ElementSubsetHash>
          _cache;
    };

    std::string witness_text(HyperringTable const& R, Outcome const& o) {
      std::string s;
      if (o.witness) {
        s = R.format(*o.witness);
      }
      if (!o.note.empty()) {
        s += (s.empty() ? "" : " ") + o.note;
      }
      return s.empty() ? "no witness" : s;
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    struct QuotientFacts {
      Quotient               q;
      bool                   projection_ok;
      std::unique_ptr<Facts> facts;
    };

  }  // namespace

  struct detail::HarnessState {
    std::vector<std::unique_ptr<Facts>>                                           base;
    std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Facts>>         products;
    std::map<std::pair<std::size_t, std::vector<Element>>, QuotientFacts>          quotients;
    std::map<std::pair<std::size_t, std::size_t>, HomomorphismSearch>             homs;
    std::map<std::size_t, std::vector<std::pair<ElementSubset, std::unique_ptr<Facts>>>> subrings;

    void add(HyperringTable R, ValidationReport const* attached) {
      auto fresh = validate_krasner(R);
      if (!fresh.passed() && (attached == nullptr || attached->to_text() != fresh.to_text())) {
        throw ValidationFailedError(std::move(fresh));
      }
      bool valid = fresh.passed();
      base.push_back(std::make_unique<Facts>(std::move(R), valid));
    }

    std::string const& name(std::size_t i) const {
      return base[i]->ring().name();
    }

    bool same_arity(std::size_t i, std::size_t j) const {
      auto const& a = base[i]->ring();
      auto const& b = base[j]->ring();
      return a.m() == b.m() && a.n() == b.n();
    }

    // Partners j for which the product R_i x R_j is formed.
    std::vector<std::size_t> product_partners(std::size_t i) const {
      std::vector<std::size_t> out;
      if (!base[i]->valid()) {
        return out;
      }
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (base[j]->valid() && same_arity(i, j)
            && base[i]->ring().size() * base[j]->ring().size() <= max_product_size) {
          out.push_back(j);
        }
      }
      return out;
    }

    Facts& product(std::size_t i, std::size_t j) {
      auto& slot = products[{i, j}];
      if (!slot) {
        slot = std::make_unique<Facts>(direct_product(base[i]->ring(), base[j]->ring()), true);
      }
      return *slot;
    }

    QuotientFacts& quotient_of(std::size_t i, ElementSubset const& Q) {
      auto key = std::pair(i, Q.members());
      auto it  = quotients.find(key);
      if (it == quotients.end()) {
        auto const& R  = base[i]->ring();
        Quotient    q  = quotient(R, Q);
        bool        ok = is_homomorphism(R, q.ring, q.projection.map).passed();
        bool valid     = validate_krasner(q.ring).passed();
        auto facts     = std::make_unique<Facts>(q.ring, valid);
        it = quotients.emplace(key, QuotientFacts{std::move(q), ok, std::move(facts)}).first;
      }
      return it->second;
    }

    HomomorphismSearch const& homs_between(std::size_t i, std::size_t j) {
      auto it = homs.find({i, j});
      if (it == homs.end()) {
        it = homs.emplace(std::pair(i, j),
                          enumerate_homomorphisms(base[i]->ring(), base[j]->ring(), hom_node_limit))
                 .first;
      }
      return it->second;
    }

    // Targets j that homomorphisms from R_i are searched into.
    std::vector<std::size_t> hom_targets(std::size_t i) const {
      std::vector<std::size_t> out;
      if (!base[i]->valid()) {
        return out;
      }
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (base[j]->valid() && same_arity(i, j)) {
          out.push_back(j);
        }
      }
      return out;
    }

    std::vector<std::pair<ElementSubset, std::unique_ptr<Facts>>>& subrings_of(std::size_t i) {
      auto it = subrings.find(i);
      if (it != subrings.end()) {
        return it->second;
      }
      auto& out = subrings[i];
      auto const& R = base[i]->ring();
      if (!base[i]->valid() || R.size() > max_subring_carrier) {
        return out;
      }
      std::vector<Element> free;
      for (Element x = 0; x < R.size(); ++x) {
        if (x != R.zero() && x != R.one()) {
          free.push_back(x);
        }
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        ElementSubset S = R.singleton(R.zero());
        S.insert(R.one());
        for (std::size_t b = 0; b < free.size(); ++b) {
          if (mask >> b & 1) {
            S.insert(free[b]);
          }
        }
        if (is_subhyperring(R, S)) {
          out.emplace_back(S, nullptr);
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      for (auto& [S, facts] : out) {
        auto sub = restrict_to(R, S, R.name() + "|" + R.format(S));
        bool ok  = validate_krasner(sub).passed();
        facts    = std::make_unique<Facts>(std::move(sub), ok);
      }
      return out;
    }
  };

  namespace {

    using Checker = std::function<void(detail::HarnessState&, std::size_t, TheoremReport&)>;

    struct Registered {
      TheoremInfo info;
      Checker     check;
    };

    void no_constructions(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      if (!st.base[i]->valid()) {
        rep.notes.push_back("fails validation; no constructions are built from it");
      }
    }

    void add_failure(TheoremReport& rep, std::string ideals, std::string witness) {
      rep.failures.push_back({std::move(ideals), std::move(witness)});
    }

    // For every proper hyperideal satisfying `hyp`, require `concl`.
    void for_proper(Facts&                                     F,
                    TheoremReport&                             rep,
                    std::function<bool(ElementSubset const&)>  hyp,
                    std::function<std::optional<std::string>(ElementSubset const&)> concl) {
      for (auto const& P : F.proper()) {
        if (!hyp(P)) {
          continue;
        }
        ++rep.instances;
        if (auto bad = concl(P)) {
          add_failure(rep, "P=" + F.ring().format(P), *bad);
        }
      }
    }

    // Families of two or three distinct members.
    template <typename Fn>
    void for_small_families(std::vector<ElementSubset> const& members, Fn&& fn) {
      std::size_t const c = members.size();
      for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
          fn(std::vector<ElementSubset const*>{&members[a], &members[b]});
          for (std::size_t d = b + 1; d < c; ++d) {
            fn(std::vector<ElementSubset const*>{&members[a], &members[b], &members[d]});
          }
        }
      }
    }

    std::string family_text(HyperringTable const& R, std::vector<ElementSubset const*> const& fam) {
      std::string s;
      for (auto const* P : fam) {
        s += (s.empty() ? "" : " ") + R.format(*P);
      }
      return "family " + s;
    }

    double binomial(double n, double k) {
      double r = 1;
      for (double i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    // Rough count of the tuple visits for a u-absorbing check on R.
    double absorbing_work(HyperringTable const& R, std::size_t u) {
      double n     = static_cast<double>(R.n());
      double lng   = u * n - u + 1;
      double shrt  = (u - 1.0) * n - u + 2;
      double N     = static_cast<double>(R.size());
      double tuples = R.g_is_commutative() ? binomial(N + lng - 1, lng) : std::pow(N, lng);
      return tuples * binomial(lng, shrt);
    }

    // P1 x P2 has the form (sq-primary) x R2 or R1 x (sq-primary).
    bool sq_product_form(Facts& F1, Facts& F2, ElementSubset const& P1, ElementSubset const& P2) {
      return (P2.is_full() && !P1.is_full() && F1.holds(Pred::sq, P1))
             || (P1.is_full() && !P2.is_full() && F2.holds(Pred::sq, P2));
    }

    // ---- checkers -------------------------------------------------------

    void product_q_primary(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      for (std::size_t j : st.product_partners(i)) {
        Facts& F1 = *st.base[i];
        Facts& F2 = *st.base[j];
        Facts& FP = st.product(i, j);
        for (auto const& P : FP.proper()) {
          ++rep.instances;
          auto [A, B]   = project(P, F1.ring().size(), F2.ring().size());
          bool is_prod  = product_subset(A, B) == P;
          bool form     = is_prod
                      && ((B.is_full() && !A.is_full() && F1.holds(Pred::q_primary, A))
                          || (A.is_full() && !B.is_full() && F2.holds(Pred::q_primary, B)));
          bool q        = FP.holds(Pred::q_primary, P);
          if (q != form) {
            add_failure(rep,
                        "P=" + FP.ring().format(P) + " in " + FP.ring().name(),
                        "q-primary=" + yes_no(q) + ", product form=" + yes_no(form));
          }
        }
      }
    }

    void q_primary_is_2_absorbing_q_primary(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts& F = *st.base[i];
      for_proper(
          F,
          rep,
          [&](auto const& P) { return F.holds(Pred::q_primary, P); },
          [&](auto const& P) -> std::optional<std::string> {
            auto const& o = F.outcome(Pred::kn_absorbing_q_primary, P, 2);
            if (o.holds) return std::nullopt;
            return "radical not (2,n)-absorbing at " + witness_text(F.ring(), o);
          });
    }

    void absorbing_primary_is_absorbing_q_primary(detail::HarnessState& st,
                                                  std::size_t     i,
                                                  TheoremReport&  rep) {
      Facts& F = *st.base[i];
      for (std::size_t k : F.ks()) {
        for_proper(
            F,
            rep,
            [&](auto const& P) { return F.holds(Pred::kn_absorbing_primary, P, k); },
            [&](auto const& P) -> std::optional<std::string> {
              auto const& o = F.outcome(Pred::kn_absorbing_q_primary, P, k);
              if (o.holds) return std::nullopt;
              return "k=" + std::to_string(k) + ": " + witness_text(F.ring(), o);
            });
      }
      rep.notes.push_back("k in {" + std::to_string(F.ks().front()) + ".."
                          + std::to_string(F.ks().back()) + "}");
    }

    void absorbing_q_primary_intersection(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for (std::size_t k : F.ks()) {
        std::map<ElementSubset, std::vector<ElementSubset>> by_radical;
        for (auto const& P : F.proper()) {
          if (F.holds(Pred::kn_absorbing_q_primary, P, k)) {
            by_radical[F.radical(P)].push_back(P);
          }
        }
        for (auto const& [Q, members] : by_radical) {
          for_small_families(members, [&](std::vector<ElementSubset const*> const& fam) {
            ++rep.instances;
            ElementSubset I = *fam.front();
            for (auto const* P : fam) {
              I &= *P;
            }
            ElementSubset rad = F.radical(I);
            if (!(rad == Q)) {
              add_failure(rep, family_text(R, fam), "radical of intersection " + R.format(rad));
            } else if (!F.holds(Pred::kn_absorbing_q_primary, I, k)) {
              add_failure(rep,
                          family_text(R, fam),
                          "k=" + std::to_string(k) + " intersection "
                              + witness_text(R, F.outcome(Pred::kn_absorbing_q_primary, I, k)));
            }
          });
        }
      }
    }

    void absorbing_q_primary_tuple_characterization(detail::HarnessState& st,
                                                    std::size_t     i,
                                                    TheoremReport&  rep) {
      Facts& F = *st.base[i];
      for (std::size_t k : F.ks()) {
        for_proper(
            F, rep, [](auto const&) { return true; },
            [&](auto const& P) -> std::optional<std::string> {
              bool a = F.holds(Pred::kn_absorbing_q_primary, P, k);
              bool b = F.holds(Pred::kn_absorbing_q_primary_by_tuples, P, k);
              if (a == b) return std::nullopt;
              return "k=" + std::to_string(k) + ": radical absorbing=" + yes_no(a)
                     + ", tuple condition=" + yes_no(b);
            });
      }
    }

    // The larger-k statement, with u ranging just above `bound(k, n)`.
    void absorbing_q_primary_raise(detail::HarnessState&                                st,
                                   std::size_t                                    i,
                                   TheoremReport&                                 rep,
                                   std::function<std::size_t(std::size_t, std::size_t)> bound) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      std::set<std::size_t> skipped;
      for (std::size_t k : F.ks()) {
        std::size_t lo = bound(k, R.n()) + 1;
        for (std::size_t u = lo; u <= lo + 1; ++u) {
          if (absorbing_work(R, u) > max_absorbing_work) {
            skipped.insert(u);
            continue;
          }
          for_proper(
              F,
              rep,
              [&](auto const& P) { return F.holds(Pred::kn_absorbing_q_primary, P, k); },
              [&](auto const& P) -> std::optional<std::string> {
                auto const& o = F.outcome(Pred::kn_absorbing_q_primary, P, u);
                if (o.holds) return std::nullopt;
                return "k=" + std::to_string(k) + ", u=" + std::to_string(u) + ": "
                       + witness_text(R, o);
              });
        }
      }
      for (std::size_t u : skipped) {
        rep.notes.push_back("u=" + std::to_string(u) + " skipped on this carrier size");
      }
    }

    void sq_implies_q(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts& F = *st.base[i];
      for_proper(
          F, rep, [&](auto const& P) { return F.holds(Pred::sq, P); },
          [&](auto const& P) -> std::optional<std::string> {
            auto const& o = F.outcome(Pred::q_primary, P);
            if (o.holds) return std::nullopt;
            return witness_text(F.ring(), o);
          });
    }

    void q_with_small_radical_square_is_sq(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for_proper(
          F,
          rep,
          [&](auto const& P) {
            ElementSubset rad        = F.radical(P);
            ElementSubset factors[2] = {rad, rad};
            return hyperideal_product(R, factors).raw.is_subset_of(P) && F.holds(Pred::q_primary, P);
          },
          [&](auto const& P) -> std::optional<std::string> {
            auto const& o = F.outcome(Pred::sq, P);
            if (o.holds) return std::nullopt;
            return witness_text(R, o);
          });
    }

    void principal_sq_makes_all_sq(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      std::size_t improper = 0;
      for (Element r = 0; r < R.size(); ++r) {
        auto C = generated_by(R, r).closure;
        if (C.is_full()) {
          ++improper;
          continue;
        }
        if (!F.holds(Pred::sq, C)) {
          rep.notes.push_back("hypothesis fails: <" + R.label(r) + "> = " + R.format(C)
                              + " is not sq-primary");
          return;
        }
      }
      if (improper > 0) {
        rep.notes.push_back(std::to_string(improper) + " element(s) generate the whole ring and are skipped");
      }
      ++rep.instances;
      for (auto const& P : F.proper()) {
        if (!F.holds(Pred::sq, P)) {
          add_failure(rep, "P=" + R.format(P), witness_text(R, F.outcome(Pred::sq, P)));
        }
      }
    }

    void sq_ideal_product_condition(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F     = *st.base[i];
      auto const& R     = F.ring();
      auto const& all   = F.all();
      std::size_t n     = R.n();
      auto        visit = [&](ElementSubset const& P, ElementSubset const& rad, std::span<Element const> ix) {
        std::vector<ElementSubset> factors;
        for (Element k : ix) {
          factors.push_back(all[k]);
        }
        if (!hyperideal_product(R, factors).raw.is_subset_of(P)) {
          return true;
        }
        ++rep.instances;
        for (std::size_t pos = 0; pos < n; ++pos) {
          bool squares = true;
          factors[pos].for_each([&](Element p) { squares = squares && P.contains(R.g_power(p, 2)); });
          if (squares) {
            return true;
          }
          auto others = factors;
          others[pos] = R.singleton(R.one());
          if (hyperideal_product(R, others).raw.is_subset_of(rad)) {
            return true;
          }
        }
        std::string fam;
        for (auto const& f : factors) {
          fam += (fam.empty() ? "" : " ") + R.format(f);
        }
        add_failure(rep, "P=" + R.format(P), "factors " + fam);
        return true;
      };
      for (auto const& P : F.proper()) {
        if (!F.holds(Pred::sq, P)) {
          continue;
        }
        ElementSubset rad = F.radical(P);
        auto fn = [&](std::span<Element const> ix) { return visit(P, rad, ix); };
        if (R.g_is_commutative()) {
          for_each_sorted_tuple(all.size(), n, fn);
        } else {
          for_each_tuple(all.size(), n, fn);
        }
      }
    }

    void sq_colon_is_sq(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for (auto const& P : F.proper()) {
        if (!F.holds(Pred::sq, P)) {
          continue;
        }
        for (Element r = 0; r < R.size(); ++r) {
          if (P.contains(r) || !(generated_by(R, r).raw == generated_by(R, R.g_power(r, 2)).raw)) {
            continue;
          }
          ++rep.instances;
          auto colon = quotient_sets(R, P, r).colon;
          auto const& o = F.outcome(Pred::sq, colon);
          if (!o.holds) {
            add_failure(rep,
                        "P=" + R.format(P) + " r=" + R.label(r),
                        "P_r=" + R.format(colon) + " at " + witness_text(R, o));
          }
        }
      }
    }

    void product_sq_form(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      for (std::size_t j : st.product_partners(i)) {
        Facts& F1 = *st.base[i];
        Facts& F2 = *st.base[j];
        Facts& FP = st.product(i, j);
        for (auto const& P1 : F1.all()) {
          for (auto const& P2 : F2.all()) {
            if (P1.is_full() && P2.is_full()) {
              continue;
            }
            ++rep.instances;
            auto P    = product_subset(P1, P2);
            bool sq   = FP.holds(Pred::sq, P);
            bool form = sq_product_form(F1, F2, P1, P2);
            if (sq != form) {
              add_failure(rep,
                          F1.ring().format(P1) + " x " + F2.ring().format(P2) + " in " + FP.ring().name(),
                          "sq-primary=" + yes_no(sq) + ", product form=" + yes_no(form));
            }
          }
        }
      }
    }

    bool wsq_not_sq(Facts& F, ElementSubset const& P) {
      return F.holds(Pred::wsq, P) && !F.holds(Pred::sq, P);
    }

    void wsq_not_sq_square_zero(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for_proper(
          F, rep, [&](auto const& P) { return wsq_not_sq(F, P); },
          [&](auto const& P) -> std::optional<std::string> {
            ElementSubset factors[2] = {P, P};
            auto          sq         = hyperideal_product(R, factors).hyperideal;
            if (sq == R.singleton(R.zero())) return std::nullopt;
            return "square " + R.format(sq);
          });
    }

    void wsq_not_sq_radical_of_zero(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F     = *st.base[i];
      auto const& R     = F.ring();
      auto        rad0  = F.radical(R.singleton(R.zero()));
      for_proper(
          F, rep, [&](auto const& P) { return wsq_not_sq(F, P); },
          [&](auto const& P) -> std::optional<std::string> {
            auto rad = F.radical(P);
            if (rad == rad0) return std::nullopt;
            return "radical " + R.format(rad) + " vs radical of zero " + R.format(rad0);
          });
    }

    void wsq_not_sq_intersection(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&                     F = *st.base[i];
      auto const&                R = F.ring();
      std::vector<ElementSubset> members;
      for (auto const& P : F.proper()) {
        if (wsq_not_sq(F, P)) {
          members.push_back(P);
        }
      }
      for_small_families(members, [&](std::vector<ElementSubset const*> const& fam) {
        ++rep.instances;
        ElementSubset I = *fam.front();
        for (auto const* P : fam) {
          I &= *P;
        }
        auto const& o = F.outcome(Pred::wsq, I);
        if (!o.holds) {
          add_failure(rep, family_text(R, fam), witness_text(R, o));
        }
      });
    }

    void weakly_primary_product_wsq(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F     = *st.base[i];
      auto const& R     = F.ring();
      std::size_t added = 0;
      for (auto const& P : F.proper()) {
        if (!F.holds(Pred::weakly_primary, P)) {
          continue;
        }
        for (auto const& Q : F.proper()) {
          if (!P.is_subset_of(Q)) {
            continue;
          }
          ++rep.instances;
          ElementSubset factors[2] = {P, Q};
          auto          prod       = hyperideal_product(R, factors);
          added += prod.closure_added;
          auto const& o = F.outcome(Pred::wsq, prod.hyperideal);
          if (!o.holds) {
            add_failure(rep,
                        "P=" + R.format(P) + " Q=" + R.format(Q),
                        "product " + R.format(prod.hyperideal) + " at " + witness_text(R, o));
          }
        }
      }
      if (added > 0) {
        rep.notes.push_back(std::to_string(added) + " product(s) needed closing to a hyperideal");
      }
    }

    void weakly_primary_square_wsq(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for_proper(
          F, rep, [&](auto const& P) { return F.holds(Pred::weakly_primary, P); },
          [&](auto const& P) -> std::optional<std::string> {
            ElementSubset factors[2] = {P, P};
            auto          sq         = hyperideal_product(R, factors).hyperideal;
            auto const&   o          = F.outcome(Pred::wsq, sq);
            if (o.holds) return std::nullopt;
            return "square " + R.format(sq) + " at " + witness_text(R, o);
          });
    }

    void wsq_colon_characterization(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F = *st.base[i];
      auto const& R = F.ring();
      for_proper(
          F, rep, [](auto const&) { return true; },
          [&](auto const& P) -> std::optional<std::string> {
            ElementSubset          rad = F.radical(P);
            std::optional<Element> bad;
            for (Element r = 0; r < R.size() && !bad; ++r) {
              auto sets = quotient_sets(R, P, r);
              bool ok   = generated_by(R, r).raw.is_subset_of(sets.colon)
                        || sets.colon.is_subset_of(rad) || sets.colon.is_subset_of(sets.annihilator);
              if (!ok) {
                bad = r;
              }
            }
            bool wsq = F.holds(Pred::wsq, P);
            if (wsq == !bad) return std::nullopt;
            return "wsq-primary=" + yes_no(wsq) + ", colon condition="
                   + (bad ? "false at r=" + R.label(*bad) : std::string("true"));
          });
    }

    void wsq_radical_weakly_prime(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      Facts&      F    = *st.base[i];
      auto const& R    = F.ring();
      auto        zero = R.singleton(R.zero());
      if (!(radical_by_powers(R, zero) == zero)) {
        rep.notes.push_back("hypothesis fails: nonzero nilpotents " + R.format(radical_by_powers(R, zero)));
        return;
      }
      for_proper(
          F, rep, [&](auto const& P) { return F.holds(Pred::wsq, P); },
          [&](auto const& P) -> std::optional<std::string> {
            auto rad = F.radical(P);
            if (rad.is_full()) return "radical is the whole ring";
            auto const& o = F.outcome(Pred::weakly_prime, rad);
            if (o.holds) return std::nullopt;
            return "radical " + R.format(rad) + " at " + witness_text(R, o);
          });
    }

    void note_incomplete(detail::HarnessState& st, std::size_t i, std::size_t j, TheoremReport& rep) {
      if (!st.homs_between(i, j).complete) {
        rep.notes.push_back("homomorphism search into " + st.name(j) + " stopped after "
                            + std::to_string(hom_node_limit) + " nodes");
      }
    }

    void wsq_preimage_under_monomorphism(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      Facts& F1 = *st.base[i];
      for (std::size_t j : st.hom_targets(i)) {
        Facts& F2 = *st.base[j];
        if (!F1.ring().g_is_commutative() || !F2.ring().g_is_commutative()) {
          continue;
        }
        note_incomplete(st, i, j, rep);
        for (auto const& h : st.homs_between(i, j).found) {
          if (!h.injective) {
            continue;
          }
          for (auto const& P2 : F2.proper()) {
            if (!F2.holds(Pred::wsq, P2)) {
              continue;
            }
            ++rep.instances;
            std::string where = "h into " + st.name(j) + ", P2=" + F2.ring().format(P2);
            try {
              auto P1 = preimage_ideal(F1.ring(), h, P2);
              auto const& o = F1.outcome(Pred::wsq, P1);
              if (!o.holds) {
                add_failure(rep, where, "preimage " + F1.ring().format(P1) + " at " + witness_text(F1.ring(), o));
              }
            } catch (Error const& e) {
              add_failure(rep, where, e.what());
            }
          }
        }
      }
    }

    struct Epi {
      std::string           target;
      Homomorphism const*   h;
      Facts*                facts;
    };

    std::vector<Epi> epimorphisms(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      std::vector<Epi> out;
      for (std::size_t j : st.hom_targets(i)) {
        note_incomplete(st, i, j, rep);
        for (auto const& h : st.homs_between(i, j).found) {
          if (h.surjective) {
            out.push_back({st.name(j), &h, st.base[j].get()});
          }
        }
      }
      if (!st.base[i]->valid()) {
        return out;
      }
      for (auto const& Q : st.base[i]->proper()) {
        auto& qf = st.quotient_of(i, Q);
        if (!qf.projection_ok) {
          rep.notes.push_back("projection onto " + qf.q.ring.name() + " is not a homomorphism");
          continue;
        }
        out.push_back({qf.q.ring.name() + " (projection)", &qf.q.projection, qf.facts.get()});
      }
      return out;
    }

    void wsq_image_under_epimorphism(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      Facts& F1 = *st.base[i];
      for (auto const& e : epimorphisms(st, i, rep)) {
        for (auto const& P1 : F1.proper()) {
          if (!e.h->kernel.is_subset_of(P1) || !F1.holds(Pred::wsq, P1)) {
            continue;
          }
          ++rep.instances;
          std::string where = "h onto " + e.target + ", P1=" + F1.ring().format(P1);
          try {
            auto P2 = image_ideal(e.facts->ring(), *e.h, P1);
            if (P2.is_full()) {
              add_failure(rep, where, "image is the whole ring");
              continue;
            }
            auto const& o = e.facts->outcome(Pred::wsq, P2);
            if (!o.holds) {
              add_failure(rep, where, "image " + e.facts->ring().format(P2) + " at " + witness_text(e.facts->ring(), o));
            }
          } catch (Error const& ex) {
            add_failure(rep, where, ex.what());
          }
        }
      }
    }

    ElementSubset classes_of(QuotientFacts const& qf, ElementSubset const& P) {
      ElementSubset out(qf.q.ring.size());
      P.for_each([&](Element x) { out.insert(qf.q.projection(x)); });
      return out;
    }

    void wsq_passes_to_quotient(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      Facts& F = *st.base[i];
      if (!F.valid()) return;
      for (auto const& Q : F.proper()) {
        auto& qf = st.quotient_of(i, Q);
        for (auto const& P : F.proper()) {
          if (!Q.is_subset_of(P) || !F.holds(Pred::wsq, P)) {
            continue;
          }
          ++rep.instances;
          auto PQ = classes_of(qf, P);
          auto const& o = qf.facts->outcome(Pred::wsq, PQ);
          if (!o.holds) {
            add_failure(rep,
                        "P=" + F.ring().format(P) + " Q=" + F.ring().format(Q),
                        "P/Q=" + qf.q.ring.format(PQ) + " at " + witness_text(qf.q.ring, o));
          }
        }
      }
    }

    void wsq_lifts_from_quotient(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      Facts& F = *st.base[i];
      if (!F.valid()) return;
      for (auto const& Q : F.proper()) {
        if (!F.holds(Pred::wsq, Q)) {
          continue;
        }
        auto& qf = st.quotient_of(i, Q);
        for (auto const& P : F.proper()) {
          if (!Q.is_subset_of(P)) {
            continue;
          }
          auto PQ = classes_of(qf, P);
          if (!qf.facts->holds(Pred::wsq, PQ)) {
            continue;
          }
          ++rep.instances;
          auto const& o = F.outcome(Pred::wsq, P);
          if (!o.holds) {
            add_failure(rep, "P=" + F.ring().format(P) + " Q=" + F.ring().format(Q), witness_text(F.ring(), o));
          }
        }
      }
    }

    void wsq_restricts_to_subhyperring(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      Facts& F = *st.base[i];
      if (F.valid() && F.ring().size() > max_subring_carrier) {
        rep.notes.push_back("subhyperrings are not enumerated on carriers above "
                            + std::to_string(max_subring_carrier));
      }
      for (auto& [S, sub] : st.subrings_of(i)) {
        auto const&          R = F.ring();
        std::vector<Element> local(R.size(), 0);
        auto                 members = S.members();
        for (Element k = 0; k < members.size(); ++k) {
          local[members[k]] = k;
        }
        for (auto const& P : F.proper()) {
          if (S.is_subset_of(P) || !F.holds(Pred::wsq, P)) {
            continue;
          }
          ++rep.instances;
          ElementSubset meet = S & P;
          ElementSubset in_sub(members.size());
          meet.for_each([&](Element x) { in_sub.insert(local[x]); });
          std::string where = "S=" + R.format(S) + " P=" + R.format(P);
          if (!is_hyperideal(sub->ring(), in_sub)) {
            add_failure(rep, where, "intersection is not a hyperideal of S");
            continue;
          }
          auto const& o = sub->outcome(Pred::wsq, in_sub);
          if (!o.holds) {
            add_failure(rep, where, witness_text(sub->ring(), o));
          }
        }
      }
    }

    void wsq_product_with_full_factor(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      for (std::size_t j : st.product_partners(i)) {
        // The statement needs R2 with 1 != 0: over the one-element ring,
        // P1 x R2 is a copy of P1 and {0} can be wsq- but not sq-primary.
        if (st.base[j]->ring().one() == st.base[j]->ring().zero()) {
          rep.notes.push_back("partner " + st.name(j) + " skipped: its identity is zero");
          continue;
        }
        Facts& F1   = *st.base[i];
        Facts& FP   = st.product(i, j);
        auto   full = st.base[j]->ring().full_set();
        for (auto const& P1 : F1.proper()) {
          ++rep.instances;
          auto P = product_subset(P1, full);
          bool a = FP.holds(Pred::wsq, P);
          bool b = FP.holds(Pred::sq, P);
          bool c = F1.holds(Pred::sq, P1);
          if (a != b || b != c) {
            add_failure(rep,
                        "P1=" + F1.ring().format(P1) + " in " + FP.ring().name(),
                        "wsq(P1 x R2)=" + yes_no(a) + ", sq(P1 x R2)=" + yes_no(b) + ", sq(P1)=" + yes_no(c));
          }
        }
      }
    }

    void wsq_product_nonzero(detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
      no_constructions(st, i, rep);
      for (std::size_t j : st.product_partners(i)) {
        Facts& F1   = *st.base[i];
        Facts& F2   = *st.base[j];
        Facts& FP   = st.product(i, j);
        auto   zero = FP.ring().singleton(FP.ring().zero());
        for (auto const& P1 : F1.all()) {
          for (auto const& P2 : F2.all()) {
            auto P = product_subset(P1, P2);
            if (P.is_full() || P == zero) {
              continue;
            }
            ++rep.instances;
            bool a = FP.holds(Pred::wsq, P);
            bool b = sq_product_form(F1, F2, P1, P2);
            bool c = FP.holds(Pred::sq, P);
            if (a != b || b != c) {
              add_failure(rep,
                          F1.ring().format(P1) + " x " + F2.ring().format(P2) + " in " + FP.ring().name(),
                          "wsq=" + yes_no(a) + ", product form=" + yes_no(b) + ", sq=" + yes_no(c));
            }
          }
        }
      }
    }

    std::vector<Registered> const& registry() {
      static std::vector<Registered> const r = {
          {{"product-q-primary", "a proper P of R1 x R2 is q-primary iff it is Q x R2 or R1 x Q with Q q-primary", true},
           product_q_primary},
          {{"q-primary-is-2-absorbing-q-primary", "q-primary implies (2,n)-absorbing q-primary", true},
           q_primary_is_2_absorbing_q_primary},
          {{"absorbing-primary-is-absorbing-q-primary", "(k,n)-absorbing primary implies (k,n)-absorbing q-primary", true},
           absorbing_primary_is_absorbing_q_primary},
          {{"absorbing-q-primary-intersection", "finite intersections of Q-(k,n)-absorbing q-primary hyperideals are Q-(k,n)-absorbing q-primary", true},
           absorbing_q_primary_intersection},
          {{"absorbing-q-primary-tuple-characterization", "(k,n)-absorbing q-primary iff products of kn-k+1 factors in P have (k-1)n-k+2 factors with product in the radical", true},
           absorbing_q_primary_tuple_characterization},
          {{"absorbing-q-primary-raise-beyond-n", "(k,n)-absorbing q-primary implies (u,n)-absorbing q-primary for u > n", false},
           [](detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
             absorbing_q_primary_raise(st, i, rep, [](std::size_t, std::size_t n) { return n; });
           }},
          {{"absorbing-q-primary-raise-beyond-k", "(k,n)-absorbing q-primary implies (u,n)-absorbing q-primary for u > k", false},
           [](detail::HarnessState& st, std::size_t i, TheoremReport& rep) {
             absorbing_q_primary_raise(st, i, rep, [](std::size_t k, std::size_t) { return k; });
           }},
          {{"sq-implies-q", "sq-primary implies q-primary", true}, sq_implies_q},
          {{"q-with-small-radical-square-is-sq", "q-primary with g(rad^2, 1..) inside P implies sq-primary", true},
           q_with_small_radical_square_is_sq},
          {{"principal-sq-makes-all-sq", "if every proper <r> is sq-primary then every proper hyperideal is", true},
           principal_sq_makes_all_sq},
          {{"sq-ideal-product-condition", "sq-primary P and g(P_1..P_n) in P give, for some i, squares of P_i in P or the cofactor product in rad P", true},
           sq_ideal_product_condition},
          {{"sq-colon-is-sq", "sq-primary P, r outside P with <r> = <r^2> give P_r sq-primary", true}, sq_colon_is_sq},
          {{"product-sq-form", "P1 x P2 is sq-primary iff one factor is sq-primary and the other is the whole ring", true},
           product_sq_form},
          {{"wsq-not-sq-square-zero", "wsq-primary but not sq-primary implies g(P^2, 1..) = 0", true},
           wsq_not_sq_square_zero},
          {{"wsq-not-sq-radical-of-zero", "wsq-primary but not sq-primary implies rad P = rad 0", true},
           wsq_not_sq_radical_of_zero},
          {{"wsq-not-sq-intersection", "intersections of wsq-primary, non-sq-primary hyperideals are wsq-primary", true},
           wsq_not_sq_intersection},
          {{"weakly-primary-product-wsq", "P weakly primary, P within Q give g(P,Q,1..) wsq-primary", true},
           weakly_primary_product_wsq},
          {{"weakly-primary-square-wsq", "P weakly primary gives g(P^2,1..) wsq-primary", true}, weakly_primary_square_wsq},
          {{"wsq-colon-characterization", "wsq-primary iff for every r: <r> in P_r, P_r in rad P or P_r in A_r", true},
           wsq_colon_characterization},
          {{"wsq-radical-weakly-prime", "without nonzero nilpotents, a wsq-primary P has weakly prime radical", true},
           wsq_radical_weakly_prime},
          {{"wsq-preimage-under-monomorphism", "preimages of wsq-primary hyperideals under monomorphisms are wsq-primary", true},
           wsq_preimage_under_monomorphism},
          {{"wsq-image-under-epimorphism", "images of wsq-primary hyperideals containing the kernel under epimorphisms are wsq-primary", true},
           wsq_image_under_epimorphism},
          {{"wsq-passes-to-quotient", "Q within P, P wsq-primary give P/Q wsq-primary in R/Q", true}, wsq_passes_to_quotient},
          {{"wsq-lifts-from-quotient", "Q wsq-primary and P/Q wsq-primary give P wsq-primary", true}, wsq_lifts_from_quotient},
          {{"wsq-restricts-to-subhyperring", "S not inside a wsq-primary P gives S meet P wsq-primary in S", true},
           wsq_restricts_to_subhyperring},
          {{"wsq-product-with-full-factor", "P1 x R2 wsq-primary iff P1 x R2 sq-primary iff P1 sq-primary", true},
           wsq_product_with_full_factor},
          {{"wsq-product-nonzero", "for proper nonzero P1 x P2: wsq-primary iff product form iff sq-primary", true},
           wsq_product_nonzero},
      };
      return r;
    }

    Registered const& lookup(std::string_view id) {
      for (auto const& r : registry()) {
        if (r.info.id == id) {
          return r;
        }
      }
      throw PreconditionError("unknown theorem id \"" + std::string(id) + "\"");
    }

  }  // namespace

  std::vector<TheoremInfo> const& registered_theorems() {
    static std::vector<TheoremInfo> const infos = [] {
      std::vector<TheoremInfo> out;
      for (auto const& r : registry()) {
        out.push_back(r.info);
      }
      return out;
    }();
    return infos;
  }

  Harness::Harness(std::vector<CorpusEntry> structures) : _state(std::make_unique<detail::HarnessState>()) {
    for (auto& e : structures) {
      _state->add(std::move(e.ring), &e.report);
    }
  }

  Harness::Harness(std::vector<HyperringTable> const& structures) : _state(std::make_unique<detail::HarnessState>()) {
    for (auto const& R : structures) {
      _state->add(R, nullptr);
    }
  }

  Harness::~Harness()                             = default;
  Harness::Harness(Harness&&) noexcept            = default;
  Harness& Harness::operator=(Harness&&) noexcept = default;

  std::vector<TheoremReport> Harness::run(std::string_view id) {
    auto const&                reg = lookup(id);
    std::vector<TheoremReport> out;
    for (std::size_t i = 0; i < _state->base.size(); ++i) {
      TheoremReport rep;
      rep.id        = reg.info.id;
      rep.structure = _state->name(i);
      rep.asserted  = reg.info.asserted;
      reg.check(*_state, i, rep);
      out.push_back(std::move(rep));
    }
    return out;
  }

  std::vector<TheoremReport> Harness::run_all() {
    std::vector<TheoremReport> out;
    for (auto const& r : registry()) {
      auto part = run(r.info.id);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  ImplicationMatrix Harness::implication_matrix() {
    struct Column {
      std::string name;
      Pred        pred;
    };
    std::vector<Column> const cols = {
        {"prime", Pred::prime},
        {"weakly_prime", Pred::weakly_prime},
        {"primary", Pred::primary},
        {"weakly_primary", Pred::weakly_primary},
        {"q_primary", Pred::q_primary},
        {"sq_primary", Pred::sq},
        {"wsq_primary", Pred::wsq},
        {absorbing_name("kn_absorbing", 2), Pred::kn_absorbing},
        {absorbing_name("kn_absorbing_primary", 2), Pred::kn_absorbing_primary},
        {absorbing_name("kn_absorbing_q_primary", 2), Pred::kn_absorbing_q_primary},
    };
    std::set<std::pair<std::string, std::string>> const known = {
        {"prime", "weakly_prime"},
        {"prime", "primary"},
        {"primary", "weakly_primary"},
        {"primary", "q_primary"},
        {"sq_primary", "q_primary"},
        {"sq_primary", "wsq_primary"},
        {"q_primary", absorbing_name("kn_absorbing_q_primary", 2)},
        {absorbing_name("kn_absorbing_primary", 2), absorbing_name("kn_absorbing_q_primary", 2)},
    };
    ImplicationMatrix m;
    for (auto const& c : cols) {
      m.predicates.push_back(c.name);
    }
    for (auto const& a : cols) {
      for (auto const& b : cols) {
        if (a.name == b.name) {
          continue;
        }
        ImplicationEntry e{a.name, b.name, known.contains({a.name, b.name}), 0, 0, {}};
        for (auto& F : _state->base) {
          for (auto const& P : F->proper()) {
            if (!F->holds(a.pred, P)) {
              continue;
            }
            ++e.antecedent_count;
            if (!F->holds(b.pred, P)) {
              if (e.counterexamples++ == 0) {
                e.first_counterexample = F->ring().name() + " " + F->ring().format(P);
              }
            }
          }
        }
        m.entries.push_back(std::move(e));
      }
    }
    return m;
  }

  std::size_t ImplicationMatrix::known_failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](auto const& e) { return e.known && !e.holds(); }));
  }

  std::string ImplicationMatrix::to_text() const {
    std::ostringstream out;
    for (auto const& e : entries) {
      out << e.antecedent << " => " << e.consequent << ": ";
      if (e.holds()) {
        out << "holds (" << e.antecedent_count << ")";
      } else {
        out << "fails " << e.counterexamples << "/" << e.antecedent_count << ", first at "
            << e.first_counterexample;
      }
      out << (e.known ? " [required]" : "") << "\n";
    }
    out << "required implications failing: " << known_failures() << "\n";
    return out.str();
  }

  std::vector<TheoremReport> run_theorem(std::string_view id, std::vector<CorpusEntry> structures) {
    return Harness(std::move(structures)).run(id);
  }

  std::vector<TheoremReport> run_all(std::vector<CorpusEntry> structures) {
    return Harness(std::move(structures)).run_all();
  }

  ImplicationMatrix implication_matrix(std::vector<CorpusEntry> structures) {
    return Harness(std::move(structures)).implication_matrix();
  }

  HarnessSummary summarize(std::vector<TheoremReport> const& reports) {
    HarnessSummary s;
    for (auto const& r : reports) {
      ++s.reports;
      switch (r.status()) {
        case TheoremStatus::pass: ++s.pass; break;
        case TheoremStatus::vacuous: ++s.vacuous; break;
        case TheoremStatus::fail:
          ++s.fail;
          s.asserted_failures += r.asserted;
          break;
      }
    }
    return s;
  }

  std::string render(std::vector<TheoremReport> const& reports) {
    std::string out;
    for (auto const& r : reports) {
      out += r.to_text();
    }
    auto s = summarize(reports);
    out += "summary: " + std::to_string(s.reports) + " reports, " + std::to_string(s.pass) + " pass, "
           + std::to_string(s.fail) + " fail, " + std::to_string(s.vacuous) + " vacuous, "
           + std::to_string(s.asserted_failures) + " asserted failures\n";
    return out;
  }

}  // namespace hyperring

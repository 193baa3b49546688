// Brute-force reference implementations. Written from the definitions
// against the raw tables only, so they share no code with the library
// beyond HyperringTable accessors.
#ifndef HYPERRING_TESTS_ORACLES_HPP_
#define HYPERRING_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperring/hyperring.hpp"

namespace oracle {

  using hyperring::Element;
  using hyperring::ElementSubset;
  using hyperring::HyperringTable;
  using hyperring::Tuple;

  // Odometer over all k-tuples of a carrier of size N.
  inline std::vector<Tuple> all_tuples(std::size_t N, std::size_t k) {
    std::vector<Tuple> out;
    Tuple              t(k, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = k;
      while (i > 0 && ++t[i - 1] == N) {
        t[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  // Tuples whose entries all lie in S.
  inline std::vector<Tuple> tuples_over(std::vector<Element> const& S, std::size_t k) {
    std::vector<Tuple> out;
    for (auto const& idx : all_tuples(S.size(), k)) {
      Tuple t;
      for (auto i : idx) {
        t.push_back(S[i]);
      }
      out.push_back(t);
    }
    return out;
  }

  inline bool is_hyperideal(HyperringTable const& R, std::vector<bool> const& in) {
    std::size_t const N = R.size();
    std::vector<Element> S;
    for (Element x = 0; x < N; ++x) {
      if (in[x]) {
        S.push_back(x);
      }
    }
    if (!in[R.zero()]) {
      return false;
    }
    for (auto const& t : tuples_over(S, R.m())) {
      bool ok = true;
      R.f_table().at(t).for_each([&](Element y) { ok = ok && in[y]; });
      if (!ok) {
        return false;
      }
    }
    // -x: the y with 0 in f(x, y, 0, ..., 0).
    for (auto x : S) {
      for (Element y = 0; y < N; ++y) {
        Tuple t(R.m(), R.zero());
        t[0] = x;
        t[1] = y;
        if (R.f_table().at(t).contains(R.zero()) && !in[y]) {
          return false;
        }
      }
    }
    for (auto const& t : all_tuples(N, R.n())) {
      bool touches = false;
      for (auto a : t) {
        touches = touches || in[a];
      }
      if (touches && !in[R.g_table().at(t)]) {
        return false;
      }
    }
    return true;
  }

  // Every subset passing is_hyperideal, as sorted member lists.
  inline std::set<std::vector<Element>> all_hyperideals(HyperringTable const& R) {
    std::set<std::vector<Element>> out;
    std::size_t const              N = R.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
      std::vector<bool>    in(N);
      std::vector<Element> members;
      for (Element x = 0; x < N; ++x) {
        in[x] = (mask >> x) & 1u;
        if (in[x]) {
          members.push_back(x);
        }
      }
      if (is_hyperideal(R, in)) {
        out.insert(members);
      }
    }
    return out;
  }

  // Z12 modulo the unit group {1,5,7,11}: classes keyed by their least
  // member, sums taken over all representatives, products of
  // representatives.
  struct Z12Units {
    std::map<int, std::set<int>>                         classes;
    std::map<std::pair<int, int>, std::set<int>>         sum;
    std::map<std::pair<int, int>, std::set<int>>         product;  // one class if well defined
  };

  inline Z12Units z12_mod_units() {
    Z12Units   z;
    int const  units[] = {1, 5, 7, 11};
    auto       cls     = [&](int a) {
      int least = 12;
      for (int u : units) {
        least = std::min(least, a * u % 12);
      }
      return least;
    };
    for (int a = 0; a < 12; ++a) {
      z.classes[cls(a)].insert(a);
    }
    for (auto const& [x, X] : z.classes) {
      for (auto const& [y, Y] : z.classes) {
        for (int a : X) {
          for (int b : Y) {
            z.sum[{x, y}].insert(cls((a + b) % 12));
            z.product[{x, y}].insert(cls(a * b % 12));
          }
        }
      }
    }
    return z;
  }

}  // namespace oracle

#endif  // HYPERRING_TESTS_ORACLES_HPP_

// One line per acceptance criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/corpus.hpp"
#include "hyperring/document.hpp"
#include "hyperring/lattice.hpp"
#include "hyperring/theorems.hpp"

using namespace hyperring;

namespace {

  struct Result {
    bool        pass;
    std::string detail;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string data(std::string const& name) {
    return std::string(HYPERRING_DATA_DIR) + "/" + name;
  }

  struct Run {
    int         status;
    std::string out;
  };

  Run run_hr(std::string const& args) {
    std::string cmd = std::string("\"") + HR_EXECUTABLE + "\" " + args + " 2>&1";
    FILE*       p   = popen(cmd.c_str(), "r");
    if (p == nullptr) {
      throw std::runtime_error("cannot run " + cmd);
    }
    std::string out;
    char        buf[4096];
    while (auto n = std::fread(buf, 1, sizeof buf, p)) {
      out.append(buf, n);
    }
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
  }

  std::string line_starting(std::string const& text, std::string const& prefix) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (l.rfind(prefix, 0) == 0) {
        return l;
      }
    }
    return {};
  }

  std::string fmt(HyperringTable const& R, ElementSubset const& s) {
    return R.format(s);
  }

  Result example_g() {
    auto    G = load_document(data("G.json"));
    Lattice L(G);
    auto    P   = G.subset("0,4");
    auto    exp = G.subset("0,2,4,6");
    auto    a   = radical_by_primes(G, P);
    auto    b   = radical_by_powers(G, P);
    bool    ok  = validate_krasner(G).passed() && a == exp && b == exp && is_prime(L, a)
              && is_q_primary(L, P);
    return {ok, "radical {0,4} = " + fmt(G, a) + " / " + fmt(G, b) + ", prime="
                    + (is_prime(L, a) ? "yes" : "no") + ", q-primary=" + (is_q_primary(L, P) ? "yes" : "no")};
  }

  Result example_h() {
    auto    H = load_document(data("H.json"), {false});
    Lattice L(H);
    bool    sq     = is_sq_primary(L, H.subset("0,2"));
    auto    golden = read_file(std::string(HYPERRING_GOLDEN_DIR) + "/H_validation.txt");
    bool    same   = validate_krasner(H).to_text() == golden;
    return {sq && same, std::string("sq-primary {0,2}=") + (sq ? "yes" : "no")
                              + ", report matches golden=" + (same ? "yes" : "no")};
  }

  Result example_wsq() {
    auto    G = load_document(data("G.json"));
    Lattice L(G);
    bool    w = is_wsq_primary(L, G.subset("0,3,6"));
    return {w, std::string("wsq-primary {0,3,6}=") + (w ? "yes" : "no")};
  }

  Result radical_equivalence() {
    std::size_t checked = 0;
    for (auto const& e : builtin_corpus()) {
      for (auto const& I : enumerate_hyperideals(e.ring)) {
        if (radical_by_primes(e.ring, I) != radical_by_powers(e.ring, I)) {
          return {false, e.ring.name() + " " + fmt(e.ring, I)};
        }
        ++checked;
      }
    }
    return {true, std::to_string(checked) + " hyperideals over the corpus"};
  }

  Result enumeration_oracle() {
    std::size_t structures = 0;
    for (auto const& e : builtin_corpus()) {
      auto const& R = e.ring;
      if (R.size() > 8) {
        continue;
      }
      std::vector<std::vector<Element>> fast;
      for (auto const& I : enumerate_hyperideals(R)) {
        fast.push_back(I.members());
      }
      auto brute = oracle::all_hyperideals(R);
      std::sort(fast.begin(), fast.end());
      if (fast != std::vector<std::vector<Element>>(brute.begin(), brute.end())) {
        return {false, "mismatch on " + R.name()};
      }
      ++structures;
    }
    auto                     G = builtin_G();
    std::vector<std::string> got;
    for (auto const& I : enumerate_hyperideals(G)) {
      got.push_back(G.format(I));
    }
    std::vector<std::string> const want{"{0}", "{0,4}", "{0,6}", "{0,3,6}", "{0,2,4,6}", "{0,1,2,3,4,6}"};
    return {got == want, std::to_string(structures) + " structures, G has " + std::to_string(got.size())};
  }

  Run first_theorems_run;

  Result theorem_suite() {
    first_theorems_run = run_hr("theorems");
    auto summary       = line_starting(first_theorems_run.out, "summary:");
    bool zero_fail     = summary.find(" 0 fail,") != std::string::npos;
    return {first_theorems_run.status == 0 && zero_fail,
            "exit " + std::to_string(first_theorems_run.status) + "; " + summary};
  }

  Result implications() {
    auto        m        = implication_matrix(builtin_corpus());
    std::size_t required = 0;
    for (auto const& e : m.entries) {
      required += e.known;
    }
    return {required == 8 && m.known_failures() == 0,
            std::to_string(required) + " required, " + std::to_string(m.known_failures()) + " failing"};
  }

  Result determinism() {
    std::vector<std::string> docs{read_file(data("G.json")), read_file(data("H.json"))};
    for (auto const& e : builtin_corpus()) {
      docs.push_back(serialize_document(e.ring));
    }
    for (auto const& d : docs) {
      if (serialize_document(parse_document(d, {false})) != d) {
        return {false, "round trip changed a document"};
      }
    }
    auto second = run_hr("theorems");
    bool same   = second.out == first_theorems_run.out && !second.out.empty();
    return {same, std::to_string(docs.size()) + " documents byte-stable, theorem output "
                      + (same ? "identical" : "differs") + " across runs"};
  }

  struct Criterion {
    int                      number;
    std::string              name;
    double                   budget_s;
    std::function<Result()> check;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "G example: radical, prime, q-primary", 1, example_g},
      {2, "H example: sq-primary, golden report", 1, example_h},
      {3, "G example: wsq-primary {0,3,6}", 1, example_wsq},
      {4, "radical algorithms agree", 30, radical_equivalence},
      {5, "hyperideal enumeration oracle", 30, enumeration_oracle},
      {6, "theorem suite", 120, theorem_suite},
      {7, "implication matrix", 120, implications},
      {8, "round trip and output determinism", 120, determinism},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto    t0 = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool   ok = o.pass && s < c.budget_s;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", s, c.budget_s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail
              << " [" << timing << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failing") << "\n";
  return failed == 0 ? 0 : 1;
}

// hr: command-line front end for hyperring documents.
//
// Exit codes: 0 success, 1 counterexample or validation failure, 2 usage or
// parse error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/corpus.hpp"
#include "hyperring/document.hpp"
#include "hyperring/lattice.hpp"
#include "hyperring/theorems.hpp"

namespace {

  using namespace hyperring;

  constexpr int exit_ok       = 0;
  constexpr int exit_negative = 1;
  constexpr int exit_usage    = 2;

  struct Options {
    bool                     no_validate = false;
    bool                     no_validate_skip = false;
    std::string              file;
    std::string              file_b;
    std::string              ideal;
    std::string              out;
    std::size_t              kmax = 2;
    std::vector<std::string> files;
  };

  HyperringTable load(std::string const& path, bool validate) {
    return load_document(path, ParseOptions{validate});
  }

  int cmd_validate(Options const& o) {
    auto R   = load(o.file, false);
    auto rep = validate_krasner(R);
    std::cout << rep.to_text();
    return rep.passed() ? exit_ok : exit_negative;
  }

  int cmd_ideals(Options const& o) {
    auto R = load(o.file, !o.no_validate);
    for (auto const& I : enumerate_hyperideals(R)) {
      std::cout << R.format(I) << "\n";
    }
    return exit_ok;
  }

  int cmd_radical(Options const& o) {
    auto R = load(o.file, !o.no_validate);
    auto I = R.subset(o.ideal);
    if (!is_hyperideal(R, I)) {
      std::cout << "note: " << R.format(I) << " is not a hyperideal\n";
    }
    auto a = radical_by_primes(R, I);
    auto b = radical_by_powers(R, I);
    std::cout << "by_primes: " << R.format(a) << "\n"
              << "by_powers: " << R.format(b) << "\n"
              << "agree: " << (a == b ? "true" : "false") << "\n";
    return a == b ? exit_ok : exit_negative;
  }

  int cmd_classify(Options const& o) {
    auto    R = load(o.file, !o.no_validate);
    Lattice L(R);
    auto    P = R.subset(o.ideal);
    if (!is_hyperideal(R, P)) {
      std::cout << "note: " << R.format(P) << " is not a hyperideal\n";
    }
    std::cout << classify(L, P, o.kmax).to_text(R);
    return exit_ok;
  }

  int cmd_product(Options const& o) {
    auto A = load(o.file, !o.no_validate);
    auto B = load(o.file_b, !o.no_validate);
    save_document(direct_product(A, B), o.out);
    return exit_ok;
  }

  int cmd_quotient(Options const& o) {
    auto R = load(o.file, !o.no_validate);
    save_document(quotient(R, R.subset(o.ideal)).ring, o.out);
    return exit_ok;
  }

  int cmd_export(Options const& o) {
    auto corpus = builtin_corpus();
    auto const* e = find_entry(corpus, o.file);
    if (e == nullptr) {
      std::cerr << "hr: no builtin structure named \"" << o.file << "\"; have";
      for (auto const& c : corpus) {
        std::cerr << " " << c.ring.name();
      }
      std::cerr << "\n";
      return exit_usage;
    }
    save_document(e->ring, o.out);
    return exit_ok;
  }

  int cmd_theorems(Options const& o) {
    std::vector<CorpusEntry> structures;
    if (o.files.empty()) {
      structures = builtin_corpus();
    } else {
      for (auto const& f : o.files) {
        auto R = load(f, true);
        structures.push_back({R, validate_krasner(R)});
      }
    }
    Harness h(std::move(structures));
    auto    reports = h.run_all();
    auto    matrix  = h.implication_matrix();
    std::cout << render(reports) << "\nimplications:\n" << matrix.to_text();
    bool ok = summarize(reports).asserted_failures == 0 && matrix.known_failures() == 0;
    return ok ? exit_ok : exit_negative;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Krasner (m,n)-hyperring workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--no-validate", o.no_validate, "Load documents without checking the axioms");

  auto* validate = app.add_subcommand("validate", "Print the validation report");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--no-validate-skip", o.no_validate_skip, "Accepted for compatibility; validation always runs");

  auto* ideals = app.add_subcommand("ideals", "List all hyperideals");
  ideals->add_option("file", o.file)->required();

  auto* radical = app.add_subcommand("radical", "Radical of a subset by both algorithms");
  radical->add_option("file", o.file)->required();
  radical->add_option("--ideal", o.ideal, "Comma-joined labels")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Run every predicate on a hyperideal");
  classify_cmd->add_option("file", o.file)->required();
  classify_cmd->add_option("--ideal", o.ideal, "Comma-joined labels")->required();
  classify_cmd->add_option("--kmax", o.kmax, "Largest k for the absorbing predicates")
      ->check(CLI::Range(2, 6));

  auto* product = app.add_subcommand("product", "Write the direct product document");
  product->add_option("fileA", o.file)->required();
  product->add_option("fileB", o.file_b)->required();
  product->add_option("-o", o.out, "Output file")->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Write the quotient document");
  quotient_cmd->add_option("file", o.file)->required();
  quotient_cmd->add_option("--ideal", o.ideal, "Comma-joined labels")->required();
  quotient_cmd->add_option("-o", o.out, "Output file")->required();

  auto* theorems = app.add_subcommand("theorems", "Run the theorem harness");
  theorems->add_option("files", o.files, "Documents (default: builtin corpus)");

  auto* export_cmd = app.add_subcommand("export", "Write a builtin structure as a document");
  export_cmd->add_option("name", o.file, "Builtin structure name, e.g. G")->required();
  export_cmd->add_option("-o", o.out, "Output file")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*ideals) return cmd_ideals(o);
    if (*radical) return cmd_radical(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*product) return cmd_product(o);
    if (*quotient_cmd) return cmd_quotient(o);
    if (*theorems) return cmd_theorems(o);
    if (*export_cmd) return cmd_export(o);
  } catch (ValidationFailedError const& e) {
    std::cerr << "hr: " << e.what() << "\n" << e.report().to_text();
    return exit_negative;
  } catch (InconsistencyError const& e) {
    std::cerr << "hr: internal inconsistency: " << e.what() << "\n";
    return exit_negative;
  } catch (std::exception const& e) {
    std::cerr << "hr: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

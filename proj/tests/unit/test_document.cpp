#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperring/constructions.hpp"
#include "hyperring/corpus.hpp"
#include "hyperring/document.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string data(std::string const& name) {
    return read_file(std::string(HYPERRING_DATA_DIR) + "/" + name);
  }

  std::string without_first_line_containing(std::string const& text, std::string const& needle) {
    auto at = text.find(needle);
    REQUIRE(at != std::string::npos);
    auto begin = text.rfind('\n', at) + 1;
    auto end   = text.find('\n', at) + 1;
    return text.substr(0, begin) + text.substr(end);
  }

  std::string replace_first(std::string text, std::string const& from, std::string const& to) {
    auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
  }

  // Every tuple written out, commutativity flags off.
  std::string dense_document(HyperringTable const& R) {
    nlohmann::ordered_json j;
    j["name"]          = R.name();
    j["m"]             = R.m();
    j["n"]             = R.n();
    j["elements"]      = R.labels();
    j["zero"]          = R.label(R.zero());
    j["one"]           = R.label(R.one());
    j["commutative_f"] = false;
    j["commutative_g"] = false;
    auto key           = [&](Tuple const& t) {
      std::string k;
      for (auto x : t) {
        k += (k.empty() ? "" : ",") + R.label(x);
      }
      return k;
    };
    for (auto const& t : oracle::all_tuples(R.size(), R.m())) {
      std::vector<std::string> out;
      R.hyperop(t).for_each([&](Element y) { out.push_back(R.label(y)); });
      j["f"][key(t)] = out;
    }
    for (auto const& t : oracle::all_tuples(R.size(), R.n())) {
      j["g"][key(t)] = R.label(R.g_eval(t));
    }
    return j.dump(1);
  }

}  // namespace

TEST_CASE("shipped documents are canonical") {
  auto G = data("G.json");
  CHECK(serialize_document(parse_document(G)) == G);
  CHECK(parse_document(G) == builtin_G());
  auto H = data("H.json");
  CHECK(serialize_document(parse_document(H, {false})) == H);
  CHECK(parse_document(H, {false}) == builtin_H());
  CHECK(parse_document(H, {false}).notes() == builtin_H().notes());
}

TEST_CASE("round trip for every corpus member") {
  for (auto const& e : builtin_corpus()) {
    INFO(e.ring.name());
    auto text = serialize_document(e.ring);
    auto back = parse_document(text, {false});
    CHECK(back == e.ring);
    CHECK(back.name() == e.ring.name());
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("commutative compression expands to the dense table") {
  for (auto const& e : builtin_corpus()) {
    if (e.ring.size() > 12) {
      continue;
    }
    INFO(e.ring.name());
    CHECK(parse_document(dense_document(e.ring), {false}) == e.ring);
  }
}

TEST_CASE("missing tuple is reported by key") {
  auto text = without_first_line_containing(data("G.json"), "\"2,3\":");
  try {
    parse_document(text);
    FAIL("expected NonTotalTableError");
  } catch (NonTotalTableError const& e) {
    CHECK(std::string(e.what()) == "f has no entry for \"2,3\"");
  }
}

TEST_CASE("duplicate keys are rejected with a position") {
  auto G    = data("G.json");
  auto text = replace_first(G, "    \"0,0\": [\"0\"],\n", "    \"0,0\": [\"0\"],\n    \"0,0\": [\"0\"],\n");
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.find("\"0,0\": [\"0\"],\n    \"0,0\""); ++i) {
    line += text[i] == '\n';
  }
  try {
    parse_document(text);
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == line + 1);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("0,0") != std::string::npos);
  }
}

TEST_CASE("malformed documents") {
  auto G = data("G.json");
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"m\": 2", "\"m\": 2,\n  \"extra\": 1")), ParseError);
  CHECK_THROWS_AS(parse_document(replace_first(G, "{", "{{")), ParseError);
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"one\": \"1\"", "\"one\": \"7\"")), UnknownLabelError);
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"0,0\": [\"0\"]", "\"0,0\": [\"5\"]")), UnknownLabelError);
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"3\", \"4\"", "\"3,5\", \"4\"")), ParseError);
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"0,0\": [\"0\"]", "\"0,0\": [\"0\"],\n    \"0,0,0\": [\"0\"]")),
                  ParseError);
  // With commutative_f set, "1,0" must agree with "0,1".
  CHECK_THROWS_AS(parse_document(replace_first(G, "\"0,0\": [\"0\"]", "\"0,0\": [\"0\"],\n    \"1,0\": [\"2\"]")),
                  ParseError);
  try {
    parse_document("{\n  \"name\": \"x\",\n  \"m\": 2 2\n}");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("validation on load") {
  CHECK_THROWS_AS(parse_document(data("H.json")), ValidationFailedError);
  try {
    parse_document(data("H.json"));
  } catch (ValidationFailedError const& e) {
    CHECK(e.report().to_text() == validate_krasner(builtin_H()).to_text());
  }
  CHECK_NOTHROW(parse_document(data("H.json"), {false}));
  CHECK_THROWS(load_document(std::string(HYPERRING_DATA_DIR) + "/missing.json"));
}

TEST_CASE("serialization is deterministic") {
  auto GG = direct_product(builtin_G(), builtin_G());
  CHECK(serialize_document(GG) == serialize_document(direct_product(builtin_G(), builtin_G())));
}

#include "hyperring/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hyperring {

  namespace {
    using json = nlohmann::json;

    // Dense tables above this many tuples are refused rather than allocated.
    constexpr std::size_t max_tuples = std::size_t{1} << 22;

    struct Position {
      std::size_t line   = 1;
      std::size_t column = 1;
    };

    Position position_at(std::string_view text, std::size_t offset) {
      Position p;
      offset = std::min(offset, text.size());
      for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
          ++p.line;
          p.column = 1;
        } else {
          ++p.column;
        }
      }
      return p;
    }

    // Byte offsets of every object key, in text order. Keys are the strings
    // followed (after whitespace) by ':'.
    std::vector<std::size_t> key_offsets(std::string_view text) {
      std::vector<std::size_t> out;
      std::size_t              i = 0;
      while (i < text.size()) {
        if (text[i] != '"') {
          ++i;
          continue;
        }
        std::size_t start = i++;
        while (i < text.size() && text[i] != '"') {
          i += text[i] == '\\' ? 2 : 1;
        }
        ++i;
        std::size_t j = i;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\n' || text[j] == '\r')) {
          ++j;
        }
        if (j < text.size() && text[j] == ':') {
          out.push_back(start);
        }
      }
      return out;
    }

    struct Frame {
      bool                  is_object;
      std::set<std::string> keys;
      std::string           last_key;
    };

    // Where each key sits, as (top-level key or "", key).
    using KeyIndex = std::map<std::pair<std::string, std::string>, Position>;

    class Reader {
     public:
      explicit Reader(std::string_view text) : _text(text), _offsets(key_offsets(text)) {}

      json parse() {
        std::vector<Frame> stack;
        std::size_t        ordinal = 0;
        auto cb = [&](int, json::parse_event_t event, json& parsed) {
          switch (event) {
            case json::parse_event_t::object_start:
              stack.push_back({true, {}, {}});
              break;
            case json::parse_event_t::array_start:
              stack.push_back({false, {}, {}});
              break;
            case json::parse_event_t::object_end:
            case json::parse_event_t::array_end:
              stack.pop_back();
              break;
            case json::parse_event_t::key: {
              std::string key = parsed.get<std::string>();
              Position    pos = ordinal < _offsets.size()
                                    ? position_at(_text, _offsets[ordinal])
                                    : Position{};
              ++ordinal;
              Frame& top = stack.back();
              if (!top.keys.insert(key).second) {
                throw ParseError("duplicate key \"" + key + "\"", pos.line, pos.column);
              }
              top.last_key       = key;
              std::string parent = stack.size() >= 2 ? stack.front().last_key : std::string();
              _keys.emplace(std::pair(parent, key), pos);
              break;
            }
            case json::parse_event_t::value:
              break;
          }
          return true;
        };
        try {
          return json::parse(_text.begin(), _text.end(), cb);
        } catch (json::parse_error const& e) {
          // e.byte is 1-based and points at the offending character.
          Position p = position_at(_text, e.byte == 0 ? 0 : e.byte - 1);
          std::string what = e.what();
          auto        cut  = what.find("syntax error");
          throw ParseError(cut == std::string::npos ? what : what.substr(cut), p.line, p.column);
        }
      }

      [[noreturn]] void fail(std::string const& msg,
                             std::string const& parent,
                             std::string const& key) const {
        auto it = _keys.find({parent, key});
        Position p = it == _keys.end() ? Position{} : it->second;
        throw ParseError(msg, p.line, p.column);
      }

      [[noreturn]] void fail(std::string const& msg, std::string const& key) const {
        fail(msg, "", key);
      }

     private:
      std::string_view         _text;
      std::vector<std::size_t> _offsets;
      KeyIndex                 _keys;
    };

    std::vector<std::string> split_tuple(std::string const& key) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (true) {
        auto comma = key.find(',', start);
        out.push_back(key.substr(start, comma - start));
        if (comma == std::string::npos) {
          return out;
        }
        start = comma + 1;
      }
    }

    std::string join_tuple(std::vector<std::string> const& labels, std::span<Element const> t) {
      std::string out;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += labels[t[i]];
      }
      return out;
    }

    std::size_t checked_tuple_count(std::size_t N, std::size_t k) {
      std::size_t c = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (N != 0 && c > max_tuples / N) {
          return max_tuples + 1;
        }
        c *= N;
      }
      return c;
    }

    template <typename Entry, typename Decode, typename Store>
    void fill_table(Reader const&                                  rd,
                    json const&                                    obj,
                    std::string const&                             field,
                    std::unordered_map<std::string, Element> const& index,
                    std::vector<std::string> const&                labels,
                    std::size_t                                    arity,
                    bool                                           commutative,
                    Decode&&                                       decode,
                    Store&&                                        store) {
      std::size_t const           N     = labels.size();
      std::size_t const           count = checked_tuple_count(N, arity);
      std::vector<std::optional<Entry>> given(count);
      auto index_of = [&](std::span<Element const> t) {
        std::size_t idx = 0;
        for (Element e : t) {
          idx = idx * N + e;
        }
        return idx;
      };
      for (auto const& [key, value] : obj.items()) {
        auto  parts = split_tuple(key);
        Tuple t;
        for (auto const& p : parts) {
          auto it = index.find(p);
          if (it == index.end()) {
            throw UnknownLabelError(field + " key \"" + key + "\": unknown label \"" + p + "\"");
          }
          t.push_back(it->second);
        }
        if (t.size() != arity) {
          rd.fail(field + " key \"" + key + "\" has " + std::to_string(t.size())
                      + " labels, expected " + std::to_string(arity),
                  field,
                  key);
        }
        given[index_of(t)] = decode(key, value);
      }
      Tuple sorted(arity);
      for_each_tuple(N, arity, [&](std::span<Element const> t) {
        auto& entry = given[index_of(t)];
        if (commutative) {
          std::copy(t.begin(), t.end(), sorted.begin());
          std::sort(sorted.begin(), sorted.end());
          auto const& base = given[index_of(sorted)];
          if (entry && base && !(*entry == *base)) {
            std::string k = join_tuple(labels, t);
            rd.fail(field + " entry \"" + k + "\" disagrees with \"" + join_tuple(labels, sorted)
                        + "\" although commutative_" + field + " is set",
                    field,
                    k);
          }
          if (!entry && base) {
            store(t, *base);
            return true;
          }
        }
        if (!entry) {
          throw NonTotalTableError(field + " has no entry for \""
                                   + join_tuple(labels, commutative ? std::span<Element const>(sorted) : t)
                                   + "\"");
        }
        store(t, *entry);
        return true;
      });
    }
  }  // namespace

  HyperringTable parse_document(std::string_view text, ParseOptions options) {
    Reader rd(text);
    json   doc = rd.parse();
    if (!doc.is_object()) {
      throw ParseError("document must be an object", 1, 1);
    }
    static std::set<std::string> const known = {"name",
                                                "comment",
                                                "m",
                                                "n",
                                                "elements",
                                                "zero",
                                                "one",
                                                "commutative_f",
                                                "commutative_g",
                                                "f",
                                                "g"};
    for (auto const& [key, value] : doc.items()) {
      if (!known.contains(key)) {
        rd.fail("unknown field \"" + key + "\"", key);
      }
    }
    auto require = [&](std::string const& key) -> json const& {
      auto it = doc.find(key);
      if (it == doc.end()) {
        throw ParseError("missing field \"" + key + "\"", 1, 1);
      }
      return *it;
    };
    auto string_field = [&](std::string const& key) {
      auto const& v = require(key);
      if (!v.is_string()) {
        rd.fail("\"" + key + "\" must be a string", key);
      }
      return v.get<std::string>();
    };
    auto bool_field = [&](std::string const& key) {
      auto const& v = require(key);
      if (!v.is_boolean()) {
        rd.fail("\"" + key + "\" must be a boolean", key);
      }
      return v.get<bool>();
    };
    auto arity_field = [&](std::string const& key) {
      auto const& v = require(key);
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 2) {
        rd.fail("\"" + key + "\" must be an integer >= 2", key);
      }
      return static_cast<std::size_t>(v.get<std::uint64_t>());
    };

    std::string name = string_field("name");
    std::size_t m    = arity_field("m");
    std::size_t n    = arity_field("n");

    auto const& elements = require("elements");
    if (!elements.is_array() || elements.empty()) {
      rd.fail("\"elements\" must be a non-empty array of strings", "elements");
    }
    std::vector<std::string>                 labels;
    std::unordered_map<std::string, Element> index;
    for (auto const& e : elements) {
      if (!e.is_string()) {
        rd.fail("\"elements\" must be a non-empty array of strings", "elements");
      }
      auto l = e.get<std::string>();
      if (l.empty() || l.find(',') != std::string::npos) {
        rd.fail("label \"" + l + "\" is empty or contains ','", "elements");
      }
      if (!index.emplace(l, static_cast<Element>(labels.size())).second) {
        rd.fail("label \"" + l + "\" is repeated", "elements");
      }
      labels.push_back(l);
    }
    std::size_t const N = labels.size();
    if (checked_tuple_count(N, std::max(m, n)) > max_tuples) {
      rd.fail("tables would exceed " + std::to_string(max_tuples) + " tuples", "elements");
    }

    auto label_field = [&](std::string const& key) {
      auto l  = string_field(key);
      auto it = index.find(l);
      if (it == index.end()) {
        throw UnknownLabelError("\"" + key + "\": unknown label \"" + l + "\"");
      }
      return it->second;
    };
    Element zero  = label_field("zero");
    Element one   = label_field("one");
    bool    com_f = bool_field("commutative_f");
    bool    com_g = bool_field("commutative_g");

    std::vector<std::string> notes;
    if (auto it = doc.find("comment"); it != doc.end()) {
      if (!it->is_array()) {
        rd.fail("\"comment\" must be an array of strings", "comment");
      }
      for (auto const& line : *it) {
        if (!line.is_string()) {
          rd.fail("\"comment\" must be an array of strings", "comment");
        }
        notes.push_back(line.get<std::string>());
      }
    }

    auto const& fobj = require("f");
    if (!fobj.is_object()) {
      rd.fail("\"f\" must be an object", "f");
    }
    auto const& gobj = require("g");
    if (!gobj.is_object()) {
      rd.fail("\"g\" must be an object", "g");
    }

    HyperOperationTable f(N, m);
    fill_table<ElementSubset>(
        rd,
        fobj,
        "f",
        index,
        labels,
        m,
        com_f,
        [&](std::string const& key, json const& value) {
          if (!value.is_array()) {
            rd.fail("f entry \"" + key + "\" must be an array of labels", "f", key);
          }
          ElementSubset s(N);
          for (auto const& v : value) {
            if (!v.is_string()) {
              rd.fail("f entry \"" + key + "\" must be an array of labels", "f", key);
            }
            auto it = index.find(v.get<std::string>());
            if (it == index.end()) {
              throw UnknownLabelError("f entry \"" + key + "\": unknown label \""
                                      + v.get<std::string>() + "\"");
            }
            s.insert(it->second);
          }
          return s;
        },
        [&](std::span<Element const> t, ElementSubset const& s) { f.at(t) = s; });

    NaryOperationTable g(N, n);
    fill_table<Element>(
        rd,
        gobj,
        "g",
        index,
        labels,
        n,
        com_g,
        [&](std::string const& key, json const& value) {
          if (!value.is_string()) {
            rd.fail("g entry \"" + key + "\" must be a label", "g", key);
          }
          auto it = index.find(value.get<std::string>());
          if (it == index.end()) {
            throw UnknownLabelError("g entry \"" + key + "\": unknown label \""
                                    + value.get<std::string>() + "\"");
          }
          return it->second;
        },
        [&](std::span<Element const> t, Element v) { g.at(t) = v; });

    HyperringTable R(std::move(name), std::move(labels), std::move(f), std::move(g), zero, one);
    if (!notes.empty()) {
      R = R.with_notes(std::move(notes));
    }
    if (options.validate) {
      auto rep = validate_krasner(R);
      if (!rep.passed()) {
        throw ValidationFailedError(std::move(rep));
      }
    }
    return R;
  }

  HyperringTable load_document(std::filesystem::path const& path, ParseOptions options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), options);
  }

  namespace {
    std::string quoted(std::string const& s) {
      return json(s).dump();
    }
  }  // namespace

  std::string serialize_document(HyperringTable const& R) {
    auto const&        labels = R.labels();
    std::size_t const  N      = R.size();
    std::ostringstream out;
    out << "{\n";
    out << "  \"name\": " << quoted(R.name()) << ",\n";
    if (!R.notes().empty()) {
      out << "  \"comment\": [\n";
      for (std::size_t i = 0; i < R.notes().size(); ++i) {
        out << "    " << quoted(R.notes()[i]) << (i + 1 < R.notes().size() ? "," : "") << "\n";
      }
      out << "  ],\n";
    }
    out << "  \"m\": " << R.m() << ",\n";
    out << "  \"n\": " << R.n() << ",\n";
    out << "  \"elements\": [";
    for (std::size_t i = 0; i < N; ++i) {
      out << (i > 0 ? ", " : "") << quoted(labels[i]);
    }
    out << "],\n";
    out << "  \"zero\": " << quoted(R.label(R.zero())) << ",\n";
    out << "  \"one\": " << quoted(R.label(R.one())) << ",\n";
    bool const com_f = R.f_is_commutative();
    bool const com_g = R.g_is_commutative();
    out << "  \"commutative_f\": " << (com_f ? "true" : "false") << ",\n";
    out << "  \"commutative_g\": " << (com_g ? "true" : "false") << ",\n";

    auto emit = [&](std::string const& field, std::size_t arity, bool com, auto&& value_of) {
      out << "  \"" << field << "\": {";
      bool first = true;
      auto line  = [&](std::span<Element const> t) {
        out << (first ? "\n" : ",\n") << "    " << quoted(join_tuple(labels, t)) << ": "
            << value_of(t);
        first = false;
        return true;
      };
      if (com) {
        for_each_sorted_tuple(N, arity, line);
      } else {
        for_each_tuple(N, arity, line);
      }
      out << "\n  }";
    };
    emit("f", R.m(), com_f, [&](std::span<Element const> t) {
      std::string s     = "[";
      bool        first = true;
      R.hyperop(t).for_each([&](Element x) {
        s += (first ? "" : ", ") + quoted(labels[x]);
        first = false;
      });
      return s + "]";
    });
    out << ",\n";
    emit("g", R.n(), com_g, [&](std::span<Element const> t) { return quoted(labels[R.g_eval(t)]); });
    out << "\n}\n";
    return out.str();
  }

  void save_document(HyperringTable const& R, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    out << serialize_document(R);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
  }

}  // namespace hyperring

// Copyright 2026 The belief-ess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belief_ess/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include "belief_ess/errors.hpp"

namespace belief_ess::io {
namespace {

struct Value;
using List = std::vector<Value>;
using Table = std::vector<std::pair<std::string, Value>>;

struct Value {
  // A bare word or quoted string keeps its text; numbers are parsed lazily
  // so that labels like "1" stay usable.
  std::variant<std::string, List, Table> data;
  bool quoted = false;
};

struct Entry {
  std::string key;
  Value value;
  int line;
};

[[noreturn]] void fail(std::string_view source, int line, std::string_view key,
                       std::string_view message) {
  std::ostringstream msg;
  msg << source << ":" << line;
  if (!key.empty()) msg << ": key '" << key << "'";
  msg << ": " << message;
  throw Error(Errc::kParseError, msg.str());
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::vector<Entry> document() {
    std::vector<Entry> entries;
    skip_space_and_comments();
    while (pos_ < text_.size()) {
      const int line = line_;
      std::string key = word();
      if (key.empty()) error("", "expected a key");
      key_ = key;
      skip_inline_space();
      expect('=');
      Value v = value();
      entries.push_back({key, std::move(v), line});
      skip_inline_space();
      if (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '#') {
        error(key, "unexpected text after value");
      }
      key_.clear();
      skip_space_and_comments();
    }
    return entries;
  }

 private:
  [[noreturn]] void error(std::string_view key, std::string_view message) {
    fail(source_, line_, key.empty() ? std::string_view(key_) : key, message);
  }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\r')) {
      advance();
    }
  }

  // Inside brackets newlines and comments are whitespace.
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      error("", std::string("expected '") + c + "'");
    }
    advance();
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '+' || c == '.';
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  Value value() {
    skip_inline_space();
    if (pos_ >= text_.size()) error("", "missing value");
    const char c = text_[pos_];
    if (c == '[') {
      advance();
      List items;
      skip_space_and_comments();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        advance();
        return Value{items};
      }
      while (true) {
        skip_space_and_comments();
        items.push_back(value());
        skip_space_and_comments();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          continue;
        }
        expect(']');
        return Value{items};
      }
    }
    if (c == '{') {
      advance();
      Table fields;
      while (true) {
        skip_space_and_comments();
        std::string name = word();
        if (name.empty()) error("", "expected a field name");
        skip_space_and_comments();
        expect('=');
        skip_space_and_comments();
        fields.emplace_back(name, value());
        skip_space_and_comments();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          continue;
        }
        expect('}');
        return Value{fields};
      }
    }
    if (c == '"') {
      advance();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        advance();
      }
      std::string s(text_.substr(start, pos_ - start));
      expect('"');
      return Value{s, true};
    }
    std::string w = word();
    if (w.empty()) error("", "expected a value");
    return Value{w};
  }

  std::string_view text_;
  std::string_view source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::string key_;
};

std::optional<double> to_number(const std::string& s) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

struct Context {
  std::string_view source;
  int line;
  std::string key;

  [[noreturn]] void fail(std::string_view message) const {
    io::fail(source, line, key, message);
  }

  double number(const Value& v) const {
    const auto* s = std::get_if<std::string>(&v.data);
    if (!s || v.quoted) fail("expected a number");
    auto n = to_number(*s);
    if (!n) fail("'" + *s + "' is not a number");
    return *n;
  }

  std::string text(const Value& v) const {
    const auto* s = std::get_if<std::string>(&v.data);
    if (!s) fail("expected a label");
    return *s;
  }

  const List& list(const Value& v, std::size_t size) const {
    const auto* l = std::get_if<List>(&v.data);
    if (!l || l->size() != size) {
      fail("expected a list of " + std::to_string(size) + " items");
    }
    return *l;
  }

  std::map<std::string, double> fields(const Value& v,
                                       std::initializer_list<std::string> names) const {
    const auto* t = std::get_if<Table>(&v.data);
    if (!t) fail("expected a {name = value, ...} table");
    std::map<std::string, double> out;
    for (const auto& [name, field] : *t) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        fail("unexpected field '" + name + "'");
      }
      if (out.count(name)) fail("duplicate field '" + name + "'");
      out[name] = number(field);
    }
    for (const auto& name : names) {
      if (!out.count(name)) fail("missing field '" + name + "'");
    }
    return out;
  }
};

Strategy<double> strategy_from_entry(const Entry& e, const Context& ctx,
                                     const SymmetricGame2<double>& game) {
  try {
    if (e.key == "pure") {
      return PureStrategy(game.index_of(ctx.text(e.value)));
    }
    if (e.key == "mixed") {
      if (std::holds_alternative<Table>(e.value.data)) {
        return MixedStrategy<double>(ctx.fields(e.value, {"p"}).at("p"));
      }
      return MixedStrategy<double>(ctx.number(e.value));
    }
    if (e.key == "belief") {
      if (std::holds_alternative<Table>(e.value.data)) {
        auto f = ctx.fields(e.value, {"a", "b"});
        return BeliefStrategy<double>(f.at("a"), f.at("b"));
      }
      const auto& l = ctx.list(e.value, 2);
      return BeliefStrategy<double>(ctx.number(l[0]), ctx.number(l[1]));
    }
  } catch (const Error& err) {
    if (err.code() == Errc::kParseError) throw;
    throw Error(err.code(), std::string(ctx.source) + ": " + err.message());
  }
  ctx.fail("unknown strategy kind (expected pure, mixed or belief)");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::kParseError, path.string() + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SymmetricGame2<double> parse_game(std::string_view text, std::string_view source) {
  const auto entries = Parser(text, source).document();
  std::optional<SymmetricGame2<double>::Labels> labels;
  std::optional<SymmetricGame2<double>::Matrix> payoffs;
  std::optional<HawkDoveParams<double>> params;
  std::map<std::string, int> seen;

  for (const auto& e : entries) {
    const Context ctx{source, e.line, e.key};
    if (seen.count(e.key)) {
      ctx.fail("duplicate key (first on line " + std::to_string(seen[e.key]) + ")");
    }
    seen[e.key] = e.line;
    if (e.key == "labels") {
      const auto& l = ctx.list(e.value, 2);
      labels = SymmetricGame2<double>::Labels{ctx.text(l[0]), ctx.text(l[1])};
    } else if (e.key == "payoffs") {
      const auto& rows = ctx.list(e.value, 2);
      SymmetricGame2<double>::Matrix m;
      for (int i = 0; i < 2; ++i) {
        const auto& row = ctx.list(rows[i], 2);
        for (int j = 0; j < 2; ++j) m(i, j) = ctx.number(row[j]);
      }
      payoffs = m;
    } else if (e.key == "hawk_dove") {
      auto f = ctx.fields(e.value, {"V", "C"});
      params = HawkDoveParams<double>{f.at("V"), f.at("C")};
    } else {
      ctx.fail("unknown key (expected labels, payoffs or hawk_dove)");
    }
  }

  if (payoffs.has_value() == params.has_value()) {
    fail(source, entries.empty() ? 1 : entries.back().line, "",
         "exactly one of 'payoffs' or 'hawk_dove' must be present");
  }
  try {
    if (params) {
      auto game = hawk_dove(*params);
      if (!labels) return game;
      return SymmetricGame2<double>(*labels, game.payoffs(), *params);
    }
    return SymmetricGame2<double>(labels.value_or(SymmetricGame2<double>::Labels{"s1", "s2"}),
                                  *payoffs);
  } catch (const Error& err) {
    throw Error(err.code(), std::string(source) + ": " + err.message());
  }
}

SymmetricGame2<double> load_game(const std::filesystem::path& path) {
  return parse_game(read_file(path), path.string());
}

HawkDoveParams<double> parse_hawk_dove_flag(std::string_view text) {
  const std::string wrapped = "hawk_dove = {" + std::string(text) + "}";
  const auto entries = Parser(wrapped, "--hawk-dove").document();
  const Context ctx{"--hawk-dove", 1, "hawk_dove"};
  auto f = ctx.fields(entries.at(0).value, {"V", "C"});
  return {f.at("V"), f.at("C")};
}

Strategy<double> parse_strategy(std::string_view text,
                                const SymmetricGame2<double>& game) {
  std::string source = "strategy";
  std::string body;
  if (!text.empty() && text.front() == '@') {
    source = std::string(text.substr(1));
    body = read_file(source);
  } else {
    body = std::string(text);
    // Command-line form "belief=a,b" is the file form with brackets.
    const auto eq = body.find('=');
    if (eq != std::string::npos && body.find_first_of("[{") == std::string::npos &&
        body.find(',', eq) != std::string::npos) {
      body = body.substr(0, eq) + "= [" + body.substr(eq + 1) + "]";
    }
  }
  const auto entries = Parser(body, source).document();
  if (entries.size() != 1) {
    fail(source, 1, "", "expected exactly one strategy definition");
  }
  const Context ctx{source, entries[0].line, entries[0].key};
  return strategy_from_entry(entries[0], ctx, game);
}

}  // namespace belief_ess::io

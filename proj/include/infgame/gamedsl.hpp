// Copyright 2026 The infgame Authors
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

// Text format for equation systems (".gg" files).
//
//   file   := block+
//   block  := ("game" | "profile" | "strategy") IDENT ["of" IDENT] "{" eq+ "}"
//   eq     := IDENT "=" term ";"
//   term   := "leaf" "(" IDENT ":" RAT ("," IDENT ":" RAT)* ")"
//           | head "?" arg "|" arg
//   head   := IDENT ["->" ("d" | "r")]
//   arg    := IDENT | term
//   RAT    := ["-"] DIGITS ["/" DIGITS]
//
// "#" starts a comment running to the end of the line. The first equation of
// a block is its root. Equations may refer to each other in any order.

#ifndef INFGAME_GAMEDSL_HPP_
#define INFGAME_GAMEDSL_HPP_

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "infgame/core.hpp"
#include "infgame/game_model.hpp"
#include "infgame/strategy.hpp"
#include "infgame/termgraph.hpp"

namespace infgame {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParsedBlock {
  std::string name;
  TermGraph graph;
  std::optional<std::string> of;
};

namespace dsl {

enum class Tok : std::uint8_t {
  ident, rational, lbrace, rbrace, lparen, rparen, equals, semicolon, colon, comma,
  question, bar, arrow, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string_view describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::rational: return "number";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::equals: return "'='";
    case Tok::semicolon: return "';'";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::question: return "'?'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
  }
  return "?";
}

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t start = i, l = line, cl = col;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back(Token{kind, std::string(text.substr(start, len)), l, cl});
      advance(len);
    };
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::ident, j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      emit(Tok::arrow, 2);
      continue;
    }
    if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '/') {
        if (j + 1 >= text.size() || !digit(text[j + 1])) {
          throw ParseError(l, cl, "malformed number");
        }
        j += 1;
        while (j < text.size() && digit(text[j])) ++j;
      }
      emit(Tok::rational, j - i);
      continue;
    }
    static const std::map<char, Tok> punct = {
        {'{', Tok::lbrace}, {'}', Tok::rbrace},    {'(', Tok::lparen}, {')', Tok::rparen},
        {'=', Tok::equals}, {';', Tok::semicolon}, {':', Tok::colon},  {',', Tok::comma},
        {'?', Tok::question}, {'|', Tok::bar}};
    if (auto it = punct.find(c); it != punct.end()) {
      emit(it->second, 1);
      continue;
    }
    throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

inline const std::set<std::string, std::less<>> kReserved = {"game", "profile", "strategy",
                                                             "of", "leaf"};

inline Rational parse_rational(const Token& t) {
  auto slash = t.text.find('/');
  using boost::multiprecision::cpp_int;
  cpp_int num(t.text.substr(0, slash));
  cpp_int den = slash == std::string::npos ? cpp_int(1) : cpp_int(t.text.substr(slash + 1));
  if (den == 0) throw ParseError(t.line, t.column, "zero denominator");
  return Rational(num, den);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  std::vector<ParsedBlock> file() {
    std::vector<ParsedBlock> blocks;
    std::vector<Token> block_tokens;
    std::set<std::string> names;
    do {
      Token start = peek();
      blocks.push_back(block());
      block_tokens.push_back(start);
      if (!names.insert(blocks.back().name).second) {
        throw ParseError(start.line, start.column,
                         "duplicate block name " + blocks.back().name);
      }
    } while (peek().kind != Tok::end);
    check_of_clauses(blocks, block_tokens);
    return blocks;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.column, what);
  }
  Token expect(Tok kind) {
    if (peek().kind != kind) {
      std::string found = peek().kind == Tok::end ? std::string(describe(Tok::end))
                                                   : "'" + peek().text + "'";
      fail(peek(), "expected " + std::string(describe(kind)) + ", found " + found);
    }
    return take();
  }
  Token name(std::string_view what) {
    Token t = expect(Tok::ident);
    if (kReserved.contains(t.text)) fail(t, "'" + t.text + "' is reserved, expected " + std::string(what));
    return t;
  }

  ParsedBlock block() {
    Token kw = expect(Tok::ident);
    GraphKind kind;
    if (kw.text == "game") {
      kind = GraphKind::game;
    } else if (kw.text == "profile") {
      kind = GraphKind::profile;
    } else if (kw.text == "strategy") {
      kind = GraphKind::strategy;
    } else {
      fail(kw, "expected 'game', 'profile' or 'strategy', found '" + kw.text + "'");
    }
    Token block_name = name("a block name");
    std::optional<std::string> of;
    if (peek().kind == Tok::ident && peek().text == "of") {
      take();
      of = name("a game name").text;
    }
    expect(Tok::lbrace);

    kind_ = kind;
    builder_.emplace(kind);
    refs_.clear();
    first_use_.clear();
    defined_.clear();
    agents_.reset();
    anonymous_ = 0;

    std::optional<NodeRef> root;
    do {
      Token lhs = name("an equation name");
      if (defined_.contains(lhs.text)) fail(lhs, "duplicate equation " + lhs.text);
      NodeRef ref = reference(lhs);
      defined_.insert(lhs.text);
      if (!root) root = ref;
      current_ = lhs.text;
      expect(Tok::equals);
      term(ref);
      expect(Tok::semicolon);
    } while (peek().kind != Tok::rbrace);
    Token close = expect(Tok::rbrace);

    for (const auto& [ident, ref] : refs_) {
      if (!defined_.contains(ident)) {
        const Token& use = first_use_.at(ident);
        fail(use, "unresolved identifier " + ident);
      }
    }
    try {
      return ParsedBlock{block_name.text, builder_->build(*root), of};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(block_name, "block " + block_name.text + ": " + e.what());
    }
  }

  NodeRef reference(const Token& t) {
    auto [it, fresh] = refs_.try_emplace(t.text, 0);
    if (fresh) {
      it->second = builder_->reserve(t.text);
      first_use_.emplace(t.text, t);
    }
    return it->second;
  }

  // Parses a term and defines `into` with it.
  void term(NodeRef into) {
    const Token& head = peek();
    if (head.kind == Tok::ident && head.text == "leaf" && peek(1).kind == Tok::lparen) {
      builder_->define(into, Leaf{leaf_payoff()});
      return;
    }
    Token owner = expect(Tok::ident);
    if (kReserved.contains(owner.text)) fail(owner, "unexpected '" + owner.text + "'");
    std::optional<Token> choice;
    if (peek().kind == Tok::arrow) {
      Token arrow = take();
      if (kind_ != GraphKind::profile) {
        fail(arrow, "kind violation: '->' is only allowed in profile blocks");
      }
      choice = expect(Tok::ident);
      if (choice->text != "d" && choice->text != "r") {
        fail(*choice, "expected choice 'd' or 'r', found '" + choice->text + "'");
      }
    }
    NodeLabel label = head_label(owner, choice);
    expect(Tok::question);
    NodeRef d = arg();
    expect(Tok::bar);
    NodeRef r = arg();
    builder_->define(into, std::move(label), d, r);
  }

  NodeLabel head_label(const Token& owner, const std::optional<Token>& choice) {
    bool is_choice = owner.text == "d" || owner.text == "r";
    switch (kind_) {
      case GraphKind::game:
        if (is_choice) fail(owner, "kind violation: choice '" + owner.text + "' in a game block");
        return GameNode{owner.text};
      case GraphKind::profile:
        if (is_choice) fail(owner, "kind violation: a profile node needs an agent");
        if (!choice) fail(owner, "kind violation: profile node without '->' choice");
        return ProfileNode{owner.text, choice->text == "d" ? Choice::d : Choice::r};
      case GraphKind::strategy:
        if (is_choice) return StrategyNode{owner.text == "d" ? Choice::d : Choice::r};
        return StrategyNode{owner.text};
    }
    fail(owner, "unknown block kind");
  }

  NodeRef arg() {
    const Token& t = peek();
    bool starts_term = t.kind == Tok::ident &&
                       ((t.text == "leaf" && peek(1).kind == Tok::lparen) ||
                        peek(1).kind == Tok::question || peek(1).kind == Tok::arrow);
    if (starts_term) {
      NodeRef n = builder_->reserve(current_ + "." + std::to_string(++anonymous_));
      term(n);
      return n;
    }
    return reference(name("an equation name"));
  }

  PayoffFn leaf_payoff() {
    Token kw = take();  // "leaf"
    expect(Tok::lparen);
    std::map<Agent, Rational> entries;
    do {
      Token agent = name("an agent name");
      if (!is_valid_agent_name(agent.text)) fail(agent, "'" + agent.text + "' cannot name an agent");
      expect(Tok::colon);
      Token value = expect(Tok::rational);
      if (!entries.emplace(agent.text, parse_rational(value)).second) {
        fail(agent, "duplicate agent " + agent.text + " in leaf");
      }
    } while (peek().kind == Tok::comma && (take(), true));
    expect(Tok::rparen);
    std::set<Agent> agents;
    for (const auto& [a, _] : entries) agents.insert(a);
    if (!agents_) {
      agents_ = agents;
    } else if (*agents_ != agents) {
      fail(kw, "leaf payoff must name exactly the agents of the first leaf");
    }
    return PayoffFn(std::move(entries));
  }

  static void check_of_clauses(const std::vector<ParsedBlock>& blocks,
                               const std::vector<Token>& at) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      if (!b.of) continue;
      const ParsedBlock* target = nullptr;
      for (const auto& other : blocks) {
        if (other.name == *b.of) target = &other;
      }
      if (target == nullptr || target->graph.kind() != GraphKind::game) {
        throw ParseError(at[i].line, at[i].column, "unknown game " + *b.of);
      }
      Game game(target->graph);
      bool ok = false;
      switch (b.graph.kind()) {
        case GraphKind::game:
          ok = bisimilar(game, Game(b.graph));
          break;
        case GraphKind::profile:
          ok = bisimilar(game, game_of(StratProf(b.graph)));
          break;
        case GraphKind::strategy: {
          Strat st(b.graph);
          for (const Agent& p : b.graph.agents()) {
            ok = ok || (is_full(st, p) && bisimilar(game, st2g(st, p)));
          }
          break;
        }
      }
      if (!ok) {
        throw ParseError(at[i].line, at[i].column,
                         "block " + b.name + " is not over game " + *b.of);
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  GraphKind kind_ = GraphKind::game;
  std::optional<GraphBuilder> builder_;
  std::map<std::string, NodeRef> refs_;
  std::map<std::string, Token> first_use_;
  std::set<std::string> defined_;
  std::optional<std::set<Agent>> agents_;
  std::string current_;
  std::size_t anonymous_ = 0;
};

}  // namespace dsl

inline std::vector<ParsedBlock> parse(std::string_view text) {
  return dsl::Parser(text).file();
}

inline std::vector<ParsedBlock> parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

inline const ParsedBlock& find_block(const std::vector<ParsedBlock>& blocks,
                                     std::string_view name) {
  for (const auto& b : blocks) {
    if (b.name == name) return b;
  }
  throw Error("no block named " + std::string(name));
}

// One equation per node, root first then breadth first (down before right).
// The root equation is named `name`, the others `name_1`, `name_2`, ...
inline std::string serialize(const TermGraph& g, const std::string& name) {
  if (name.empty() || !dsl::ident_start(name[0]) ||
      !std::all_of(name.begin(), name.end(), dsl::ident_char) || dsl::kReserved.contains(name)) {
    throw Error("'" + name + "' is not a valid block name");
  }
  std::vector<NodeRef> order;
  std::vector<std::size_t> number(g.size(), static_cast<std::size_t>(-1));
  std::deque<NodeRef> queue{g.root()};
  number[g.root()] = 0;
  while (!queue.empty()) {
    NodeRef n = queue.front();
    queue.pop_front();
    order.push_back(n);
    if (g.is_leaf(n)) continue;
    for (NodeRef c : {g.down(n), g.right(n)}) {
      if (number[c] == static_cast<std::size_t>(-1)) {
        number[c] = order.size() + queue.size();
        queue.push_back(c);
      }
    }
  }
  auto eq_name = [&](NodeRef n) {
    return number[n] == 0 ? name : name + "_" + std::to_string(number[n]);
  };
  std::string out = std::string(to_string(g.kind())) + " " + name + " {\n";
  for (NodeRef n : order) {
    out += "  " + eq_name(n) + " = ";
    if (const auto* leaf = std::get_if<Leaf>(&g.label(n))) {
      out += "leaf(";
      bool first = true;
      for (const auto& [agent, value] : leaf->payoff.entries()) {
        if (!first) out += ", ";
        first = false;
        out += agent + ":" + to_string(value);
      }
      out += ")";
    } else {
      out += to_string(g.label(n)) + " ? " + eq_name(g.down(n)) + " | " + eq_name(g.right(n));
    }
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace infgame

#endif  // INFGAME_GAMEDSL_HPP_

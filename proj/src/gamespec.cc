// Copyright 2026 The infgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infgame/gamespec.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace infgame {
namespace {

constexpr std::array<std::string_view, 7> kKeywords = {
    "agents", "choices", "leaf", "node", "root", "agent", "choice"};

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

enum class TokenKind { kIdent, kNat, kLBrace, kRBrace, kEquals, kArrow, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kIdent:
    case TokenKind::kNat:
      return "'" + t.text + "'";
    case TokenKind::kLBrace:
      return "'{'";
    case TokenKind::kRBrace:
      return "'}'";
    case TokenKind::kEquals:
      return "'='";
    case TokenKind::kArrow:
      return "'->'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "token";
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int start_line = line;
    const int start_column = column;
    auto emit = [&](TokenKind kind, std::size_t length) {
      tokens.push_back(
          {kind, std::string(text.substr(i, length)), start_line, start_column});
      advance(length);
    };
    if (IsAsciiLetter(c)) {
      std::size_t n = 1;
      while (i + n < text.size() &&
             (IsAsciiLetter(text[i + n]) || IsAsciiDigit(text[i + n]) ||
              text[i + n] == '_')) {
        ++n;
      }
      emit(TokenKind::kIdent, n);
    } else if (IsAsciiDigit(c)) {
      std::size_t n = 1;
      while (i + n < text.size() && IsAsciiDigit(text[i + n])) ++n;
      if (i + n < text.size() &&
          (IsAsciiLetter(text[i + n]) || text[i + n] == '_')) {
        throw ParseError(start_line, start_column,
                         "identifier must start with a letter");
      }
      emit(TokenKind::kNat, n);
    } else if (c == '{') {
      emit(TokenKind::kLBrace, 1);
    } else if (c == '}') {
      emit(TokenKind::kRBrace, 1);
    } else if (c == '=') {
      emit(TokenKind::kEquals, 1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      emit(TokenKind::kArrow, 2);
    } else {
      const auto byte = static_cast<unsigned char>(c);
      std::string shown = (byte >= 0x20 && byte < 0x7f)
                              ? std::string("'") + c + "'"
                              : "byte 0x" + [&] {
                                  std::ostringstream hex;
                                  hex << std::hex << static_cast<int>(byte);
                                  return hex.str();
                                }();
      throw ParseError(start_line, start_column, "unexpected character " + shown);
    }
  }
  tokens.push_back({TokenKind::kEnd, "", line, column});
  return tokens;
}

struct Located {
  std::string text;
  int line;
  int column;
};

struct NodeDecl {
  Located id;
  Located agent;
  Located choice;
  std::vector<std::pair<Located, Located>> edges;  // choice -> target
};

struct LeafDecl {
  Located id;
  std::vector<std::pair<Located, Utility>> payoffs;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Profile Parse() {
    ExpectKeyword("agents");
    std::vector<Located> agents = IdentList("agent");
    ExpectKeyword("choices");
    std::vector<Located> choices = IdentList("choice");

    std::vector<LeafDecl> leaves;
    std::vector<NodeDecl> nodes;
    while (PeekKeyword("leaf") || PeekKeyword("node")) {
      if (PeekKeyword("leaf")) {
        leaves.push_back(ParseLeaf());
      } else {
        nodes.push_back(ParseNode());
      }
    }
    if (leaves.empty() && nodes.empty()) {
      Fail(Peek(), "expected 'leaf' or 'node', found " + Describe(Peek()));
    }
    if (Peek().kind == TokenKind::kEnd) Fail(Peek(), "missing root");
    ExpectKeyword("root");
    Located root = Identifier("root vertex");
    if (Peek().kind != TokenKind::kEnd) {
      Fail(Peek(), "expected end of input, found " + Describe(Peek()));
    }
    return Build(agents, choices, leaves, nodes, root);
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  bool PeekKeyword(std::string_view word) const {
    return Peek().kind == TokenKind::kIdent && Peek().text == word;
  }

  [[noreturn]] static void Fail(int line, int column, const std::string& msg) {
    throw ParseError(line, column, msg);
  }
  [[noreturn]] static void Fail(const Token& t, const std::string& msg) {
    Fail(t.line, t.column, msg);
  }
  [[noreturn]] static void Fail(const Located& l, const std::string& msg) {
    Fail(l.line, l.column, msg);
  }

  void ExpectKeyword(std::string_view word) {
    if (!PeekKeyword(word)) {
      Fail(Peek(), "expected '" + std::string(word) + "', found " +
                       Describe(Peek()));
    }
    ++pos_;
  }

  void Expect(TokenKind kind, const char* shown) {
    if (Peek().kind != kind) {
      Fail(Peek(), std::string("expected '") + shown + "', found " +
                       Describe(Peek()));
    }
    ++pos_;
  }

  Located Identifier(const std::string& what) {
    const Token& t = Peek();
    if (t.kind != TokenKind::kIdent) {
      Fail(t, "expected " + what + " identifier, found " + Describe(t));
    }
    if (IsKeyword(t.text)) {
      Fail(t, "expected " + what + " identifier, found reserved word " +
                  Describe(t));
    }
    ++pos_;
    return {t.text, t.line, t.column};
  }

  std::vector<Located> IdentList(const std::string& what) {
    std::vector<Located> out;
    while (Peek().kind == TokenKind::kIdent && !IsKeyword(Peek().text)) {
      out.push_back(Identifier(what));
    }
    if (out.empty()) {
      Fail(Peek(), "expected at least one " + what + " identifier, found " +
                       Describe(Peek()));
    }
    return out;
  }

  Utility Natural() {
    const Token& t = Peek();
    if (t.kind != TokenKind::kNat) {
      Fail(t, "expected natural number, found " + Describe(t));
    }
    Utility value = 0;
    for (char d : t.text) {
      Utility digit = static_cast<Utility>(d - '0');
      if (value > (std::numeric_limits<Utility>::max() - digit) / 10) {
        Fail(t, "payoff " + t.text + " does not fit in 64 bits");
      }
      value = value * 10 + digit;
    }
    ++pos_;
    return value;
  }

  LeafDecl ParseLeaf() {
    ExpectKeyword("leaf");
    LeafDecl leaf;
    leaf.id = Identifier("leaf");
    Expect(TokenKind::kLBrace, "{");
    do {
      Located agent = Identifier("agent");
      Expect(TokenKind::kEquals, "=");
      leaf.payoffs.emplace_back(agent, Natural());
    } while (Peek().kind != TokenKind::kRBrace);
    Expect(TokenKind::kRBrace, "}");
    return leaf;
  }

  NodeDecl ParseNode() {
    ExpectKeyword("node");
    NodeDecl node;
    node.id = Identifier("node");
    ExpectKeyword("agent");
    Expect(TokenKind::kEquals, "=");
    node.agent = Identifier("agent");
    ExpectKeyword("choice");
    Expect(TokenKind::kEquals, "=");
    node.choice = Identifier("choice");
    Expect(TokenKind::kLBrace, "{");
    do {
      Located choice = Identifier("choice");
      Expect(TokenKind::kArrow, "->");
      node.edges.emplace_back(choice, Identifier("vertex"));
    } while (Peek().kind != TokenKind::kRBrace);
    Expect(TokenKind::kRBrace, "}");
    return node;
  }

  static Profile Build(const std::vector<Located>& agents,
                       const std::vector<Located>& choices,
                       const std::vector<LeafDecl>& leaves,
                       const std::vector<NodeDecl>& nodes,
                       const Located& root) {
    std::set<std::string> agent_set;
    for (const Located& a : agents) {
      if (!agent_set.insert(a.text).second) {
        Fail(a, "duplicate agent '" + a.text + "'");
      }
    }
    std::set<std::string> choice_set;
    for (const Located& c : choices) {
      if (!choice_set.insert(c.text).second) {
        Fail(c, "duplicate choice '" + c.text + "'");
      }
    }

    // Declarations in source order so the first duplicate is reported.
    std::vector<const Located*> vertex_decls;
    for (const LeafDecl& l : leaves) vertex_decls.push_back(&l.id);
    for (const NodeDecl& n : nodes) vertex_decls.push_back(&n.id);
    std::sort(vertex_decls.begin(), vertex_decls.end(),
              [](const Located* a, const Located* b) {
                return std::tie(a->line, a->column) < std::tie(b->line, b->column);
              });
    std::set<std::string> vertex_set;
    for (const Located* v : vertex_decls) {
      if (!vertex_set.insert(v->text).second) {
        Fail(*v, "duplicate vertex '" + v->text + "'");
      }
    }

    std::vector<AgentId> agent_ids;
    for (const Located& a : agents) agent_ids.push_back(a.text);
    std::vector<ChoiceId> choice_ids;
    for (const Located& c : choices) choice_ids.push_back(c.text);
    Arena arena(std::move(agent_ids), std::move(choice_ids));

    for (const LeafDecl& leaf : leaves) {
      UtilityAssignment payoffs;
      for (const auto& [agent, value] : leaf.payoffs) {
        if (!agent_set.contains(agent.text)) {
          Fail(agent, "unknown agent '" + agent.text + "'");
        }
        if (!payoffs.emplace(agent.text, value).second) {
          Fail(agent, "duplicate payoff for agent '" + agent.text + "'");
        }
      }
      for (const std::string& a : agent_set) {
        if (!payoffs.contains(a)) {
          Fail(leaf.id, "leaf " + leaf.id.text + " has no payoff for agent '" +
                            a + "'");
        }
      }
      arena.AddLeaf(leaf.id.text, std::move(payoffs));
    }

    std::map<VertexId, ChoiceId> chosen;
    for (const NodeDecl& node : nodes) {
      if (!agent_set.contains(node.agent.text)) {
        Fail(node.agent, "unknown agent '" + node.agent.text + "'");
      }
      if (!choice_set.contains(node.choice.text)) {
        Fail(node.choice, "unknown choice '" + node.choice.text + "'");
      }
      std::map<ChoiceId, VertexId> successors;
      for (const auto& [choice, target] : node.edges) {
        if (!choice_set.contains(choice.text)) {
          Fail(choice, "unknown choice '" + choice.text + "'");
        }
        if (!vertex_set.contains(target.text)) {
          Fail(target, "unknown vertex '" + target.text + "'");
        }
        if (!successors.emplace(choice.text, target.text).second) {
          Fail(choice, "duplicate successor for choice '" + choice.text + "'");
        }
      }
      for (const std::string& c : choice_set) {
        if (!successors.contains(c)) {
          Fail(node.id, "successor map not total for node " + node.id.text +
                            " (missing '" + c + "')");
        }
      }
      arena.AddNode(node.id.text, node.agent.text, std::move(successors));
      chosen.emplace(node.id.text, node.choice.text);
    }

    if (!vertex_set.contains(root.text)) {
      Fail(root, "unknown vertex '" + root.text + "'");
    }
    arena.SetRoot(root.text);
    return Profile(std::move(arena), std::move(chosen));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void RequireIdentifier(const std::string& id) {
  if (!IsValidIdentifier(id)) {
    throw std::invalid_argument("identifier '" + id +
                                "' cannot be written as a .game identifier");
  }
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

bool IsValidIdentifier(std::string_view id) {
  if (id.empty() || !IsAsciiLetter(id.front())) return false;
  for (char c : id) {
    if (!IsAsciiLetter(c) && !IsAsciiDigit(c) && c != '_') return false;
  }
  return !IsKeyword(id);
}

Profile ParseGame(std::string_view text) {
  return Parser(Tokenize(text)).Parse();
}

Profile ParseGameFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError(0, 0, "cannot read '" + path + "'");
  return ParseGame(buffer.str());
}

std::string SerializeGame(const Profile& profile) {
  ValidationResult validation = Validate(profile);
  if (!validation.ok()) {
    throw std::invalid_argument("invalid profile: " + validation.Describe());
  }
  const Arena& arena = profile.arena();

  auto sorted = [](std::vector<std::string> xs) {
    std::sort(xs.begin(), xs.end());
    for (const std::string& x : xs) RequireIdentifier(x);
    return xs;
  };

  std::ostringstream out;
  out << "# gamespec v1\n";
  out << "agents";
  for (const AgentId& a : sorted(arena.agents())) out << ' ' << a;
  out << "\nchoices";
  for (const ChoiceId& c : sorted(arena.choices())) out << ' ' << c;
  out << '\n';

  std::vector<VertexId> ids;
  for (const Vertex& v : arena.vertices()) ids.push_back(v.id);
  ids = sorted(std::move(ids));
  for (const VertexId& id : ids) {
    const Vertex& v = arena.At(id);
    if (!v.is_leaf()) continue;
    out << "leaf " << id << " {";
    for (const auto& [agent, value] : v.leaf().payoffs) {
      out << ' ' << agent << " = " << value;
    }
    out << " }\n";
  }
  for (const VertexId& id : ids) {
    const Vertex& v = arena.At(id);
    if (v.is_leaf()) continue;
    out << "node " << id << " agent = " << v.internal().agent
        << " choice = " << profile.ChosenAt(id) << " {";
    for (const auto& [choice, target] : v.internal().successors) {
      out << ' ' << choice << " -> " << target;
    }
    out << " }\n";
  }
  out << "root " << arena.root() << '\n';
  return out.str();
}

}  // namespace infgame

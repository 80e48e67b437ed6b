// Copyright 2026 The ftcrit Authors
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

#include "ftcrit/parser.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace ftcrit {

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Lexical: return "Lexical";
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::Semantic: return "Semantic";
  }
  return "";
}

ParseError::ParseError(std::size_t line, std::size_t column, ParseErrorKind kind,
                       std::string message, std::string subject)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " +
                std::string(to_string(kind)) + ": " + message,
            std::move(subject)),
      line_(line),
      column_(column),
      parse_kind_(kind),
      detail_(std::move(message)) {}

namespace {

enum class Tok { Id, Number, String, LParen, RParen, Comma, Semicolon, Newline, End };

struct Token {
  Tok kind;
  std::string text;  // identifier, decoded string, or number literal
  std::size_t line;
  std::size_t column;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Id: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool id_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool id_char(char c) { return id_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (at_end()) break;
      char c = peek();
      std::size_t line = line_, col = col_;
      if (c == '\n' || (c == '\r' && peek(1) == '\n')) {
        if (c == '\r') advance();
        advance();
        out.push_back({Tok::Newline, "", line, col});
      } else if (c == '#') {
        while (!at_end() && peek() != '\n' && !(peek() == '\r' && peek(1) == '\n'))
          advance();
      } else if (id_start(c)) {
        std::string text;
        while (!at_end() && id_char(peek())) text += advance();
        out.push_back({Tok::Id, std::move(text), line, col});
      } else if (digit(c) || c == '.' || c == '-' || c == '+') {
        out.push_back({Tok::Number, number(), line, col});
      } else if (c == '"') {
        out.push_back({Tok::String, string(), line, col});
      } else {
        Tok kind;
        switch (c) {
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ',': kind = Tok::Comma; break;
          case ';': kind = Tok::Semicolon; break;
          default:
            throw ParseError(line, col, ParseErrorKind::Lexical,
                             "unexpected character " + printable(c));
        }
        advance();
        out.push_back({kind, "", line, col});
      }
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || (c == '\r' && peek(1) != '\n'))
        advance();
      else
        break;
    }
  }

  static std::string printable(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
    std::ostringstream os;
    os << "byte 0x" << std::hex << static_cast<unsigned>(u);
    return os.str();
  }

  std::string number() {
    std::size_t line = line_, col = col_;
    std::string text;
    if (peek() == '-' || peek() == '+') text += advance();
    bool digits = false;
    while (digit(peek())) {
      text += advance();
      digits = true;
    }
    if (peek() == '.') {
      text += advance();
      while (digit(peek())) {
        text += advance();
        digits = true;
      }
    }
    if (!digits)
      throw ParseError(line, col, ParseErrorKind::Lexical, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      text += advance();
      if (peek() == '-' || peek() == '+') text += advance();
      if (!digit(peek()))
        throw ParseError(line, col, ParseErrorKind::Lexical,
                         "malformed exponent in number");
      while (digit(peek())) text += advance();
    }
    if (id_char(peek()) || peek() == '.')
      throw ParseError(line_, col_, ParseErrorKind::Lexical,
                       "unexpected character after number");
    return text;
  }

  std::string string() {
    std::size_t line = line_, col = col_;
    advance();  // opening quote
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n' || peek() == '\r')
        throw ParseError(line, col, ParseErrorKind::Lexical,
                         "unterminated string");
      char c = advance();
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end())
        throw ParseError(line, col, ParseErrorKind::Lexical, "unterminated string");
      std::size_t eline = line_, ecol = col_;
      char e = advance();
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default:
          throw ParseError(eline, ecol - 1, ParseErrorKind::Lexical,
                           "unknown escape sequence");
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Location {
  std::size_t line;
  std::size_t column;
};

bool reserved(std::string_view id) {
  return id == "AND" || id == "OR" || id == "NOT" || id == "NAND" ||
         id == "NOR" || id == "XOR";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FaultTree run() {
    std::vector<BasicEvent> events;
    std::map<std::string, Location, std::less<>> decl_at;
    std::optional<Gate> top;
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Id) fail_expected("'event' or 'top'");
      if (top) syntax(t, "unexpected content after the top declaration");
      if (t.text == "event") {
        BasicEvent e = event_decl(&decl_at);
        events.push_back(std::move(e));
      } else if (t.text == "top") {
        next();
        top = gate();
      } else {
        syntax(t, "expected 'event' or 'top', found '" + t.text + "'");
      }
      const Token& end = peek();
      if (end.kind != Tok::Newline && end.kind != Tok::End)
        fail_expected("end of line");
    }
    if (!top) {
      const Token& t = peek();
      throw ParseError(t.line, t.column, ParseErrorKind::Syntax,
                       "missing top declaration");
    }
    return assemble(std::move(events), std::move(*top), decl_at);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void syntax(const Token& t, std::string message) const {
    throw ParseError(t.line, t.column, ParseErrorKind::Syntax, std::move(message));
  }

  [[noreturn]] void fail_expected(std::string_view what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Id ? "'" + t.text + "'"
                                          : std::string(describe(t.kind));
    syntax(t, "expected " + std::string(what) + ", found " + found);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail_expected(describe(kind));
    return next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  BasicEvent event_decl(std::map<std::string, Location, std::less<>>* decl_at) {
    next();  // 'event'
    const Token& id = expect(Tok::Id);
    if (reserved(id.text) || id.text == "event" || id.text == "top" ||
        id.text == "rate")
      syntax(id, "'" + id.text + "' is a reserved word");
    const Token& kw = peek();
    if (kw.kind != Tok::Id || kw.text != "rate") fail_expected("'rate'");
    next();
    const Token& num = expect(Tok::Number);
    double rate = 0.0;
    const char* first = num.text.data();
    const char* last = first + num.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, rate);
    if (ec == std::errc::result_out_of_range || !std::isfinite(rate))
      throw ParseError(num.line, num.column, ParseErrorKind::Semantic,
                       "failure rate of '" + id.text + "' is out of range",
                       id.text);
    if (ec != std::errc() || ptr != last)
      throw ParseError(num.line, num.column, ParseErrorKind::Lexical,
                       "malformed number");
    if (rate < 0.0)
      throw ParseError(num.line, num.column, ParseErrorKind::Semantic,
                       "failure rate of '" + id.text + "' is negative", id.text);
    const Token& label = expect(Tok::String);
    if (decl_at->contains(id.text))
      throw ParseError(id.line, id.column, ParseErrorKind::Semantic,
                       "duplicate event id '" + id.text + "'", id.text);
    decl_at->emplace(id.text, Location{id.line, id.column});
    return BasicEvent{id.text, label.text, rate};
  }

  std::vector<Gate> arguments(std::vector<Gate>* after_semicolon, bool* saw_semicolon) {
    expect(Tok::LParen);
    std::vector<Gate> out;
    std::vector<Gate>* into = &out;
    skip_newlines();
    if (peek().kind == Tok::RParen) {
      next();
      return out;
    }
    if (peek().kind == Tok::Semicolon && after_semicolon) {
      next();
      *saw_semicolon = true;
      into = after_semicolon;
    }
    while (true) {
      skip_newlines();
      into->push_back(gate());
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::Comma) {
        next();
      } else if (t.kind == Tok::Semicolon && after_semicolon && !*saw_semicolon) {
        next();
        *saw_semicolon = true;
        into = after_semicolon;
      } else if (t.kind == Tok::RParen) {
        next();
        return out;
      } else {
        fail_expected("',' or ')'");
      }
    }
  }

  Gate gate() {
    const Token& t = peek();
    if (t.kind != Tok::Id) fail_expected("a gate or event identifier");
    if (depth_ >= kMaxDepth) syntax(t, "gates are nested too deeply");
    Token head = next();
    if (!reserved(head.text)) {
      refs_.emplace(head.text, Location{head.line, head.column});
      return Gate::Atomic(head.text);
    }
    if (peek().kind != Tok::LParen)
      syntax(head, "'" + head.text + "' is a gate and needs an argument list");
    ++depth_;
    Gate g = compound(head);
    --depth_;
    return g;
  }

  Gate compound(const Token& head) {

    if (head.text == "NAND") {
      std::vector<Gate> plain;
      bool split = false;
      std::vector<Gate> negated = arguments(&plain, &split);
      if (negated.size() + plain.size() < 1)
        syntax(head, "NAND needs at least one input");
      return Gate::Nand(std::move(negated), std::move(plain));
    }
    std::vector<Gate> args = arguments(nullptr, nullptr);
    if (head.text == "AND") return Gate::And(std::move(args));
    if (head.text == "OR") return Gate::Or(std::move(args));
    if (head.text == "NOT") {
      if (args.size() != 1) syntax(head, "NOT takes exactly one input");
      return Gate::Not(std::move(args.front()));
    }
    if (head.text == "NOR") {
      if (args.empty()) syntax(head, "NOR needs at least one input");
      return Gate::Nor(std::move(args));
    }
    if (args.size() != 2) syntax(head, "XOR takes exactly two inputs");
    return Gate::Xor(std::move(args[0]), std::move(args[1]));
  }

  FaultTree assemble(std::vector<BasicEvent> events, Gate top,
                     const std::map<std::string, Location, std::less<>>& decl_at) {
    try {
      return build_tree(std::move(events), std::move(top));
    } catch (const Error& e) {
      Location at{1, 1};
      if (e.kind() == ErrorKind::DanglingReference) {
        if (auto it = refs_.find(e.subject()); it != refs_.end()) at = it->second;
      } else if (auto it = decl_at.find(e.subject()); it != decl_at.end()) {
        at = it->second;
      }
      throw ParseError(at.line, at.column, ParseErrorKind::Semantic, e.what(),
                       e.subject());
    }
  }

  static constexpr std::size_t kMaxDepth = 512;

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::map<std::string, Location, std::less<>> refs_;  // first reference
};

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

void write_gate(const Gate& g, std::string* out);

void write_list(const std::vector<Gate>& gates, std::size_t from, std::size_t to,
                std::string* out) {
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) *out += ", ";
    write_gate(gates[i], out);
  }
}

void write_gate(const Gate& g, std::string* out) {
  switch (g.kind()) {
    case GateKind::Atomic: *out += g.event(); return;
    case GateKind::And: *out += "AND("; break;
    case GateKind::Or: *out += "OR("; break;
    case GateKind::Not: *out += "NOT("; break;
  }
  write_list(g.children(), 0, g.children().size(), out);
  *out += ")";
}

// Writes a gate the way it was written before desugaring.
void write_sugared(const Gate& g, std::string* out) {
  auto list = [&](const std::vector<const Gate*>& gates) {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (i) *out += ", ";
      write_sugared(*gates[i], out);
    }
  };
  switch (g.sugar()) {
    case Sugar::Xor: {
      // Or[And[Not a, b], And[a, Not b]]
      const Gate& a = g.children()[1].children()[0];
      const Gate& b = g.children()[0].children()[1];
      *out += "XOR(";
      list({&a, &b});
      *out += ")";
      return;
    }
    case Sugar::Nor: {
      std::vector<const Gate*> kids;
      for (const Gate& c : g.children()[0].children()) kids.push_back(&c);
      *out += "NOR(";
      list(kids);
      *out += ")";
      return;
    }
    case Sugar::Nand: {
      std::vector<const Gate*> neg, pos;
      for (std::size_t i = 0; i < g.children().size(); ++i) {
        if (i < g.sugar_negated())
          neg.push_back(&g.children()[i].children()[0]);
        else
          pos.push_back(&g.children()[i]);
      }
      *out += "NAND(";
      list(neg);
      if (!pos.empty()) {
        *out += neg.empty() ? ";" : "; ";
        list(pos);
      }
      *out += ")";
      return;
    }
    case Sugar::None:
      break;
  }
  if (g.kind() == GateKind::Atomic) {
    *out += g.event();
    return;
  }
  *out += g.kind() == GateKind::And ? "AND(" : g.kind() == GateKind::Or ? "OR(" : "NOT(";
  std::vector<const Gate*> kids;
  for (const Gate& c : g.children()) kids.push_back(&c);
  list(kids);
  *out += ")";
}

void sugar_notes(const Gate& g, std::string* out) {
  if (g.sugar() != Sugar::None) {
    *out += "# desugared from ";
    write_sugared(g, out);
    *out += "\n";
    return;
  }
  for (const Gate& c : g.children()) sugar_notes(c, out);
}

}  // namespace

FaultTree parse_ftdl(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

std::string serialize_ftdl(const FaultTree& tree) {
  std::string out;
  for (const BasicEvent& e : tree.events()) {
    out += "event " + e.id + " rate " + format_number(e.rate) + " " +
           quote(e.label) + "\n";
  }
  sugar_notes(tree.top(), &out);
  out += "top ";
  write_gate(tree.top(), &out);
  out += "\n";
  return out;
}

FaultTree load_ftdl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ftdl(buf.str());
}

}  // namespace ftcrit

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qgor/parse.hpp"
#include "qgor/ring_spec.hpp"

namespace qgor {

using RingVar = std::variant<RingPtr<QQ>, RingPtr<GFp>>;
using IdealVar = std::variant<Ideal<QQ>, Ideal<GFp>>;
using SeqVar = std::variant<std::vector<Polynomial<QQ>>, std::vector<Polynomial<GFp>>>;

/// Parsed session file: named rings, ideals and sequences in declaration
/// order. Ideals and sequences bind to the most recently declared ring.
struct Session {
  struct RingDecl {
    std::string name;
    RingVar ring;
    std::size_t line = 0;
  };
  struct IdealDecl {
    std::string name;
    std::string ring_name;
    IdealVar ideal;
    std::size_t line = 0;
  };
  struct SeqDecl {
    std::string name;
    std::string ring_name;
    SeqVar seq;
    std::size_t line = 0;
  };

  std::string source;
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::vector<SeqDecl> seqs;

  const RingDecl* find_ring(const std::string& name) const {
    for (const auto& r : rings)
      if (r.name == name) return &r;
    return nullptr;
  }
  const IdealDecl* find_ideal(const std::string& name) const {
    for (const auto& i : ideals)
      if (i.name == name) return &i;
    return nullptr;
  }
  const SeqDecl* find_seq(const std::string& name) const {
    for (const auto& s : seqs)
      if (s.name == name) return &s;
    return nullptr;
  }
  /// First ideal declared for the given ring: the default defining ideal.
  const IdealDecl* first_ideal_of(const std::string& ring_name) const {
    for (const auto& i : ideals)
      if (i.ring_name == ring_name) return &i;
    return nullptr;
  }
};

namespace detail {

class SessionParser {
 public:
  explicit SessionParser(std::string text, std::string source)
      : text_(std::move(text)), source_(std::move(source)) {}

  Session parse() {
    Session s;
    s.source = source_;
    for (;;) {
      skip_ws_and_comments();
      if (eof()) break;
      statement(s);
    }
    return s;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }
  std::size_t column() const { return pos_ - line_start_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, column()); }

  void skip_ws_and_comments() {
    for (;;) {
      while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (!eof() && peek() == '#') {
        while (!eof() && peek() != '\n') advance();
        continue;
      }
      break;
    }
  }

  std::string word() {
    skip_ws_and_comments();
    std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws_and_comments();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  /// Text up to the next top-level occurrence of one of `stops` (never
  /// inside parentheses); the stop character is not consumed.
  std::string until(const std::string& stops) {
    std::size_t start = pos_;
    int depth = 0;
    while (!eof()) {
      char c = peek();
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      advance();
    }
    if (eof()) fail("unterminated declaration (missing ';')");
    return text_.substr(start, pos_ - start);
  }

  void check_unique(const Session& s, const std::string& name, std::size_t line) {
    auto describe = [&](const char* kind, std::size_t other) {
      fail("duplicate name '" + name + "' at line " + std::to_string(line) + " (already declared as " +
           kind + " at line " + std::to_string(other) + ")");
    };
    if (const auto* r = s.find_ring(name)) describe("ring", r->line);
    if (const auto* i = s.find_ideal(name)) describe("ideal", i->line);
    if (const auto* q = s.find_seq(name)) describe("seq", q->line);
  }

  void statement(Session& s) {
    std::size_t stmt_line = line_;
    std::string kind = word();
    if (kind == "ring") {
      ring_decl(s, stmt_line);
    } else if (kind == "ideal") {
      ideal_decl(s, stmt_line);
    } else if (kind == "seq") {
      seq_decl(s, stmt_line);
    } else {
      fail("unknown declaration '" + kind + "' (expected ring, ideal, or seq)");
    }
  }

  void ring_decl(Session& s, std::size_t stmt_line) {
    std::string name = word();
    check_unique(s, name, stmt_line);
    expect('=');
    skip_ws_and_comments();
    std::string field = word();
    expect('[');
    std::vector<std::string> vars;
    for (;;) {
      vars.push_back(word());
      skip_ws_and_comments();
      if (!eof() && peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(']');
    std::string order_name = word();
    MonomialOrder order;
    if (order_name == "grevlex") {
      order = MonomialOrder::Grevlex();
    } else if (order_name == "lex") {
      order = MonomialOrder::Lex();
    } else {
      fail("unknown monomial order '" + order_name + "'");
    }
    expect(';');

    RingVar ring;
    if (field == "Q") {
      ring = make_ring(QQ{}, vars, order);
    } else if (field.size() > 1 && field[0] == 'F') {
      std::uint32_t p = 0;
      for (std::size_t k = 1; k < field.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(field[k]))) fail("bad field '" + field + "'");
        p = p * 10 + static_cast<std::uint32_t>(field[k] - '0');
        if (p > 0x7fffffff) fail("prime too large");
      }
      ring = make_ring(GFp(p), vars, order);
    } else {
      fail("unknown field '" + field + "' (expected Q or F<p>)");
    }
    s.rings.push_back({name, std::move(ring), stmt_line});
  }

  template <class F>
  std::vector<Polynomial<F>> parse_list(const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> polys;
    for (;;) {
      skip_ws_and_comments();
      std::size_t expr_line = line_;
      std::size_t expr_col0 = pos_ - line_start_;
      std::string expr = until(",;");
      detail::PolyParser<F> parser(expr, ring, expr_line, expr_col0);
      polys.push_back(parser.parse());
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(';');
    return polys;
  }

  void ideal_decl(Session& s, std::size_t stmt_line) {
    std::string name = word();
    check_unique(s, name, stmt_line);
    if (s.rings.empty()) fail("ideal '" + name + "' declared before any ring");
    expect('=');
    const auto& host = s.rings.back();
    IdealVar ideal = std::visit(
        [&](const auto& ring) -> IdealVar {
          using F = typename std::decay_t<decltype(*ring)>::field_type;
          auto polys = parse_list<F>(ring);
          return Ideal<F>(ring, std::move(polys));
        },
        host.ring);
    s.ideals.push_back({name, host.name, std::move(ideal), stmt_line});
  }

  void seq_decl(Session& s, std::size_t stmt_line) {
    std::string name = word();
    check_unique(s, name, stmt_line);
    if (s.rings.empty()) fail("seq '" + name + "' declared before any ring");
    expect('=');
    const auto& host = s.rings.back();
    SeqVar seq = std::visit(
        [&](const auto& ring) -> SeqVar {
          using F = typename std::decay_t<decltype(*ring)>::field_type;
          return parse_list<F>(ring);
        },
        host.ring);
    s.seqs.push_back({name, host.name, std::move(seq), stmt_line});
  }

  std::string text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace detail

inline Session parse_session_text(std::string text, std::string source = "<memory>") {
  return detail::SessionParser(std::move(text), std::move(source)).parse();
}

inline Session parse_session_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open session file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session_text(buf.str(), path);
}

}  // namespace qgor

#include "postlat/formula.hpp"

#include <algorithm>
#include <cctype>

namespace postlat {

namespace {

enum class Tok { Var, Zero, One, Not, And, Or, Xor, Implies, LParen, RParen, Comma, Name, End };

struct Token {
  Tok kind;
  std::size_t pos;  // 1-based character position
  int index = 0;
  std::string name = {};
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t pos = char_pos_;
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, pos});
        return out;
      }
      const char c = text_[i_];
      if (match("¬")) {
        out.push_back({Tok::Not, pos});
      } else if (match("∧")) {
        out.push_back({Tok::And, pos});
      } else if (match("∨")) {
        out.push_back({Tok::Or, pos});
      } else if (match("→") || match("->")) {
        out.push_back({Tok::Implies, pos});
      } else if (c == '!' || c == '&' || c == '|' || c == '+' || c == '(' || c == ')' || c == ',') {
        advance(1);
        static constexpr std::string_view kChars = "!&|+(),";
        static constexpr Tok kKinds[] = {Tok::Not, Tok::And, Tok::Or, Tok::Xor, Tok::LParen, Tok::RParen, Tok::Comma};
        out.push_back({kKinds[kChars.find(c)], pos});
      } else if (c == '0' || c == '1') {
        advance(1);
        if (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          throw parse_error("unexpected digit", char_pos_);
        }
        out.push_back({c == '0' ? Tok::Zero : Tok::One, pos});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word;
        while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) {
          word += text_[i_];
          advance(1);
        }
        if (word.size() > 1 && word[0] == 'x' && std::all_of(word.begin() + 1, word.end(), ::isdigit)) {
          if (word.size() > 6) throw parse_error("variable index too large", pos);
          const int idx = std::stoi(word.substr(1));
          if (idx == 0) throw parse_error("variable index must be positive", pos);
          out.push_back({Tok::Var, pos, idx});
        } else if (word == "maj" || word == "minr" || word == "tmin") {
          out.push_back({Tok::Name, pos, 0, word});
        } else {
          throw parse_error("unknown identifier '" + word + "'", pos);
        }
      } else {
        throw parse_error("unexpected character", pos);
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance(1);
  }

  bool match(std::string_view s) {
    if (text_.substr(i_, s.size()) != s) return false;
    advance(s.size());
    return true;
  }

  void advance(std::size_t bytes) {
    for (std::size_t b = 0; b < bytes; ++b, ++i_) {
      if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) ++char_pos_;
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t char_pos_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = implication();
    if (peek().kind != Tok::End) throw parse_error("unexpected token", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw parse_error(std::string("expected ") + what, peek().pos);
    ++pos_;
  }

  Expr implication() {
    Expr lhs = sum();
    if (peek().kind == Tok::Implies) {
      take();
      return Expr::binary(Expr::Kind::Implies, std::move(lhs), implication());
    }
    return lhs;
  }

  template <typename Next>
  Expr left_assoc(Tok op, Expr::Kind kind, Next next) {
    Expr lhs = (this->*next)();
    while (peek().kind == op) {
      take();
      lhs = Expr::binary(kind, std::move(lhs), (this->*next)());
    }
    return lhs;
  }

  Expr sum() { return left_assoc(Tok::Xor, Expr::Kind::Xor, &Parser::disjunction); }
  Expr disjunction() { return left_assoc(Tok::Or, Expr::Kind::Or, &Parser::conjunction); }
  Expr conjunction() { return left_assoc(Tok::And, Expr::Kind::And, &Parser::negation); }

  Expr negation() {
    if (peek().kind == Tok::Not) {
      take();
      return Expr::unary(Expr::Kind::Not, negation());
    }
    return atom();
  }

  Expr atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Var: return Expr::var(t.index);
      case Tok::Zero: return Expr::constant(false);
      case Tok::One: return Expr::constant(true);
      case Tok::LParen: {
        Expr e = implication();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Name: {
        const Expr::Kind kind = t.name == "maj" ? Expr::Kind::Maj : t.name == "minr" ? Expr::Kind::Minr : Expr::Kind::Tmin;
        expect(Tok::LParen, "'('");
        Expr e{kind, 0, {}};
        e.args.push_back(implication());
        expect(Tok::Comma, "','");
        e.args.push_back(implication());
        expect(Tok::Comma, "','");
        e.args.push_back(implication());
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::End: throw parse_error("unexpected end of input", t.pos);
      default: throw parse_error("unexpected token", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Implies: return 1;
    case Expr::Kind::Xor: return 2;
    case Expr::Kind::Or: return 3;
    case Expr::Kind::And: return 4;
    case Expr::Kind::Not: return 5;
    default: return 6;
  }
}

const char* symbol(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Implies: return " -> ";
    case Expr::Kind::Xor: return " + ";
    case Expr::Kind::Or: return " | ";
    case Expr::Kind::And: return " & ";
    case Expr::Kind::Maj: return "maj";
    case Expr::Kind::Minr: return "minr";
    case Expr::Kind::Tmin: return "tmin";
    default: return "";
  }
}

std::string print_at(const Expr& e, int outer) {
  std::string s;
  const int p = precedence(e.kind);
  switch (e.kind) {
    case Expr::Kind::Var: return "x" + std::to_string(e.value);
    case Expr::Kind::Const: return e.value ? "1" : "0";
    case Expr::Kind::Not: s = "!" + print_at(e.args[0], p); break;
    case Expr::Kind::Maj:
    case Expr::Kind::Minr:
    case Expr::Kind::Tmin:
      return std::string(symbol(e.kind)) + "(" + print_at(e.args[0], 0) + ", " + print_at(e.args[1], 0) + ", " +
             print_at(e.args[2], 0) + ")";
    case Expr::Kind::Implies: s = print_at(e.args[0], p + 1) + symbol(e.kind) + print_at(e.args[1], p); break;
    default: s = print_at(e.args[0], p) + symbol(e.kind) + print_at(e.args[1], p + 1); break;
  }
  return p < outer ? "(" + s + ")" : s;
}

using Words = std::vector<Table>;

Words eval(const Expr& e, int n) {
  const std::size_t count = n <= kWordArity ? 1 : (std::size_t{1} << (n - kWordArity));
  const Table mask = bits::full(n);
  switch (e.kind) {
    case Expr::Kind::Const: return Words(count, e.value ? mask : 0);
    case Expr::Kind::Var: {
      Words w(count);
      const int i = e.value - 1;
      for (std::size_t j = 0; j < count; ++j) {
        w[j] = i < kWordArity ? bits::var(n, i) : (((j >> (i - kWordArity)) & 1u) ? mask : 0);
      }
      return w;
    }
    default: break;
  }
  std::vector<Words> a;
  for (const auto& arg : e.args) a.push_back(eval(arg, n));
  Words out(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Table x = a[0][j];
    const Table y = a.size() > 1 ? a[1][j] : 0;
    const Table z = a.size() > 2 ? a[2][j] : 0;
    Table r = 0;
    switch (e.kind) {
      case Expr::Kind::Not: r = ~x; break;
      case Expr::Kind::And: r = x & y; break;
      case Expr::Kind::Or: r = x | y; break;
      case Expr::Kind::Xor: r = x ^ y; break;
      case Expr::Kind::Implies: r = ~x | y; break;
      case Expr::Kind::Maj: r = (x & y) | (y & z) | (x & z); break;
      case Expr::Kind::Minr: r = x ^ y ^ z; break;
      case Expr::Kind::Tmin: r = (x & y) ^ (y & z) ^ (x & z) ^ x ^ z; break;
      default: break;
    }
    out[j] = r & mask;
  }
  return out;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

int max_variable(const Expr& e) {
  int m = e.kind == Expr::Kind::Var ? e.value : 0;
  for (const auto& a : e.args) m = std::max(m, max_variable(a));
  return m;
}

TruthTable to_table(const Expr& e, std::optional<int> arity) {
  const int top = max_variable(e);
  const int n = arity.value_or(top);
  if (n < top) throw input_error("arity " + std::to_string(n) + " is below the largest variable index x" + std::to_string(top));
  if (n > kMaxArity) throw input_error("formula arity exceeds " + std::to_string(kMaxArity));
  const Words w = eval(e, n);
  TruthTable t(n);
  for (std::uint32_t p = 0; p < t.size(); ++p) {
    if ((w[p >> 6] >> (p & 63)) & 1u) t.set_bit(p, true);
  }
  return t;
}

}  // namespace postlat

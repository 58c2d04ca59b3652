#include "bondsem/dsl.hpp"

#include <cctype>
#include <sstream>

namespace bondsem {

namespace {

struct Token {
  enum class Kind { ident, number, lparen, rparen, semi, plus, comma, kw_id, kw_sigma, end };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::end;
      tok_.text = "<end>";
      return;
    }
    char c = text_[pos_];
    if (c == '(') return single(Token::Kind::lparen);
    if (c == ')') return single(Token::Kind::rparen);
    if (c == ';') return single(Token::Kind::semi);
    if (c == '+') return single(Token::Kind::plus);
    if (c == ',') return single(Token::Kind::comma);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::number;
      tok_.text.clear();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.text.clear();
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok_.text += text_[pos_];
        bump();
      }
      tok_.kind = tok_.text == "id"      ? Token::Kind::kw_id
                  : tok_.text == "sigma" ? Token::Kind::kw_sigma
                                         : Token::Kind::ident;
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void single(Token::Kind k) {
    tok_.kind = k;
    tok_.text = text_[pos_];
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// Typed subterm: arities tracked during parsing so ';' mismatches are
// reported at the operator, not after the fact.
struct Typed {
  Term term;
  int dom, cod;
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig) : lex_(text), sig_(sig) {}

  Term parse() {
    Typed t = sequence();
    if (lex_.peek().kind != Token::Kind::end)
      throw ParseError(lex_.peek().line, lex_.peek().col,
                       "unexpected '" + lex_.peek().text + "'");
    return t.term;
  }

 private:
  // sequence := stack (';' stack)*     -- diagrammatic order, left first
  Typed sequence() {
    Typed acc = stack();
    while (lex_.peek().kind == Token::Kind::semi) {
      Token op = lex_.take();
      Typed next = stack();
      if (acc.cod != next.dom)
        throw ParseError(op.line, op.col,
                         "arity mismatch at ';': left yields " + std::to_string(acc.cod) +
                             " but right expects " + std::to_string(next.dom));
      acc = Typed{Term::comp(next.term, acc.term), acc.dom, next.cod};
    }
    return acc;
  }

  // stack := atom ('+' atom)*
  Typed stack() {
    Typed acc = atom();
    while (lex_.peek().kind == Token::Kind::plus) {
      lex_.take();
      Typed next = atom();
      acc = Typed{Term::ten(acc.term, next.term), acc.dom + next.dom, acc.cod + next.cod};
    }
    return acc;
  }

  Typed atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::lparen: {
        Typed inner = sequence();
        expect(Token::Kind::rparen, ")");
        return inner;
      }
      case Token::Kind::kw_id: {
        expect(Token::Kind::lparen, "(");
        int n = number();
        expect(Token::Kind::rparen, ")");
        return Typed{Term::id(n), n, n};
      }
      case Token::Kind::kw_sigma: {
        expect(Token::Kind::lparen, "(");
        int a = number();
        expect(Token::Kind::comma, ",");
        int b = number();
        expect(Token::Kind::rparen, ")");
        return Typed{Term::braid(a, b), a + b, a + b};
      }
      case Token::Kind::ident: {
        auto it = sig_.generators.find(t.text);
        if (it == sig_.generators.end())
          throw ParseError(t.line, t.col,
                           "unknown identifier '" + t.text + "' in signature " + sig_.name);
        return Typed{Term::gen(t.text), it->second.first, it->second.second};
      }
      default:
        throw ParseError(t.line, t.col, "expected a term, got '" + t.text + "'");
    }
  }

  int number() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::number)
      throw ParseError(t.line, t.col, "expected a number, got '" + t.text + "'");
    return std::stoi(t.text);
  }

  void expect(Token::Kind k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k)
      throw ParseError(t.line, t.col, "expected '" + std::string(what) + "', got '" + t.text + "'");
  }

  Lexer lex_;
  const Signature& sig_;
};

// Precedence for printing: sequences need parens inside stacks.
void print_term(std::ostream& os, const Term& t, bool inside_tensor) {
  switch (t.kind()) {
    case Term::Kind::generator:
      os << t.gen_name();
      return;
    case Term::Kind::identity:
      os << "id(" << t.object() << ")";
      return;
    case Term::Kind::braiding:
      os << "sigma(" << t.braid_left() << "," << t.braid_right() << ")";
      return;
    case Term::Kind::compose: {
      if (inside_tensor) os << "(";
      // Diagrammatic order: before prints first.
      print_term(os, t.before(), false);
      os << " ; ";
      // Right-nested composes need parens to reparse into the same tree.
      bool wrap = t.after().kind() == Term::Kind::compose;
      if (wrap) os << "(";
      print_term(os, t.after(), false);
      if (wrap) os << ")";
      if (inside_tensor) os << ")";
      return;
    }
    case Term::Kind::tensor: {
      print_term(os, t.left(), true);
      os << " + ";
      bool wrap = t.right().kind() == Term::Kind::tensor;
      if (wrap) os << "(";
      print_term(os, t.right(), true);
      if (wrap) os << ")";
      return;
    }
  }
}

}  // namespace

Term parse_dsl(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse();
}

std::string print_dsl(const Term& t) {
  std::ostringstream os;
  print_term(os, t, false);
  return os.str();
}

}  // namespace bondsem

#include "uaw/expr.hpp"

#include <cctype>

namespace uaw {

namespace {

constexpr int kSymOm = 6;
constexpr int kSymQ = 7;

struct Token {
  enum Kind { symbol, integer, plus, minus, star, slash, caret, lparen, rparen, end_of_input };
  Kind kind;
  std::size_t pos;
  int sym = 0;        // sym
  QRational value;    // number
};

const char* token_desc(Token::Kind k) {
  switch (k) {
    case Token::symbol: return "symbol";
    case Token::integer: return "number";
    case Token::plus: return "'+'";
    case Token::minus: return "'-'";
    case Token::star: return "'*'";
    case Token::slash: return "'/'";
    case Token::caret: return "'^'";
    case Token::lparen: return "'('";
    case Token::rparen: return "')'";
    case Token::end_of_input: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.kind = Token::end_of_input;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': cur_.kind = Token::plus; ++pos_; return;
      case '-': cur_.kind = Token::minus; ++pos_; return;
      case '*': cur_.kind = Token::star; ++pos_; return;
      case '/': cur_.kind = Token::slash; ++pos_; return;
      case '^': cur_.kind = Token::caret; ++pos_; return;
      case '(': cur_.kind = Token::lparen; ++pos_; return;
      case ')': cur_.kind = Token::rparen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      cur_.kind = Token::integer;
      cur_.value = QRational(BigInt(std::string(text_.substr(start, pos_ - start))));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // one symbol per token; a longer run of letters yields a sequence of
      // symbol tokens, which the grammar multiplies by adjacency
      cur_.kind = Token::symbol;
      if (pos_ + 1 < text_.size()) {
        std::string_view two = text_.substr(pos_, 2);
        int s = two == "al" ? 3 : two == "be" ? 4 : two == "ga" ? 5 : two == "Om" ? kSymOm : -1;
        if (s >= 0) {
          cur_.sym = s;
          pos_ += 2;
          return;
        }
      }
      int s = c == 'A' ? 0 : c == 'B' ? 1 : c == 'C' ? 2 : c == 'q' ? kSymQ : -1;
      if (s < 0) throw parse_error(pos_, std::string("unknown symbol '") + c + "'");
      cur_.sym = s;
      ++pos_;
      return;
    }
    throw parse_error(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_;
};

}  // namespace

class Parser {
 public:
  explicit Parser(std::string_view text) : lx_(text) {}

  Expr run() {
    Expr e;
    int root = parse_sum(e);
    const Token& t = lx_.peek();
    if (t.kind != Token::end_of_input)
      throw parse_error(t.pos, std::string("expected an operator, found ") + token_desc(t.kind));
    (void)root;  // nodes are appended in postorder; the root is the last one
    return e;
  }

 private:
  static bool starts_atom(Token::Kind k) {
    return k == Token::symbol || k == Token::integer || k == Token::lparen;
  }

  int add(Expr& e, Expr::Node n) {
    e.nodes_.push_back(std::move(n));
    return static_cast<int>(e.nodes_.size()) - 1;
  }

  int parse_sum(Expr& e) {
    int lhs = parse_neg(e);
    for (;;) {
      Token::Kind k = lx_.peek().kind;
      if (k != Token::plus && k != Token::minus) return lhs;
      lx_.take();
      int rhs = parse_neg(e);
      Expr::Node n;
      n.kind = k == Token::plus ? '+' : '-';
      n.a = lhs;
      n.b = rhs;
      lhs = add(e, std::move(n));
    }
  }

  int parse_neg(Expr& e) {
    if (lx_.peek().kind == Token::minus) {
      lx_.take();
      int inner = parse_neg(e);
      Expr::Node n;
      n.kind = 'm';
      n.a = inner;
      return add(e, std::move(n));
    }
    return parse_product(e);
  }

  int parse_product(Expr& e) {
    int lhs = parse_power(e);
    for (;;) {
      Token::Kind k = lx_.peek().kind;
      char op;
      if (k == Token::star || k == Token::slash) {
        op = k == Token::star ? '*' : '/';
        lx_.take();
      } else if (starts_atom(k)) {
        op = '*';  // adjacency
      } else {
        return lhs;
      }
      int rhs = parse_power(e);
      Expr::Node n;
      n.kind = op;
      n.a = lhs;
      n.b = rhs;
      lhs = add(e, std::move(n));
    }
  }

  int parse_power(Expr& e) {
    int base = parse_atom(e);
    if (lx_.peek().kind != Token::caret) return base;
    lx_.take();
    bool negated = false;
    std::size_t sign_pos = lx_.peek().pos;
    if (lx_.peek().kind == Token::minus) {
      negated = true;
      lx_.take();
    }
    const Token& t = lx_.peek();
    if (t.kind != Token::integer)
      throw parse_error(t.pos, std::string("expected an integer exponent, found ") + token_desc(t.kind));
    Token num = lx_.take();
    BigInt v = boost::multiprecision::numerator(num.value);
    if (v > 1000000) throw parse_error(num.pos, "exponent too large");
    int exp = static_cast<int>(v);
    if (negated) exp = -exp;

    Expr::Node& bn = e.nodes_[static_cast<std::size_t>(base)];
    if (bn.kind == 'q' && bn.exponent == 1) {
      bn.exponent = exp;  // fold bare q^e into one node; any integer is fine
      return base;
    }
    if (negated) throw parse_error(sign_pos, "negative exponent is only allowed on q");
    Expr::Node n;
    n.kind = '^';
    n.a = base;
    n.exponent = exp;
    return add(e, std::move(n));
  }

  int parse_atom(Expr& e) {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Token::symbol: {
        Token s = lx_.take();
        Expr::Node n;
        n.kind = s.sym == kSymQ ? 'q' : 's';
        n.sym = s.sym;
        n.exponent = 1;  // bare q is q^1
        return add(e, std::move(n));
      }
      case Token::integer: {
        Token num = lx_.take();
        Expr::Node n;
        n.kind = 'n';
        n.value = num.value;
        return add(e, std::move(n));
      }
      case Token::lparen: {
        lx_.take();
        int inner = parse_sum(e);
        const Token& close = lx_.peek();
        if (close.kind != Token::rparen)
          throw parse_error(close.pos, std::string("expected ')', found ") + token_desc(close.kind));
        lx_.take();
        return inner;
      }
      default:
        throw parse_error(t.pos, std::string("expected an operand, found ") + token_desc(t.kind));
    }
  }

  Lexer lx_;
};

Expr Expr::parse(std::string_view text) { return Parser(text).run(); }

DeltaElement Expr::eval_node(int u) const {
  const Node& n = nodes_[static_cast<std::size_t>(u)];
  switch (n.kind) {
    case 's':
      if (n.sym == kSymOm) return casimir();
      return DeltaElement::generator(static_cast<Letter>(n.sym));
    case 'n':
      return DeltaElement(n.value);
    case 'q':
      return DeltaElement(RatFuncQ::q_power(n.exponent));
    case 'm':
      return -eval_node(n.a);
    case '+':
      return eval_node(n.a) + eval_node(n.b);
    case '-':
      return eval_node(n.a) - eval_node(n.b);
    case '*':
      return eval_node(n.a) * eval_node(n.b);
    case '/': {
      DeltaElement den = eval_node(n.b);
      if (den.is_zero()) throw eval_error("division by zero");
      if (!den.is_scalar()) throw eval_error("divisor must be a scalar");
      return eval_node(n.a) * den.scalar_value().inverse();
    }
    case '^': {
      const Node& base = nodes_[static_cast<std::size_t>(n.a)];
      if (base.kind == 's' && base.sym == kSymOm) return casimir_power(n.exponent);
      return eval_node(n.a).pow(n.exponent);
    }
    default:
      break;
  }
  throw eval_error("malformed expression tree");
}

DeltaElement Expr::eval() const {
  if (nodes_.empty()) throw eval_error("empty expression tree");
  return eval_node(static_cast<int>(nodes_.size()) - 1);
}

DeltaElement parse_element(std::string_view text) { return Expr::parse(text).eval(); }

}  // namespace uaw

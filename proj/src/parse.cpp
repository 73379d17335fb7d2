#include "chorcheck/parse.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "chorcheck/core_ops.hpp"

namespace chorcheck {

std::string SourceSpan::to_string() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

ParseError::ParseError(SourceSpan span, const std::string& message)
    : Error(span.to_string() + ": " + message), span_(std::move(span)) {}

namespace {

enum class Tok {
  Ident, Int, String,
  KwChor, KwFormula, KwState, KwType, KwIf, KwThen, KwElse, KwRec, KwEnd,
  KwMay, KwBox, KwNext, KwExists, KwForall, KwTrue, KwFalse, KwEps, KwNot,
  KwOr, KwInteract,
  Arrow, Implies, Neq, Lt, Gt, LParen, RParen, LBrace, RBrace, LBracket,
  RBracket, Colon, Comma, Dot, Pipe, Amp, Tilde, Eq, Plus, Minus, At, Star,
  Bang, Question,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t int_value = 0;
  int line = 1;
  int col = 1;
};

const std::map<std::string, Tok>& keywords() {
  static const std::map<std::string, Tok> kw = {
      {"chor", Tok::KwChor},     {"formula", Tok::KwFormula},
      {"state", Tok::KwState},   {"type", Tok::KwType},
      {"if", Tok::KwIf},         {"then", Tok::KwThen},
      {"else", Tok::KwElse},     {"rec", Tok::KwRec},
      {"end", Tok::KwEnd},       {"may", Tok::KwMay},
      {"box", Tok::KwBox},       {"next", Tok::KwNext},
      {"exists", Tok::KwExists}, {"forall", Tok::KwForall},
      {"true", Tok::KwTrue},     {"false", Tok::KwFalse},
      {"eps", Tok::KwEps},       {"not", Tok::KwNot},
      {"or", Tok::KwOr},         {"interact", Tok::KwInteract},
  };
  return kw;
}

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c == '#';
}

class Lexer {
public:
  Lexer(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next_token();
      bool done = t.kind == Tok::Eof;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(SourceSpan{file_, line_, col_}, msg);
  }

  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char ahead(std::size_t k = 1) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(cur())))
        advance();
      if (cur() == '/' && ahead() == '/') {
        while (pos_ < text_.size() && cur() != '\n') advance();
        continue;
      }
      return;
    }
  }

  Token make(Tok kind, std::string text, int line, int col) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.line = line;
    t.col = col;
    return t;
  }

  Token next_token() {
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return make(Tok::Eof, "", line, col);
    char c = cur();
    if (ident_start(static_cast<unsigned char>(c))) {
      std::string id;
      while (ident_char(static_cast<unsigned char>(cur()))) {
        id += cur();
        advance();
      }
      auto it = keywords().find(id);
      if (it != keywords().end()) return make(it->second, id, line, col);
      return make(Tok::Ident, id, line, col);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(cur()))) {
        digits += cur();
        advance();
      }
      Token t = make(Tok::Int, digits, line, col);
      try {
        t.int_value = std::stoll(digits);
      } catch (const std::exception&) {
        throw ParseError(SourceSpan{file_, line, col}, "integer literal out of range");
      }
      return t;
    }
    if (c == '"') {
      advance();
      std::string s;
      for (;;) {
        if (pos_ >= text_.size() || cur() == '\n')
          throw ParseError(SourceSpan{file_, line, col}, "unterminated string literal");
        if (cur() == '"') {
          advance();
          return make(Tok::String, s, line, col);
        }
        if (cur() == '\\') {
          advance();
          switch (cur()) {
            case '"': s += '"'; break;
            case '\\': s += '\\'; break;
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            default: fail("unknown escape sequence");
          }
          advance();
          continue;
        }
        s += cur();
        advance();
      }
    }
    auto two = [&](char a, char b) { return c == a && ahead() == b; };
    if (two('-', '>')) { advance(); advance(); return make(Tok::Arrow, "->", line, col); }
    if (two('=', '>')) { advance(); advance(); return make(Tok::Implies, "=>", line, col); }
    if (two('!', '=')) { advance(); advance(); return make(Tok::Neq, "!=", line, col); }
    advance();
    switch (c) {
      case '<': return make(Tok::Lt, "<", line, col);
      case '>': return make(Tok::Gt, ">", line, col);
      case '(': return make(Tok::LParen, "(", line, col);
      case ')': return make(Tok::RParen, ")", line, col);
      case '{': return make(Tok::LBrace, "{", line, col);
      case '}': return make(Tok::RBrace, "}", line, col);
      case '[': return make(Tok::LBracket, "[", line, col);
      case ']': return make(Tok::RBracket, "]", line, col);
      case ':': return make(Tok::Colon, ":", line, col);
      case ',': return make(Tok::Comma, ",", line, col);
      case '.': return make(Tok::Dot, ".", line, col);
      case '|': return make(Tok::Pipe, "|", line, col);
      case '&': return make(Tok::Amp, "&", line, col);
      case '~': return make(Tok::Tilde, "~", line, col);
      case '=': return make(Tok::Eq, "=", line, col);
      case '+': return make(Tok::Plus, "+", line, col);
      case '-': return make(Tok::Minus, "-", line, col);
      case '@': return make(Tok::At, "@", line, col);
      case '*': return make(Tok::Star, "*", line, col);
      case '!': return make(Tok::Bang, "!", line, col);
      case '?': return make(Tok::Question, "?", line, col);
      default:
        throw ParseError(SourceSpan{file_, line, col},
                         std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

constexpr int kMaxDepth = 1000;

class Parser {
public:
  Parser(std::string_view text, std::string file)
      : file_(std::move(file)), tokens_(Lexer(text, file_).run()) {}

  Document document() {
    Document doc;
    std::set<std::string> names;
    while (!at(Tok::Eof)) {
      if (accept(Tok::KwChor)) {
        std::string name = expect_ident("choreography name");
        declare(names, name);
        expect(Tok::Eq, "'='");
        Choreography c = par_chor();
        require_closed(c);
        doc.choreographies.emplace_back(std::move(name), std::move(c));
      } else if (accept(Tok::KwFormula)) {
        std::string name = expect_ident("formula name");
        declare(names, name);
        expect(Tok::Eq, "'='");
        doc.formulae.emplace_back(std::move(name), formula_top());
      } else if (accept(Tok::KwState)) {
        if (doc.initial_state) fail("duplicate state block");
        expect(Tok::LBrace, "'{'");
        doc.initial_state = state_bindings(Tok::RBrace);
        expect(Tok::RBrace, "'}'");
      } else if (accept(Tok::KwType)) {
        std::string name = expect_ident("type name");
        declare(names, name);
        expect(Tok::Eq, "'='");
        doc.session_types.emplace_back(std::move(name), session_type());
      } else {
        fail("expected a declaration (chor, formula, state, or type)");
      }
    }
    return doc;
  }

  Choreography single_choreography() {
    Choreography c = par_chor();
    expect(Tok::Eof, "end of input");
    require_closed(c);
    return c;
  }

  Formula single_formula() {
    Formula f = formula_top();
    expect(Tok::Eof, "end of input");
    return f;
  }

  State single_state() {
    State s = state_bindings(Tok::Eof);
    expect(Tok::Eof, "end of input");
    return s;
  }

  SessionType single_session_type() {
    SessionType t = session_type();
    expect(Tok::Eof, "end of input");
    return t;
  }

private:
  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("input nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  bool at(Tok kind) const { return peek().kind == kind; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  std::string expect_ident(const char* what) {
    if (!at(Tok::Ident)) fail(std::string("expected ") + what);
    return tokens_[pos_++].text;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(SourceSpan{file_, t.line, t.col}, msg);
  }

  void declare(std::set<std::string>& names, const std::string& name) {
    if (!names.insert(name).second) fail("duplicate declaration name: " + name);
  }

  void require_closed(const Choreography& c) {
    for (const Name& n : free_names(c))
      if (n.sort() == NameSort::ProcessVariable)
        fail("unbound process variable: " + n.id());
  }

  // ----- choreographies -----

  Choreography par_chor() {
    DepthGuard g(*this);
    Choreography left = prefixed();
    while (accept(Tok::Pipe)) left = Choreography::par(std::move(left), prefixed());
    return left;
  }

  Choreography prefixed() {
    DepthGuard g(*this);
    if (at(Tok::Int)) {
      const Token& t = peek();
      if (t.int_value != 0) fail("expected a choreography term");
      ++pos_;
      return Choreography::inaction();
    }
    if (accept(Tok::LParen)) {
      Choreography c = par_chor();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (accept(Tok::KwIf)) {
      Expression guard = expression();
      expect(Tok::KwThen, "'then'");
      Choreography then_branch = prefixed();
      expect(Tok::KwElse, "'else'");
      Choreography else_branch = prefixed();
      return Choreography::cond(guard, infer_home(guard), std::move(then_branch),
                                std::move(else_branch));
    }
    if (accept(Tok::KwRec)) {
      std::string var = expect_ident("recursion variable");
      expect(Tok::LBrace, "'{'");
      Choreography body = par_chor();
      expect(Tok::RBrace, "'}'");
      return Choreography::rec(process_variable(var), std::move(body));
    }
    if (at(Tok::Ident)) {
      if (peek(1).kind == Tok::Arrow) return interaction();
      return Choreography::rec_var(process_variable(tokens_[pos_++].text));
    }
    fail("expected a choreography term");
  }

  Choreography interaction() {
    Participant from(expect_ident("participant"));
    expect(Tok::Arrow, "'->'");
    Participant to(expect_ident("participant"));
    expect(Tok::Colon, "':'");
    std::string subject = expect_ident("channel");
    if (accept(Tok::LParen)) {
      std::string channel = expect_ident("session channel");
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      return Choreography::init(from, to, shared_channel(subject),
                                session_channel(channel), prefixed());
    }
    if (accept(Tok::Lt)) {
      Expression payload = expression();
      expect(Tok::Comma, "','");
      std::string target = expect_ident("target variable");
      expect(Tok::Gt, "'>'");
      expect(Tok::Dot, "'.'");
      return Choreography::com(from, to, session_channel(subject), payload,
                               variable(target), prefixed());
    }
    if (accept(Tok::LBracket)) {
      expect(Tok::Plus, "'+' in '[+]'");
      expect(Tok::RBracket, "']'");
      expect(Tok::LBrace, "'{'");
      std::vector<std::pair<Name, Choreography>> branches;
      do {
        std::string label = expect_ident("branch label");
        expect(Tok::Colon, "':'");
        branches.emplace_back(branch_label(label), par_chor());
      } while (accept(Tok::Comma));
      expect(Tok::RBrace, "'}'");
      const Token& t = peek();
      try {
        return Choreography::choice(from, to, session_channel(subject),
                                    std::move(branches));
      } catch (const std::invalid_argument& e) {
        throw ParseError(SourceSpan{file_, t.line, t.col}, e.what());
      }
    }
    fail("expected '(', '<', or '[+]' after channel");
  }

  // ----- expressions -----

  Expression expression() {
    DepthGuard g(*this);
    Expression lhs = additive();
    if (accept(Tok::Eq)) return Expression::binary(BinOp::Eq, lhs, additive());
    if (accept(Tok::Neq)) return Expression::binary(BinOp::Ne, lhs, additive());
    if (accept(Tok::Lt)) return Expression::binary(BinOp::Lt, lhs, additive());
    return lhs;
  }

  Expression additive() {
    DepthGuard g(*this);
    Expression lhs = unary_expr();
    for (;;) {
      if (accept(Tok::Plus)) lhs = Expression::binary(BinOp::Add, lhs, unary_expr());
      else if (accept(Tok::Minus)) lhs = Expression::binary(BinOp::Sub, lhs, unary_expr());
      else if (accept(Tok::Dot)) lhs = Expression::binary(BinOp::Concat, lhs, unary_expr());
      else return lhs;
    }
  }

  Expression unary_expr() {
    DepthGuard g(*this);
    if (accept(Tok::KwNot)) return Expression::negation(unary_expr());
    return primary_expr();
  }

  // Trailing @P on a literal is accepted and dropped; on a variable it
  // locates the read; on a parenthesised expression it locates every
  // unlocated read inside.
  Expression primary_expr() {
    DepthGuard g(*this);
    if (at(Tok::Int)) {
      std::int64_t v = tokens_[pos_++].int_value;
      swallow_location();
      return Expression::lit_int(v);
    }
    if (accept(Tok::Minus)) {
      if (!at(Tok::Int)) fail("expected integer after '-'");
      std::int64_t v = tokens_[pos_++].int_value;
      swallow_location();
      return Expression::lit_int(-v);
    }
    if (at(Tok::String)) {
      std::string s = tokens_[pos_++].text;
      swallow_location();
      return Expression::lit_string(std::move(s));
    }
    if (accept(Tok::KwEps)) {
      swallow_location();
      return Expression::lit_string("");
    }
    if (accept(Tok::KwTrue)) {
      swallow_location();
      return Expression::lit_bool(true);
    }
    if (accept(Tok::KwFalse)) {
      swallow_location();
      return Expression::lit_bool(false);
    }
    if (at(Tok::Ident)) {
      std::string name = tokens_[pos_++].text;
      if (accept(Tok::At))
        return Expression::var(std::move(name), Participant(expect_ident("participant")));
      return Expression::var(std::move(name));
    }
    if (accept(Tok::LParen)) {
      Expression e = expression();
      expect(Tok::RParen, "')'");
      if (accept(Tok::At)) return locate_reads(e, Participant(expect_ident("participant")));
      return e;
    }
    fail("expected an expression");
  }

  void swallow_location() {
    if (accept(Tok::At)) expect_ident("participant");
  }

  static Expression locate_reads(const Expression& e, const Participant& at) {
    if (const auto* v = std::get_if<VarExpr>(&e.node()))
      return v->at ? e : Expression::var(v->var.id(), at);
    if (const auto* b = std::get_if<BinaryExpr>(&e.node()))
      return Expression::binary(b->op, locate_reads(b->lhs, at), locate_reads(b->rhs, at));
    if (const auto* n = std::get_if<NotExpr>(&e.node()))
      return Expression::negation(locate_reads(n->arg, at));
    return e;
  }

  static std::optional<Participant> infer_home(const Expression& e) {
    if (const auto* v = std::get_if<VarExpr>(&e.node())) return v->at;
    if (const auto* b = std::get_if<BinaryExpr>(&e.node())) {
      auto l = infer_home(b->lhs);
      return l ? l : infer_home(b->rhs);
    }
    if (const auto* n = std::get_if<NotExpr>(&e.node())) return infer_home(n->arg);
    return std::nullopt;
  }

  // ----- formulae -----

  Formula formula_top() { return formula_spatial(); }

  Formula formula_spatial() {
    DepthGuard g(*this);
    Formula left = formula_implies();
    while (accept(Tok::Pipe))
      left = Formula::spatial(std::move(left), formula_implies());
    return left;
  }

  Formula formula_implies() {
    DepthGuard g(*this);
    Formula lhs = formula_or();
    if (accept(Tok::Implies)) return Formula::implies(std::move(lhs), formula_implies());
    return lhs;
  }

  Formula formula_or() {
    DepthGuard g(*this);
    Formula lhs = formula_and();
    while (accept(Tok::KwOr)) lhs = Formula::disj(std::move(lhs), formula_and());
    return lhs;
  }

  Formula formula_and() {
    DepthGuard g(*this);
    Formula lhs = formula_unary();
    while (accept(Tok::Amp)) lhs = Formula::conj(std::move(lhs), formula_unary());
    return lhs;
  }

  Formula formula_unary() {
    DepthGuard g(*this);
    if (accept(Tok::Tilde)) return Formula::neg(formula_unary());
    if (accept(Tok::KwMay)) return Formula::may(formula_unary());
    if (accept(Tok::KwBox)) return Formula::box(formula_unary());
    if (accept(Tok::KwNext)) return Formula::next(formula_unary());
    if (at(Tok::Lt)) {
      if (peek(1).kind == Tok::Star) {
        ++pos_;
        expect(Tok::Star, "'*'");
        expect(Tok::Gt, "'>'");
        return Formula::exists_label(formula_unary());
      }
      ++pos_;
      ActionLabel l = action_label();
      expect(Tok::Gt, "'>'");
      return Formula::action(std::move(l), formula_unary());
    }
    if (accept(Tok::LBracket)) {
      ActionLabel l = action_label();
      expect(Tok::RBracket, "']'");
      return Formula::box_action(std::move(l), formula_unary());
    }
    if (accept(Tok::KwExists)) return quantifier(true);
    if (accept(Tok::KwForall)) return quantifier(false);
    if (accept(Tok::KwInteract)) {
      expect(Tok::LParen, "'('");
      Participant from(expect_ident("participant"));
      expect(Tok::Comma, "','");
      Participant to(expect_ident("participant"));
      expect(Tok::RParen, "')'");
      return Formula::interact(from, to, formula_unary());
    }
    return formula_atom();
  }

  Formula quantifier(bool existential) {
    std::string var = expect_ident("quantified variable");
    expect(Tok::Colon, "':' and a sort");
    const Token& sort_tok = peek();
    std::string sort_name = expect_ident("sort");
    QuantSort sort;
    if (sort_name == "participant") sort = QuantSort::Participant;
    else if (sort_name == "schan") sort = QuantSort::SharedChannel;
    else if (sort_name == "kchan") sort = QuantSort::SessionChannel;
    else if (sort_name == "label") sort = QuantSort::BranchLabel;
    else if (sort_name == "expr") sort = QuantSort::Expr;
    else
      throw ParseError(SourceSpan{file_, sort_tok.line, sort_tok.col},
                       "unknown sort annotation: " + sort_name);
    expect(Tok::Dot, "'.'");
    Formula body = formula_top();
    return existential ? Formula::exists(var, sort, std::move(body))
                       : Formula::forall(var, sort, std::move(body));
  }

  bool looks_like_expr_continuation() const {
    switch (peek().kind) {
      case Tok::Eq:
      case Tok::Neq:
      case Tok::At:
      case Tok::Plus:
      case Tok::Minus:
      case Tok::Dot: return true;
      default: return false;
    }
  }

  Formula formula_atom() {
    DepthGuard g(*this);
    if (accept(Tok::KwEnd)) return Formula::end();
    if (at(Tok::KwTrue) && peek(1).kind != Tok::Eq && peek(1).kind != Tok::Neq &&
        peek(1).kind != Tok::At) {
      ++pos_;
      return Formula::truth();
    }
    if (at(Tok::KwFalse) && peek(1).kind != Tok::Eq && peek(1).kind != Tok::Neq &&
        peek(1).kind != Tok::At) {
      ++pos_;
      return Formula::falsity();
    }
    if (at(Tok::LParen)) {
      std::size_t save = pos_;
      ++pos_;
      try {
        Formula f = formula_top();
        expect(Tok::RParen, "')'");
        if (!looks_like_expr_continuation()) return f;
      } catch (const ParseError&) {
        // fall through to the equality reading
      }
      pos_ = save;
    }
    return equality_atom();
  }

  Formula equality_atom() {
    Expression lhs = additive();
    if (accept(Tok::Eq)) return Formula::eq(lhs, additive());
    if (accept(Tok::Neq)) return Formula::neg(Formula::eq(lhs, additive()));
    fail("expected '=' or '!=' in equality formula");
  }

  ActionLabel action_label() {
    const Token& kind_tok = peek();
    std::string kind = expect_ident("label kind (init, com, or branch)");
    Participant from(expect_ident("participant"));
    expect(Tok::Arrow, "'->'");
    Participant to(expect_ident("participant"));
    if (kind == "init") {
      std::string service = expect_ident("shared channel");
      expect(Tok::LParen, "'('");
      std::string channel = expect_ident("session channel");
      expect(Tok::RParen, "')'");
      return InitLabel{from, to, shared_channel(service), session_channel(channel)};
    }
    if (kind == "com") {
      std::string channel = expect_ident("session channel");
      return ComLabel{from, to, session_channel(channel)};
    }
    if (kind == "branch") {
      std::string channel = expect_ident("session channel");
      expect(Tok::LBracket, "'['");
      std::string label = expect_ident("branch label");
      expect(Tok::RBracket, "']'");
      return BranchLabel{from, to, session_channel(channel), branch_label(label)};
    }
    throw ParseError(SourceSpan{file_, kind_tok.line, kind_tok.col},
                     "unknown label kind: " + kind);
  }

  // ----- states -----

  State state_bindings(Tok terminator) {
    State s;
    if (peek().kind == terminator) return s;
    do {
      const Token& first = peek();
      std::string var = expect_ident("variable");
      expect(Tok::At, "'@'");
      std::string participant = expect_ident("participant");
      expect(Tok::Eq, "'='");
      Value v = state_value();
      if (s.lookup(var, Participant(participant)))
        throw ParseError(SourceSpan{file_, first.line, first.col},
                         "duplicate binding for " + var + "@" + participant);
      s = s.with(var, Participant(participant), std::move(v));
    } while (accept(Tok::Comma));
    return s;
  }

  Value state_value() {
    if (at(Tok::Int)) return Value(tokens_[pos_++].int_value);
    if (accept(Tok::Minus)) {
      if (!at(Tok::Int)) fail("expected integer after '-'");
      return Value(-tokens_[pos_++].int_value);
    }
    if (accept(Tok::KwTrue)) return Value(true);
    if (accept(Tok::KwFalse)) return Value(false);
    if (at(Tok::String)) return Value(tokens_[pos_++].text);
    if (accept(Tok::KwEps)) return Value(std::string());
    fail("expected a value");
  }

  // ----- session types -----

  SessionType session_type() {
    DepthGuard g(*this);
    if (accept(Tok::Bang)) return io_type(true);
    if (accept(Tok::Question)) return io_type(false);
    if (accept(Tok::Amp)) return alt_type(true);
    if (accept(Tok::Plus)) return alt_type(false);
    if (accept(Tok::KwEnd)) return SessionType::end();
    if (accept(Tok::KwRec)) {
      std::string var = expect_ident("type variable");
      expect(Tok::Dot, "'.'");
      return SessionType::rec(std::move(var), session_type());
    }
    if (at(Tok::Ident)) return SessionType::type_var(tokens_[pos_++].text);
    fail("expected a session type");
  }

  SessionType io_type(bool sending) {
    expect(Tok::LParen, "'('");
    std::string vt = expect_ident("value type");
    ValueType t;
    if (vt == "bool") t = ValueType::Bool;
    else if (vt == "int") t = ValueType::Int;
    else if (vt == "string") t = ValueType::String;
    else fail("unknown value type: " + vt);
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
    SessionType cont = session_type();
    return sending ? SessionType::send(t, std::move(cont))
                   : SessionType::recv(t, std::move(cont));
  }

  SessionType alt_type(bool branching) {
    expect(Tok::LBrace, "'{'");
    std::vector<std::pair<std::string, SessionType>> alts;
    do {
      std::string label = expect_ident("branch label");
      expect(Tok::Colon, "':'");
      alts.emplace_back(std::move(label), session_type());
    } while (accept(Tok::Comma));
    expect(Tok::RBrace, "'}'");
    return branching ? SessionType::branch(std::move(alts))
                     : SessionType::select(std::move(alts));
  }

  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

} // namespace

Document parse_document(std::string_view text, const std::string& file) {
  return Parser(text, file).document();
}

Choreography parse_choreography(std::string_view text, const std::string& file) {
  return Parser(text, file).single_choreography();
}

Formula parse_formula(std::string_view text, const std::string& file) {
  return Parser(text, file).single_formula();
}

State parse_state(std::string_view text, const std::string& file) {
  return Parser(text, file).single_state();
}

SessionType parse_session_type(std::string_view text, const std::string& file) {
  return Parser(text, file).single_session_type();
}

const Choreography* Document::find_choreography(const std::string& name) const {
  for (const auto& [n, c] : choreographies)
    if (n == name) return &c;
  return nullptr;
}

const Formula* Document::find_formula(const std::string& name) const {
  for (const auto& [n, f] : formulae)
    if (n == name) return &f;
  return nullptr;
}

} // namespace chorcheck

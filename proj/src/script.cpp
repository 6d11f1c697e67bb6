#include "cmw/script.hpp"

#include <cctype>
#include <sstream>

#include "cmw/theorems.hpp"

namespace cmw {

namespace {

struct Token {
  enum class Kind { ident, integer, punct, end } kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::Kind::end;
      tok_.text = "<end>";
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      // dotted identifiers (statement ids like prop1.2a)
      while (pos_ + 1 < s_.size() && s_[pos_] == '.' &&
             std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
      }
      tok_.kind = Token::Kind::ident;
      tok_.text = s_.substr(start, pos_ - start);
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::integer;
      tok_.text = s_.substr(start, pos_ - start);
      tok_.value = std::stoll(tok_.text);
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    tok_.kind = Token::Kind::punct;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void err_at(const Token& t, const std::string& expected) {
  std::ostringstream os;
  os << t.line << ":" << t.col << ": expected " << expected << ", found '" << t.text << "'";
  fail_parse(os.str());
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  Script run() {
    while (lx_.peek().kind != Token::Kind::end) statement();
    return std::move(out_);
  }

 private:
  bool peek_is(const std::string& p) const { return lx_.peek().text == p; }
  Token expect_punct(const std::string& p) {
    if (lx_.peek().kind != Token::Kind::punct || lx_.peek().text != p) err_at(lx_.peek(), "'" + p + "'");
    return lx_.take();
  }
  Token expect_ident(const std::string& what) {
    if (lx_.peek().kind != Token::Kind::ident) err_at(lx_.peek(), what);
    return lx_.take();
  }
  Token expect_kw(const std::string& kw) {
    if (lx_.peek().kind != Token::Kind::ident || lx_.peek().text != kw)
      err_at(lx_.peek(), "'" + kw + "'");
    return lx_.take();
  }
  int expect_int(const std::string& what) {
    if (lx_.peek().kind != Token::Kind::integer) err_at(lx_.peek(), what);
    return static_cast<int>(lx_.take().value);
  }

  QRingPtr lookup_ring(const std::string& name, const Token& at) {
    auto it = out_.rings.find(name);
    if (it == out_.rings.end()) err_at(at, "a bound ring name ('" + name + "' is undefined)");
    return it->second;
  }
  ModulePtr lookup_module(const std::string& name, const Token& at) {
    auto it = out_.modules.find(name);
    if (it == out_.modules.end()) err_at(at, "a bound module name ('" + name + "' is undefined)");
    return it->second;
  }

  void bind_name(const std::string& name, const Token& at) {
    if (out_.rings.count(name) || out_.ideals.count(name) || out_.modules.count(name))
      err_at(at, "a fresh name ('" + name + "' is already bound)");
  }

  // ===== polynomial expressions =====

  Poly parse_poly(const RingPtr& ring) {
    Poly acc = parse_poly_term(ring);
    while (peek_is("+") || peek_is("-")) {
      bool plus = lx_.take().text == "+";
      Poly t = parse_poly_term(ring);
      acc = plus ? acc + t : acc - t;
    }
    return acc;
  }

  Poly parse_poly_term(const RingPtr& ring) {
    Poly acc = parse_poly_factor(ring);
    while (peek_is("*")) {
      lx_.take();
      acc = acc * parse_poly_factor(ring);
    }
    return acc;
  }

  Poly parse_poly_factor(const RingPtr& ring) {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::punct && t.text == "-") {
      lx_.take();
      return parse_poly_factor(ring).negate();
    }
    if (t.kind == Token::Kind::punct && t.text == "(") {
      lx_.take();
      Poly p = parse_poly(ring);
      expect_punct(")");
      return p;
    }
    if (t.kind == Token::Kind::integer) {
      Token num = lx_.take();
      Coeff c(static_cast<long>(num.value));
      if (peek_is("/")) {
        lx_.take();
        int den = expect_int("a denominator");
        if (den == 0) err_at(num, "a nonzero denominator");
        c = Coeff(static_cast<long>(num.value), static_cast<long>(den));
      }
      return Poly::constant(ring, c);
    }
    if (t.kind == Token::Kind::ident) {
      Token v = lx_.take();
      auto idx = ring->var_index(v.text);
      if (!idx) err_at(v, "a variable of the current ring");
      Poly p = var_poly(ring, *idx);
      if (peek_is("^")) {
        lx_.take();
        int e = expect_int("an exponent");
        Poly acc = Poly::constant(ring, ring->field().one());
        for (int k = 0; k < e; ++k) acc = acc * p;
        return acc;
      }
      return p;
    }
    err_at(t, "a polynomial factor");
  }

  // statement ids may contain '-' (def1.1-equiv)
  std::string parse_stmt_id() {
    Token t = expect_ident("a statement id");
    std::string id = t.text;
    while (peek_is("-")) {
      lx_.take();
      id += "-" + expect_ident("the rest of the statement id").text;
    }
    if (!stmt_from_name(id)) err_at(t, "a known statement id ('" + id + "' is not registered)");
    return id;
  }

  void semantic_check_poly(const Poly& p, const Token& at, int index) {
    if (!p.is_zero() && !p.homogeneous_degree()) {
      std::ostringstream os;
      os << at.line << ":" << at.col << ": inhomogeneous generator #" << index << " ("
         << p.str() << ")";
      fail_parse(os.str());
    }
  }

  void statement() {
    Token head = expect_ident("a statement keyword");
    Stmt st;
    st.line = head.line;
    st.col = head.col;
    const std::string& kw = head.text;

    if (kw == "ring") {
      Token nm = expect_ident("a ring name");
      bind_name(nm.text, nm);
      st.name = nm.text;
      expect_punct("=");
      if (peek_is("poly")) {
        parse_ring_poly(st);
      } else {
        parse_ring_quot(st);
      }
    } else if (kw == "ideal") {
      parse_ideal(st);
    } else if (kw == "module") {
      parse_module(st);
    } else if (kw == "invariants") {
      st.kind = Stmt::Kind::invariants;
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      if (peek_is("vs")) {
        lx_.take();
        Token n2 = expect_ident("a module name");
        lookup_module(n2.text, n2);
        st.arg2 = n2.text;
      }
      expect_punct(";");
    } else if (kw == "ext" || kw == "tor") {
      st.kind = kw == "ext" ? Stmt::Kind::ext : Stmt::Kind::tor;
      st.iarg = expect_int("a cohomological index");
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      Token n2 = expect_ident("a module name");
      lookup_module(n2.text, n2);
      st.arg2 = n2.text;
      expect_punct(";");
    } else if (kw == "grade") {
      st.kind = Stmt::Kind::grade;
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      Token n2 = expect_ident("a module name");
      lookup_module(n2.text, n2);
      st.arg2 = n2.text;
      expect_punct(";");
    } else if (kw == "serre") {
      st.kind = Stmt::Kind::serre;
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      st.iarg = expect_int("the Serre index k");
      expect_punct(";");
    } else if (kw == "gdim") {
      st.kind = Stmt::Kind::gdim;
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      expect_punct(";");
    } else if (kw == "canonical") {
      st.kind = Stmt::Kind::canonical;
      Token r = expect_ident("a ring name");
      lookup_ring(r.text, r);
      st.name = r.text;
      expect_punct(";");
    } else if (kw == "check") {
      st.kind = Stmt::Kind::check;
      st.stmt_ids.push_back(parse_stmt_id());
      Token m = expect_ident("a module name");
      lookup_module(m.text, m);
      st.name = m.text;
      if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text != "n") {
        Token n2 = lx_.take();
        lookup_module(n2.text, n2);
        st.arg2 = n2.text;
      }
      if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text == "n") {
        lx_.take();
        expect_punct("=");
        st.nparam = expect_int("the parameter n");
      }
      StmtId id = *stmt_from_name(st.stmt_ids[0]);
      if (stmt_needs_second_module(id) && st.arg2.empty())
        err_at(head, "a second module (statement " + st.stmt_ids[0] + " needs one)");
      if (stmt_needs_param_n(id) && !st.nparam)
        err_at(head, "a parameter n=<k> (statement " + st.stmt_ids[0] + " needs one)");
      expect_punct(";");
    } else if (kw == "campaign") {
      st.kind = Stmt::Kind::campaign;
      st.stmt_ids.push_back(parse_stmt_id());
      while (peek_is(",")) {
        lx_.take();
        st.stmt_ids.push_back(parse_stmt_id());
      }
      expect_kw("seed");
      expect_punct("=");
      st.seed = static_cast<uint64_t>(expect_int("a seed"));
      expect_kw("count");
      expect_punct("=");
      st.count = expect_int("a count");
      expect_kw("vars");
      expect_punct("=");
      st.cvars = expect_int("a variable count");
      expect_punct(";");
    } else {
      err_at(head, "one of ring/ideal/module/invariants/ext/tor/grade/serre/gdim/canonical/check/campaign");
    }
    out_.stmts.push_back(std::move(st));
  }

  void parse_ring_poly(Stmt& st) {
    st.kind = Stmt::Kind::ring_poly;
    expect_kw("poly");
    expect_punct("(");
    Token f = expect_ident("a coefficient field (Q or Fp)");
    if (f.text == "Q") {
      st.field = Field::rationals();
    } else if (f.text == "Fp") {
      expect_punct("(");
      int p = expect_int("a prime");
      expect_punct(")");
      st.field = Field::prime(static_cast<uint32_t>(p));
    } else {
      err_at(f, "Q or Fp(<p>)");
    }
    expect_punct(";");
    for (;;) {
      Token v = expect_ident("a variable name");
      st.vars.push_back(v.text);
      int w = 1;
      if (peek_is("=")) {
        lx_.take();
        w = expect_int("a positive weight");
      }
      st.weights.push_back(w);
      if (peek_is(",")) {
        lx_.take();
        continue;
      }
      break;
    }
    expect_punct(")");
    if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text == "order") {
      lx_.take();
      Token o = expect_ident("lex, grlex or grevlex");
      if (o.text == "lex")
        st.order = TermOrder::lex;
      else if (o.text == "grlex")
        st.order = TermOrder::grlex;
      else if (o.text == "grevlex")
        st.order = TermOrder::grevlex;
      else
        err_at(o, "lex, grlex or grevlex");
      st.order_explicit = true;
    }
    expect_punct(";");

    RingPtr S;
    try {
      S = PolyRing::make(*st.field, st.vars, st.order, st.weights);
    } catch (const Error& e) {
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) + ": " + e.what());
    }
    out_.rings[st.name] = QRing::ambient_of(S);
    last_ring_ = st.name;
  }

  void parse_ring_quot(Stmt& st) {
    st.kind = Stmt::Kind::ring_quot;
    Token b = expect_ident("a ring name");
    QRingPtr base = lookup_ring(b.text, b);
    st.base = b.text;
    expect_punct("/");
    Token i = expect_ident("an ideal name");
    auto it = out_.ideals.find(i.text);
    if (it == out_.ideals.end()) err_at(i, "a bound ideal name ('" + i.text + "' is undefined)");
    st.ideal = i.text;
    expect_punct(";");

    if (!base->is_ambient())
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) +
                 ": the base of a quotient must be a polynomial ring");
    if (out_.ideal_ring[i.text] != st.base)
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) + ": ideal " + i.text +
                 " lives over ring " + out_.ideal_ring[i.text] + ", not " + st.base);
    try {
      out_.rings[st.name] = QRing::make(base->poly_ring(), it->second);
    } catch (const Error& e) {
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) + ": " + e.what());
    }
    last_ring_ = st.name;
  }

  void parse_ideal(Stmt& st) {
    st.kind = Stmt::Kind::ideal_decl;
    Token nm = expect_ident("an ideal name");
    bind_name(nm.text, nm);
    st.name = nm.text;
    expect_punct("=");
    if (last_ring_.empty())
      err_at(nm, "a preceding ring declaration (ideals bind to the most recent ring)");
    st.ring_ref = last_ring_;
    QRingPtr R = out_.rings[last_ring_];
    expect_punct("(");
    if (!peek_is(")")) {
      for (;;) {
        Token at = lx_.peek();
        Poly p = parse_poly(R->poly_ring());
        semantic_check_poly(p, at, static_cast<int>(st.polys.size()));
        st.polys.push_back(std::move(p));
        if (peek_is(",")) {
          lx_.take();
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    expect_punct(";");
    out_.ideals[st.name] = st.polys;
    out_.ideal_ring[st.name] = st.ring_ref;
  }

  void parse_module(Stmt& st) {
    st.kind = Stmt::Kind::module_decl;
    Token nm = expect_ident("a module name");
    bind_name(nm.text, nm);
    st.name = nm.text;
    expect_punct("=");
    expect_kw("coker");
    Token r = expect_ident("a ring name");
    QRingPtr R = lookup_ring(r.text, r);
    st.ring_ref = r.text;

    expect_punct("[");
    for (;;) {
      expect_punct("[");
      std::vector<Poly> row;
      if (!peek_is("]")) {
        for (;;) {
          Token at = lx_.peek();
          Poly p = parse_poly(R->poly_ring());
          semantic_check_poly(p, at, static_cast<int>(row.size()));
          row.push_back(std::move(p));
          if (peek_is(",")) {
            lx_.take();
            continue;
          }
          break;
        }
      }
      expect_punct("]");
      st.rows.push_back(std::move(row));
      if (peek_is(",")) {
        lx_.take();
        continue;
      }
      break;
    }
    expect_punct("]");
    if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text == "degrees") {
      lx_.take();
      expect_punct("[");
      std::vector<int> degs;
      for (;;) {
        bool neg = false;
        if (peek_is("-")) {
          lx_.take();
          neg = true;
        }
        int v = expect_int("a degree");
        degs.push_back(neg ? -v : v);
        if (peek_is(",")) {
          lx_.take();
          continue;
        }
        break;
      }
      expect_punct("]");
      st.degrees = std::move(degs);
    }
    expect_punct(";");

    const size_t nrows = st.rows.size();
    size_t ncols = st.rows.empty() ? 0 : st.rows[0].size();
    for (const auto& row : st.rows)
      if (row.size() != ncols)
        fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) +
                   ": ragged matrix rows");
    PolyMatrix m = PolyMatrix::zero(static_cast<int>(nrows), static_cast<int>(ncols));
    for (size_t i = 0; i < nrows; ++i)
      for (size_t j = 0; j < ncols; ++j) m.at((int)i, (int)j) = st.rows[i][j];
    std::vector<int> rowdegs =
        st.degrees ? *st.degrees : std::vector<int>(nrows, 0);
    if (rowdegs.size() != nrows)
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) +
                 ": degrees list does not match the row count");
    try {
      out_.modules[st.name] = Module::make(R, rowdegs, std::move(m));
    } catch (const Error& e) {
      fail_parse(std::to_string(st.line) + ":" + std::to_string(st.col) + ": " + e.what());
    }
  }

  Lexer lx_;
  Script out_;
  std::string last_ring_;
};

}  // namespace

Script parse_script(const std::string& text) { return Parser(text).run(); }

// ===== printing =====

namespace {
std::string print_stmt(const Stmt& st) {
  std::ostringstream os;
  switch (st.kind) {
    case Stmt::Kind::ring_poly: {
      os << "ring " << st.name << " = poly(" << st.field->describe() << "; ";
      for (size_t i = 0; i < st.vars.size(); ++i) {
        if (i) os << ", ";
        os << st.vars[i];
        if (st.weights[i] != 1) os << "=" << st.weights[i];
      }
      os << ")";
      if (st.order_explicit) os << " order " << order_name(st.order);
      os << ";";
      break;
    }
    case Stmt::Kind::ring_quot:
      os << "ring " << st.name << " = " << st.base << " / " << st.ideal << ";";
      break;
    case Stmt::Kind::ideal_decl: {
      os << "ideal " << st.name << " = (";
      for (size_t i = 0; i < st.polys.size(); ++i) {
        if (i) os << ", ";
        os << st.polys[i].str();
      }
      os << ");";
      break;
    }
    case Stmt::Kind::module_decl: {
      os << "module " << st.name << " = coker " << st.ring_ref << " [";
      for (size_t i = 0; i < st.rows.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < st.rows[i].size(); ++j) {
          if (j) os << ", ";
          os << st.rows[i][j].str();
        }
        os << "]";
      }
      os << "]";
      if (st.degrees) {
        os << " degrees [";
        for (size_t i = 0; i < st.degrees->size(); ++i) {
          if (i) os << ", ";
          os << (*st.degrees)[i];
        }
        os << "]";
      }
      os << ";";
      break;
    }
    case Stmt::Kind::invariants:
      os << "invariants " << st.name;
      if (!st.arg2.empty()) os << " vs " << st.arg2;
      os << ";";
      break;
    case Stmt::Kind::ext: os << "ext " << st.iarg << " " << st.name << " " << st.arg2 << ";"; break;
    case Stmt::Kind::tor: os << "tor " << st.iarg << " " << st.name << " " << st.arg2 << ";"; break;
    case Stmt::Kind::grade: os << "grade " << st.name << " " << st.arg2 << ";"; break;
    case Stmt::Kind::serre: os << "serre " << st.name << " " << st.iarg << ";"; break;
    case Stmt::Kind::gdim: os << "gdim " << st.name << ";"; break;
    case Stmt::Kind::canonical: os << "canonical " << st.name << ";"; break;
    case Stmt::Kind::check:
      os << "check " << st.stmt_ids[0] << " " << st.name;
      if (!st.arg2.empty()) os << " " << st.arg2;
      if (st.nparam) os << " n=" << *st.nparam;
      os << ";";
      break;
    case Stmt::Kind::campaign: {
      os << "campaign ";
      for (size_t i = 0; i < st.stmt_ids.size(); ++i) {
        if (i) os << ",";
        os << st.stmt_ids[i];
      }
      os << " seed=" << st.seed << " count=" << st.count << " vars=" << st.cvars << ";";
      break;
    }
  }
  return os.str();
}
}  // namespace

std::string print_script(const Script& s) {
  std::ostringstream os;
  for (const auto& st : s.stmts) os << print_stmt(st) << "\n";
  return os.str();
}

bool Stmt::operator==(const Stmt& o) const {
  if (kind != o.kind || name != o.name) return false;
  auto fields_eq = [&] {
    if (field.has_value() != o.field.has_value()) return false;
    if (field && !(*field == *o.field)) return false;
    return true;
  };
  switch (kind) {
    case Kind::ring_poly:
      return fields_eq() && vars == o.vars && weights == o.weights && order == o.order &&
             order_explicit == o.order_explicit;
    case Kind::ring_quot: return base == o.base && ideal == o.ideal;
    case Kind::ideal_decl: return ring_ref == o.ring_ref && polys == o.polys;
    case Kind::module_decl:
      return ring_ref == o.ring_ref && rows == o.rows && degrees == o.degrees;
    case Kind::invariants: return arg2 == o.arg2;
    case Kind::ext:
    case Kind::tor: return iarg == o.iarg && arg2 == o.arg2;
    case Kind::grade: return arg2 == o.arg2;
    case Kind::serre: return iarg == o.iarg;
    case Kind::gdim:
    case Kind::canonical: return true;
    case Kind::check: return stmt_ids == o.stmt_ids && arg2 == o.arg2 && nparam == o.nparam;
    case Kind::campaign:
      return stmt_ids == o.stmt_ids && seed == o.seed && count == o.count && cvars == o.cvars;
  }
  return false;
}

bool Script::operator==(const Script& o) const {
  if (stmts.size() != o.stmts.size()) return false;
  for (size_t i = 0; i < stmts.size(); ++i)
    if (!(stmts[i] == o.stmts[i])) return false;
  return true;
}

}  // namespace cmw

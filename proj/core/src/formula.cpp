#include "modal/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "modal/errors.hpp"

namespace modal {

Formula Formula::make(Kind k, std::string name, const Formula& l, const Formula& r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->left = l.node_;
  n->right = r.node_;
  return Formula(std::move(n));
}

Formula Formula::top() { return make(Kind::Top, "", {}, {}); }
Formula Formula::bottom() { return make(Kind::Bottom, "", {}, {}); }
Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}, {}); }
Formula Formula::nvar(std::string name) { return make(Kind::NegVar, std::move(name), {}, {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, "", a, b); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, "", a, b); }
Formula Formula::box(Formula a) { return make(Kind::Box, "", a, {}); }
Formula Formula::dia(Formula a) { return make(Kind::Diamond, "", a, {}); }

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  int ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return 0;
    case Kind::Var:
    case Kind::NegVar:
      return a.name().compare(b.name());
    case Kind::Box:
    case Kind::Diamond:
      return compare(a.child(), b.child());
    case Kind::And:
    case Kind::Or: {
      int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
  }
  return 0;
}

namespace {

int precedence(Kind k) {
  switch (k) {
    case Kind::And: return 2;
    case Kind::Or: return 1;
    default: return 3;  // atoms and unary operators bind tightest
  }
}

void print(const Formula& f, std::string& out) {
  auto bracketed = [&out](const Formula& g, int parent_prec) {
    bool need = precedence(g.kind()) <= parent_prec && g.kind() != Kind::Box &&
                g.kind() != Kind::Diamond && precedence(g.kind()) < 3;
    if (need) out += '(';
    print(g, out);
    if (need) out += ')';
  };
  switch (f.kind()) {
    case Kind::Top: out += "true"; break;
    case Kind::Bottom: out += "false"; break;
    case Kind::Var: out += f.name(); break;
    case Kind::NegVar: out += '~'; out += f.name(); break;
    case Kind::Box: out += "[]"; bracketed(f.child(), 2); break;
    case Kind::Diamond: out += "<>"; bracketed(f.child(), 2); break;
    case Kind::And: {
      // left child may share precedence (left association); right may not
      bool lp = precedence(f.left().kind()) < 2;
      bool rp = precedence(f.right().kind()) <= 2;
      if (lp) out += '(';
      print(f.left(), out);
      if (lp) out += ')';
      out += " & ";
      if (rp) out += '(';
      print(f.right(), out);
      if (rp) out += ')';
      break;
    }
    case Kind::Or: {
      bool rp = precedence(f.right().kind()) <= 1;
      print(f.left(), out);
      out += " | ";
      if (rp) out += '(';
      print(f.right(), out);
      if (rp) out += ')';
      break;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, out);
  return out;
}

Formula negate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return Formula::bottom();
    case Kind::Bottom: return Formula::top();
    case Kind::Var: return Formula::nvar(f.name());
    case Kind::NegVar: return Formula::var(f.name());
    case Kind::And: return Formula::disj(negate(f.left()), negate(f.right()));
    case Kind::Or: return Formula::conj(negate(f.left()), negate(f.right()));
    case Kind::Box: return Formula::dia(negate(f.child()));
    case Kind::Diamond: return Formula::box(negate(f.child()));
  }
  return Formula::bottom();
}

int md(const Formula& f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::Or:
      return std::max(md(f.left()), md(f.right()));
    case Kind::Box:
    case Kind::Diamond:
      return md(f.child()) + 1;
    default:
      return 0;
  }
}

VarSet vars(const Formula& f) {
  VarSet out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Kind::Var:
      case Kind::NegVar:
        out.insert(g.name());
        break;
      case Kind::And:
      case Kind::Or:
        walk(g.left());
        walk(g.right());
        break;
      case Kind::Box:
      case Kind::Diamond:
        walk(g.child());
        break;
      default:
        break;
    }
  };
  walk(f);
  return out;
}

std::set<Formula> sub(const Formula& f) {
  std::set<Formula> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (!out.insert(g).second) return;
    switch (g.kind()) {
      case Kind::And:
      case Kind::Or:
        walk(g.left());
        walk(g.right());
        break;
      case Kind::Box:
      case Kind::Diamond:
        walk(g.child());
        break;
      default:
        break;
    }
  };
  walk(f);
  return out;
}

std::set<Formula> closure(const Formula& f) {
  std::set<Formula> out = sub(f);
  for (const Formula& g : sub(f)) out.insert(negate(g));
  return out;
}

std::set<Formula> closure_at_depth(const Formula& f, int d) {
  std::set<Formula> out;
  for (const Formula& g : closure(f))
    if (md(g) <= d) out.insert(g);
  return out;
}

std::size_t size(const Formula& f) { return sub(f).size(); }

Formula big_and(const std::set<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  auto it = fs.rbegin();
  Formula out = *it;
  for (++it; it != fs.rend(); ++it) out = Formula::conj(*it, out);
  return out;
}

Formula big_or(const std::set<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  auto it = fs.rbegin();
  Formula out = *it;
  for (++it; it != fs.rend(); ++it) out = Formula::disj(*it, out);
  return out;
}

Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::conj(fs[i], out);
  return out;
}

Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::disj(fs[i], out);
  return out;
}

Formula conj_of_vars(const VarSet& p) {
  std::set<Formula> fs;
  for (const auto& v : p) fs.insert(Formula::var(v));
  return big_and(fs);
}

std::optional<Formula> known_complete_formula(const Logic& l, const VarSet& p) {
  Formula base = conj_of_vars(p);
  auto with_base = [&](Formula modal_part) {
    return p.empty() ? modal_part : Formula::conj(base, modal_part);
  };
  if (l.has_5) return with_base(Formula::dia(Formula::box(base)));
  if (l.has_4) {
    if (l.has_D || l.has_T) return with_base(Formula::box(base));
    return with_base(Formula::box(Formula::bottom()));
  }
  if (l.has_D || l.has_T) {
    if (!p.empty()) return std::nullopt;  // no satisfiable complete formula
    return Formula::top();
  }
  return with_base(Formula::box(Formula::bottom()));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { End, True, False, Ident, Not, And, Or, Implies, Iff, BoxT, DiaT, LParen, RParen };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, tok_pos); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    auto starts = [&](std::string_view s) { return text.substr(pos, s.size()) == s; };
    if (starts("<->")) { tok = Tok::Iff; pos += 3; return; }
    if (starts("->")) { tok = Tok::Implies; pos += 2; return; }
    if (starts("<>")) { tok = Tok::DiaT; pos += 2; return; }
    if (starts("[]")) { tok = Tok::BoxT; pos += 2; return; }
    switch (c) {
      case '~': tok = Tok::Not; ++pos; return;
      case '&': tok = Tok::And; ++pos; return;
      case '|': tok = Tok::Or; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      ident = std::string(text.substr(start, pos - start));
      if (ident == "true") tok = Tok::True;
      else if (ident == "false") tok = Tok::False;
      else tok = Tok::Ident;
      return;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos);
  }
};

// Recursive descent; Not/Implies/Iff are eliminated on the way out, so the
// returned trees are already in NNF.
struct Parser {
  Lexer lx;

  explicit Parser(std::string_view t) : lx(t) {}

  Formula parse_iff() {
    Formula a = parse_implies();
    if (lx.tok == Tok::Iff) {
      lx.advance();
      Formula b = parse_iff();
      return Formula::conj(Formula::disj(negate(a), b), Formula::disj(negate(b), a));
    }
    return a;
  }

  Formula parse_implies() {
    Formula a = parse_or();
    if (lx.tok == Tok::Implies) {
      lx.advance();
      Formula b = parse_implies();  // right-associative
      return Formula::disj(negate(a), b);
    }
    return a;
  }

  Formula parse_or() {
    Formula a = parse_and();
    while (lx.tok == Tok::Or) {
      lx.advance();
      a = Formula::disj(a, parse_and());
    }
    return a;
  }

  Formula parse_and() {
    Formula a = parse_unary();
    while (lx.tok == Tok::And) {
      lx.advance();
      a = Formula::conj(a, parse_unary());
    }
    return a;
  }

  Formula parse_unary() {
    switch (lx.tok) {
      case Tok::Not: lx.advance(); return negate(parse_unary());
      case Tok::BoxT: lx.advance(); return Formula::box(parse_unary());
      case Tok::DiaT: lx.advance(); return Formula::dia(parse_unary());
      case Tok::True: lx.advance(); return Formula::top();
      case Tok::False: lx.advance(); return Formula::bottom();
      case Tok::Ident: {
        Formula v = Formula::var(lx.ident);
        lx.advance();
        return v;
      }
      case Tok::LParen: {
        std::size_t open = lx.tok_pos;
        lx.advance();
        Formula a = parse_iff();
        if (lx.tok != Tok::RParen) throw parse_error("unbalanced parenthesis", open);
        lx.advance();
        return a;
      }
      case Tok::End: lx.fail("unexpected end of input");
      default: lx.fail("unexpected token");
    }
  }
};

}  // namespace

Formula parse(std::string_view text) {
  Parser p(text);
  if (p.lx.tok == Tok::End) throw parse_error("empty input", 0);
  Formula f = p.parse_iff();
  if (p.lx.tok != Tok::End) p.lx.fail("trailing input");
  return f;
}

}  // namespace modal

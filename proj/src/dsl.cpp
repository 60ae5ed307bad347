#include "qv/dsl.hpp"

#include <cctype>
#include <sstream>

namespace qv {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }
  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      cur_ = {Tok::End, "", line_, col};
      return;
    }
    char ch = s_[pos_];
    if (s_.compare(pos_, 3, "(x)") == 0) {
      cur_ = {Tok::Tensor, "(x)", line_, col};
      pos_ += 3;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = pos_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      cur_ = {Tok::Ident, s_.substr(pos_, j - pos_), line_, col};
      pos_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = pos_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      cur_ = {Tok::Number, s_.substr(pos_, j - pos_), line_, col};
      pos_ = j;
      return;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(line_, col, std::string("unexpected character '") + ch + "'");
    }
    cur_ = {k, std::string(1, ch), line_, col};
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_;
  Token cur_;
};

int max_leg(const Poly& p) {
  int m = -1;
  for (const auto& [w, c] : p.terms())
    for (const Letter& l : w.ls) m = std::max(m, static_cast<int>(l.leg));
  return m;
}

Poly shift_poly_legs(const Poly& p, int shift) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Word nw = w;
    for (Letter& l : nw.ls) l.leg = static_cast<uint8_t>(l.leg + shift);
    nw.canonicalize();
    out.add_term(nw, c);
  }
  return out;
}

bool is_scalar(const Poly& p) {
  for (const auto& [w, c] : p.terms())
    if (!w.is_unit()) return false;
  return true;
}

Coeff scalar_value(const Poly& p) {
  Coeff v;
  for (const auto& [w, c] : p.terms()) v = v + c;
  return v;
}

class ExprParser {
 public:
  ExprParser(Lexer& lx, const Presentation& pres) : lx_(lx), pres_(pres) {}

  Poly parse() {
    Poly p = expr();
    if (lx_.peek().kind != Tok::End)
      throw ParseError(lx_.peek().line, lx_.peek().col,
                       "unexpected token '" + lx_.peek().text + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly p = tensor();
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      bool plus = lx_.next().kind == Tok::Plus;
      Poly r = tensor();
      p = plus ? p + r : p - r;
    }
    return p;
  }

  Poly tensor() {
    Poly p = product();
    // legs are positional: a scalar operand still occupies a slot
    int legs = std::max(max_leg(p) + 1, 1);
    while (lx_.peek().kind == Tok::Tensor) {
      lx_.next();
      Poly r = product();
      p = p * shift_poly_legs(r, legs);
      legs = std::max(legs + 1, max_leg(p) + 1);
    }
    return p;
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Ident || k == Tok::Number || k == Tok::LParen;
  }

  Poly product() {
    Poly p = unary();
    while (true) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Star) {
        lx_.next();
        p = p * unary();
      } else if (k == Tok::Slash) {
        Token t = lx_.next();
        Poly r = unary();
        if (!is_scalar(r))
          throw ParseError(t.line, t.col, "division only by scalar expressions");
        p = p.scaled(scalar_value(r).inv());
      } else if (starts_factor(k)) {
        p = p * unary();  // juxtaposition
      } else {
        break;
      }
    }
    return p;
  }

  Poly unary() {
    if (lx_.peek().kind == Tok::Minus) {
      lx_.next();
      return -unary();
    }
    return postfix();
  }

  Poly postfix() {
    Poly p = atom();
    while (lx_.peek().kind == Tok::Caret) {
      Token caret = lx_.next();
      if (lx_.peek().kind == Tok::Star) {
        lx_.next();
        p = p.adjoint();
        continue;
      }
      int sign = 1;
      if (lx_.peek().kind == Tok::Minus) {
        lx_.next();
        sign = -1;
      }
      if (lx_.peek().kind != Tok::Number)
        throw ParseError(caret.line, caret.col, "expected exponent or * after ^");
      int e = std::stoi(lx_.next().text);
      if (sign < 0) {
        if (!is_scalar(p))
          throw ParseError(caret.line, caret.col,
                           "negative exponents only on scalar expressions");
        Coeff v = scalar_value(p).inv();
        Poly r = Poly::constant(v);
        Poly acc = Poly::one();
        for (int i = 0; i < e; ++i) acc = acc * r;
        p = acc;
      } else {
        Poly acc = Poly::one();
        for (int i = 0; i < e; ++i) acc = acc * p;
        p = acc;
      }
    }
    return p;
  }

  Poly atom() {
    Token t = lx_.next();
    switch (t.kind) {
      case Tok::Number: {
        ZPoly z{BigInt(t.text)};
        return Poly::constant(Coeff(QScalar(std::move(z), ZPoly::one())));
      }
      case Tok::Ident: {
        if (t.text == "q") return Poly::constant(Coeff(QScalar::qpow(1)));
        if (t.text == "i") return Poly::constant(Coeff(QScalar(0), QScalar(1)));
        int g = pres_.gen_index(t.text);
        if (g < 0)
          throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
        return Poly::gen(g);
      }
      case Tok::LParen: {
        Poly p = expr();
        if (lx_.peek().kind != Tok::RParen)
          throw ParseError(lx_.peek().line, lx_.peek().col, "expected ')'");
        lx_.next();
        return p;
      }
      default:
        throw ParseError(t.line, t.col, "expected identifier, number or '('");
    }
  }

  Lexer& lx_;
  const Presentation& pres_;
};

Poly parse_expr_line(const std::string& text, int line, const Presentation& pres) {
  Lexer lx(text, line);
  ExprParser ep(lx, pres);
  return ep.parse();
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Poly parse_expression(const std::string& src, const Presentation& pres) {
  return parse_expr_line(src, 1, pres);
}

ParsedSpec parse_algebra_spec(const std::string& src, const PresResolver& resolver) {
  ParsedSpec out;
  std::istringstream is(src);
  std::string raw;
  int lineno = 0;
  enum class Sec { None, Generators, Relations, Comult, Counit, Coaction, Map };
  Sec sec = Sec::None;
  ParsedMap* cur_map = nullptr;
  const Presentation* map_env = nullptr;
  std::vector<std::string> coaction_slots = {"n11", "n12", "n21", "n22"};

  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (size_t h = line.find('#'); h != std::string::npos) line = strip(line.substr(0, h));
    if (line.empty()) continue;

    auto starts = [&](const char* kw) {
      return line.rfind(kw, 0) == 0;
    };
    if (starts("GENERATORS:")) {
      sec = Sec::Generators;
      std::istringstream gs(line.substr(11));
      std::string g;
      while (gs >> g) {
        if (out.pres.gen_index(g) >= 0)
          throw ParseError(lineno, 1, "duplicate generator '" + g + "'");
        out.pres.gens.push_back({g});
      }
      continue;
    }
    if (starts("RELATIONS:")) { sec = Sec::Relations; continue; }
    if (starts("COMULT:")) {
      sec = Sec::Comult;
      out.pres.comult.emplace(out.pres.gens.size());
      continue;
    }
    if (starts("COUNIT:")) {
      sec = Sec::Counit;
      out.pres.counit.emplace(out.pres.gens.size());
      continue;
    }
    if (starts("COACTION:")) { sec = Sec::Coaction; out.pres.coaction.emplace(); continue; }
    if (starts("MAP")) {
      sec = Sec::Map;
      std::string rest = strip(line.substr(3));
      if (!rest.empty() && rest.back() == ':') rest.pop_back();
      std::istringstream ms(rest);
      std::string nm, arrow, tgt;
      ms >> nm >> arrow >> tgt;
      out.maps.push_back({nm, tgt, std::vector<Poly>(out.pres.gens.size())});
      cur_map = &out.maps.back();
      if (tgt.empty() || tgt == "self") {
        map_env = &out.pres;
      } else {
        if (!resolver) throw ParseError(lineno, 1, "MAP target requires a resolver");
        map_env = &resolver(tgt);
      }
      continue;
    }

    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, 1, "expected 'name: expression'");
    std::string key = strip(line.substr(0, colon));
    std::string body = strip(line.substr(colon + 1));

    switch (sec) {
      case Sec::Relations: {
        out.pres.relations.push_back(parse_expr_line(body, lineno, out.pres));
        out.pres.relation_names.push_back(key);
        break;
      }
      case Sec::Comult: {
        int g = out.pres.gen_index(key);
        if (g < 0) throw ParseError(lineno, 1, "unknown generator '" + key + "'");
        (*out.pres.comult)[static_cast<size_t>(g)] = parse_expr_line(body, lineno, out.pres);
        break;
      }
      case Sec::Counit: {
        int g = out.pres.gen_index(key);
        if (g < 0) throw ParseError(lineno, 1, "unknown generator '" + key + "'");
        Poly p = parse_expr_line(body, lineno, out.pres);
        if (!is_scalar(p)) throw ParseError(lineno, 1, "counit value must be scalar");
        (*out.pres.counit)[static_cast<size_t>(g)] = scalar_value(p);
        break;
      }
      case Sec::Coaction: {
        size_t slot = 0;
        for (; slot < coaction_slots.size(); ++slot)
          if (coaction_slots[slot] == key) break;
        if (slot == coaction_slots.size())
          throw ParseError(lineno, 1, "coaction entry must be one of n11,n12,n21,n22");
        (*out.pres.coaction)[slot] = parse_expr_line(body, lineno, out.pres);
        break;
      }
      case Sec::Map: {
        int g = out.pres.gen_index(key);
        if (g < 0) throw ParseError(lineno, 1, "unknown generator '" + key + "'");
        cur_map->images[static_cast<size_t>(g)] = parse_expr_line(body, lineno, *map_env);
        break;
      }
      default:
        throw ParseError(lineno, 1, "content before a section header");
    }
  }
  validate_presentation(out.pres);
  return out;
}

namespace {

std::string word_str(const Word& w, const Presentation& pres, int legs_total) {
  if (w.is_unit() && legs_total <= 1) return "1";
  std::string out;
  int pos = 0;
  int n = static_cast<int>(w.ls.size());
  for (int leg = 0; leg < std::max(legs_total, 1); ++leg) {
    if (leg > 0) out += " (x) ";
    bool any = false;
    while (pos < n && w.ls[static_cast<size_t>(pos)].leg == leg) {
      const Letter& l = w.ls[static_cast<size_t>(pos)];
      if (any) out += " ";
      out += pres.gens[static_cast<size_t>(l.gen)].name;
      if (l.star) out += "^*";
      any = true;
      ++pos;
    }
    if (!any) out += "1";
  }
  return out;
}

}  // namespace

std::string print_poly(const Poly& p, const Presentation& pres) {
  if (p.is_zero()) return "0";
  int legs = max_leg(p) + 1;
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Coeff cc = c;
    std::string sign;
    if (cc.im.is_zero() && !cc.re.is_zero()) {
      // pull an overall minus out of purely real coefficients
      bool neg = cc.re.num().lc() < 0;
      if (neg) cc = -cc;
      sign = neg ? "-" : "+";
    } else {
      sign = "+";
    }
    if (first) {
      if (sign == "-") out += "- ";
      first = false;
    } else {
      out += sign == "-" ? " - " : " + ";
    }
    bool unit_coeff = cc == Coeff(QScalar(1));
    std::string ws = word_str(w, pres, legs);
    if (unit_coeff) {
      out += ws;
    } else {
      out += cc.str();
      if (!(w.is_unit() && legs <= 1)) out += " " + ws;
    }
  }
  return out;
}

std::string print_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << "GENERATORS:";
  for (const auto& g : pres.gens) os << " " << g.name;
  os << "\n\nRELATIONS:\n";
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    std::string nm = i < pres.relation_names.size() ? pres.relation_names[i]
                                                    : "r" + std::to_string(i + 1);
    os << nm << ": " << print_poly(pres.relations[i], pres) << "\n";
  }
  if (pres.comult) {
    os << "\nCOMULT:\n";
    for (size_t g = 0; g < pres.gens.size(); ++g)
      os << pres.gens[g].name << ": " << print_poly((*pres.comult)[g], pres) << "\n";
  }
  if (pres.counit) {
    os << "\nCOUNIT:\n";
    for (size_t g = 0; g < pres.gens.size(); ++g)
      os << pres.gens[g].name << ": " << (*pres.counit)[g].str() << "\n";
  }
  if (pres.coaction) {
    os << "\nCOACTION:\n";
    const char* slots[4] = {"n11", "n12", "n21", "n22"};
    for (int k = 0; k < 4; ++k)
      os << slots[k] << ": " << print_poly((*pres.coaction)[static_cast<size_t>(k)], pres)
         << "\n";
  }
  return os.str();
}

}  // namespace qv

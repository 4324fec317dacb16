#include "paut/format.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

namespace paut {

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> out;
  for (int i = 1; i <= nvars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace {

struct FlatTerm {
  Scalar c;
  int t_exp;
  Monomial m;
};

std::string monomial_text(int t_exp, const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  auto append = [&out](const std::string& base, int e) {
    if (!out.empty()) out += "*";
    out += base;
    if (e != 1) out += "^" + std::to_string(e);
  };
  if (t_exp != 0) append("t", t_exp);
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = m[static_cast<int>(i)];
    if (e != 0) append(names[i], e);
  }
  return out;
}

std::string join_terms(const std::vector<FlatTerm>& terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    std::string cs = t.c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono = monomial_text(t.t_exp, t.m, names);
    if (mono.empty())
      os << cs;
    else if (cs == "1")
      os << mono;
    else
      os << cs << "*" << mono;
  }
  return os.str();
}

}  // namespace

std::string format_poly(const ScalarPoly& p, const std::vector<std::string>& names) {
  auto n = names.empty() ? default_var_names(p.nvars()) : names;
  std::vector<FlatTerm> flat;
  for (const auto& [m, c] : p.terms()) flat.push_back({c, 0, m});
  return join_terms(flat, n);
}

std::string format_poly(const LaurentPoly& p, const std::vector<std::string>& names) {
  auto n = names.empty() ? default_var_names(p.nvars()) : names;
  std::vector<FlatTerm> flat;
  for (const auto& [m, c] : p.terms()) {
    auto ts = c.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) flat.push_back({it->second, it->first, m});
  }
  return join_terms(flat, n);
}

bool involves_t(const LaurentPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c.terms().size() != 1 || c.terms()[0].first != 0) return true;
  }
  return false;
}

ScalarPoly drop_t(const LaurentPoly& p) {
  if (involves_t(p)) throw DomainError("expression depends on t");
  return p.map_coefficients<Scalar>(p.field(), [](const Laurent& c) { return c.coefficient(0); });
}

LaurentPoly lift_t(const ScalarPoly& p) {
  return p.map_coefficients<Laurent>(p.field(), [](const Scalar& c) { return Laurent(c); });
}

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view src, Field f, int nvars, const std::map<std::string, int>& vars, std::size_t offset)
      : src_(src), f_(f), n_(nvars), vars_(vars), offset_(offset) {}

  LaurentPoly parse_all() {
    LaurentPoly r = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

  LaurentPoly expr() {
    skip();
    LaurentPoly acc = term();
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  LaurentPoly constant(const Laurent& c) const { return LaurentPoly::constant(f_, n_, c); }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        bool literal = pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
        LaurentPoly d = unary();
        acc *= invert(d, at, literal);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly invert(const LaurentPoly& d, std::size_t at, bool literal) {
    if (d.is_zero()) {
      pos_ = at;
      if (literal && !src_.substr(at).starts_with("0"))
        fail("literal divisor is zero in " + f_.descriptor());
      fail("division by zero");
    }
    if (!d.is_constant() || !d.leading_term().second.is_unit()) {
      pos_ = at;
      fail("division by a non-unit");
    }
    const auto& [e, c] = d.leading_term().second.terms()[0];
    return constant(Laurent::monomial(c.inverse(), -e));
  }

  LaurentPoly unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentPoly power() {
    std::size_t at = pos_;
    LaurentPoly base = atom();
    skip();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long e = std::stol(std::string(src_.substr(start, pos_ - start)));
    if (e > kMaxExponent) fail("exponent too large");
    if (neg) {
      base = invert(base, at, false);
    }
    return base.pow(static_cast<unsigned>(e));
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly r = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpz_class v(std::string(src_.substr(start, pos_ - start)));
      return constant(Laurent(Scalar(f_, v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "t") return constant(Laurent::monomial(Scalar::one(f_), 1));
      auto it = vars_.find(name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return LaurentPoly::variable(f_, n_, it->second);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  Field f_;
  int n_;
  const std::map<std::string, int>& vars_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::map<std::string, int> standard_vars(int nvars) {
  std::map<std::string, int> vars;
  for (int i = 0; i < nvars; ++i) vars["x" + std::to_string(i + 1)] = i;
  return vars;
}

}  // namespace

LaurentPoly parse_polynomial(std::string_view src, Field f, int nvars, const std::map<std::string, int>& vars) {
  return Parser(src, f, nvars, vars, 0).parse_all();
}

LaurentPoly parse_polynomial(std::string_view src, Field f, int nvars) {
  return parse_polynomial(src, f, nvars, standard_vars(nvars));
}

std::vector<LaurentPoly> parse_tuple(std::string_view src, Field f) {
  std::size_t open = src.find_first_not_of(" \t\r\n");
  if (open == std::string_view::npos) throw ParseError("empty input", 0);
  if (src[open] != '(') throw ParseError("expected '('", open);
  // Split on commas at parenthesis depth one.
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  int depth = 0;
  std::size_t start = open + 1, close = std::string_view::npos;
  for (std::size_t i = open; i < src.size() && close == std::string_view::npos; ++i) {
    char c = src[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth == 0) {
        parts.emplace_back(start, i);
        close = i;
      }
    } else if (c == ',' && depth == 1) {
      parts.emplace_back(start, i);
      start = i + 1;
    }
  }
  if (close == std::string_view::npos) throw ParseError("expected ')'", src.size());
  std::size_t tail = src.find_first_not_of(" \t\r\n", close + 1);
  if (tail != std::string_view::npos) throw ParseError("unexpected text after ')'", tail);
  int n = static_cast<int>(parts.size());
  if (n > kMaxVars) throw ParseError("too many components (at most " + std::to_string(kMaxVars) + ")", open);
  auto vars = standard_vars(n);
  std::vector<LaurentPoly> out;
  for (auto [a, b] : parts) {
    auto piece = src.substr(a, b - a);
    if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty component", a);
    out.push_back(Parser(piece, f, n, vars, a).parse_all());
  }
  return out;
}

}  // namespace paut

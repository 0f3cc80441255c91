#include "algext/poly.hpp"

#include <cctype>
#include <sstream>

namespace algext {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Monomial(nvars)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  MultiPoly p(nvars);
  p.terms_[Monomial::var(nvars, i)] = 1;
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    if (m.degree() > d) d = m.degree();
  return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Monomial(nvars_)); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a;
  p += b;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_ && !o.terms_.empty() && !terms_.empty())
    throw Error(ErrorKind::ShapeMismatch, "polynomial variable counts differ");
  if (terms_.empty()) nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ && !a.terms_.empty() && !b.terms_.empty())
    throw Error(ErrorKind::ShapeMismatch, "polynomial variable counts differ");
  MultiPoly p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly p(a.nvars_);
  if (c == 0) return p;
  for (const auto& [m, v] : a.terms_) p.terms_[m] = c * v;
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (subs.size() != nvars_)
    throw Error(ErrorKind::ShapeMismatch, "one substitution polynomial per variable required");
  std::size_t target = subs.empty() ? 0 : subs[0].num_vars();
  MultiPoly out(target);
  // per-variable power cache for this call
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * subs[i]);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.exp(i) > 0) t = t * power(i, m.exp(i));
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::remap_vars(const std::vector<std::size_t>& var_map,
                                std::size_t new_nvars) const {
  if (var_map.size() != nvars_)
    throw Error(ErrorKind::ShapeMismatch, "one image per variable required");
  MultiPoly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.exp(i) > 0) nm.set_exp(var_map[i], nm.exp(var_map[i]) + m.exp(i));
    out.add_term(nm, c);
  }
  return out;
}

MultiPoly MultiPoly::truncate_above(unsigned bound) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= bound) out.terms_[m] = c;
  return out;
}

MultiPoly MultiPoly::homogeneous_part(unsigned d) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_[m] = c;
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& names;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return p;
  }

  MultiPoly expr() {
    MultiPoly acc = (peek() == '-') ? MultiPoly::constant(names.size(), 0) : term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc += -term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected an exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(text.substr(start, pos - start))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail("unexpected character");
  }

  MultiPoly number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string num = text.substr(start, pos - start);
    if (eat('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator");
      num += "/" + text.substr(dstart, pos - dstart);
    }
    return MultiPoly::constant(names.size(), parse_rational(num));
  }

  MultiPoly ident() {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return MultiPoly::variable(names.size(), i);
    pos = start;
    fail("unknown variable \"" + name + "\"");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
  Parser p{text, var_names};
  return p.parse();
}

std::string poly_string(const MultiPoly& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  if (var_names.size() < p.num_vars())
    throw Error(ErrorKind::ShapeMismatch, "not enough variable names");
  std::ostringstream os;
  bool first = true;
  // leading (largest) term first
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed_coeff = false;
    if (abs != 1 || m.degree() == 0) {
      os << rational_string(abs);
      printed_coeff = true;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (printed_coeff || any_var) os << "*";
      os << var_names[i];
      if (m.exp(i) > 1) os << "^" << m.exp(i);
      any_var = true;
    }
  }
  return os.str();
}

std::vector<std::string> coordinate_names(std::size_t dim, bool doubled) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  if (doubled)
    for (std::size_t i = 1; i <= dim; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

}  // namespace algext

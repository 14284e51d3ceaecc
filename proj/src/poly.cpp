#include "nilrep/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nilrep {

std::string var_name(int v) {
  return (is_y_var(v) ? "y" : "x") + std::to_string(var_index(v));
}

Monomial Monomial::var(int v, int exp) {
  Monomial m;
  if (exp < 0) throw Error("monomial exponents must be nonnegative");
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(int v) const {
  for (auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  return out;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

MonomialOrder::MonomialOrder(std::vector<int> gen_weights) : w_(std::move(gen_weights)) {
  for (int w : w_)
    if (w < 1) throw WeightError("monomial order needs positive weights");
}

MonomialOrder MonomialOrder::unit(int n) {
  return MonomialOrder(std::vector<int>(static_cast<size_t>(n), 1));
}

long MonomialOrder::weight(const Monomial& m) const {
  long w = 0;
  for (auto& [v, e] : m.factors()) {
    int i = var_index(v);
    if (i < 1 || i > generators()) throw IndexError("variable outside the order");
    w += static_cast<long>(e) * w_[static_cast<size_t>(i - 1)];
  }
  return w;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  long wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;  // fewer factors rank higher
  // compare exponents from the highest variable down
  auto ia = a.factors().rbegin(), ib = b.factors().rbegin();
  while (ia != a.factors().rend() && ib != b.factors().rend()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia, ++ib;
  }
  return ia == a.factors().rend() && ib != b.factors().rend();
}

Polynomial Polynomial::constant(Rat c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int v) {
  Polynomial p;
  p.add_term(Monomial::var(v), Rat(1));
  return p;
}

Polynomial Polynomial::monomial(Monomial m, Rat c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Rat Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::depends_on(int v) const {
  for (auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial& Polynomial::add_scaled(const Polynomial& p, const Rat& c) {
  if (c == 0) return *this;
  for (auto& [m, pc] : p.terms_) add_term(m, pc * c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& p) const {
  Polynomial out = *this;
  out += p;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& p) const {
  Polynomial out = *this;
  out -= p;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& p) const {
  Polynomial out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : p.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (auto& [m, tc] : terms_) out.terms_.emplace(m, tc * c);
  return out;
}

long Polynomial::weight(const MonomialOrder& ord) const {
  long w = -1;
  for (auto& [m, c] : terms_) w = std::max(w, ord.weight(m));
  return w;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
  if (is_zero()) throw Error("zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (auto& [m, c] : terms_)
    if (!best || ord.less(*best, m)) best = &m;
  return *best;
}

Rat Polynomial::leading_coeff(const MonomialOrder& ord) const {
  return coeff(leading_monomial(ord));
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& sigma,
                                  PowerCache* cache) const {
  PowerCache local;
  PowerCache& powers = cache ? *cache : local;
  auto power_of = [&](int v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial base;
    auto s = sigma.find(v);
    base = s == sigma.end() ? Polynomial::variable(v) : s->second;
    Polynomial acc = base;
    for (int t = 2; t <= e; ++t) acc = acc * base;
    return powers.emplace(key, std::move(acc)).first->second;
  };

  Polynomial out;
  for (auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(c);
    for (auto& [v, e] : m.factors()) term = term * power_of(v, e);
    out += term;
  }
  return out;
}

Rat Polynomial::evaluate(const std::function<Rat(int)>& point) const {
  Rat total(0);
  for (auto& [m, c] : terms_) {
    Rat v = c;
    for (auto& [var, e] : m.factors()) {
      Rat x = point(var);
      for (int t = 0; t < e; ++t) v *= x;
    }
    total += v;
  }
  return total;
}

std::string Polynomial::str(const MonomialOrder* ord) const {
  if (is_zero()) return "0";
  std::vector<const Monomial*> order;
  order.reserve(terms_.size());
  for (auto& [m, c] : terms_) order.push_back(&m);
  std::sort(order.begin(), order.end(), [&](const Monomial* a, const Monomial* b) {
    return ord ? ord->greater(*a, *b) : (*b < *a);
  });

  std::string s;
  for (const Monomial* m : order) {
    const Rat& c = terms_.at(*m);
    bool neg = c < 0;
    Rat mag = abs(c);
    std::string piece;
    if (m->is_one())
      piece = mag.get_str();
    else if (mag == 1)
      piece = m->str();
    else
      piece = mag.get_str() + "*" + m->str();
    if (s.empty())
      s = (neg ? "-" : "") + piece;
    else
      s += (neg ? " - " : " + ") + piece;
  }
  return s;
}

namespace {

// term := [coef '*'] factor ('*' factor)* | coef ; factor := var ['^' int]
Polynomial parse_term(const std::string& term) {
  Polynomial out = Polynomial::constant(Rat(1));
  std::string piece;
  std::istringstream in(term);
  bool any = false;
  while (std::getline(in, piece, '*')) {
    // strip blanks
    size_t b = piece.find_first_not_of(" \t");
    size_t e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) throw SyntaxError("empty factor in '" + term + "'");
    piece = piece.substr(b, e - b + 1);
    any = true;
    if (piece[0] == 'x' || piece[0] == 'y') {
      size_t caret = piece.find('^');
      std::string idx = piece.substr(1, caret == std::string::npos
                                            ? std::string::npos
                                            : caret - 1);
      int exp = 1;
      if (caret != std::string::npos) {
        try {
          exp = std::stoi(piece.substr(caret + 1));
        } catch (const std::exception&) {
          throw SyntaxError("bad exponent in '" + piece + "'");
        }
      }
      int i = 0;
      try {
        size_t used = 0;
        i = std::stoi(idx, &used);
        if (used != idx.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw SyntaxError("bad variable '" + piece + "'");
      }
      int v = piece[0] == 'y' ? y_var(i) : i;
      out = out * Polynomial::variable(v);
      for (int t = 1; t < exp; ++t) out = out * Polynomial::variable(v);
    } else {
      if (piece.find_first_not_of("-0123456789/") != std::string::npos)
        throw SyntaxError("bad coefficient '" + piece + "'");
      Rat c(piece);
      c.canonicalize();
      out = out.scaled(c);
    }
  }
  if (!any) throw SyntaxError("empty term");
  return out;
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  Polynomial out;
  size_t pos = 0;
  int sign = 1;
  // leading sign
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  std::string term;
  auto flush = [&]() {
    if (term.find_first_not_of(" \t") == std::string::npos)
      throw SyntaxError("empty term in polynomial");
    out += parse_term(term).scaled(Rat(sign));
    term.clear();
  };
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    // top-level +/- separate terms; '-' inside an exponent follows '^'
    if ((ch == '+' || ch == '-') && pos > 0 && text[pos - 1] != '^') {
      flush();
      sign = ch == '-' ? -1 : 1;
    } else {
      term += ch;
    }
  }
  flush();
  return out;
}

Polynomial Polynomial::binomial_in_var(int v, int k) {
  Polynomial out = Polynomial::constant(Rat(1));
  Int fact(1);
  for (int t = 0; t < k; ++t) {
    out = out * (Polynomial::variable(v) - Polynomial::constant(Rat(t)));
    fact *= t + 1;
  }
  return out.scaled(Rat(Int(1), fact));
}

}  // namespace nilrep

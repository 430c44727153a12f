#include "pisotorus/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace pisotorus {

namespace {

template <typename T>
void trim_trailing_zeros(std::vector<T>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

const Int kIntZero = 0;
const Rat kRatZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim_trailing_zeros(coeffs_);
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kIntZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Int& IntPolynomial::leading() const {
  if (coeffs_.empty()) return kIntZero;
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) g = gcd_int(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  if (sign_of(leading()) < 0) g = -g;
  std::vector<Int> c = coeffs_;
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

RatPolynomial IntPolynomial::to_rat() const {
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = Rat(coeffs_[i]);
  return RatPolynomial(std::move(c));
}

// ---------------------------------------------------------------- parsing

namespace {

struct TermParser {
  std::string s;
  size_t pos = 0;

  explicit TermParser(std::string text) : s(std::move(text)) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_start) throw parse_error("expected integer", start);
    return Int(s.substr(start, pos - start));
  }

  // term := [int]['x'['^' int]]
  // Returns (coefficient, exponent).
  std::pair<Int, int> parse_term(int sign) {
    skip_ws();
    size_t start = pos;
    Int coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t d0 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      coeff = Int(s.substr(d0, pos - d0));
      have_coeff = true;
      if (pos < s.size() && s[pos] == '.')
        throw parse_error("non-integer coefficient", pos);
    }
    skip_ws();
    int exponent = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int e = parse_integer();
        if (e < 0) throw parse_error("negative exponent", pos);
        if (e > 64) throw parse_error("exponent too large", pos);
        exponent = static_cast<int>(e.get_si());
      }
    } else if (!have_coeff) {
      throw parse_error("expected term", start);
    }
    if (sign < 0) coeff = -coeff;
    return {coeff, exponent};
  }
};

std::string normalize_unicode_minus(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

IntPolynomial parse_coeff_list(const std::string& text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (close == std::string::npos || close < open)
    throw parse_error("unterminated coefficient list", text.size());
  std::string inner = text.substr(open + 1, close - open - 1);
  std::vector<Int> coeffs;
  std::stringstream ss(inner);
  std::string item;
  size_t offset = open + 1;
  while (std::getline(ss, item, ',')) {
    size_t b = 0, e = item.size();
    while (b < e && std::isspace(static_cast<unsigned char>(item[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(item[e - 1]))) --e;
    std::string tok = item.substr(b, e - b);
    if (tok.empty()) throw parse_error("empty coefficient", offset);
    if (tok.find('.') != std::string::npos || tok.find('/') != std::string::npos)
      throw parse_error("non-integer coefficient", offset);
    try {
      coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw parse_error("malformed coefficient \"" + tok + "\"", offset);
    }
    offset += item.size() + 1;
  }
  if (coeffs.empty()) throw parse_error("empty coefficient list", open);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& raw) {
  std::string text = normalize_unicode_minus(raw);
  // Bracketed form: ascending coefficient list.
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') return parse_coeff_list(text);
    break;
  }

  TermParser p(text);
  std::vector<Int> coeffs;
  auto add_term = [&](const Int& c, int e) {
    if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1, Int(0));
    coeffs[static_cast<size_t>(e)] += c;
  };

  int sign = 1;
  if (p.peek() == '+' || p.peek() == '-') {
    sign = p.peek() == '-' ? -1 : 1;
    ++p.pos;
  }
  auto [c0, e0] = p.parse_term(sign);
  add_term(c0, e0);
  while (!p.eof()) {
    char op = p.peek();
    if (op != '+' && op != '-')
      throw parse_error(std::string("unexpected character '") + op + "'", p.pos);
    ++p.pos;
    auto [c, e] = p.parse_term(op == '-' ? -1 : 1);
    add_term(c, e);
  }
  return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeff(k);
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) out << a.get_str();
    if (k >= 1) {
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

// ------------------------------------------------------------ RatPolynomial

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim_trailing_zeros(coeffs_);
}

const Rat& RatPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kRatZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rat& RatPolynomial::leading() const {
  if (coeffs_.empty()) return kRatZero;
  return coeffs_.back();
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return RatPolynomial();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat& k) const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x *= k;
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x = -x;
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RatPolynomial();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPolynomial(std::move(c));
}

Rat RatPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return RatPolynomial();
  Rat inv = Rat(1) / leading();
  return (*this) * inv;
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divrem(const RatPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem(coeffs_);
  int dd = d.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd < dd) return {RatPolynomial(), *this};
  std::vector<Rat> quot(static_cast<size_t>(rd - dd + 1), Rat(0));
  for (int k = rd; k >= dd; --k) {
    Rat q = rem[static_cast<size_t>(k)] / d.leading();
    if (q == 0) continue;
    quot[static_cast<size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k - dd + j)] -= q * d.coeff(j);
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial RatPolynomial::gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divrem(b);
    (void)q;
    a = std::move(b);
    b = r.monic();  // normalization keeps coefficient growth in check
  }
  return a.monic();
}

std::tuple<RatPolynomial, RatPolynomial, RatPolynomial> RatPolynomial::extended_gcd(
    const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0(std::vector<Rat>{Rat(1)}), s1;
  RatPolynomial t0, t1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPolynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPolynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

RatPolynomial RatPolynomial::squarefree_part() const {
  if (degree() <= 1) return monic();
  RatPolynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  auto [q, r] = divrem(g);
  (void)r;
  return q.monic();
}

IntPolynomial RatPolynomial::to_int_primitive() const {
  if (is_zero()) return IntPolynomial();
  Int l = 1;
  for (const auto& c : coeffs_) l = lcm_int(l, c.get_den());
  std::vector<Int> ints(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    Rat scaled = coeffs_[i] * Rat(l);
    scaled.canonicalize();
    ints[i] = scaled.get_num();
  }
  return IntPolynomial(std::move(ints)).primitive_part();
}

// ------------------------------------------------------------------- Sturm

SturmChain::SturmChain(const IntPolynomial& p) {
  RatPolynomial f = p.to_rat().squarefree_part();
  if (f.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(f);
  if (f.degree() >= 1) {
    chain_.push_back(f.derivative().monic());
    while (chain_.back().degree() >= 1) {
      auto [q, r] = chain_[chain_.size() - 2].divrem(chain_.back());
      (void)q;
      if (r.is_zero()) break;  // cannot happen for squarefree input
      chain_.push_back((-r).monic());
    }
  }
}

int SturmChain::variations_at(const IntervalEnd& x, bool at_minus_infinity) const {
  int variations = 0;
  int prev = 0;
  for (const auto& f : chain_) {
    int s;
    if (x.has_value()) {
      s = sign_of(f.eval(*x));
    } else {
      s = sign_of(f.leading());
      if (at_minus_infinity && f.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmChain::count(const IntervalEnd& lo, const IntervalEnd& hi) const {
  if (lo.has_value() && hi.has_value() && *lo >= *hi) return 0;
  return variations_at(lo, true) - variations_at(hi, false);
}

int sturm_count(const IntPolynomial& p, const IntervalEnd& lo, const IntervalEnd& hi) {
  return SturmChain(p).count(lo, hi);
}

Rat root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rat(1);
  Rat max_ratio = 0;
  Rat lead = Rat(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rat r = Rat(p.coeff(k)) / lead;
    if (r < 0) r = -r;
    if (r > max_ratio) max_ratio = r;
  }
  return Rat(1) + max_ratio;
}

}  // namespace pisotorus

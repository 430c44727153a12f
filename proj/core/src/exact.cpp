#include "pisotorus/exact.hpp"

#include <cctype>
#include <sstream>

namespace pisotorus {

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat mod_one(const Rat& x) {
  Rat r = x - Rat(floor_rat(x));
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

// Replaces the U+2212 minus sign with ASCII '-' so pasted text round-trips.
std::string normalize_minus(const std::string& s) {
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

std::string strip_ws(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Rat decimal_to_rat(const std::string& text) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::string s = text;
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) throw domain_error("malformed exponent in \"" + text + "\"");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw domain_error("malformed exponent in \"" + text + "\"");
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 1000000) throw domain_error("exponent out of range in \"" + text + "\"");
    }
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit || i != s.size())
    throw domain_error("malformed rational \"" + text + "\"");

  Int mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long net = exp10 - frac_len;
  Rat value(mant);
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0)
    value *= Rat(pow10);
  else
    value /= Rat(pow10);
  value.canonicalize();
  return value;
}

}  // namespace

Rat rat_from_string(const std::string& raw) {
  std::string s = strip_ws(normalize_minus(raw));
  if (s.empty()) throw domain_error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = strip_ws(s.substr(0, slash));
    std::string den = strip_ws(s.substr(slash + 1));
    if (num.empty() || den.empty()) throw domain_error("malformed rational \"" + raw + "\"");
    Rat r;
    try {
      r = Rat(Int(num)) / Rat(Int(den));
    } catch (const std::invalid_argument&) {
      throw domain_error("malformed rational \"" + raw + "\"");
    }
    if (Int(den) == 0) throw domain_error("zero denominator in \"" + raw + "\"");
    r.canonicalize();
    return r;
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return decimal_to_rat(s);
  try {
    return Rat(Int(s));
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed rational \"" + raw + "\"");
  }
}

std::vector<Rat> rat_list_from_string(const std::string& raw) {
  std::string s = strip_ws(normalize_minus(raw));
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip_ws(item);
    if (item.empty()) throw domain_error("empty entry in rational list");
    out.push_back(rat_from_string(item));
  }
  if (out.empty()) throw domain_error("empty rational list");
  return out;
}

}  // namespace pisotorus

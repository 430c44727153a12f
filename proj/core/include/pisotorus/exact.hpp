#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pisotorus {

using Int = mpz_class;
using Rat = mpq_class;

/// Math-level rejection (bad input to a construction, e.g. a non-monic
/// defining polynomial). Distinct from programming errors, which use the
/// standard logic_error family.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int lcm_int(const Int& a, const Int& b);
Int gcd_int(const Int& a, const Int& b);

/// Floor of an exact rational.
Int floor_rat(const Rat& x);

/// x reduced into [0, 1).
Rat mod_one(const Rat& x);

/// Canonical string forms: integers as plain decimals, non-integers as "p/q".
std::string rat_to_string(const Rat& x);

/// Inverse of rat_to_string; also accepts decimal literals like "-1.25".
/// Throws domain_error on malformed input.
Rat rat_from_string(const std::string& text);

/// Parses a comma-separated list of rationals, e.g. "1/2, -3, 0.25".
std::vector<Rat> rat_list_from_string(const std::string& text);

}  // namespace pisotorus

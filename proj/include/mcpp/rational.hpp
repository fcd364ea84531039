#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace mcpp {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) after every operation.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline std::string to_string(const Rat& q) { return q.str(); }

// Parses "p", "-p" or "p/q". Rejects decimal floats: exactness is part of
// the interchange contract.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    throw std::invalid_argument("decimal literal not accepted, use p/q: " + s);
  try {
    Rat q(s);
    if (denominator(q) <= 0) throw std::invalid_argument("nonpositive denominator: " + s);
    return q;
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }
inline bool is_zero_one(const Rat& q) { return q == 0 || q == 1; }

// Error taxonomy shared by all modules. The CLI maps these onto exit codes.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mcpp

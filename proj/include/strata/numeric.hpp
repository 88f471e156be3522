#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

/* All arithmetic in the library is exact: Int = arbitrary-precision integer,
   Rat = arbitrary-precision rational (always canonicalized by GMP). */
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/* floor(a/b), b != 0, exact for negatives */
Int floor_div(const Int& a, const Int& b);

Rat dot(const RatVec& a, const RatVec& b);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& v);
bool is_zero(const RatVec& v);

RatVec to_rat(const IntVec& v);

/* "-2/3" <-> Rat; vectors are comma separated: "1/3,0,-2/3" */
Rat parse_rat(const std::string& s);
std::string show_rat(const Rat& q);
RatVec parse_rat_vec(const std::string& s);
std::string show_rat_vec(const RatVec& v);

struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strata

#include "strata/numeric.hpp"

#include <sstream>

namespace strata {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::runtime_error("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const RatVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
  // canonicalize() on a zero denominator raises SIGFPE, so reject it first
  if (q.get_den() == 0) throw std::runtime_error("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string show_rat(const Rat& q) { return q.get_str(); }

RatVec parse_rat_vec(const std::string& s) {
  RatVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
  return v;
}

std::string show_rat_vec(const RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += show_rat(v[i]);
  }
  return s;
}

}  // namespace strata

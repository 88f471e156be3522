#include "strata/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "strata/matrix.hpp"

namespace strata {

int partition_sum(const Partition& p) {
  int s = 0;
  for (int q : p) s += q;
  return s;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition transpose_partition(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.assign(p[0], 0);
  for (int q : p)
    for (int j = 0; j < q; ++j) ++t[j];
  return t;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  assert(partition_sum(a) == partition_sum(b));
  int sa = 0, sb = 0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

int orbit_partition_total(CartanType ct) {
  switch (ct.family) {
    case 'A': return ct.rank + 1;
    case 'B': return 2 * ct.rank + 1;
    case 'C': return 2 * ct.rank;
    case 'D': return 2 * ct.rank;
    default: throw std::invalid_argument("orbit labels require classical type");
  }
}

namespace {

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int q : p) ++m[q];
  return m;
}

bool parity_ok(char family, const Partition& p) {
  for (auto [q, m] : multiplicities(p)) {
    if (family == 'C') {
      if (q % 2 == 1 && m % 2 == 1) return false;
    } else {  // B, D
      if (q % 2 == 0 && m % 2 == 1) return false;
    }
  }
  return true;
}

}  // namespace

bool orbit_partition_valid(CartanType ct, const Partition& p) {
  if (!is_partition(p)) return false;
  if (partition_sum(p) != orbit_partition_total(ct)) return false;
  if (ct.family == 'A') return true;
  return parity_ok(ct.family, p);
}

Partition collapse(char family, Partition p) {
  if (family != 'B' && family != 'C' && family != 'D')
    throw std::invalid_argument("collapse requires family B, C or D");
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  for (;;) {
    int q = 0;
    for (auto [v, m] : multiplicities(p))
      if (m % 2 == 1 && (family == 'C' ? v % 2 == 1 : v % 2 == 0))
        q = std::max(q, v);
    if (q == 0) return p;
    std::size_t i = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] == q) i = j;
    --p[i];
    assert(p[i] >= 1);
    std::size_t j = i + 1;
    while (j < p.size() && p[j] + 1 > p[j - 1]) ++j;
    if (j < p.size())
      ++p[j];
    else
      p.push_back(1);
  }
}

bool very_even(CartanType ct, const Partition& p) {
  if (ct.family != 'D') return false;
  for (int q : p)
    if (q % 2 == 1) return false;
  return true;
}

void validate_orbit_label(const OrbitLabel& o) {
  const char f = o.ct.family;
  const int n = o.ct.rank;
  const bool rank_ok = (f == 'A' && n >= 0) || (f == 'B' && n >= 1) ||
                       (f == 'C' && n >= 1) || (f == 'D' && n >= 2);
  if (!rank_ok) throw std::invalid_argument("bad orbit label type");
  if (!orbit_partition_valid(o.ct, o.partition))
    throw std::invalid_argument("invalid orbit partition for " + show_type(o.ct));
  const bool ve = very_even(o.ct, o.partition);
  if (ve != (o.tag != VeTag::none))
    throw std::invalid_argument("very-even tag mismatch");
}

long long orbit_dimension(const OrbitLabel& o) {
  validate_orbit_label(o);
  const long long N = orbit_partition_total(o.ct);
  long long sq = 0;
  for (int q : transpose_partition(o.partition))
    sq += static_cast<long long>(q) * q;
  long long odd = 0;
  for (int q : o.partition)
    if (q % 2 == 1) ++odd;
  switch (o.ct.family) {
    case 'A': return N * N - sq;
    case 'B':
    case 'D': return (N * N - N) / 2 - (sq - odd) / 2;
    case 'C': return (N * N + N) / 2 - (sq + odd) / 2;
  }
  throw std::logic_error("unreachable");
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int q = std::min(n, maxpart); q >= 1; --q) {
    cur.push_back(q);
    gen_partitions(n - q, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> valid_partitions(CartanType ct) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(orbit_partition_total(ct)))
    if (orbit_partition_valid(ct, p)) out.push_back(p);
  return out;
}

std::vector<OrbitLabel> all_orbit_labels(CartanType ct) {
  std::vector<OrbitLabel> out;
  for (auto& p : valid_partitions(ct)) {
    if (very_even(ct, p)) {
      out.push_back({ct, p, VeTag::I});
      out.push_back({ct, p, VeTag::II});
    } else {
      out.push_back({ct, p, VeTag::none});
    }
  }
  return out;
}

bool shape_fits(const LeviShape& shape, CartanType ambient) {
  for (int a : shape.gl_blocks)
    if (a < 1) return false;
  int blocks = 0;
  for (int a : shape.gl_blocks) blocks += a;
  if (ambient.family == 'A')
    return !shape.tail && !shape.gl_blocks.empty() &&
           blocks == ambient.rank + 1;
  if (ambient.family != 'B' && ambient.family != 'C' && ambient.family != 'D')
    return false;
  int m = 0;
  if (shape.tail) {
    if (shape.tail->family != ambient.family) return false;
    m = shape.tail->rank;
    if (m < 1 || (ambient.family == 'D' && m < 2)) return false;
  }
  return blocks + m == ambient.rank;
}

long long ambient_dimension(CartanType ct) {
  const long long N = orbit_partition_total(ct);
  switch (ct.family) {
    case 'A': return N * N;
    case 'B':
    case 'D': return N * (N - 1) / 2;
    case 'C': return N * (N + 1) / 2;
  }
  throw std::invalid_argument("classical type required");
}

long long shape_dimension(const LeviShape& shape, CartanType ambient) {
  long long d = 0;
  for (int a : shape.gl_blocks) d += static_cast<long long>(a) * a;
  if (shape.tail) d += ambient_dimension(*shape.tail);
  // a tailless B shape still carries the odd so1 line of dimension 0
  (void)ambient;
  return d;
}

Partition ls_induce_partition(const LeviShape& shape,
                              const std::vector<Partition>& gl_orbs,
                              const std::optional<OrbitLabel>& tail_orb,
                              CartanType ambient) {
  if (!shape_fits(shape, ambient))
    throw std::invalid_argument("shape does not fit ambient type");
  if (gl_orbs.size() != shape.gl_blocks.size())
    throw std::invalid_argument("one orbit per gl block required");
  for (std::size_t i = 0; i < gl_orbs.size(); ++i)
    if (!is_partition(gl_orbs[i]) ||
        partition_sum(gl_orbs[i]) != shape.gl_blocks[i])
      throw std::invalid_argument("gl orbit does not match block size");
  if (shape.tail.has_value() != tail_orb.has_value())
    throw std::invalid_argument("tail orbit must be given exactly for a tail");
  if (tail_orb) {
    if (tail_orb->ct != *shape.tail)
      throw std::invalid_argument("tail orbit type mismatch");
    validate_orbit_label(*tail_orb);
  }

  const int N = orbit_partition_total(ambient);
  std::vector<int> c(N, 0);
  const int mult = ambient.family == 'A' ? 1 : 2;
  for (const auto& p : gl_orbs)
    for (std::size_t j = 0; j < p.size(); ++j) c[j] += mult * p[j];
  if (tail_orb) {
    for (std::size_t j = 0; j < tail_orb->partition.size(); ++j)
      c[j] += tail_orb->partition[j];
  } else if (ambient.family == 'B') {
    c[0] += 1;  // the so(1) line
  }
  Partition q;
  for (int v : c)
    if (v > 0) q.push_back(v);
  assert(is_partition(q));

  if (ambient.family != 'A') q = collapse(ambient.family, q);
  return q;
}

OrbitLabel ls_induce(const LeviShape& shape,
                     const std::vector<Partition>& gl_orbs,
                     const std::optional<OrbitLabel>& tail_orb,
                     CartanType ambient) {
  Partition q = ls_induce_partition(shape, gl_orbs, tail_orb, ambient);
  if (very_even(ambient, q)) throw guard_error("very-even ambiguity");
  OrbitLabel out{ambient, q, VeTag::none};
  validate_orbit_label(out);
  return out;
}

bool is_rigid(const OrbitLabel& o) {
  validate_orbit_label(o);
  const Partition& p = o.partition;
  if (o.ct.family == 'A') {
    for (int q : p)
      if (q != 1) return false;
    return true;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int next = i + 1 < p.size() ? p[i + 1] : 0;
    if (p[i] - next > 1) return false;
  }
  const int bad_parity = o.ct.family == 'C' ? 0 : 1;
  for (auto [q, m] : multiplicities(p))
    if (q % 2 == bad_parity && m == 2) return false;
  return true;
}

Partition wedge_square_jordan_type(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  const int n = partition_sum(p);
  // X acts on basis vectors by e_v -> e_{v-1} within each Jordan block.
  std::vector<int> shift(n, -1);
  int off = 0;
  for (int q : p) {
    for (int v = 1; v < q; ++v) shift[off + v] = off + v - 1;
    off += q;
  }
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pidx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pidx[{i, j}] = static_cast<int>(pairs.size());
      pairs.push_back({i, j});
    }
  const int d = static_cast<int>(pairs.size());
  IntMat M(d, d);
  auto add = [&](int row_a, int row_b, int col, int sign) {
    if (row_a == row_b) return;
    if (row_a > row_b) {
      std::swap(row_a, row_b);
      sign = -sign;
    }
    M[pidx[{row_a, row_b}]][col] += sign;
  };
  for (int col = 0; col < d; ++col) {
    auto [i, j] = pairs[col];
    if (shift[i] >= 0) add(shift[i], j, col, 1);
    if (shift[j] >= 0) add(i, shift[j], col, 1);
  }
  // multiplicity of part k is rank(M^{k-1}) - 2 rank(M^k) + rank(M^{k+1})
  std::vector<int> ranks{d};
  IntMat P = M;
  while (rank(to_rat(P)) > 0) {
    ranks.push_back(rank(to_rat(P)));
    P = mul(P, M);
  }
  ranks.push_back(0);
  ranks.push_back(0);
  Partition out;
  for (int k = static_cast<int>(ranks.size()) - 2; k >= 1; --k) {
    const int m = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    assert(m >= 0);
    for (int c = 0; c < m; ++c) out.push_back(k);
  }
  std::sort(out.rbegin(), out.rend());
  assert(partition_sum(out) == d);
  return out;
}

std::string show_partition(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("malformed partition: " + s);
  Partition p;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return p;
  std::stringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) p.push_back(std::stoi(tok));
  if (!is_partition(p)) throw std::invalid_argument("malformed partition: " + s);
  return p;
}

std::string show_orbit_label(const OrbitLabel& o) {
  std::string s = show_type(o.ct) + ":" + show_partition(o.partition);
  if (o.tag == VeTag::I) s += ":I";
  if (o.tag == VeTag::II) s += ":II";
  return s;
}

OrbitLabel parse_orbit_label(const std::string& s) {
  const auto c1 = s.find(':');
  if (c1 == std::string::npos)
    throw std::invalid_argument("malformed orbit label: " + s);
  const auto c2 = s.find(':', c1 + 1);
  OrbitLabel o;
  o.ct = parse_type(s.substr(0, c1));
  o.partition = parse_partition(s.substr(c1 + 1, c2 == std::string::npos
                                                     ? std::string::npos
                                                     : c2 - c1 - 1));
  if (c2 != std::string::npos) {
    const std::string tag = s.substr(c2 + 1);
    if (tag == "I")
      o.tag = VeTag::I;
    else if (tag == "II")
      o.tag = VeTag::II;
    else
      throw std::invalid_argument("malformed orbit label: " + s);
  }
  validate_orbit_label(o);
  return o;
}

}  // namespace strata

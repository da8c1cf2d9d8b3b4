//  Copyright 2026 The semiring-lab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Brute-force reference implementations for tests. They read only the raw
// tables and enumerate everything; nothing here calls library algorithms.

#ifndef SEMIRING_LAB_TESTS_ORACLES_HPP_
#define SEMIRING_LAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "semiring_lab/core.hpp"

namespace oracle {

using semiring_lab::Index;
using semiring_lab::Map;
using semiring_lab::Semimodule;
using semiring_lab::Semiring;

inline bool monoid_ok(std::size_t n, std::vector<Index> const& add) {
  for (Index a = 0; a < n; ++a) {
    if (add[a * n] != a || add[a] != a) return false;
    for (Index b = 0; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a]) return false;
      for (Index c = 0; c < n; ++c) {
        if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]]) return false;
      }
    }
  }
  return true;
}

inline bool semiring_ok(Semiring const& s) {
  std::size_t const n = s.order;
  if (!monoid_ok(n, s.add)) return false;
  for (Index a = 0; a < n; ++a) {
    if (s.times(s.one, a) != a || s.times(a, s.one) != a) return false;
    if (s.times(0, a) != 0 || s.times(a, 0) != 0) return false;
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c))) return false;
        if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c))) return false;
        if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c))) return false;
      }
    }
  }
  return true;
}

inline bool module_ok(Semimodule const& m) {
  Semiring const& s = *m.semiring;
  std::size_t const n = m.order;
  if (!monoid_ok(n, m.add)) return false;
  for (Index x = 0; x < n; ++x) {
    if (m.scale(s.one, x) != x || m.scale(0, x) != 0) return false;
    for (Index r = 0; r < s.order; ++r) {
      if (m.scale(r, 0) != 0) return false;
      for (Index y = 0; y < n; ++y) {
        if (m.scale(r, m.plus(x, y)) != m.plus(m.scale(r, x), m.scale(r, y))) return false;
      }
      for (Index t = 0; t < s.order; ++t) {
        if (m.scale(s.plus(r, t), x) != m.plus(m.scale(r, x), m.scale(t, x))) return false;
        if (m.scale(s.times(r, t), x) != m.scale(r, m.scale(t, x))) return false;
      }
    }
  }
  return true;
}

/// Calls f on every map {0..n-1} -> {0..k-1}.
inline void all_maps(std::size_t n, std::size_t k,
                     std::function<void(Map const&)> const& f) {
  Map m(n, 0);
  while (true) {
    f(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == k) {
      m[i++] = 0;
    }
    if (i == n) return;
  }
}

inline bool is_hom(Semimodule const& a, Semimodule const& b, Map const& f) {
  if (f[0] != 0) return false;
  for (Index x = 0; x < a.order; ++x) {
    for (Index y = 0; y < a.order; ++y) {
      if (f[a.plus(x, y)] != b.plus(f[x], f[y])) return false;
    }
    for (Index s = 0; s < a.scalars(); ++s) {
      if (f[a.scale(s, x)] != b.scale(s, f[x])) return false;
    }
  }
  return true;
}

inline std::vector<Map> homs(Semimodule const& a, Semimodule const& b) {
  std::vector<Map> out;
  all_maps(a.order, b.order, [&](Map const& f) {
    if (is_hom(a, b, f)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool isomorphic(Semimodule const& a, Semimodule const& b) {
  if (a.order != b.order) return false;
  Map p(a.order);
  for (Index i = 0; i < a.order; ++i) p[i] = i;
  do {
    if (is_hom(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Subsemimodules as sorted member lists, found by testing every subset.
inline std::set<std::vector<Index>> subs(Semimodule const& m) {
  std::set<std::vector<Index>> out;
  std::size_t const n = m.order;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {
    auto in = [&](Index x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Index y = 0; y < n && ok; ++y) {
        ok = !in(y) || in(m.plus(x, y));
      }
      for (Index s = 0; s < m.scalars() && ok; ++s) {
        ok = in(m.scale(s, x));
      }
    }
    if (ok) {
      std::vector<Index> members;
      for (Index x = 0; x < n; ++x) {
        if (in(x)) members.push_back(x);
      }
      out.insert(members);
    }
  }
  return out;
}

inline bool subtractive(Semimodule const& m, std::vector<Index> const& a) {
  auto in = [&](Index x) { return std::find(a.begin(), a.end(), x) != a.end(); };
  for (Index x = 0; x < m.order; ++x) {
    for (Index y = 0; y < m.order; ++y) {
      if (in(x) && in(m.plus(x, y)) && !in(y)) return false;
    }
  }
  return true;
}

/// All set partitions of {0..n-1} as restricted growth strings.
inline void partitions(std::size_t n, std::function<void(Map const&)> const& f) {
  Map p(n, 0);
  std::function<void(std::size_t, Index)> rec = [&](std::size_t i, Index used) {
    if (i == n) {
      f(p);
      return;
    }
    for (Index c = 0; c <= used && c < n; ++c) {
      p[i] = c;
      rec(i + 1, std::max<Index>(used, c + 1));
    }
  };
  if (n == 0) {
    f(p);
  } else {
    p[0] = 0;
    rec(1, 1);
  }
}

inline std::vector<Map> module_congruences(Semimodule const& m) {
  std::vector<Map> out;
  partitions(m.order, [&](Map const& p) {
    bool ok = true;
    for (Index a = 0; a < m.order && ok; ++a) {
      for (Index b = 0; b < m.order && ok; ++b) {
        if (p[a] != p[b]) continue;
        for (Index c = 0; c < m.order && ok; ++c) {
          ok = p[m.plus(a, c)] == p[m.plus(b, c)];
        }
        for (Index s = 0; s < m.scalars() && ok; ++s) {
          ok = p[m.scale(s, a)] == p[m.scale(s, b)];
        }
      }
    }
    if (ok) out.push_back(p);
  });
  return out;
}

/// The relation on S x M by its literal definition, for one s:
/// m1 ~ m2 iff m1 + sum x_i u_i = m2 + sum x_i v_i for terms with
/// x_i + x_i' = s, sums of length 1..max_len. Returns an |M| x |M| matrix.
inline std::vector<char> bounded_sum_relation(Semimodule const& m, Index s,
                                              std::size_t max_len) {
  Semiring const& r = *m.semiring;
  std::size_t const n = m.order;
  std::set<std::pair<Index, Index>> terms;
  for (Index x = 0; x < r.order; ++x) {
    bool summand = false;
    for (Index x2 = 0; x2 < r.order; ++x2) summand = summand || r.plus(x, x2) == s;
    if (!summand) continue;
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v) terms.insert({m.scale(x, u), m.scale(x, v)});
  }
  std::set<std::pair<Index, Index>> level = terms, all = terms;
  for (std::size_t k = 2; k <= max_len; ++k) {
    std::set<std::pair<Index, Index>> next;
    for (auto [a, b] : level)
      for (auto [c, d] : terms) next.insert({m.plus(a, c), m.plus(b, d)});
    level = next;
    all.insert(level.begin(), level.end());
  }
  std::vector<char> rel(n * n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (auto [t1, t2] : all)
        if (m.plus(x, t1) == m.plus(y, t2)) rel[x * n + y] = 1;
  return rel;
}

/// Every hom from A (members of B) into M extends to B: the e-injectivity
/// condition for one inclusion, by exhaustive search.
inline bool extends(Semimodule const& b, std::vector<Index> const& a,
                    Semimodule const& m) {
  std::vector<Map> b_homs = homs(b, m);
  // homs A -> M: restrictions of arbitrary maps that respect A's operations
  bool all = true;
  all_maps(a.size(), m.order, [&](Map const& phi) {
    if (!all) return;
    auto at = [&](Index x) {
      return phi[std::find(a.begin(), a.end(), x) - a.begin()];
    };
    if (at(0) != 0) return;
    for (Index x : a) {
      for (Index y : a) {
        if (at(b.plus(x, y)) != m.plus(at(x), at(y))) return;
      }
      for (Index s = 0; s < b.scalars(); ++s) {
        if (at(b.scale(s, x)) != m.scale(s, at(x))) return;
      }
    }
    bool found = false;
    for (auto const& psi : b_homs) {
      bool agrees = true;
      for (Index x : a) agrees = agrees && psi[x] == at(x);
      if (agrees) {
        found = true;
        break;
      }
    }
    all = found;
  });
  return all;
}

/// The extension condition plus the cokernel condition for one subtractive
/// inclusion: any two extensions psi1, psi2 of the same map satisfy
/// psi1 + c1 = psi2 + c2 for maps c1, c2 vanishing on A.
inline bool e_condition(Semimodule const& b, std::vector<Index> const& a,
                        Semimodule const& m) {
  if (!extends(b, a, m)) return false;
  std::vector<Map> b_homs = homs(b, m);
  auto restrict = [&](Map const& f) {
    Map r;
    for (Index x : a) r.push_back(f[x]);
    return r;
  };
  auto add = [&](Map const& f, Map const& g) {
    Map r(f.size());
    for (Index x = 0; x < f.size(); ++x) r[x] = m.plus(f[x], g[x]);
    return r;
  };
  std::vector<Map> vanishing;
  for (auto const& c : b_homs) {
    if (restrict(c) == Map(a.size(), 0)) vanishing.push_back(c);
  }
  for (auto const& p1 : b_homs) {
    for (auto const& p2 : b_homs) {
      if (restrict(p1) != restrict(p2)) continue;
      bool meet = false;
      for (auto const& c1 : vanishing)
        for (auto const& c2 : vanishing) meet = meet || add(p1, c1) == add(p2, c2);
      if (!meet) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // SEMIRING_LAB_TESTS_ORACLES_HPP_

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

// Congruences, quotients and the special constructions built from them:
// Bourne congruences, kernel data, compatible parts, difference modules,
// the congruence on S x M used to embed M subtractively, and adjoining an
// infinite element.

#ifndef SEMIRING_LAB_CONGRUENCES_HPP_
#define SEMIRING_LAB_CONGRUENCES_HPP_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/canonical.hpp"
#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/substructures.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

inline constexpr std::size_t kCongruenceOrderGuard = 16;
inline constexpr std::size_t kCongruenceCountGuard = 1u << 16;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as root.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
    return true;
  }

  std::vector<Index> labels() {
    std::vector<Index> out(parent_.size());
    for (Index x = 0; x < out.size(); ++x) {
      out[x] = find(x);
    }
    return out;
  }

 private:
  std::vector<Index> parent_;
};

}  // namespace detail

/// Smallest congruence of the algebra containing `pairs`.
inline Congruence congruence_closure(
    AlgebraView const& v, std::vector<std::pair<Index, Index>> pairs) {
  std::size_t const n = v.order;
  detail::UnionFind uf(n);
  std::vector<std::pair<Index, Index>> work;
  for (auto [a, b] : pairs) {
    if (uf.unite(a, b)) {
      work.emplace_back(a, b);
    }
  }
  for (std::size_t w = 0; w < work.size(); ++w) {
    auto [a, b] = work[w];
    auto link = [&](Index x, Index y) {
      if (uf.unite(x, y)) {
        work.emplace_back(x, y);
      }
    };
    for (auto const* t : v.binary) {
      for (Index c = 0; c < n; ++c) {
        link((*t)[a * n + c], (*t)[b * n + c]);
        link((*t)[c * n + a], (*t)[c * n + b]);
      }
    }
    for (Index const* u : v.unary) {
      link(u[a], u[b]);
    }
  }
  return Congruence::from_labels(uf.labels());
}

inline Congruence congruence_closure(
    Semimodule const& m, std::vector<std::pair<Index, Index>> const& pairs) {
  return congruence_closure(view_of(m), pairs);
}

inline Congruence congruence_closure(
    Semiring const& s, std::vector<std::pair<Index, Index>> const& pairs) {
  return congruence_closure(view_of(s), pairs);
}

/// Equivalence compatible with every operation of the view.
inline Check is_congruence(AlgebraView const& v, Congruence const& c) {
  std::size_t const n = v.order;
  if (c.class_of.size() != n) {
    return Check::fail({});
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (!c.related(a, b)) {
        continue;
      }
      for (auto const* t : v.binary) {
        for (Index x = 0; x < n; ++x) {
          if (!c.related((*t)[a * n + x], (*t)[b * n + x]) ||
              !c.related((*t)[x * n + a], (*t)[x * n + b])) {
            return Check::fail({a, b, x});
          }
        }
      }
      for (Index const* u : v.unary) {
        if (!c.related(u[a], u[b])) {
          return Check::fail({a, b});
        }
      }
    }
  }
  return Check::pass();
}

inline std::vector<std::pair<Index, Index>> pairs_of(Congruence const& c) {
  std::vector<std::pair<Index, Index>> out;
  std::vector<Index> first(c.classes, std::numeric_limits<Index>::max());
  for (Index x = 0; x < c.class_of.size(); ++x) {
    Index& f = first[c.class_of[x]];
    if (f == std::numeric_limits<Index>::max()) {
      f = x;
    } else {
      out.emplace_back(f, x);
    }
  }
  return out;
}

/// Every congruence of the algebra, sorted by class vector. Built as the
/// join closure of the principal congruences.
inline std::vector<Congruence> all_congruences(AlgebraView const& v,
                                               bool force = false) {
  std::size_t const n = v.order;
  if (n > kCongruenceOrderGuard && !force) {
    throw GuardExceeded("all_congruences: order " + std::to_string(n) +
                        " exceeds guard " +
                        std::to_string(kCongruenceOrderGuard));
  }
  std::vector<Congruence> principal;
  std::set<std::vector<Index>> seen;
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      Congruence c = congruence_closure(v, {{a, b}});
      if (seen.insert(c.class_of).second) {
        principal.push_back(std::move(c));
      }
    }
  }
  std::vector<Congruence> out{Congruence::diagonal(n)};
  seen.insert(out.front().class_of);
  for (auto const& p : principal) {
    out.push_back(p);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (auto const& p : principal) {
      auto pairs = pairs_of(out[i]);
      auto more = pairs_of(p);
      pairs.insert(pairs.end(), more.begin(), more.end());
      Congruence j = congruence_closure(v, pairs);
      if (seen.insert(j.class_of).second) {
        out.push_back(std::move(j));
        if (out.size() > kCongruenceCountGuard && !force) {
          throw GuardExceeded("all_congruences: more than " +
                              std::to_string(kCongruenceCountGuard) +
                              " congruences");
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Congruence> all_congruences(Semimodule const& m,
                                               bool force = false) {
  return all_congruences(view_of(m), force);
}

inline std::vector<Congruence> semiring_congruences(Semiring const& s,
                                                    bool force = false) {
  return all_congruences(view_of(s), force);
}

// Bourne congruence and quotients ----------------------------------------------

/// m ~ m' iff m + l = m' + l' for some l, l' in L.
inline Congruence bourne(SubSet const& l) {
  Semimodule const& m = *l.parent;
  std::size_t const n = m.order;
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (Index x = 0; x < n; ++x) {
    for (Index a : l.members) {
      reach[x][m.plus(x, a)] = 1;
    }
  }
  auto related = [&](Index x, Index y) {
    for (Index z = 0; z < n; ++z) {
      if (reach[x][z] && reach[y][z]) {
        return true;
      }
    }
    return false;
  };
  detail::UnionFind uf(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (related(x, y)) {
        uf.unite(x, y);
      }
    }
  }
  Congruence c = Congruence::from_labels(uf.labels());
  // the relation is transitive on its own; the union-find must not add pairs
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (c.related(x, y) != related(x, y)) {
        throw std::logic_error("Bourne relation is not transitive");
      }
    }
  }
  if (!is_congruence(view_of(m), c)) {
    throw std::logic_error("Bourne relation is not a congruence");
  }
  return c;
}

struct Quotient {
  Semimodule module;
  Map projection;
};

/// M / theta on class representatives; the class of 0 is element 0.
inline Quotient quotient(SemimodulePtr const& m, Congruence const& theta) {
  if (!is_congruence(view_of(*m), theta)) {
    throw PreconditionError("quotient: relation is not a congruence");
  }
  std::size_t const k = theta.classes;
  std::vector<Index> rep(k, 0);
  for (Index x = m->order; x-- > 0;) {
    rep[theta.class_of[x]] = x;
  }
  Quotient q;
  q.module.semiring = m->semiring;
  q.module.order = k;
  q.module.add.resize(k * k);
  q.module.act.resize(m->scalars() * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      q.module.add[a * k + b] = theta.class_of[m->plus(rep[a], rep[b])];
    }
    for (Index s = 0; s < m->scalars(); ++s) {
      q.module.act[s * k + a] = theta.class_of[m->scale(s, rep[a])];
    }
  }
  q.module.name = m->name + "/~";
  q.projection = theta.class_of;
  return q;
}

inline Quotient quotient_by(SubSet const& l) {
  Quotient q = quotient(l.parent, bourne(l));
  q.module.name = l.parent->name + "/L";
  return q;
}

struct SemiringQuotient {
  Semiring semiring;
  Map projection;
};

inline SemiringQuotient quotient(Semiring const& s, Congruence const& theta) {
  if (!is_congruence(view_of(s), theta)) {
    throw PreconditionError("quotient: relation is not a semiring congruence");
  }
  std::size_t const k = theta.classes;
  std::vector<Index> rep(k, 0);
  for (Index x = s.order; x-- > 0;) {
    rep[theta.class_of[x]] = x;
  }
  SemiringQuotient q;
  q.semiring.order = k;
  q.semiring.add.resize(k * k);
  q.semiring.mul.resize(k * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      q.semiring.add[a * k + b] = theta.class_of[s.plus(rep[a], rep[b])];
      q.semiring.mul[a * k + b] = theta.class_of[s.times(rep[a], rep[b])];
    }
  }
  q.semiring.one = theta.class_of[s.one];
  q.semiring.name = s.name + "/~";
  q.projection = theta.class_of;
  return q;
}

/// Bourne congruence on a semiring by a two-sided ideal.
inline Congruence semiring_bourne(SemiringPtr const& s, SubSet const& ideal) {
  SubSet i = SubSet::of(share(regular_module(s)), ideal.members);
  Congruence c = bourne(i);
  if (!is_congruence(view_of(*s), c)) {
    throw PreconditionError("semiring_bourne: subset is not a two-sided ideal");
  }
  return c;
}

// Kernel data ----------------------------------------------------------------------

struct KernelData {
  SubSet ker;
  SubSet im;
  SubSet extended_im;
  Congruence kercong;
};

inline KernelData kernel_data(Morphism const& f) {
  Semimodule const& src = *f.source;
  Semimodule const& dst = *f.target;
  std::vector<Index> ker, im;
  for (Index x = 0; x < src.order; ++x) {
    if (f.map[x] == 0) {
      ker.push_back(x);
    }
    im.push_back(f.map[x]);
  }
  SubSet im_set = SubSet::of(f.target, im);
  // extended image straight from its definition: n + f(m) = f(m')
  std::vector<Index> ext;
  for (Index y = 0; y < dst.order; ++y) {
    bool in = false;
    for (Index a : im_set.members) {
      if (im_set.contains(dst.plus(y, a))) {
        in = true;
        break;
      }
    }
    if (in) {
      ext.push_back(y);
    }
  }
  KernelData d{SubSet::of(f.source, ker), im_set, SubSet::of(f.target, ext),
               Congruence::from_labels(f.map)};
  if (!(d.extended_im == subtractive_closure(d.im))) {
    throw std::logic_error("extended image differs from subtractive closure");
  }
  Congruence by_ker = bourne(d.ker);
  for (Index a = 0; a < src.order; ++a) {
    for (Index b = 0; b < src.order; ++b) {
      if (by_ker.related(a, b) && !d.kercong.related(a, b)) {
        throw std::logic_error("Bourne(Ker f) not contained in kernel congruence");
      }
    }
  }
  return d;
}

// Compatible part ------------------------------------------------------------------

struct CompatiblePart {
  Semiring quotient_semiring;  // S / theta
  Semimodule module;           // M(theta) over S / theta
  std::vector<Index> members;  // elements of M, increasing
};

/// M(theta) = {m | s1 theta s2 implies s1 m = s2 m} as an S/theta-semimodule.
inline CompatiblePart compatible_part(Semimodule const& m,
                                      Congruence const& theta) {
  Semiring const& s = *m.semiring;
  SemiringQuotient sq = quotient(s, theta);
  CompatiblePart out;
  out.quotient_semiring = sq.semiring;
  std::vector<Index> pos(m.order, 0);
  for (Index x = 0; x < m.order; ++x) {
    bool ok = true;
    for (Index a = 0; a < s.order && ok; ++a) {
      for (Index b = a + 1; b < s.order && ok; ++b) {
        ok = !theta.related(a, b) || m.scale(a, x) == m.scale(b, x);
      }
    }
    if (ok) {
      pos[x] = static_cast<Index>(out.members.size());
      out.members.push_back(x);
    }
  }
  std::size_t const k = out.members.size();
  std::size_t const q = sq.semiring.order;
  std::vector<Index> rep(q, 0);
  for (Index a = s.order; a-- > 0;) {
    rep[theta.class_of[a]] = a;
  }
  auto sp = share(sq.semiring);
  out.module.semiring = sp;
  out.module.order = k;
  out.module.add.resize(k * k);
  out.module.act.resize(q * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      out.module.add[a * k + b] = pos[m.plus(out.members[a], out.members[b])];
    }
    for (Index c = 0; c < q; ++c) {
      out.module.act[c * k + a] = pos[m.scale(rep[c], out.members[a])];
    }
  }
  out.module.name = m.name + "(theta)";
  return out;
}

// Simplicity -----------------------------------------------------------------------

struct Simplicity {
  bool congruence_simple = false;
  bool ideal_simple = false;
  bool simple = false;
};

inline Simplicity simplicity(SemiringPtr const& s, bool force = false) {
  Simplicity r;
  r.congruence_simple = true;
  for (auto const& c : semiring_congruences(*s, force)) {
    if (!c.is_diagonal() && !c.is_universal()) {
      r.congruence_simple = false;
      break;
    }
  }
  r.ideal_simple = two_sided_ideals(s, force).size() == 2;
  r.simple = r.congruence_simple && r.ideal_simple;
  return r;
}

// The congruence on S x M ------------------------------------------------------------

struct IlinResult {
  Semimodule product;    // S x M, index s * |M| + m
  Congruence relation;   // on S x M
  Quotient quotient;     // (S x M) / ~
  Map alpha;             // m -> [0, m]
  bool alpha_injective = false;
  bool alpha_subtractive = false;
  bool absorbs_into_unit = false;  // [0, m] + [1, 0] = [1, 0] for all m
};

namespace detail {

// R(s): additive closure of {(x m', x m'') | x + x' = s}, as an |M|^2 mask.
inline std::vector<char> ilin_pairs(Semimodule const& m, Index s) {
  Semiring const& r = *m.semiring;
  std::size_t const n = m.order;
  std::vector<char> gen_mask(n * n, 0);
  std::vector<std::pair<Index, Index>> gens;
  for (Index x = 0; x < r.order; ++x) {
    bool summand = false;
    for (Index x2 = 0; x2 < r.order && !summand; ++x2) {
      summand = r.plus(x, x2) == s;
    }
    if (!summand) {
      continue;
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index p = m.scale(x, a), q = m.scale(x, b);
        if (!gen_mask[p * n + q]) {
          gen_mask[p * n + q] = 1;
          gens.emplace_back(p, q);
        }
      }
    }
  }
  std::vector<char> closed = gen_mask;
  std::vector<std::pair<Index, Index>> queue = gens;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    for (auto [g, h] : gens) {
      Index a = m.plus(p, g), b = m.plus(q, h);
      if (!closed[a * n + b]) {
        closed[a * n + b] = 1;
        queue.emplace_back(a, b);
      }
    }
  }
  return closed;
}

}  // namespace detail

/// The relation (s, m1) ~ (s, m2) iff m1 + t1 = m2 + t2 for some (t1, t2)
/// in R(s), the quotient (S x M)/~ and the map alpha(m) = [0, m].
inline IlinResult ilin_congruence(SemimodulePtr const& m) {
  SemiringPtr const& s = m->semiring;
  std::size_t const n = m->order;
  IlinResult out;
  out.product = direct_product(s, {regular_module(s), *m});
  std::vector<Index> labels(s->order * n);
  for (Index a = 0; a < s->order; ++a) {
    std::vector<char> r = detail::ilin_pairs(*m, a);
    detail::UnionFind uf(n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        for (Index t = 0; t < n * n; ++t) {
          if (r[t] && m->plus(x, t / n) == m->plus(y, t % n)) {
            uf.unite(x, y);
            break;
          }
        }
      }
    }
    auto l = uf.labels();
    for (Index x = 0; x < n; ++x) {
      labels[a * n + x] = static_cast<Index>(a * n + l[x]);
    }
  }
  out.relation = Congruence::from_labels(labels);
  auto product = share(out.product);
  if (!is_congruence(view_of(*product), out.relation)) {
    throw std::logic_error("relation on S x M is not a congruence");
  }
  out.quotient = quotient(product, out.relation);
  out.alpha.resize(n);
  for (Index x = 0; x < n; ++x) {
    out.alpha[x] = out.relation.class_of[x];  // (0, x) has index x
  }
  out.alpha_injective = is_injective_map(out.alpha, out.quotient.module.order);
  auto q = share(out.quotient.module);
  out.alpha_subtractive = is_subtractive(SubSet::of(q, out.alpha)).holds;
  Index unit = out.relation.class_of[s->one * n];
  out.absorbs_into_unit = true;
  for (Index x = 0; x < n; ++x) {
    if (q->plus(out.alpha[x], unit) != unit) {
      out.absorbs_into_unit = false;
    }
  }
  return out;
}

// Difference module and ring ----------------------------------------------------------

struct DifferenceModule {
  Semimodule module;  // D(M) = (M x M) / W
  Map xi;             // m -> [(m, 0)]
  Map classes;        // (a, b) with index a |M| + b -> class
};

inline DifferenceModule difference_module(SemimodulePtr const& m) {
  std::size_t const n = m->order;
  auto sq = share(direct_product(m->semiring, {*m, *m}));
  std::vector<Index> diag;
  for (Index x = 0; x < n; ++x) {
    diag.push_back(static_cast<Index>(x * n + x));
  }
  Quotient q = quotient_by(SubSet::of(sq, diag));
  DifferenceModule d;
  d.module = std::move(q.module);
  d.module.name = "D(" + m->name + ")";
  d.classes = q.projection;
  d.xi.resize(n);
  for (Index x = 0; x < n; ++x) {
    d.xi[x] = d.classes[x * n];
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (d.module.plus(d.classes[a * n + b], d.classes[b * n + a]) != 0) {
        throw std::logic_error("D(M) has an element without a negative");
      }
    }
  }
  return d;
}

/// D(S) with [(a, b)][(c, d)] = [(ac + bd, ad + bc)] and unit [(1, 0)].
inline Semiring difference_ring(SemiringPtr const& s) {
  std::size_t const n = s->order;
  DifferenceModule d = difference_module(share(regular_module(s)));
  std::size_t const k = d.module.order;
  Semiring r;
  r.order = k;
  r.add = d.module.add;
  r.mul.assign(k * k, std::numeric_limits<Index>::max());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        for (Index e = 0; e < n; ++e) {
          Index x = s->plus(s->times(a, c), s->times(b, e));
          Index y = s->plus(s->times(a, e), s->times(b, c));
          Index cell = d.classes[a * n + b] * k + d.classes[c * n + e];
          Index val = d.classes[x * n + y];
          if (r.mul[cell] == std::numeric_limits<Index>::max()) {
            r.mul[cell] = val;
          } else if (r.mul[cell] != val) {
            throw std::logic_error("D(S) multiplication is not well defined");
          }
        }
      }
    }
  }
  r.one = d.classes[s->one * n];
  r.name = "D(" + s->name + ")";
  if (!validate_semiring(r).ok()) {
    throw std::logic_error("D(S) fails the semiring axioms");
  }
  return r;
}

/// D(M) as a D(S)-semimodule: [(a, b)][(m, n)] = [(am + bn, an + bm)].
inline Semimodule difference_module_over_ds(SemimodulePtr const& m,
                                            SemiringPtr const& ds) {
  SemiringPtr const& s = m->semiring;
  std::size_t const n = m->order;
  std::size_t const q = s->order;
  DifferenceModule dm = difference_module(m);
  DifferenceModule dr = difference_module(share(regular_module(s)));
  std::size_t const k = dm.module.order;
  Semimodule out;
  out.semiring = ds;
  out.order = k;
  out.add = dm.module.add;
  out.act.assign(ds->order * k, std::numeric_limits<Index>::max());
  for (Index a = 0; a < q; ++a) {
    for (Index b = 0; b < q; ++b) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          Index u = m->plus(m->scale(a, x), m->scale(b, y));
          Index v = m->plus(m->scale(a, y), m->scale(b, x));
          Index cell = dr.classes[a * q + b] * k + dm.classes[x * n + y];
          Index val = dm.classes[u * n + v];
          if (out.act[cell] == std::numeric_limits<Index>::max()) {
            out.act[cell] = val;
          } else if (out.act[cell] != val) {
            throw std::logic_error("D(S)-action on D(M) is not well defined");
          }
        }
      }
    }
  }
  out.name = dm.module.name;
  return out;
}

// Adjoining an infinite element ----------------------------------------------------

inline constexpr char kExtPrecondition[] =
    "Ext(M) needs an entire, zerosumfree base semiring (s infinity = infinity "
    "for s != 0 is additive and multiplicative only then)";

struct Extension {
  Semimodule module;  // M plus one new element, index |M|
  Map mu;             // inclusion
};

inline Extension ext_adjoin_infinity(SemimodulePtr const& m) {
  Semiring const& s = *m->semiring;
  if (!detail::entire_check(s).holds || !detail::zerosumfree_check(s).holds) {
    throw PreconditionError(kExtPrecondition);
  }
  std::size_t const n = m->order;
  std::size_t const k = n + 1;
  Index const inf = static_cast<Index>(n);
  Extension e;
  e.module.semiring = m->semiring;
  e.module.order = k;
  e.module.add.resize(k * k);
  e.module.act.resize(s.order * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      e.module.add[a * k + b] = (a == inf || b == inf) ? inf : m->plus(a, b);
    }
    for (Index t = 0; t < s.order; ++t) {
      e.module.act[t * k + a] =
          a == inf ? (t == 0 ? 0 : inf) : m->scale(t, a);
    }
  }
  e.module.name = "Ext(" + m->name + ")";
  e.mu = identity_map(n);
  auto ep = share(e.module);
  if (!is_subtractive(SubSet::of(ep, e.mu)).holds) {
    throw std::logic_error("M is not subtractive in Ext(M)");
  }
  return e;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_CONGRUENCES_HPP_

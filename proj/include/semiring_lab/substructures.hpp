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

// Subsemimodules, ideals, subtractivity, distinguished subsets and semiring
// classification.

#ifndef SEMIRING_LAB_SUBSTRUCTURES_HPP_
#define SEMIRING_LAB_SUBSTRUCTURES_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"

namespace semiring_lab {

inline constexpr std::size_t kSubsemimoduleGuard = 24;

/// Outcome of a predicate together with a witness tuple when it fails.
struct Check {
  bool holds = true;
  std::vector<Index> witness;

  explicit operator bool() const { return holds; }

  static Check pass() { return {}; }
  static Check fail(std::vector<Index> w) { return {false, std::move(w)}; }
};

// Closures --------------------------------------------------------------------

/// The subsemimodule generated by `seeds` (0 is always included).
inline SubSet generated(SemimodulePtr const& m, std::vector<Index> const& seeds) {
  std::vector<char> in(m->order, 0);
  std::vector<Index> members{0};
  in[0] = 1;
  std::vector<Index> queue;
  auto add = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (Index x : seeds) {
    add(x);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Index x = queue[q];
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(m->plus(x, members[i]));
    }
    for (Index s = 0; s < m->scalars(); ++s) {
      add(m->scale(s, x));
    }
  }
  return SubSet::of(m, members);
}

inline bool is_subsemimodule(Semimodule const& m, std::vector<char> const& mask) {
  if (!mask[0]) {
    return false;
  }
  for (Index a = 0; a < m.order; ++a) {
    if (!mask[a]) {
      continue;
    }
    for (Index b = 0; b < m.order; ++b) {
      if (mask[b] && !mask[m.plus(a, b)]) {
        return false;
      }
    }
    for (Index s = 0; s < m.scalars(); ++s) {
      if (!mask[m.scale(s, a)]) {
        return false;
      }
    }
  }
  return true;
}

/// All subsemimodules, sorted by size then lexicographically.
inline std::vector<SubSet> subsemimodules(SemimodulePtr const& m,
                                          bool force = false) {
  if (m->order > kSubsemimoduleGuard && !force) {
    throw GuardExceeded("subsemimodules: order " + std::to_string(m->order) +
                        " exceeds guard " +
                        std::to_string(kSubsemimoduleGuard) +
                        " (pass the override flag to force)");
  }
  std::set<std::vector<Index>> seen;
  std::vector<SubSet> out;
  std::vector<std::size_t> queue;
  auto push = [&](SubSet s) {
    if (seen.insert(s.members).second) {
      out.push_back(std::move(s));
      queue.push_back(out.size() - 1);
    }
  };
  push(generated(m, {}));
  for (std::size_t q = 0; q < queue.size(); ++q) {
    SubSet const base = out[queue[q]];
    for (Index x = 0; x < m->order; ++x) {
      if (!base.contains(x)) {
        std::vector<Index> seeds = base.members;
        seeds.push_back(x);
        push(generated(m, seeds));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](SubSet const& a, SubSet const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.members < b.members;
  });
  return out;
}

// Subtractivity -----------------------------------------------------------------

/// m in A and m + m' in A imply m' in A. Witness (m, m') on failure.
inline Check is_subtractive(SubSet const& a) {
  Semimodule const& m = *a.parent;
  for (Index x : a.members) {
    for (Index y = 0; y < m.order; ++y) {
      if (!a.contains(y) && a.contains(m.plus(x, y))) {
        return Check::fail({x, y});
      }
    }
  }
  return Check::pass();
}

/// m + m' in A implies m, m' in A. Witness (m, m') on failure.
inline Check is_strongly_subtractive(SubSet const& a) {
  Semimodule const& m = *a.parent;
  for (Index x = 0; x < m.order; ++x) {
    for (Index y = 0; y < m.order; ++y) {
      if (a.contains(m.plus(x, y)) && !(a.contains(x) && a.contains(y))) {
        return Check::fail({x, y});
      }
    }
  }
  return Check::pass();
}

/// Elements m with m + a in A for a suitable a in A: the smallest subtractive
/// subsemimodule containing A.
inline SubSet subtractive_closure(SubSet const& a) {
  Semimodule const& m = *a.parent;
  std::vector<Index> out;
  for (Index x = 0; x < m.order; ++x) {
    for (Index y : a.members) {
      if (a.contains(m.plus(x, y))) {
        out.push_back(x);
        break;
      }
    }
  }
  return SubSet::of(a.parent, out);
}

// Distinguished subsets -----------------------------------------------------------

struct SpecialSubsets {
  SubSet iplus;  // m + m = m
  SubSet zeroic; // z + m = m for some m
  SubSet v;      // m + m' = 0 for some m'
};

inline SpecialSubsets special_subsets(SemimodulePtr const& m) {
  std::vector<Index> ip, z, v;
  for (Index x = 0; x < m->order; ++x) {
    if (m->plus(x, x) == x) {
      ip.push_back(x);
    }
    bool in_z = false, in_v = false;
    for (Index y = 0; y < m->order; ++y) {
      in_z = in_z || m->plus(x, y) == y;
      in_v = in_v || m->plus(x, y) == 0;
    }
    if (in_z) {
      z.push_back(x);
    }
    if (in_v) {
      v.push_back(x);
    }
  }
  return {SubSet::of(m, ip), SubSet::of(m, z), SubSet::of(m, v)};
}

/// Elements m with m + x = m for every x; at most one exists.
inline std::vector<Index> infinite_elements(Semimodule const& m) {
  std::vector<Index> out;
  for (Index x = 0; x < m.order; ++x) {
    bool absorbs = true;
    for (Index y = 0; y < m.order && absorbs; ++y) {
      absorbs = m.plus(x, y) == x;
    }
    if (absorbs) {
      out.push_back(x);
    }
  }
  if (out.size() > 1) {
    throw std::logic_error("two infinite elements in one monoid");
  }
  return out;
}

inline std::vector<Index> infinite_elements(Semiring const& s) {
  Semimodule m;
  m.semiring = share(trivial_semiring());
  m.order = s.order;
  m.add = s.add;
  m.act.assign(s.order, 0);
  return infinite_elements(m);
}

/// The infinite element when it is also fixed by every nonzero scalar.
inline std::optional<Index> absorbing_infinity(Semimodule const& m) {
  auto inf = infinite_elements(m);
  if (inf.empty()) {
    return std::nullopt;
  }
  Index w = inf.front();
  for (Index s = 1; s < m.scalars(); ++s) {
    if (m.scale(s, w) != w) {
      return std::nullopt;
    }
  }
  return w;
}

// Ideals --------------------------------------------------------------------------

inline std::vector<SubSet> left_ideals(SemiringPtr const& s, bool force = false) {
  return subsemimodules(share(regular_module(s)), force);
}

/// {t | t a = 0}, a left ideal of S.
inline SubSet annihilator(SemiringPtr const& s, Index a) {
  std::vector<Index> out;
  for (Index t = 0; t < s->order; ++t) {
    if (s->times(t, a) == 0) {
      out.push_back(t);
    }
  }
  return SubSet::of(share(regular_module(s)), out);
}

inline bool is_right_closed(Semiring const& s, SubSet const& i) {
  for (Index a : i.members) {
    for (Index t = 0; t < s.order; ++t) {
      if (!i.contains(s.times(a, t))) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<SubSet> two_sided_ideals(SemiringPtr const& s,
                                            bool force = false) {
  std::vector<SubSet> out;
  for (auto& i : left_ideals(s, force)) {
    if (is_right_closed(*s, i)) {
      out.push_back(std::move(i));
    }
  }
  return out;
}

// Classification ------------------------------------------------------------------

inline constexpr char kTrivialIdealsNote[] =
    "only_trivial_strongly_subtractive_left_ideals means: the strongly "
    "subtractive left ideals are exactly {0} and S";

struct ClassificationReport {
  std::map<std::string, bool> flags;
  std::map<std::string, std::vector<Index>> witnesses;
  std::optional<std::vector<Index>> atoms;

  bool flag(std::string const& name) const { return flags.at(name); }

  void set(std::string const& name, Check c) {
    flags[name] = c.holds;
    if (!c.holds) {
      witnesses[name] = std::move(c.witness);
    }
  }
};

namespace detail {

inline Check zerosumfree_check(Semiring const& s) {
  for (Index a = 0; a < s.order; ++a) {
    for (Index b = 0; b < s.order; ++b) {
      if (s.plus(a, b) == 0 && (a != 0 || b != 0)) {
        return Check::fail({a, b});
      }
    }
  }
  return Check::pass();
}

inline Check zeroic_check(Semiring const& s) {
  for (Index a = 0; a < s.order; ++a) {
    bool ok = false;
    for (Index b = 0; b < s.order && !ok; ++b) {
      ok = s.plus(a, b) == b;
    }
    if (!ok) {
      return Check::fail({a});
    }
  }
  return Check::pass();
}

inline Check idempotent_check(Semiring const& s) {
  for (Index a = 0; a < s.order; ++a) {
    if (s.plus(a, a) != a) {
      return Check::fail({a});
    }
  }
  return Check::pass();
}

inline Check entire_check(Semiring const& s) {
  for (Index a = 1; a < s.order; ++a) {
    for (Index b = 1; b < s.order; ++b) {
      if (s.times(a, b) == 0) {
        return Check::fail({a, b});
      }
    }
  }
  return Check::pass();
}

inline Check division_check(Semiring const& s) {
  if (s.one == 0) {
    return Check::fail({0});
  }
  for (Index a = 1; a < s.order; ++a) {
    bool inv = false;
    for (Index b = 1; b < s.order && !inv; ++b) {
      inv = s.times(a, b) == s.one && s.times(b, a) == s.one;
    }
    if (!inv) {
      return Check::fail({a});
    }
  }
  return Check::pass();
}

// Witness on failure: for each element m, some x with m + x != m.
inline Check infinite_check(Semiring const& s) {
  if (!infinite_elements(s).empty()) {
    return Check::pass();
  }
  std::vector<Index> w;
  for (Index a = 0; a < s.order; ++a) {
    for (Index b = 0; b < s.order; ++b) {
      if (s.plus(a, b) != a) {
        w.push_back(a);
        w.push_back(b);
        break;
      }
    }
  }
  return Check::fail(std::move(w));
}

inline Check lattice_check(Semiring const& s) {
  for (Index a = 0; a < s.order; ++a) {
    if (s.plus(a, a) != a) {
      return Check::fail({a});
    }
    if (s.times(a, a) != a) {
      return Check::fail({a});
    }
    for (Index b = 0; b < s.order; ++b) {
      if (s.times(a, b) != s.times(b, a) || s.plus(a, s.times(a, b)) != a ||
          s.times(a, s.plus(a, b)) != a) {
        return Check::fail({a, b});
      }
    }
  }
  return Check::pass();
}

}  // namespace detail

/// Complement-based Boolean algebra test; atoms listed on success.
inline Check boolean_algebra_check(Semiring const& s,
                                   std::vector<Index>* atoms = nullptr) {
  Check lat = detail::lattice_check(s);
  if (!lat) {
    return lat;
  }
  for (Index a = 0; a < s.order; ++a) {
    bool has = false;
    for (Index x = 0; x < s.order && !has; ++x) {
      has = s.plus(a, x) == s.one && s.times(a, x) == 0;
    }
    if (!has) {
      return Check::fail({a});
    }
  }
  if (atoms != nullptr) {
    atoms->clear();
    for (Index a = 1; a < s.order; ++a) {
      bool minimal = true;
      for (Index b = 1; b < s.order && minimal; ++b) {
        // b < a in the order x <= y iff x + y = y
        minimal = !(b != a && s.plus(b, a) == a);
      }
      if (minimal) {
        atoms->push_back(a);
      }
    }
  }
  return Check::pass();
}

/// Every left ideal subtractive. Witness: ideal members followed by the
/// failing pair.
inline Check left_subtractive_check(SemiringPtr const& s) {
  for (auto const& i : left_ideals(s)) {
    Check c = is_subtractive(i);
    if (!c) {
      std::vector<Index> w = c.witness;
      w.insert(w.begin(), i.members.begin(), i.members.end());
      return Check::fail(std::move(w));
    }
  }
  return Check::pass();
}

/// The strongly subtractive left ideals are exactly {0} and S.
/// Witness: members of an offending ideal ({0} itself when it fails).
inline Check trivial_strongly_subtractive_check(SemiringPtr const& s) {
  std::vector<SubSet> ideals = left_ideals(s);
  bool zero_ok = false, whole_ok = false;
  for (auto const& i : ideals) {
    bool strong = is_strongly_subtractive(i).holds;
    if (i.size() == 1) {
      zero_ok = strong;
      if (!strong) {
        return Check::fail(i.members);
      }
    } else if (i.size() == s->order) {
      whole_ok = strong;
    } else if (strong) {
      return Check::fail(i.members);
    }
  }
  if (!zero_ok || !whole_ok) {
    return Check::fail({0});
  }
  return Check::pass();
}

inline ClassificationReport classify_semiring(SemiringPtr const& s) {
  ClassificationReport r;
  r.set("zeroic", detail::zeroic_check(*s));
  r.set("zerosumfree", detail::zerosumfree_check(*s));
  r.set("additively_idempotent", detail::idempotent_check(*s));
  r.set("entire", detail::entire_check(*s));
  r.set("division_semiring", detail::division_check(*s));
  r.set("has_infinite_element", detail::infinite_check(*s));
  r.set("bounded_distributive_lattice", detail::lattice_check(*s));
  std::vector<Index> atoms;
  Check ba = boolean_algebra_check(*s, &atoms);
  if (ba) {
    r.atoms = atoms;
  }
  r.set("boolean_algebra", ba);
  r.set("left_subtractive", left_subtractive_check(s));
  r.set("only_trivial_strongly_subtractive_left_ideals",
        trivial_strongly_subtractive_check(s));
  return r;
}

// Ring + zerosumfree splitting ------------------------------------------------------

struct RingZerosumfreeSplit {
  Semiring ring;         // eS
  Semiring zerosumfree;  // fS
  Index e = 0, f = 0;
  Map iso;  // s -> index of (es, fs) in ring (+) zerosumfree
};

namespace detail {

/// The corner xS (x a central idempotent) as a semiring with unit x.
/// Elements are listed in increasing index order, so 0 stays first.
inline Semiring corner(Semiring const& s, Index x, std::vector<Index>* elems) {
  std::vector<char> in(s.order, 0);
  for (Index t = 0; t < s.order; ++t) {
    in[s.times(x, t)] = 1;
  }
  elems->clear();
  std::vector<Index> pos(s.order, 0);
  for (Index t = 0; t < s.order; ++t) {
    if (in[t]) {
      pos[t] = static_cast<Index>(elems->size());
      elems->push_back(t);
    }
  }
  std::size_t const n = elems->size();
  Semiring c;
  c.order = n;
  c.add.resize(n * n);
  c.mul.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      c.add[a * n + b] = pos[s.plus((*elems)[a], (*elems)[b])];
      c.mul[a * n + b] = pos[s.times((*elems)[a], (*elems)[b])];
    }
  }
  c.one = pos[x];
  return c;
}

inline bool is_central_idempotent(Semiring const& s, Index e) {
  if (s.times(e, e) != e) {
    return false;
  }
  for (Index t = 0; t < s.order; ++t) {
    if (s.times(e, t) != s.times(t, e)) {
      return false;
    }
  }
  return true;
}

inline bool every_element_negatable(Semiring const& s) {
  for (Index a = 0; a < s.order; ++a) {
    bool ok = false;
    for (Index b = 0; b < s.order && !ok; ++b) {
      ok = s.plus(a, b) == 0;
    }
    if (!ok) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Searches central idempotents e + f = 1, ef = 0 with eS a ring and fS
/// zerosumfree, in increasing order of e.
inline std::optional<RingZerosumfreeSplit> ring_zerosumfree_decomposition(
    Semiring const& s) {
  for (Index e = 0; e < s.order; ++e) {
    if (!detail::is_central_idempotent(s, e)) {
      continue;
    }
    for (Index f = 0; f < s.order; ++f) {
      if (s.plus(e, f) != s.one || s.times(e, f) != 0 ||
          !detail::is_central_idempotent(s, f)) {
        continue;
      }
      std::vector<Index> re, te;
      Semiring r = detail::corner(s, e, &re);
      Semiring t = detail::corner(s, f, &te);
      if (!detail::every_element_negatable(r) ||
          !detail::zerosumfree_check(t).holds) {
        continue;
      }
      std::vector<Index> rpos(s.order, 0), tpos(s.order, 0);
      for (Index i = 0; i < re.size(); ++i) {
        rpos[re[i]] = i;
      }
      for (Index i = 0; i < te.size(); ++i) {
        tpos[te[i]] = i;
      }
      Map iso(s.order);
      for (Index x = 0; x < s.order; ++x) {
        iso[x] = static_cast<Index>(rpos[s.times(e, x)] * t.order +
                                    tpos[s.times(f, x)]);
      }
      if (!is_injective_map(iso, r.order * t.order) ||
          r.order * t.order != s.order) {
        continue;
      }
      r.name = "eS";
      t.name = "fS";
      return RingZerosumfreeSplit{std::move(r), std::move(t), e, f,
                                  std::move(iso)};
    }
  }
  return std::nullopt;
}

/// A finite ring is semisimple iff its Jacobson radical is zero:
/// x is in the radical iff 1 + r x is a unit for every r.
inline Check semisimple_ring_check(Semiring const& s) {
  if (!detail::every_element_negatable(s)) {
    return Check::fail({});
  }
  auto unit = [&](Index u) {
    for (Index v = 0; v < s.order; ++v) {
      if (s.times(u, v) == s.one && s.times(v, u) == s.one) {
        return true;
      }
    }
    return false;
  };
  for (Index x = 1; x < s.order; ++x) {
    bool radical = true;
    for (Index r = 0; r < s.order && radical; ++r) {
      radical = unit(s.plus(s.one, s.times(r, x)));
    }
    if (radical) {
      return Check::fail({x});
    }
  }
  return Check::pass();
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_SUBSTRUCTURES_HPP_

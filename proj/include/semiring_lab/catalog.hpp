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

// Isomorph-free enumeration of small semimodules and semirings, plus the
// catalog file format.
//
// Semimodules are generated monoid first. Every S-semimodule satisfies
// p.m = q.m whenever p.1 = q.1 holds in S, so the additive monoids are
// drawn from the matching variety: semilattices (via naturally labelled
// posets), groups of bounded exponent (via products of cyclic groups) or
// general commutative monoids (via table backtracking). The actions on a
// fixed monoid are the semiring homomorphisms S -> End(monoid).

#ifndef SEMIRING_LAB_CATALOG_HPP_
#define SEMIRING_LAB_CATALOG_HPP_

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/canonical.hpp"
#include "semiring_lab/congruences.hpp"
#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/parallel.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

inline constexpr std::size_t kCatalogDefaultGuard = 4;
inline constexpr std::size_t kCatalogForcedGuard = 5;
inline constexpr std::size_t kCatalogForcedGuardStructured = 8;
inline constexpr std::size_t kFreeModuleGuard = 32;
inline constexpr std::size_t kSemiringGuard = 4;
inline constexpr int kCatalogFormat = 1;

/// p.1 = q.1 with q < p minimal: the additive law every module inherits.
struct AdditiveLaw {
  std::size_t p = 1;
  std::size_t q = 0;

  bool idempotent() const { return p == 2 && q == 1; }
  bool group() const { return q == 0; }
};

inline AdditiveLaw additive_law(Semiring const& s) {
  std::vector<Index> seen{0};
  Index x = 0;
  while (true) {
    x = s.plus(x, s.one);
    for (std::size_t j = 0; j < seen.size(); ++j) {
      if (seen[j] == x) {
        return {seen.size(), j};
      }
    }
    seen.push_back(x);
  }
}

/// Largest max_order accepted for `s`.
inline std::size_t catalog_guard(Semiring const& s, bool force) {
  if (!force) {
    return kCatalogDefaultGuard;
  }
  AdditiveLaw law = additive_law(s);
  return (law.idempotent() || law.group()) ? kCatalogForcedGuardStructured
                                           : kCatalogForcedGuard;
}

// Monoids ------------------------------------------------------------------------

namespace detail {

inline Index multiple(std::size_t n, std::vector<Index> const& add,
                      std::size_t k, Index x) {
  Index acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    acc = add[acc * n + x];
  }
  return acc;
}

inline bool satisfies_law(std::size_t n, std::vector<Index> const& add,
                          AdditiveLaw law) {
  for (Index x = 0; x < n; ++x) {
    if (multiple(n, add, law.p, x) != multiple(n, add, law.q, x)) {
      return false;
    }
  }
  return true;
}

// Join-semilattices with bottom 0 and top n-1 whose order extends the
// numeric order of the labels.
inline void semilattices(std::size_t n,
                         std::function<void(std::vector<Index> const&)> const& emit) {
  if (n == 1) {
    emit({0});
    return;
  }
  std::size_t const top = n - 1;
  // leq[i][j]: i <= j
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (Index i = 0; i < n; ++i) {
    leq[i][i] = 1;
    leq[0][i] = 1;
    leq[i][top] = 1;
  }
  std::function<void(Index)> place = [&](Index j) {
    if (j == top) {
      std::vector<Index> join(n * n);
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          // least common upper bound, if unique
          Index best = static_cast<Index>(n);
          for (Index c = 0; c < n; ++c) {
            if (leq[a][c] && leq[b][c] && (best == n || leq[c][best])) {
              best = c;
            }
          }
          for (Index c = 0; c < n; ++c) {
            if (leq[a][c] && leq[b][c] && !leq[best][c]) {
              return;
            }
          }
          join[a * n + b] = best;
        }
      }
      emit(join);
      return;
    }
    // choose the set of middle elements below j, closed downwards
    std::size_t const k = j - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      bool closed = true;
      for (Index i = 1; i < j && closed; ++i) {
        if (!(mask >> (i - 1) & 1)) {
          continue;
        }
        for (Index h = 1; h < i && closed; ++h) {
          closed = !leq[h][i] || (mask >> (h - 1) & 1);
        }
      }
      if (!closed) {
        continue;
      }
      for (Index i = 1; i < j; ++i) {
        leq[i][j] = (mask >> (i - 1)) & 1;
      }
      place(j + 1);
    }
    for (Index i = 1; i < j; ++i) {
      leq[i][j] = 0;
    }
  };
  place(1);
}

// Direct products of cyclic groups with every factor dividing `exponent`.
inline void bounded_groups(std::size_t n, std::size_t exponent,
                           std::function<void(std::vector<Index> const&)> const& emit) {
  std::vector<std::size_t> factors;
  std::function<void(std::size_t, std::size_t)> split = [&](std::size_t rest,
                                                             std::size_t cap) {
    if (rest == 1) {
      // mixed radix, first factor most significant
      std::vector<Index> add(n * n);
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          Index x = a, y = b, r = 0, scale = 1;
          for (std::size_t i = factors.size(); i-- > 0;) {
            std::size_t d = factors[i];
            r += static_cast<Index>(((x % d + y % d) % d) * scale);
            x /= d;
            y /= d;
            scale *= d;
          }
          add[a * n + b] = r;
        }
      }
      emit(add);
      return;
    }
    for (std::size_t d = std::min(rest, cap); d >= 2; --d) {
      if (rest % d == 0 && exponent % d == 0) {
        factors.push_back(d);
        split(rest / d, d);
        factors.pop_back();
      }
    }
  };
  split(n, n);
}

// All commutative monoid tables on {0..n-1} with identity 0, by cell
// backtracking with partial associativity checks.
inline void monoid_tables(std::size_t n,
                          std::function<void(std::vector<Index> const&)> const& emit) {
  constexpr Index kUnset = std::numeric_limits<Index>::max();
  std::vector<Index> t(n * n, kUnset);
  for (Index a = 0; a < n; ++a) {
    t[a] = a;
    t[a * n] = a;
  }
  std::vector<std::pair<Index, Index>> cells;
  for (Index a = 1; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      cells.emplace_back(a, b);
    }
  }
  auto assoc_ok = [&]() {
    for (Index a = 1; a < n; ++a) {
      for (Index b = 1; b < n; ++b) {
        Index ab = t[a * n + b];
        if (ab == kUnset) {
          continue;
        }
        for (Index c = 1; c < n; ++c) {
          Index bc = t[b * n + c];
          if (bc == kUnset) {
            continue;
          }
          Index l = t[ab * n + c], r = t[a * n + bc];
          if (l != kUnset && r != kUnset && l != r) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      emit(t);
      return;
    }
    auto [a, b] = cells[k];
    for (Index v = 0; v < n; ++v) {
      t[a * n + b] = t[b * n + a] = v;
      if (assoc_ok()) {
        fill(k + 1);
      }
    }
    t[a * n + b] = t[b * n + a] = kUnset;
  };
  fill(0);
}

}  // namespace detail

/// Commutative monoids of order n satisfying the additive law, one per
/// isomorphism class, as canonical tables sorted by key.
inline std::vector<std::vector<Index>> monoid_classes(std::size_t n,
                                                      AdditiveLaw law) {
  std::map<std::vector<Index>, std::vector<Index>> classes;
  auto take = [&](std::vector<Index> const& add) {
    if (!detail::satisfies_law(n, add, law)) {
      return;
    }
    Canonical c = canonical_labelling(monoid_view(n, add));
    if (classes.count(c.key)) {
      return;
    }
    std::vector<Index> relabelled(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        relabelled[c.relabel[a] * n + c.relabel[b]] = c.relabel[add[a * n + b]];
      }
    }
    classes.emplace(c.key, std::move(relabelled));
  };
  if (law.idempotent()) {
    detail::semilattices(n, take);
  } else if (law.group()) {
    if (n == 1) {
      take({0});
    } else {
      detail::bounded_groups(n, law.p, take);
    }
  } else {
    detail::monoid_tables(n, take);
  }
  std::vector<std::vector<Index>> out;
  for (auto& [k, t] : classes) {
    out.push_back(std::move(t));
  }
  return out;
}

// Actions ------------------------------------------------------------------------

/// All action tables making the monoid an S-semimodule: semiring
/// homomorphisms S -> End(monoid), searched over generator images.
inline std::vector<std::vector<Index>> semiring_actions(
    Semiring const& s, std::size_t n, std::vector<Index> const& add) {
  std::vector<Map> ends = monoid_hom_maps(n, add, n, add);
  std::size_t const r = s.order;
  std::vector<std::vector<Index>> out;
  if (n == 1) {
    out.push_back(std::vector<Index>(r, 0));
    return out;
  }
  auto padd = [&](Map const& f, Map const& g) {
    Map h(n);
    for (Index x = 0; x < n; ++x) {
      h[x] = add[f[x] * n + g[x]];
    }
    return h;
  };
  std::vector<Map> h(r);
  std::vector<char> set(r, 0);
  std::vector<Index> trail;
  auto assign = [&](Index x, Map const& v) {
    if (set[x]) {
      return h[x] == v;
    }
    h[x] = v;
    set[x] = 1;
    trail.push_back(x);
    return true;
  };
  auto propagate = [&](std::size_t head) {
    while (head < trail.size()) {
      Index x = trail[head++];
      for (std::size_t i = 0; i < trail.size(); ++i) {
        Index y = trail[i];
        if (!assign(s.plus(x, y), padd(h[x], h[y])) ||
            !assign(s.times(x, y), compose(h[x], h[y])) ||
            !assign(s.times(y, x), compose(h[y], h[x]))) {
          return false;
        }
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      set[trail.back()] = 0;
      trail.pop_back();
    }
  };
  // semiring generators over {0, 1}
  std::vector<Index> gens;
  {
    std::vector<char> span(r, 0);
    std::vector<Index> inside;
    auto close = [&](Index seed) {
      std::vector<Index> queue{seed};
      span[seed] = 1;
      inside.push_back(seed);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Index x = queue[q];
        for (std::size_t i = 0; i < inside.size(); ++i) {
          for (Index z : {s.plus(x, inside[i]), s.times(x, inside[i]),
                          s.times(inside[i], x)}) {
            if (!span[z]) {
              span[z] = 1;
              inside.push_back(z);
              queue.push_back(z);
            }
          }
        }
      }
    };
    close(0);
    if (!span[s.one]) {
      close(s.one);
    }
    for (Index x = 0; x < r; ++x) {
      if (!span[x]) {
        gens.push_back(x);
        close(x);
      }
    }
  }
  Map zero(n, 0), id = identity_map(n);
  if (!assign(0, zero) || !assign(s.one, id) || !propagate(0)) {
    return out;
  }
  std::size_t const base = trail.size();
  // candidates per generator, filtered by the one-generator closure
  std::vector<std::vector<Map const*>> cand(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (auto const& e : ends) {
      std::size_t mark = trail.size();
      if (assign(gens[g], e) && propagate(mark)) {
        cand[g].push_back(&e);
      }
      undo(mark);
    }
  }
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == gens.size()) {
      std::vector<Index> act(r * n);
      for (Index a = 0; a < r; ++a) {
        for (Index x = 0; x < n; ++x) {
          act[a * n + x] = h[a][x];
        }
      }
      out.push_back(std::move(act));
      return;
    }
    if (set[gens[k]]) {
      dfs(k + 1);
      return;
    }
    for (Map const* e : cand[k]) {
      std::size_t mark = trail.size();
      if (assign(gens[k], *e) && propagate(mark)) {
        dfs(k + 1);
      }
      undo(mark);
    }
  };
  dfs(0);
  undo(base);
  return out;
}

// Catalog store ------------------------------------------------------------------

struct CatalogStore {
  SemiringPtr semiring;
  std::vector<Semimodule> entries;  // sorted by (order, canonical key)
  std::size_t max_order = 0;
  bool forced = false;
  std::string version = kToolVersion;
};

namespace detail {

inline void sort_and_dedupe(std::vector<Semimodule>& mods) {
  std::vector<std::pair<std::vector<Index>, Semimodule>> keyed;
  std::set<std::vector<Index>> seen;
  for (auto& m : mods) {
    Canonical c = canonical_labelling(view_of(m));
    if (seen.insert(c.key).second) {
      Semimodule r = relabel(m, c.relabel);
      keyed.emplace_back(std::move(c.key), std::move(r));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
    return a.first < b.first;  // key starts with the order
  });
  mods.clear();
  for (auto& [k, m] : keyed) {
    mods.push_back(std::move(m));
  }
}

}  // namespace detail

/// All S-semimodules of order <= max_order up to isomorphism.
inline CatalogStore enumerate_semimodules(SemiringPtr const& s,
                                          std::size_t max_order,
                                          bool force = false,
                                          unsigned jobs = 1) {
  std::size_t guard = catalog_guard(*s, force);
  if (max_order > guard) {
    throw GuardExceeded(
        "enumerate_semimodules: max_order " + std::to_string(max_order) +
        " exceeds guard " + std::to_string(guard) +
        (force ? std::string(" for this semiring")
               : std::string(" (pass the override flag to raise it)")));
  }
  AdditiveLaw law = additive_law(*s);
  CatalogStore store;
  store.semiring = s;
  store.max_order = max_order;
  store.forced = force;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto monoids = monoid_classes(n, law);
    std::function<std::vector<Semimodule>(std::size_t)> task =
        [&](std::size_t i) {
          std::vector<Semimodule> mods;
          for (auto& act : semiring_actions(*s, n, monoids[i])) {
            Semimodule m;
            m.semiring = s;
            m.order = n;
            m.add = monoids[i];
            m.act = std::move(act);
            mods.push_back(std::move(m));
          }
          detail::sort_and_dedupe(mods);
          return mods;
        };
    for (auto& group : parallel_map<std::vector<Semimodule>>(monoids.size(), jobs, task)) {
      for (auto& m : group) {
        store.entries.push_back(std::move(m));
      }
    }
  }
  // isomorphic modules share a monoid class, so merging keeps classes apart
  detail::sort_and_dedupe(store.entries);
  for (std::size_t i = 0; i < store.entries.size(); ++i) {
    store.entries[i].name = s->name + "#" + std::to_string(i);
  }
  return store;
}

inline std::vector<Semimodule> entries_up_to(CatalogStore const& c,
                                             std::size_t max_order) {
  std::vector<Semimodule> out;
  for (auto const& m : c.entries) {
    if (m.order <= max_order) {
      out.push_back(m);
    }
  }
  return out;
}

/// Quotients of the regular module by all of its congruences.
inline std::vector<Semimodule> enumerate_cyclic(SemiringPtr const& s,
                                                bool force = false) {
  auto reg = share(regular_module(s));
  std::vector<Semimodule> out;
  for (auto const& c : all_congruences(*reg, force)) {
    out.push_back(quotient(reg, c).module);
  }
  detail::sort_and_dedupe(out);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].name = "cyc" + std::to_string(i);
  }
  return out;
}

/// Quotients of S^k of order <= max_order.
inline std::vector<Semimodule> enumerate_fg(SemiringPtr const& s, std::size_t k,
                                            std::size_t max_order,
                                            bool force = false) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size *= s->order;
    if (size > kFreeModuleGuard && !force) {
      throw GuardExceeded("enumerate_fg: |S|^k exceeds guard " +
                          std::to_string(kFreeModuleGuard));
    }
  }
  auto fr = share(free_semimodule(s, k));
  std::vector<Semimodule> out;
  for (auto const& c : all_congruences(*fr, force)) {
    if (c.classes <= max_order) {
      out.push_back(quotient(fr, c).module);
    }
  }
  detail::sort_and_dedupe(out);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].name = "fg" + std::to_string(i);
  }
  return out;
}

// Semirings ------------------------------------------------------------------------

/// All semirings of order <= max_order up to isomorphism, sorted by key.
inline std::vector<Semiring> enumerate_semirings(std::size_t max_order) {
  if (max_order > kSemiringGuard) {
    throw GuardExceeded("enumerate_semirings: max_order " +
                        std::to_string(max_order) + " exceeds guard " +
                        std::to_string(kSemiringGuard));
  }
  std::map<std::vector<Index>, Semiring> classes;
  if (max_order >= 1) {
    Semiring t = trivial_semiring();
    classes.emplace(canonical_key(t), t);
  }
  for (std::size_t n = 2; n <= max_order; ++n) {
    detail::monoid_tables(n, [&](std::vector<Index> const& add) {
      Semiring s;
      s.order = n;
      s.add = add;
      s.one = 1;
      s.mul.assign(n * n, 0);
      for (Index x = 0; x < n; ++x) {
        s.mul[1 * n + x] = x;
        s.mul[x * n + 1] = x;
      }
      std::vector<std::pair<Index, Index>> cells;
      for (Index a = 2; a < n; ++a) {
        for (Index b = 2; b < n; ++b) {
          cells.emplace_back(a, b);
        }
      }
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
          if (validate_semiring(s).ok()) {
            auto key = canonical_key(s);
            if (!classes.count(key)) {
              classes.emplace(std::move(key), canonical_form(s));
            }
          }
          return;
        }
        auto [a, b] = cells[k];
        for (Index v = 0; v < n; ++v) {
          s.mul[a * n + b] = v;
          fill(k + 1);
        }
      };
      fill(0);
    });
  }
  std::vector<Semiring> out;
  for (auto& [k, s] : classes) {
    s.name = "R" + std::to_string(out.size());
    out.push_back(std::move(s));
  }
  return out;
}

// Persistence ------------------------------------------------------------------------

inline void save_catalog(CatalogStore const& c, std::string const& path) {
  std::ofstream out(path);
  if (!out) {
    throw FormatError("cannot write " + path);
  }
  Json header = {{"format", kCatalogFormat},
                 {"semiring", to_json(*c.semiring)},
                 {"max_order", c.max_order},
                 {"count", c.entries.size()},
                 {"forced", c.forced},
                 {"version", c.version}};
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    Json e = to_json(c.entries[i], false);
    e["index"] = i;
    out << e.dump() << '\n';
  }
}

inline CatalogStore load_catalog(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open catalog " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("catalog " + path + " is empty");
  }
  CatalogStore c;
  std::size_t count = 0;
  try {
    Json header = Json::parse(line);
    if (header.value("format", -1) != kCatalogFormat) {
      throw FormatError("catalog format " + header.value("format", Json()).dump() +
                        " is not supported (expected " +
                        std::to_string(kCatalogFormat) + ")");
    }
    c.semiring = share(semiring_from_json(header.at("semiring")));
    c.max_order = header.at("max_order").get<std::size_t>();
    count = header.at("count").get<std::size_t>();
    c.forced = header.value("forced", false);
    c.version = header.value("version", std::string());
  } catch (Json::exception const& e) {
    throw FormatError(std::string("corrupt catalog header: ") + e.what());
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw FormatError("corrupt entry at index " + std::to_string(i) +
                        ": file ends early");
    }
    try {
      Semimodule m = semimodule_from_json(Json::parse(line), c.semiring);
      auto r = validate_semimodule(m);
      if (!r.ok()) {
        throw FormatError("fails axioms: " + r.summary());
      }
      m.name = c.semiring->name + "#" + std::to_string(i);
      c.entries.push_back(std::move(m));
    } catch (std::exception const& e) {
      throw FormatError("corrupt entry at index " + std::to_string(i) + ": " +
                        e.what());
    }
  }
  return c;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_CATALOG_HPP_

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

// Named constructors for semirings, semimodules and lattices.
//
// Index conventions (part of the file format, reports depend on them):
//   * direct sums / products use mixed radix with the first component most
//     significant, so (a, b) in S + T has index a * |T| + b;
//   * matrix semirings encode entries row-major, first entry most
//     significant: [[a, b], [c, d]] -> ((a|S| + b)|S| + c)|S| + d;
//   * end_semiring(L) lists join-and-bottom-preserving self-maps of L in
//     lexicographic order of their image vectors; 0 is the constant-bottom
//     map.

#ifndef SEMIRING_LAB_CONSTRUCTORS_HPP_
#define SEMIRING_LAB_CONSTRUCTORS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiring_lab/core.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

using Structure = std::variant<Semiring, Semimodule, Lattice>;

namespace detail {

template <typename F>
std::vector<Index> tabulate(std::size_t rows, std::size_t cols, F&& f) {
  std::vector<Index> t(rows * cols);
  for (Index a = 0; a < rows; ++a) {
    for (Index b = 0; b < cols; ++b) {
      t[a * cols + b] = static_cast<Index>(f(a, b));
    }
  }
  return t;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) {
    return false;
  }
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Semirings -------------------------------------------------------------------

inline Semiring boolean_semiring() {
  Semiring s;
  s.order = 2;
  s.add = {0, 1, 1, 1};
  s.mul = {0, 0, 0, 1};
  s.one = 1;
  s.name = "B";
  return s;
}

/// The trivial semiring {0} with 0 = 1.
inline Semiring trivial_semiring() {
  Semiring s;
  s.name = "0";
  return s;
}

inline Semiring ring_z(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("Z(n) needs n >= 1");
  }
  Semiring s;
  s.order = n;
  s.add = detail::tabulate(n, n, [n](Index a, Index b) { return (a + b) % n; });
  s.mul = detail::tabulate(n, n, [n](Index a, Index b) { return (a * b) % n; });
  s.one = static_cast<Index>(1 % n);
  s.name = "Z" + std::to_string(n);
  return s;
}

inline Semiring field_f(std::size_t p) {
  if (!detail::is_prime(p)) {
    throw PreconditionError("F(p) needs a prime p, got " + std::to_string(p));
  }
  Semiring s = ring_z(p);
  s.name = "F" + std::to_string(p);
  return s;
}

/// {0, 1, ..., k} with addition and multiplication capped at k.
inline Semiring truncated_naturals(std::size_t k) {
  if (k == 0) {
    throw PreconditionError("truncated_naturals(k) needs k >= 1");
  }
  std::size_t n = k + 1;
  Semiring s;
  s.order = n;
  s.add = detail::tabulate(
      n, n, [k](Index a, Index b) { return std::min<std::size_t>(a + b, k); });
  s.mul = detail::tabulate(
      n, n, [k](Index a, Index b) { return std::min<std::size_t>(a * b, k); });
  s.one = 1;
  s.name = "trunc" + std::to_string(k);
  return s;
}

inline Semiring direct_sum(Semiring const& a, Semiring const& b) {
  std::size_t const m = b.order;
  std::size_t const n = a.order * m;
  Semiring s;
  s.order = n;
  s.add = detail::tabulate(n, n, [&](Index x, Index y) {
    return a.plus(x / m, y / m) * m + b.plus(x % m, y % m);
  });
  s.mul = detail::tabulate(n, n, [&](Index x, Index y) {
    return a.times(x / m, y / m) * m + b.times(x % m, y % m);
  });
  s.one = static_cast<Index>(a.one * m + b.one);
  s.name = a.name + "+" + b.name;
  return s;
}

/// B^n; element bits are components, first component most significant.
inline Semiring boolean_algebra(std::size_t n) {
  Semiring s = boolean_semiring();
  if (n == 0) {
    return trivial_semiring();
  }
  for (std::size_t i = 1; i < n; ++i) {
    s = direct_sum(s, boolean_semiring());
  }
  s.name = "B^" + std::to_string(n);
  return s;
}

inline Semiring matrix_semiring(Semiring const& base, std::size_t n) {
  std::size_t const q = base.order;
  std::size_t const cells = n * n;
  std::size_t order = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    order *= q;
    if (order > 4096) {
      throw GuardExceeded("matrix_semiring: more than 4096 elements");
    }
  }
  auto decode = [&](Index x) {
    std::vector<Index> e(cells);
    for (std::size_t i = cells; i-- > 0;) {
      e[i] = x % q;
      x /= q;
    }
    return e;
  };
  auto encode = [&](std::vector<Index> const& e) {
    Index x = 0;
    for (Index v : e) {
      x = static_cast<Index>(x * q + v);
    }
    return x;
  };
  std::vector<std::vector<Index>> entries(order);
  for (Index x = 0; x < order; ++x) {
    entries[x] = decode(x);
  }
  Semiring s;
  s.order = order;
  s.add = detail::tabulate(order, order, [&](Index x, Index y) {
    std::vector<Index> e(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      e[i] = base.plus(entries[x][i], entries[y][i]);
    }
    return encode(e);
  });
  s.mul = detail::tabulate(order, order, [&](Index x, Index y) {
    std::vector<Index> e(cells);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Index acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          acc = base.plus(acc,
                          base.times(entries[x][i * n + k], entries[y][k * n + j]));
        }
        e[i * n + j] = acc;
      }
    }
    return encode(e);
  });
  std::vector<Index> id(cells, 0);
  for (std::size_t i = 0; i < n; ++i) {
    id[i * n + i] = base.one;
  }
  s.one = encode(id);
  s.name = "M" + std::to_string(n) + "(" + base.name + ")";
  return s;
}

// Lattices --------------------------------------------------------------------

/// Builds a lattice from a join table with bottom 0; meets are computed as
/// the greatest common lower bound.
inline Lattice lattice_from_join(std::size_t n, std::vector<Index> join,
                                 std::string name = {}) {
  Lattice l;
  l.order = n;
  l.join = std::move(join);
  detail::check_table(l.join, n, n, n, "join");
  auto leq = [&](Index a, Index b) { return l.join[a * n + b] == b; };
  l.meet.assign(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      bool found = false;
      for (Index c = 0; c < n; ++c) {
        if (!leq(c, a) || !leq(c, b)) {
          continue;
        }
        bool greatest = true;
        for (Index d = 0; d < n; ++d) {
          if (leq(d, a) && leq(d, b) && !leq(d, c)) {
            greatest = false;
            break;
          }
        }
        if (greatest) {
          l.meet[a * n + b] = c;
          found = true;
          break;
        }
      }
      if (!found) {
        throw PreconditionError("join table has no meets: not a lattice");
      }
    }
  }
  l.bot = 0;
  l.top = 0;
  for (Index a = 0; a < n; ++a) {
    l.top = l.join[l.top * n + a];
  }
  l.name = std::move(name);
  return l;
}

inline Lattice chain(std::size_t k) {
  if (k == 0) {
    throw PreconditionError("chain(k) needs k >= 1");
  }
  return lattice_from_join(
      k, detail::tabulate(k, k, [](Index a, Index b) { return std::max(a, b); }),
      "C" + std::to_string(k));
}

/// Diamond: 0 < a, b, c < 1 with a, b, c pairwise incomparable.
inline Lattice lattice_m3() {
  // 0, a=1, b=2, c=3, top=4
  std::vector<Index> j = {0, 1, 2, 3, 4,  //
                          1, 1, 4, 4, 4,  //
                          2, 4, 2, 4, 4,  //
                          3, 4, 4, 3, 4,  //
                          4, 4, 4, 4, 4};
  return lattice_from_join(5, std::move(j), "M3");
}

/// Pentagon: 0 < a < c < 1, 0 < b < 1, b incomparable to a and c.
inline Lattice lattice_n5() {
  // 0, a=1, b=2, c=3, top=4
  std::vector<Index> j = {0, 1, 2, 3, 4,  //
                          1, 1, 4, 3, 4,  //
                          2, 4, 2, 4, 4,  //
                          3, 3, 4, 3, 4,  //
                          4, 4, 4, 4, 4};
  return lattice_from_join(5, std::move(j), "N5");
}

/// Relabels `l` so that its bottom is index 0 (swap with the current 0).
inline Lattice with_bottom_at_zero(Lattice l) {
  if (l.bot == 0) {
    return l;
  }
  std::size_t n = l.order;
  Map p = identity_map(n);
  std::swap(p[0], p[l.bot]);
  Lattice out = l;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      out.join[p[a] * n + p[b]] = p[l.vee(a, b)];
      out.meet[p[a] * n + p[b]] = p[l.wedge(a, b)];
    }
  }
  out.bot = 0;
  out.top = p[l.top];
  return out;
}

/// Bounded distributive lattice as a semiring: + is join, * is meet.
inline Semiring lattice_semiring(Lattice const& input) {
  if (!validate_lattice(input).ok()) {
    throw PreconditionError("lattice_semiring: input is not a lattice");
  }
  if (!is_distributive(input)) {
    throw PreconditionError("lattice_semiring: lattice " + input.name +
                            " is not distributive");
  }
  Lattice l = with_bottom_at_zero(input);
  Semiring s;
  s.order = l.order;
  s.add = l.join;
  s.mul = l.meet;
  s.one = l.top;
  s.name = l.name.empty() ? std::string("L") : l.name;
  return s;
}

inline Lattice lattice_product(Lattice const& a, Lattice const& b) {
  std::size_t const m = b.order;
  std::size_t const n = a.order * m;
  Lattice la = with_bottom_at_zero(a);
  Lattice lb = with_bottom_at_zero(b);
  auto j = detail::tabulate(n, n, [&](Index x, Index y) {
    return la.vee(x / m, y / m) * m + lb.vee(x % m, y % m);
  });
  return lattice_from_join(n, std::move(j), a.name + "x" + b.name);
}

// Semimodules -----------------------------------------------------------------

inline Semimodule regular_module(SemiringPtr const& s) {
  Semimodule m;
  m.semiring = s;
  m.order = s->order;
  m.add = s->add;
  m.act = s->mul;
  m.name = "_" + s->name + s->name;
  return m;
}

inline Semimodule trivial_module(SemiringPtr const& s) {
  Semimodule m;
  m.semiring = s;
  m.order = 1;
  m.add = {0};
  m.act.assign(s->order, 0);
  m.name = "0";
  return m;
}

/// A lattice as a B-semimodule under join; `b` must be the Boolean semiring.
inline Semimodule lattice_module(Lattice const& input, SemiringPtr const& b) {
  if (b->order != 2 || b->plus(1, 1) != 1) {
    throw PreconditionError("lattice_module needs the Boolean semiring");
  }
  Lattice l = with_bottom_at_zero(input);
  Semimodule m;
  m.semiring = b;
  m.order = l.order;
  m.add = l.join;
  m.act.assign(2 * l.order, 0);
  for (Index x = 0; x < l.order; ++x) {
    m.act[b->one * l.order + x] = x;
  }
  m.name = l.name;
  return m;
}

/// Direct product (= direct sum) of finitely many semimodules over one
/// semiring. The empty family gives the zero module.
inline Semimodule direct_product(SemiringPtr const& s,
                                 std::vector<Semimodule> const& family) {
  Semimodule out = trivial_module(s);
  out.name.clear();
  for (auto const& f : family) {
    if (!same_semiring(*s, *f.semiring)) {
      throw PreconditionError("direct_product: mixed semirings");
    }
    std::size_t const m = f.order;
    std::size_t const n = out.order * m;
    Semimodule next;
    next.semiring = s;
    next.order = n;
    next.add = detail::tabulate(n, n, [&](Index x, Index y) {
      return out.plus(x / m, y / m) * m + f.plus(x % m, y % m);
    });
    next.act = detail::tabulate(s->order, n, [&](Index a, Index x) {
      return out.scale(a, x / m) * m + f.scale(a, x % m);
    });
    next.name = out.name.empty() ? f.name : out.name + "x" + f.name;
    out = std::move(next);
  }
  if (out.name.empty()) {
    out.name = "0";
  }
  return out;
}

inline Semimodule direct_sum(SemiringPtr const& s,
                             std::vector<Semimodule> const& family) {
  return direct_product(s, family);
}

inline Semimodule free_semimodule(SemiringPtr const& s, std::size_t k) {
  std::vector<Semimodule> copies(k, regular_module(s));
  Semimodule m = direct_product(s, copies);
  m.name = s->name + "^" + std::to_string(k);
  return m;
}

/// End(L): join-and-bottom-preserving self-maps of L, with pointwise join as
/// addition and composition (f*g)(x) = f(g(x)) as multiplication.
inline Semiring end_semiring(Lattice const& input) {
  if (!validate_lattice(input).ok()) {
    throw PreconditionError("end_semiring: input is not a lattice");
  }
  Lattice l = with_bottom_at_zero(input);
  std::vector<Map> maps = monoid_hom_maps(l.order, l.join, l.order, l.join);
  std::map<Map, Index> index;
  for (Index i = 0; i < maps.size(); ++i) {
    index.emplace(maps[i], i);
  }
  std::size_t const n = maps.size();
  Semiring s;
  s.order = n;
  s.add = detail::tabulate(n, n, [&](Index a, Index b) {
    Map f(l.order);
    for (Index x = 0; x < l.order; ++x) {
      f[x] = l.vee(maps[a][x], maps[b][x]);
    }
    return index.at(f);
  });
  s.mul = detail::tabulate(
      n, n, [&](Index a, Index b) { return index.at(compose(maps[a], maps[b])); });
  s.one = index.at(identity_map(l.order));
  s.name = "End(" + (l.name.empty() ? std::string("L") : l.name) + ")";
  return s;
}

// Named constructors ------------------------------------------------------------

/// Integer-parameter constructors by name: boolean, chain(k),
/// boolean_algebra(n), truncated_naturals(k), Z(n), F(p), M3, N5,
/// matrix_F(p, n), end_chain(k), lattice_chain(k).
inline Structure make_named(std::string_view name,
                            std::vector<std::size_t> const& params = {}) {
  auto param = [&](std::size_t i) {
    if (i >= params.size()) {
      throw PreconditionError("constructor " + std::string(name) +
                              " is missing parameter " + std::to_string(i));
    }
    return params[i];
  };
  if (name == "boolean") return boolean_semiring();
  if (name == "chain") return chain(param(0));
  if (name == "boolean_algebra") return boolean_algebra(param(0));
  if (name == "truncated_naturals") return truncated_naturals(param(0));
  if (name == "Z") return ring_z(param(0));
  if (name == "F") return field_f(param(0));
  if (name == "M3") return lattice_m3();
  if (name == "N5") return lattice_n5();
  if (name == "matrix_F") return matrix_semiring(field_f(param(0)), param(1));
  if (name == "end_chain") return end_semiring(chain(param(0)));
  if (name == "lattice_chain") return lattice_semiring(chain(param(0)));
  throw PreconditionError("unknown constructor: " + std::string(name));
}

/// Names accepted after "builtin:".
inline std::vector<std::string> builtin_names() {
  return {"boolean", "chain3", "Z4",  "F2",    "M3",
          "N5",      "endC3",  "M2F2", "trunc2"};
}

inline Structure builtin(std::string_view name) {
  Structure out;
  if (name == "boolean") {
    out = boolean_semiring();
  } else if (name == "chain3") {
    Semiring s = lattice_semiring(chain(3));
    s.name = "chain3";
    out = s;
  } else if (name == "Z4") {
    out = ring_z(4);
  } else if (name == "F2") {
    out = field_f(2);
  } else if (name == "M3") {
    out = lattice_m3();
  } else if (name == "N5") {
    out = lattice_n5();
  } else if (name == "endC3") {
    Semiring s = end_semiring(chain(3));
    s.name = "endC3";
    out = s;
  } else if (name == "M2F2") {
    Semiring s = matrix_semiring(field_f(2), 2);
    s.name = "M2F2";
    out = s;
  } else if (name == "trunc2") {
    out = truncated_naturals(2);
  } else {
    throw PreconditionError("unknown builtin: " + std::string(name));
  }
  return out;
}

inline Semiring builtin_semiring(std::string_view name) {
  Structure s = builtin(name);
  if (auto* r = std::get_if<Semiring>(&s)) {
    return *r;
  }
  if (auto* l = std::get_if<Lattice>(&s)) {
    return lattice_semiring(*l);
  }
  throw PreconditionError("builtin " + std::string(name) + " is not a semiring");
}

/// Semirings become their regular module; lattices become B-semimodules.
inline Semimodule builtin_module(std::string_view name) {
  Structure s = builtin(name);
  if (auto* r = std::get_if<Semiring>(&s)) {
    return regular_module(share(*r));
  }
  if (auto* l = std::get_if<Lattice>(&s)) {
    return lattice_module(*l, share(boolean_semiring()));
  }
  return std::get<Semimodule>(s);
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_CONSTRUCTORS_HPP_

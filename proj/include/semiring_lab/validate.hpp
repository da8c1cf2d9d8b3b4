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

#ifndef SEMIRING_LAB_VALIDATE_HPP_
#define SEMIRING_LAB_VALIDATE_HPP_

#include <string>
#include <vector>

#include "semiring_lab/core.hpp"

namespace semiring_lab {

/// One failed axiom together with the elements that witness the failure.
struct Violation {
  std::string axiom;
  std::vector<Index> witness;
};

/// Result of axiom checking. Empty means valid. Each axiom is reported at
/// most once, with the lexicographically first witness.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }

  bool has(std::string const& axiom) const {
    for (auto const& v : violations) {
      if (v.axiom == axiom) {
        return true;
      }
    }
    return false;
  }

  std::string summary() const {
    if (ok()) {
      return "valid";
    }
    std::string out;
    for (auto const& v : violations) {
      if (!out.empty()) {
        out += "; ";
      }
      out += v.axiom + " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v.witness[i]);
      }
      out += ")";
    }
    return out;
  }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(ValidationReport& r) : report_(r) {}

  // Returns true when the axiom still needs checking.
  bool open(char const* axiom) const { return !report_.has(axiom); }

  void fail(char const* axiom, std::vector<Index> witness) {
    if (!report_.has(axiom)) {
      report_.violations.push_back({axiom, std::move(witness)});
    }
  }

 private:
  ValidationReport& report_;
};

inline void check_table(std::vector<Index> const& t, std::size_t rows,
                        std::size_t cols, std::size_t range,
                        char const* what) {
  if (t.size() != rows * cols) {
    throw ShapeError(std::string(what) + " table has " +
                     std::to_string(t.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  for (Index v : t) {
    if (v >= range) {
      throw ShapeError(std::string(what) + " table entry " +
                       std::to_string(v) + " out of range " +
                       std::to_string(range));
    }
  }
}

// Commutative monoid axioms on an n-element table with identity 0.
inline void check_commutative_monoid(std::vector<Index> const& add,
                                     std::size_t n, Recorder& rec) {
  auto op = [&](Index a, Index b) { return add[a * n + b]; };
  for (Index a = 0; a < n; ++a) {
    if (op(0, a) != a || op(a, 0) != a) {
      rec.fail("add-identity", {a});
      break;
    }
  }
  for (Index a = 0; a < n && rec.open("add-commutative"); ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (op(a, b) != op(b, a)) {
        rec.fail("add-commutative", {a, b});
        break;
      }
    }
  }
  for (Index a = 0; a < n && rec.open("add-associative"); ++a) {
    for (Index b = 0; b < n && rec.open("add-associative"); ++b) {
      for (Index c = 0; c < n; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) {
          rec.fail("add-associative", {a, b, c});
          break;
        }
      }
    }
  }
}

}  // namespace detail

/// Throws ShapeError for malformed tables; never reports axiom failures.
inline void check_shape(Semiring const& s) {
  if (s.order == 0) {
    throw ShapeError("semiring order must be positive");
  }
  detail::check_table(s.add, s.order, s.order, s.order, "add");
  detail::check_table(s.mul, s.order, s.order, s.order, "mul");
  if (s.one >= s.order) {
    throw ShapeError("one out of range");
  }
}

inline void check_shape(Semimodule const& m) {
  if (!m.semiring) {
    throw ShapeError("semimodule has no semiring");
  }
  check_shape(*m.semiring);
  if (m.order == 0) {
    throw ShapeError("semimodule order must be positive");
  }
  detail::check_table(m.add, m.order, m.order, m.order, "add");
  detail::check_table(m.act, m.semiring->order, m.order, m.order, "act");
}

inline void check_shape(Lattice const& l) {
  if (l.order == 0) {
    throw ShapeError("lattice order must be positive");
  }
  detail::check_table(l.join, l.order, l.order, l.order, "join");
  detail::check_table(l.meet, l.order, l.order, l.order, "meet");
  if (l.bot >= l.order || l.top >= l.order) {
    throw ShapeError("bot/top out of range");
  }
}

inline ValidationReport validate_semiring(Semiring const& s) {
  check_shape(s);
  ValidationReport report;
  detail::Recorder rec(report);
  std::size_t const n = s.order;
  detail::check_commutative_monoid(s.add, n, rec);
  for (Index a = 0; a < n; ++a) {
    if (s.times(s.one, a) != a || s.times(a, s.one) != a) {
      rec.fail("mul-identity", {a});
      break;
    }
  }
  for (Index a = 0; a < n && rec.open("mul-associative"); ++a) {
    for (Index b = 0; b < n && rec.open("mul-associative"); ++b) {
      for (Index c = 0; c < n; ++c) {
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c))) {
          rec.fail("mul-associative", {a, b, c});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < n && rec.open("left-distributive"); ++a) {
    for (Index b = 0; b < n && rec.open("left-distributive"); ++b) {
      for (Index c = 0; c < n; ++c) {
        if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c))) {
          rec.fail("left-distributive", {a, b, c});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < n && rec.open("right-distributive"); ++a) {
    for (Index b = 0; b < n && rec.open("right-distributive"); ++b) {
      for (Index c = 0; c < n; ++c) {
        if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c))) {
          rec.fail("right-distributive", {a, b, c});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (s.times(0, a) != 0 || s.times(a, 0) != 0) {
      rec.fail("zero-absorbing", {a});
      break;
    }
  }
  return report;
}

/// Checks the commutative monoid axioms and the five action identities.
/// Throws PreconditionError when `m` is not over `s`.
inline ValidationReport validate_semimodule(Semiring const& s,
                                            Semimodule const& m) {
  check_shape(m);
  if (!same_semiring(s, *m.semiring)) {
    throw PreconditionError("semimodule is over a different semiring");
  }
  ValidationReport report;
  detail::Recorder rec(report);
  std::size_t const n = m.order;
  std::size_t const k = s.order;
  detail::check_commutative_monoid(m.add, n, rec);
  for (Index a = 0; a < k && rec.open("action-associative"); ++a) {
    for (Index b = 0; b < k && rec.open("action-associative"); ++b) {
      for (Index x = 0; x < n; ++x) {
        if (m.scale(s.times(a, b), x) != m.scale(a, m.scale(b, x))) {
          rec.fail("action-associative", {a, b, x});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < k && rec.open("action-module-distributive"); ++a) {
    for (Index x = 0; x < n && rec.open("action-module-distributive"); ++x) {
      for (Index y = 0; y < n; ++y) {
        if (m.scale(a, m.plus(x, y)) != m.plus(m.scale(a, x), m.scale(a, y))) {
          rec.fail("action-module-distributive", {a, x, y});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < k && rec.open("action-scalar-distributive"); ++a) {
    for (Index b = 0; b < k && rec.open("action-scalar-distributive"); ++b) {
      for (Index x = 0; x < n; ++x) {
        if (m.scale(s.plus(a, b), x) != m.plus(m.scale(a, x), m.scale(b, x))) {
          rec.fail("action-scalar-distributive", {a, b, x});
          break;
        }
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (m.scale(s.one, x) != x) {
      rec.fail("unit-action", {s.one, x});
      break;
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (m.scale(0, x) != 0) {
      rec.fail("zero-scalar", {x});
      break;
    }
  }
  for (Index a = 0; a < k; ++a) {
    if (m.scale(a, 0) != 0) {
      rec.fail("scalar-zero", {a});
      break;
    }
  }
  return report;
}

inline ValidationReport validate_semimodule(Semimodule const& m) {
  check_shape(m);
  return validate_semimodule(*m.semiring, m);
}

inline ValidationReport validate_lattice(Lattice const& l) {
  check_shape(l);
  ValidationReport report;
  detail::Recorder rec(report);
  std::size_t const n = l.order;
  auto laws = [&](std::vector<Index> const& t, char const* idem,
                  char const* comm, char const* assoc) {
    auto op = [&](Index a, Index b) { return t[a * n + b]; };
    for (Index a = 0; a < n; ++a) {
      if (op(a, a) != a) {
        rec.fail(idem, {a});
        break;
      }
    }
    for (Index a = 0; a < n && rec.open(comm); ++a) {
      for (Index b = 0; b < n; ++b) {
        if (op(a, b) != op(b, a)) {
          rec.fail(comm, {a, b});
          break;
        }
      }
    }
    for (Index a = 0; a < n && rec.open(assoc); ++a) {
      for (Index b = 0; b < n && rec.open(assoc); ++b) {
        for (Index c = 0; c < n; ++c) {
          if (op(op(a, b), c) != op(a, op(b, c))) {
            rec.fail(assoc, {a, b, c});
            break;
          }
        }
      }
    }
  };
  laws(l.join, "join-idempotent", "join-commutative", "join-associative");
  laws(l.meet, "meet-idempotent", "meet-commutative", "meet-associative");
  for (Index a = 0; a < n && rec.open("absorption"); ++a) {
    for (Index b = 0; b < n; ++b) {
      if (l.vee(a, l.wedge(a, b)) != a || l.wedge(a, l.vee(a, b)) != a) {
        rec.fail("absorption", {a, b});
        break;
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (l.vee(l.bot, a) != a) {
      rec.fail("bot-identity", {a});
      break;
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (l.wedge(l.top, a) != a) {
      rec.fail("top-identity", {a});
      break;
    }
  }
  return report;
}

inline bool is_distributive(Lattice const& l) {
  for (Index a = 0; a < l.order; ++a) {
    for (Index b = 0; b < l.order; ++b) {
      for (Index c = 0; c < l.order; ++c) {
        if (l.wedge(a, l.vee(b, c)) != l.vee(l.wedge(a, b), l.wedge(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Checks f(0)=0, additivity and equivariance of a map between semimodules.
inline ValidationReport validate_morphism(Semimodule const& src,
                                          Semimodule const& dst,
                                          Map const& f) {
  if (!same_base(src, dst)) {
    throw PreconditionError("morphism endpoints over different semirings");
  }
  if (f.size() != src.order) {
    throw ShapeError("morphism map has wrong length");
  }
  for (Index y : f) {
    if (y >= dst.order) {
      throw ShapeError("morphism image out of range");
    }
  }
  ValidationReport report;
  detail::Recorder rec(report);
  if (f[0] != 0) {
    rec.fail("preserves-zero", {0});
  }
  for (Index a = 0; a < src.order && rec.open("additive"); ++a) {
    for (Index b = 0; b < src.order; ++b) {
      if (f[src.plus(a, b)] != dst.plus(f[a], f[b])) {
        rec.fail("additive", {a, b});
        break;
      }
    }
  }
  for (Index s = 0; s < src.scalars() && rec.open("equivariant"); ++s) {
    for (Index a = 0; a < src.order; ++a) {
      if (f[src.scale(s, a)] != dst.scale(s, f[a])) {
        rec.fail("equivariant", {s, a});
        break;
      }
    }
  }
  return report;
}

inline ValidationReport validate_morphism(Morphism const& f) {
  return validate_morphism(*f.source, *f.target, f.map);
}

inline bool is_morphism(Semimodule const& src, Semimodule const& dst,
                        Map const& f) {
  return validate_morphism(src, dst, f).ok();
}

inline ValidationReport validate_semiring_morphism(Semiring const& src,
                                                   Semiring const& dst,
                                                   Map const& h) {
  if (h.size() != src.order) {
    throw ShapeError("semiring morphism map has wrong length");
  }
  for (Index y : h) {
    if (y >= dst.order) {
      throw ShapeError("semiring morphism image out of range");
    }
  }
  ValidationReport report;
  detail::Recorder rec(report);
  if (h[0] != 0) {
    rec.fail("preserves-zero", {0});
  }
  if (h[src.one] != dst.one) {
    rec.fail("preserves-one", {src.one});
  }
  for (Index a = 0; a < src.order && rec.open("additive"); ++a) {
    for (Index b = 0; b < src.order; ++b) {
      if (h[src.plus(a, b)] != dst.plus(h[a], h[b])) {
        rec.fail("additive", {a, b});
        break;
      }
    }
  }
  for (Index a = 0; a < src.order && rec.open("multiplicative"); ++a) {
    for (Index b = 0; b < src.order; ++b) {
      if (h[src.times(a, b)] != dst.times(h[a], h[b])) {
        rec.fail("multiplicative", {a, b});
        break;
      }
    }
  }
  return report;
}

inline ValidationReport validate_semiring_morphism(SemiringMorphism const& h) {
  return validate_semiring_morphism(*h.source, *h.target, h.map);
}

/// Left-semimodule axioms of the carrier, mirrored right-action axioms and
/// commutation of the two actions.
inline ValidationReport validate_bisemimodule(Bisemimodule const& p) {
  ValidationReport report = validate_semimodule(*p.carrier);
  detail::Recorder rec(report);
  Semimodule const& m = *p.carrier;
  Semiring const& t = *p.right_semiring;
  check_shape(t);
  detail::check_table(p.right_act, m.order, t.order, m.order, "right_act");
  for (Index x = 0; x < m.order && rec.open("right-action-associative"); ++x) {
    for (Index a = 0; a < t.order && rec.open("right-action-associative");
         ++a) {
      for (Index b = 0; b < t.order; ++b) {
        if (p.right_scale(p.right_scale(x, a), b) !=
            p.right_scale(x, t.times(a, b))) {
          rec.fail("right-action-associative", {x, a, b});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < t.order && rec.open("right-module-distributive");
       ++a) {
    for (Index x = 0; x < m.order && rec.open("right-module-distributive");
         ++x) {
      for (Index y = 0; y < m.order; ++y) {
        if (p.right_scale(m.plus(x, y), a) !=
            m.plus(p.right_scale(x, a), p.right_scale(y, a))) {
          rec.fail("right-module-distributive", {x, y, a});
          break;
        }
      }
    }
  }
  for (Index x = 0; x < m.order && rec.open("right-scalar-distributive");
       ++x) {
    for (Index a = 0; a < t.order && rec.open("right-scalar-distributive");
         ++a) {
      for (Index b = 0; b < t.order; ++b) {
        if (p.right_scale(x, t.plus(a, b)) !=
            m.plus(p.right_scale(x, a), p.right_scale(x, b))) {
          rec.fail("right-scalar-distributive", {x, a, b});
          break;
        }
      }
    }
  }
  for (Index x = 0; x < m.order; ++x) {
    if (p.right_scale(x, t.one) != x) {
      rec.fail("right-unit-action", {x});
      break;
    }
    if (p.right_scale(x, 0) != 0) {
      rec.fail("right-zero-scalar", {x});
      break;
    }
  }
  for (Index a = 0; a < t.order; ++a) {
    if (p.right_scale(0, a) != 0) {
      rec.fail("right-scalar-zero", {a});
      break;
    }
  }
  for (Index s = 0; s < m.scalars() && rec.open("actions-commute"); ++s) {
    for (Index x = 0; x < m.order && rec.open("actions-commute"); ++x) {
      for (Index a = 0; a < t.order; ++a) {
        if (p.right_scale(m.scale(s, x), a) !=
            m.scale(s, p.right_scale(x, a))) {
          rec.fail("actions-commute", {s, x, a});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_VALIDATE_HPP_

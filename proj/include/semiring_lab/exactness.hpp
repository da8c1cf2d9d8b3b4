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

// Kernels, cokernels, short exact sequences, hom-semimodules and change of
// scalars.

#ifndef SEMIRING_LAB_EXACTNESS_HPP_
#define SEMIRING_LAB_EXACTNESS_HPP_

#include <string>
#include <vector>

#include "semiring_lab/congruences.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/substructures.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

/// A subsemimodule as a semimodule of its own; element i is members[i].
inline Semimodule as_module(SubSet const& a) {
  Semimodule const& m = *a.parent;
  std::size_t const k = a.size();
  std::vector<Index> pos(m.order, 0);
  for (Index i = 0; i < k; ++i) {
    pos[a.members[i]] = i;
  }
  Semimodule out;
  out.semiring = m.semiring;
  out.order = k;
  out.add.resize(k * k);
  out.act.resize(m.scalars() * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      out.add[i * k + j] = pos[m.plus(a.members[i], a.members[j])];
    }
    for (Index s = 0; s < m.scalars(); ++s) {
      out.act[s * k + i] = pos[m.scale(s, a.members[i])];
    }
  }
  out.name = m.name + "|sub";
  return out;
}

inline Morphism zero_morphism(SemimodulePtr const& a, SemimodulePtr const& b) {
  return {a, b, Map(a->order, 0)};
}

inline Morphism identity_morphism(SemimodulePtr const& a) {
  return {a, a, identity_map(a->order)};
}

/// outer after inner.
inline Morphism compose(Morphism const& outer, Morphism const& inner) {
  return {inner.source, outer.target, compose(outer.map, inner.map)};
}

// Kernels and cokernels ---------------------------------------------------------

struct KernelObject {
  SemimodulePtr object;
  Morphism inclusion;
};

inline KernelObject kernel_obj(Morphism const& g) {
  std::vector<Index> zeros;
  for (Index x = 0; x < g.source->order; ++x) {
    if (g.map[x] == 0) {
      zeros.push_back(x);
    }
  }
  SubSet k = SubSet::of(g.source, zeros);
  auto obj = share(as_module(k));
  return {obj, {obj, g.source, k.members}};
}

struct CokernelObject {
  Morphism projection;
  SemimodulePtr object;
};

/// Target modulo the Bourne congruence of the image.
inline CokernelObject cokernel_obj(Morphism const& f) {
  SubSet im = SubSet::of(f.target, f.map);
  Quotient q = quotient_by(im);
  auto obj = share(std::move(q.module));
  return {{f.target, obj, q.projection}, obj};
}

/// Every x: X -> B with g x = 0 factors uniquely through k, for every test
/// object X. Witness: (test index, offending map) on failure.
inline Check kernel_universal(Morphism const& g, KernelObject const& k,
                              std::vector<SemimodulePtr> const& tests) {
  for (Index t = 0; t < tests.size(); ++t) {
    auto factors = hom_maps(*tests[t], *k.object);
    for (auto const& x : hom_maps(*tests[t], *g.source)) {
      if (compose(g.map, x) != Map(x.size(), 0)) {
        continue;
      }
      std::size_t count = 0;
      for (auto const& u : factors) {
        count += compose(k.inclusion.map, u) == x;
      }
      if (count != 1) {
        std::vector<Index> w{t};
        w.insert(w.end(), x.begin(), x.end());
        return Check::fail(std::move(w));
      }
    }
  }
  return Check::pass();
}

/// Every y: B -> Y with y f = 0 factors uniquely through p.
inline Check cokernel_universal(Morphism const& f, CokernelObject const& c,
                                std::vector<SemimodulePtr> const& tests) {
  for (Index t = 0; t < tests.size(); ++t) {
    auto factors = hom_maps(*c.object, *tests[t]);
    for (auto const& y : hom_maps(*f.target, *tests[t])) {
      if (compose(y, f.map) != Map(f.map.size(), 0)) {
        continue;
      }
      std::size_t count = 0;
      for (auto const& u : factors) {
        count += compose(u, c.projection.map) == y;
      }
      if (count != 1) {
        std::vector<Index> w{t};
        w.insert(w.end(), y.begin(), y.end());
        return Check::fail(std::move(w));
      }
    }
  }
  return Check::pass();
}

// Short exact sequences ----------------------------------------------------------

struct ExactnessDiagnosis {
  bool composite_zero = false;
  bool kernel_half = false;    // (A, f) = ker g
  bool cokernel_half = false;  // (g, C) = coker f
  std::string diagnosis;

  bool exact() const { return composite_zero && kernel_half && cokernel_half; }
};

/// 0 -> A -f-> B -g-> C -> 0.
inline ExactnessDiagnosis is_short_exact(Morphism const& f, Morphism const& g) {
  ExactnessDiagnosis d;
  if (!same_base(*f.target, *g.source) || f.target->order != g.source->order) {
    throw PreconditionError("is_short_exact: f and g are not composable");
  }
  d.composite_zero = compose(g.map, f.map) == Map(f.map.size(), 0);
  if (!d.composite_zero) {
    d.diagnosis = "g after f is not zero";
    return d;
  }
  bool injective = is_injective_map(f.map, f.target->order);
  std::vector<char> in_image(f.target->order, 0);
  for (Index y : f.map) {
    in_image[y] = 1;
  }
  bool image_is_kernel = true;
  for (Index b = 0; b < g.source->order; ++b) {
    image_is_kernel = image_is_kernel && ((g.map[b] == 0) == (in_image[b] != 0));
  }
  d.kernel_half = injective && image_is_kernel;
  // induced map B / Im f -> C must be bijective
  CokernelObject c = cokernel_obj(f);
  Map induced(c.object->order, std::numeric_limits<Index>::max());
  bool well_defined = true;
  for (Index b = 0; b < g.source->order; ++b) {
    Index cls = c.projection.map[b];
    if (induced[cls] == std::numeric_limits<Index>::max()) {
      induced[cls] = g.map[b];
    } else if (induced[cls] != g.map[b]) {
      well_defined = false;
    }
  }
  d.cokernel_half = well_defined && induced.size() == g.target->order &&
                    is_injective_map(induced, g.target->order);
  if (d.exact()) {
    d.diagnosis = "exact";
  } else if (!d.kernel_half && !d.cokernel_half) {
    d.diagnosis = "both halves fail";
  } else if (!d.kernel_half) {
    d.diagnosis = injective ? "kernel half fails: im f differs from g^-1(0)"
                            : "kernel half fails: f is not injective";
  } else {
    d.diagnosis =
        "cokernel half fails: B/Im(f) -> C is not an isomorphism (" +
        std::to_string(c.object->order) + " vs " +
        std::to_string(g.target->order) + " elements)";
  }
  return d;
}

// Bisemimodules and hom-semimodules ----------------------------------------------

/// S as an (S, S)-bisemimodule.
inline Bisemimodule regular_bisemimodule(SemiringPtr const& s) {
  return {s, share(regular_module(s)), s->mul};
}

/// T as an (S, T)-bisemimodule through h: S -> T (left action s.t = h(s) t).
inline Bisemimodule bisemimodule_via(SemiringMorphism const& h) {
  auto r = validate_semiring_morphism(h);
  if (!r.ok()) {
    throw PreconditionError("not a semiring homomorphism: " + r.summary());
  }
  Semiring const& t = *h.target;
  Semimodule left;
  left.semiring = h.source;
  left.order = t.order;
  left.add = t.add;
  left.act.resize(h.source->order * t.order);
  for (Index s = 0; s < h.source->order; ++s) {
    for (Index x = 0; x < t.order; ++x) {
      left.act[s * t.order + x] = t.times(h.map[s], x);
    }
  }
  left.name = t.name;
  return {h.target, share(std::move(left)), t.mul};
}

/// S / theta as an (S, S/theta)-bisemimodule.
inline Bisemimodule quotient_bisemimodule(SemiringPtr const& s,
                                          Congruence const& theta) {
  SemiringQuotient q = quotient(*s, theta);
  auto qs = share(q.semiring);
  return bisemimodule_via({s, qs, q.projection});
}

struct HomSemimodule {
  Semimodule module;        // over the right semiring of P
  std::vector<Map> maps;    // element i is maps[i]: P -> M
};

/// Hom_S(P, M) with pointwise addition and (t f)(p) = f(p t).
inline HomSemimodule hom_semimodule(Bisemimodule const& p,
                                    SemimodulePtr const& m) {
  auto r = validate_bisemimodule(p);
  if (!r.ok()) {
    throw PreconditionError("hom_semimodule: invalid bisemimodule: " +
                            r.summary());
  }
  HomSemimodule out;
  out.maps = hom_maps(*p.carrier, *m);  // sorted: the zero map comes first
  std::map<Map, Index> index;
  for (Index i = 0; i < out.maps.size(); ++i) {
    index.emplace(out.maps[i], i);
  }
  std::size_t const k = out.maps.size();
  Semiring const& t = *p.right_semiring;
  std::size_t const pn = p.carrier->order;
  out.module.semiring = p.right_semiring;
  out.module.order = k;
  out.module.add.resize(k * k);
  out.module.act.resize(t.order * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      out.module.add[a * k + b] =
          index.at(pointwise_sum(*m, out.maps[a], out.maps[b]));
    }
    for (Index s = 0; s < t.order; ++s) {
      Map g(pn);
      for (Index x = 0; x < pn; ++x) {
        g[x] = out.maps[a][p.right_scale(x, s)];
      }
      out.module.act[s * k + a] = index.at(g);
    }
  }
  out.module.name = "Hom(" + p.carrier->name + "," + m->name + ")";
  return out;
}

/// M over T seen over S through h: s.m = h(s) m.
inline Semimodule restrict_scalars(SemiringMorphism const& h,
                                   Semimodule const& m) {
  auto r = validate_semiring_morphism(h);
  if (!r.ok()) {
    throw PreconditionError("not a semiring homomorphism: " + r.summary());
  }
  if (!same_semiring(*m.semiring, *h.target)) {
    throw PreconditionError("restrict_scalars: module is not over the target");
  }
  Semimodule out;
  out.semiring = h.source;
  out.order = m.order;
  out.add = m.add;
  out.act.resize(h.source->order * m.order);
  for (Index s = 0; s < h.source->order; ++s) {
    for (Index x = 0; x < m.order; ++x) {
      out.act[s * m.order + x] = m.scale(h.map[s], x);
    }
  }
  out.name = m.name;
  return out;
}

/// Hom_S(T, M) as a T-semimodule, T an (S, T)-bisemimodule through h.
inline HomSemimodule extend_hom(SemiringMorphism const& h,
                                SemimodulePtr const& m) {
  if (!same_semiring(*m->semiring, *h.source)) {
    throw PreconditionError("extend_hom: module is not over the source");
  }
  return hom_semimodule(bisemimodule_via(h), m);
}

/// The semiring embedding B -> S for additively idempotent S (0 -> 0,
/// 1 -> 1).
inline SemiringMorphism boolean_embedding(SemiringPtr const& s) {
  return {share(boolean_semiring()), s, {0, s->one}};
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_EXACTNESS_HPP_

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

// Injectivity and e-injectivity relative to a finite universe of test
// inclusions A <= B.
//
// For a pair (B, A) and a target M:
//   (E) every phi: A -> M extends to some psi: B -> M;
//   (C) whenever psi1|A = psi2|A there are chi1, chi2: B -> M vanishing on A
//       with psi1 + chi1 = psi2 + chi2.
// e-injectivity asks (E) and (C) over subtractive inclusions; injectivity
// asks (E) over all inclusions.

#ifndef SEMIRING_LAB_INJECTIVITY_HPP_
#define SEMIRING_LAB_INJECTIVITY_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/exactness.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/parallel.hpp"
#include "semiring_lab/substructures.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

struct UniversePair {
  SemimodulePtr b;
  SubSet a;
  SemimodulePtr a_module;  // A as a semimodule; element i is a.members[i]
};

struct TestUniverse {
  SemiringPtr semiring;
  std::vector<UniversePair> pairs;
  bool subtractive_only = false;
  std::size_t max_size = 0;
  std::string label;

  void add(SemimodulePtr b, SubSet a) {
    auto am = share(as_module(a));
    pairs.push_back({std::move(b), std::move(a), std::move(am)});
  }
};

/// Pairs (B, A): B a catalog representative of order <= max_size, A a
/// (subtractive, if requested) subsemimodule of B.
inline TestUniverse build_universe(CatalogStore const& catalog,
                                   std::size_t max_size,
                                   bool subtractive_only) {
  if (catalog.max_order < max_size) {
    throw PreconditionError(
        "no catalog covering order " + std::to_string(max_size) + " for " +
        catalog.semiring->name + " (available: " +
        std::to_string(catalog.max_order) +
        "); run `semiring-lab enumerate` with --max-size " +
        std::to_string(max_size) + " first");
  }
  TestUniverse u;
  u.semiring = catalog.semiring;
  u.subtractive_only = subtractive_only;
  u.max_size = max_size;
  u.label = std::string(subtractive_only ? "U" : "Uall") +
            std::to_string(max_size) + "(" + catalog.semiring->name + ")";
  for (auto const& m : catalog.entries) {
    if (m.order > max_size) {
      continue;
    }
    auto b = share(m);
    for (auto& a : subsemimodules(b)) {
      if (!subtractive_only || is_subtractive(a).holds) {
        u.add(b, std::move(a));
      }
    }
  }
  return u;
}

/// Convenience: enumerate the catalog and build the universe in one go.
inline TestUniverse universe_for(SemiringPtr const& s, std::size_t max_size,
                                 bool subtractive_only, bool force = false,
                                 unsigned jobs = 1) {
  return build_universe(enumerate_semimodules(s, max_size, force, jobs),
                        max_size, subtractive_only);
}

/// Sub-universe with the first `count` pairs.
inline TestUniverse prefix(TestUniverse const& u, std::size_t count) {
  TestUniverse out = u;
  out.pairs.resize(std::min(count, u.pairs.size()));
  return out;
}

// Witnesses -----------------------------------------------------------------------

enum class WitnessKind { kExtension, kCokernel };

inline char const* to_string(WitnessKind k) {
  return k == WitnessKind::kExtension ? "extension-failure" : "cokernel-failure";
}

struct Witness {
  std::size_t pair_index = 0;
  WitnessKind kind = WitnessKind::kExtension;
  Map phi;  // A -> M, indexed by position in A's member list
  std::optional<Map> psi1, psi2;  // B -> M
};

struct InjectivityResult {
  bool pass = true;
  std::optional<Witness> witness;
  std::size_t pairs = 0;
  std::string universe;
};

namespace detail {

inline Map restrict_to(Map const& psi, SubSet const& a) {
  Map out;
  out.reserve(a.size());
  for (Index x : a.members) {
    out.push_back(psi[x]);
  }
  return out;
}

/// First failure of (E), and of (C) when `cokernel`, for one pair.
inline std::optional<Witness> check_pair(Semimodule const& m,
                                         UniversePair const& p, bool cokernel) {
  std::vector<Map> homs_b = hom_maps(*p.b, m);
  std::vector<Map> homs_a = hom_maps(*p.a_module, m);
  std::map<Map, std::vector<std::size_t>> by_restriction;
  for (std::size_t i = 0; i < homs_b.size(); ++i) {
    by_restriction[restrict_to(homs_b[i], p.a)].push_back(i);
  }
  std::vector<Map const*> vanishing;
  if (cokernel) {
    auto it = by_restriction.find(Map(p.a.size(), 0));
    if (it != by_restriction.end()) {
      for (std::size_t i : it->second) {
        vanishing.push_back(&homs_b[i]);
      }
    }
  }
  for (auto const& phi : homs_a) {
    auto it = by_restriction.find(phi);
    if (it == by_restriction.end()) {
      return Witness{0, WitnessKind::kExtension, phi, std::nullopt, std::nullopt};
    }
    if (!cokernel || it->second.size() < 2) {
      continue;
    }
    auto const& group = it->second;
    std::vector<std::set<Map>> shifted(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (Map const* chi : vanishing) {
        shifted[i].insert(pointwise_sum(m, homs_b[group[i]], *chi));
      }
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        bool meet = false;
        for (auto const& x : shifted[i]) {
          if (shifted[j].count(x)) {
            meet = true;
            break;
          }
        }
        if (!meet) {
          return Witness{0, WitnessKind::kCokernel, phi, homs_b[group[i]],
                         homs_b[group[j]]};
        }
      }
    }
  }
  return std::nullopt;
}

inline InjectivityResult run_universe(Semimodule const& m, TestUniverse const& u,
                                      bool cokernel, unsigned jobs) {
  for (auto const& p : u.pairs) {
    if (!same_base(m, *p.b)) {
      throw PreconditionError("module and universe are over different semirings");
    }
  }
  std::function<std::optional<Witness>(std::size_t)> task =
      [&](std::size_t i) { return check_pair(m, u.pairs[i], cokernel); };
  auto found = first_failure<Witness>(u.pairs.size(), jobs, task);
  InjectivityResult r;
  r.pairs = u.pairs.size();
  r.universe = u.label;
  if (found) {
    r.pass = false;
    r.witness = std::move(found->second);
    r.witness->pair_index = found->first;
  }
  return r;
}

}  // namespace detail

inline InjectivityResult is_einjective_rel(Semimodule const& m,
                                           TestUniverse const& u,
                                           unsigned jobs = 1) {
  if (!u.subtractive_only) {
    throw PreconditionError(
        "is_einjective_rel needs a universe of subtractive inclusions");
  }
  return detail::run_universe(m, u, true, jobs);
}

inline InjectivityResult is_injective_rel(Semimodule const& m,
                                          TestUniverse const& u,
                                          unsigned jobs = 1) {
  if (u.subtractive_only) {
    throw PreconditionError("is_injective_rel needs a universe of all inclusions");
  }
  return detail::run_universe(m, u, false, jobs);
}

// Independent re-validation --------------------------------------------------------

namespace detail {

/// Homomorphisms src -> dst by assigning elements in index order and
/// checking every law whose operands are already assigned. Shares no code
/// with the generator-based search.
inline std::vector<Map> brute_homs(Semimodule const& src, Semimodule const& dst) {
  std::size_t const n = src.order;
  std::vector<Map> out;
  Map f(n, 0);
  std::function<void(Index)> go = [&](Index x) {
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (Index y = 0; y < dst.order; ++y) {
      if (x == 0 && y != 0) {
        break;
      }
      f[x] = y;
      bool ok = true;
      for (Index a = 0; a <= x && ok; ++a) {
        for (Index b = 0; b <= x && ok; ++b) {
          Index c = src.plus(a, b);
          if (c <= x) {
            ok = f[c] == dst.plus(f[a], f[b]);
          }
        }
        for (Index s = 0; s < src.scalars() && ok; ++s) {
          Index c = src.scale(s, a);
          if (c <= x) {
            ok = f[c] == dst.scale(s, f[a]);
          }
        }
      }
      if (ok) {
        go(x + 1);
      }
    }
  };
  go(0);
  return out;
}

}  // namespace detail

/// Re-checks a witness against the pair it names, by brute force.
inline Check revalidate_witness(Semimodule const& m, TestUniverse const& u,
                                Witness const& w) {
  if (w.pair_index >= u.pairs.size()) {
    return Check::fail({});
  }
  UniversePair const& p = u.pairs[w.pair_index];
  if (w.phi.size() != p.a.size() || !is_morphism(*p.a_module, m, w.phi)) {
    return Check::fail({0});
  }
  std::vector<Map> homs = detail::brute_homs(*p.b, m);
  if (w.kind == WitnessKind::kExtension) {
    for (auto const& psi : homs) {
      if (detail::restrict_to(psi, p.a) == w.phi) {
        return Check::fail({1});
      }
    }
    return Check::pass();
  }
  if (!w.psi1 || !w.psi2 || !is_morphism(*p.b, m, *w.psi1) ||
      !is_morphism(*p.b, m, *w.psi2) ||
      detail::restrict_to(*w.psi1, p.a) != w.phi ||
      detail::restrict_to(*w.psi2, p.a) != w.phi) {
    return Check::fail({2});
  }
  Map zero(p.a.size(), 0);
  std::vector<Map> vanishing;
  for (auto const& chi : homs) {
    if (detail::restrict_to(chi, p.a) == zero) {
      vanishing.push_back(chi);
    }
  }
  for (auto const& c1 : vanishing) {
    for (auto const& c2 : vanishing) {
      if (pointwise_sum(m, *w.psi1, c1) == pointwise_sum(m, *w.psi2, c2)) {
        return Check::fail({3});
      }
    }
  }
  return Check::pass();
}

inline Json to_json(Witness const& w, TestUniverse const& u) {
  UniversePair const& p = u.pairs.at(w.pair_index);
  Json j = {{"pair_index", w.pair_index},
            {"kind", to_string(w.kind)},
            {"B", to_json(*p.b, false)},
            {"A", p.a.members},
            {"phi", w.phi}};
  if (w.psi1) {
    j["psi1"] = *w.psi1;
  }
  if (w.psi2) {
    j["psi2"] = *w.psi2;
  }
  return j;
}

// Retracts and families ----------------------------------------------------------------

struct Retraction {
  Map section;     // M -> Q
  Map retraction;  // Q -> M
};

/// Section s: M -> Q and retraction r: Q -> M with r s = id.
inline std::optional<Retraction> is_retract(Semimodule const& m,
                                            Semimodule const& q) {
  if (!same_base(m, q)) {
    throw PreconditionError("is_retract: different semirings");
  }
  if (m.order > q.order) {
    return std::nullopt;
  }
  HomSearchOptions opts;
  opts.injective = true;
  std::optional<Retraction> out;
  HomSearcher sections(OpView::of(m), OpView::of(q), opts);
  sections.run([&](Map const& s) {
    std::vector<Index> pre(q.order, HomSearchOptions::kFree);
    for (Index x = 0; x < m.order; ++x) {
      pre[s[x]] = x;
    }
    if (auto r = find_extension(q, m, pre)) {
      out = Retraction{s, *r};
      return false;
    }
    return true;
  });
  return out;
}

enum class FamilyMode { kProduct, kSum };

struct FamilyReport {
  std::vector<bool> members_pass;
  bool all_members_pass = true;
  bool combined_pass = true;
  bool biconditional = true;
  bool zerosumfree = false;
  std::optional<Witness> combined_witness;
};

/// Compares "every member passes" with "the direct product/sum passes".
/// Finite products and sums coincide.
inline FamilyReport check_family_closure(SemiringPtr const& s,
                                         std::vector<Semimodule> const& family,
                                         TestUniverse const& u,
                                         FamilyMode /*mode*/ = FamilyMode::kProduct,
                                         unsigned jobs = 1) {
  FamilyReport r;
  for (auto const& m : family) {
    bool ok = is_einjective_rel(m, u, jobs).pass;
    r.members_pass.push_back(ok);
    r.all_members_pass = r.all_members_pass && ok;
  }
  Semimodule combined = direct_product(s, family);
  auto res = is_einjective_rel(combined, u, jobs);
  r.combined_pass = res.pass;
  r.combined_witness = res.witness;
  r.biconditional = r.combined_pass == r.all_members_pass;
  r.zerosumfree = detail::zerosumfree_check(*s).holds;
  return r;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_INJECTIVITY_HPP_

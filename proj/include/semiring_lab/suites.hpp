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

// Verification suites: each runs a family of quantified checks over bounded
// catalogs and universes and returns a versioned JSON report.
//
// Assertion status is one of
//   pass                  the claim held on everything checked
//   fail                  a counterexample was found (embedded in the detail)
//   refuted-with-witness  an object predicted NOT to have a property was
//                         exhibited together with a re-checked witness
// A report is "confirmed" when no assertion failed.

#ifndef SEMIRING_LAB_SUITES_HPP_
#define SEMIRING_LAB_SUITES_HPP_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semiring_lab/canonical.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruences.hpp"
#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/exactness.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/injectivity.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/substructures.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

inline constexpr int kReportSchemaVersion = 1;

inline constexpr char kEndReadingNote[] =
    "End(L) is read as the semiring of join- and bottom-preserving self-maps "
    "of L (pointwise join, composition, identity, constant bottom)";

inline constexpr char kRelativeNote[] =
    "injectivity verdicts are relative to the named finite universe of test "
    "inclusions, not absolute";

enum class Status { kPass, kFail, kRefuted };

inline char const* to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kRefuted:
      return "refuted-with-witness";
  }
  return "fail";
}

struct Assertion {
  std::string id;
  std::string semiring;
  std::string claim;
  Status status = Status::kPass;
  std::size_t checked = 0;
  Json detail = Json::object();
};

struct SuiteOptions {
  std::vector<std::string> semirings;  // refs; empty selects the suite default
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> universe_max;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string suite;
  std::vector<SemiringPtr> semirings;
  std::size_t max_size = 0;
  std::size_t universe_bound = 0;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;

  bool confirmed() const {
    for (auto const& a : assertions) {
      if (a.status == Status::kFail) {
        return false;
      }
    }
    return true;
  }

  Assertion& add(Assertion a) {
    assertions.push_back(std::move(a));
    return assertions.back();
  }

  /// `wall_time` is written only when given, so reports stay reproducible.
  Json to_json(std::optional<double> wall_time = std::nullopt) const {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = suite;
    j["tool_version"] = kToolVersion;
    j["max_size"] = max_size;
    j["universe_bound"] = universe_bound;
    Json rings = Json::array();
    for (auto const& s : semirings) {
      rings.push_back(semiring_lab::to_json(*s));
    }
    j["semirings"] = std::move(rings);
    Json list = Json::array();
    std::map<std::string, std::size_t> counts{
        {"pass", 0}, {"fail", 0}, {"refuted-with-witness", 0}};
    for (auto const& a : assertions) {
      ++counts[to_string(a.status)];
      list.push_back({{"id", a.id},
                      {"semiring", a.semiring},
                      {"claim", a.claim},
                      {"status", to_string(a.status)},
                      {"checked", a.checked},
                      {"detail", a.detail}});
    }
    j["assertions"] = std::move(list);
    j["counts"] = counts;
    j["notes"] = notes;
    j["verdict"] = confirmed() ? "confirmed" : "not-confirmed";
    if (wall_time) {
      j["wall_time_seconds"] = *wall_time;
    }
    return j;
  }
};

/// Catalogs and universes shared by the checks of one suite run.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteOptions o) : opts_(std::move(o)) {}

  unsigned jobs() const { return std::max(1u, opts_.jobs); }
  std::size_t max_size(std::size_t def) const {
    return opts_.max_size.value_or(def);
  }
  std::size_t universe_max(std::size_t def) const {
    return opts_.universe_max.value_or(def);
  }

  /// The user's semirings, or `defaults` when none were given.
  std::vector<SemiringPtr> semirings(std::vector<Semiring> defaults) {
    std::vector<SemiringPtr> out;
    if (opts_.semirings.empty()) {
      for (auto& s : defaults) {
        out.push_back(intern(share(std::move(s))));
      }
    } else {
      for (auto const& ref : opts_.semirings) {
        Semiring s = load_semiring(ref);
        auto r = validate_semiring(s);
        if (!r.ok()) {
          throw FormatError(ref + " is not a semiring: " + r.summary());
        }
        out.push_back(intern(share(std::move(s))));
      }
    }
    return out;
  }

  /// One shared pointer per distinct semiring table.
  SemiringPtr intern(SemiringPtr const& s) {
    for (auto const& t : interned_) {
      if (*t == *s) {
        return t;
      }
    }
    interned_.push_back(s);
    return s;
  }

  /// Suites build the catalogs they need; the bounds they use are their
  /// own authorisation, so the forced guard applies.
  CatalogStore const& catalog(SemiringPtr const& s, std::size_t k) {
    auto key = std::make_pair(Json(to_json(*s)).dump(), k);
    auto it = catalogs_.find(key);
    if (it == catalogs_.end()) {
      it = catalogs_.emplace(key, enumerate_semimodules(s, k, true, jobs())).first;
    }
    return it->second;
  }

  TestUniverse const& universe(SemiringPtr const& s, std::size_t k,
                               bool subtractive) {
    auto key = std::make_tuple(Json(to_json(*s)).dump(), k, subtractive);
    auto it = universes_.find(key);
    if (it == universes_.end()) {
      it = universes_.emplace(key, build_universe(catalog(s, k), k, subtractive))
               .first;
    }
    return it->second;
  }

 private:
  SuiteOptions opts_;
  std::vector<SemiringPtr> interned_;
  std::map<std::pair<std::string, std::size_t>, CatalogStore> catalogs_;
  std::map<std::tuple<std::string, std::size_t, bool>, TestUniverse> universes_;
};

namespace detail {

/// A witness with the module it refutes and its independent re-check.
inline Json witness_entry(Semimodule const& m, TestUniverse const& u,
                          Witness const& w, bool* ok = nullptr) {
  Json j = to_json(w, u);
  bool valid = revalidate_witness(m, u, w).holds;
  j["module"] = to_json(m, false);
  j["universe"] = u.label;
  j["revalidated"] = valid;
  if (ok != nullptr) {
    *ok = valid;
  }
  return j;
}

/// Collects exceptions for one grouped assertion.
struct Tally {
  std::size_t checked = 0;
  Json exceptions = Json::array();

  void check(bool holds, Json const& what) {
    ++checked;
    if (!holds) {
      exceptions.push_back(what);
    }
  }

  Assertion finish(std::string id, std::string const& semiring,
                   std::string claim) const {
    Assertion a{std::move(id), semiring, std::move(claim),
                exceptions.empty() ? Status::kPass : Status::kFail, checked,
                Json::object()};
    if (!exceptions.empty()) {
      a.detail["exceptions"] = exceptions;
    }
    return a;
  }
};

inline Json module_ref(Semimodule const& m) {
  return {{"name", m.name}, {"order", m.order}};
}

/// The first cyclic module failing e-injectivity over `u`, with its witness.
struct CyclicScan {
  bool all_pass = true;
  std::size_t count = 0;
  Json failure;  // witness entry of the first failure
  bool witness_ok = true;
};

inline CyclicScan scan_modules(std::vector<Semimodule> const& mods,
                               TestUniverse const& u, unsigned jobs) {
  CyclicScan r;
  for (auto const& m : mods) {
    ++r.count;
    auto res = is_einjective_rel(m, u, jobs);
    if (!res.pass) {
      r.all_pass = false;
      r.failure = witness_entry(m, u, *res.witness, &r.witness_ok);
      break;
    }
  }
  return r;
}

inline std::vector<Semimodule> with_semiring(std::vector<Semimodule> mods,
                                             SemiringPtr const& s) {
  for (auto& m : mods) {
    m.semiring = s;
  }
  return mods;
}

inline bool isomorphic_semirings(Semiring const& a, Semiring const& b) {
  return a.order == b.order && canonical_key(a) == canonical_key(b);
}

inline Index sum_all(Semimodule const& m) {
  Index acc = 0;
  for (Index x = 0; x < m.order; ++x) {
    acc = m.plus(acc, x);
  }
  return acc;
}

/// One-pair universe (B, A) with A given by members.
inline TestUniverse single_pair(SemiringPtr const& s, SemimodulePtr const& b,
                                std::vector<Index> const& members,
                                std::string label) {
  TestUniverse u;
  u.semiring = s;
  u.subtractive_only = true;
  u.max_size = b->order;
  u.label = std::move(label);
  u.add(b, SubSet::of(b, members));
  return u;
}

}  // namespace detail

// Characterisation over additively idempotent division semirings ----------------

inline SuiteReport suite_t4_4(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "T4.4";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(rep.max_size);
  rep.semirings = ctx.semirings({boolean_semiring()});
  rep.notes.push_back(kRelativeNote);
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Check idem = detail::idempotent_check(*s);
    Check div = detail::division_check(*s);
    Assertion pre{"premise", sn,
                  "the semiring is additively idempotent and a division semiring",
                  idem && div ? Status::kPass : Status::kFail, 1,
                  Json::object()};
    if (!idem || !div) {
      pre.detail["idempotent_witness"] = idem.witness;
      pre.detail["division_witness"] = div.witness;
      rep.add(std::move(pre));
      continue;
    }
    rep.add(std::move(pre));
    auto const& cat = ctx.catalog(s, rep.max_size);
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    auto const& uall = ctx.universe(s, rep.universe_bound, false);
    bool ext_ok = detail::entire_check(*s) && detail::zerosumfree_check(*s);

    detail::Tally finite_inf, finite_einj, bicond, inj_implies, embed;
    for (auto const& m : cat.entries) {
      auto inf = infinite_elements(m);
      Index sum = detail::sum_all(m);
      finite_inf.check(inf.size() == 1 && inf[0] == sum,
                       {{"module", to_json(m, false)}, {"sum", sum}});
      auto res = is_einjective_rel(m, u, ctx.jobs());
      Json fail_entry = res.pass ? Json(detail::module_ref(m))
                                 : detail::witness_entry(m, u, *res.witness);
      finite_einj.check(res.pass, fail_entry);
      bicond.check(res.pass == !inf.empty(),
                   {{"module", detail::module_ref(m)},
                    {"einjective", res.pass},
                    {"has_infinite", !inf.empty()}});
      auto inj = is_injective_rel(m, uall, ctx.jobs());
      inj_implies.check(!inj.pass || res.pass,
                        {{"module", detail::module_ref(m)}});
      if (ext_ok) {
        auto mp = share(m);
        Extension e = ext_adjoin_infinity(mp);
        auto ep = share(e.module);
        bool hom = is_morphism(m, e.module, e.mu) && is_injective_map(e.mu, ep->order);
        auto er = is_einjective_rel(e.module, u, ctx.jobs());
        embed.check(hom && er.pass && !infinite_elements(e.module).empty(),
                    er.pass ? Json(detail::module_ref(m))
                            : detail::witness_entry(e.module, u, *er.witness));
      }
    }
    rep.add(finite_inf.finish(
        "finite-has-infinite", sn,
        "every finite module has a unique infinite element, the sum of all "
        "its elements"));
    rep.add(finite_einj.finish("finite-einjective", sn,
                               "every finite module is e-injective"));
    rep.add(bicond.finish("einjective-iff-infinite", sn,
                          "e-injective exactly when an infinite element exists"));
    rep.add(inj_implies.finish("injective-implies-einjective", sn,
                               "injective modules are e-injective"));
    if (ext_ok) {
      rep.add(embed.finish(
          "embeds-in-einjective", sn,
          "M embeds into M plus an adjoined infinite element, which is "
          "e-injective"));
    }
    // regular module versus isomorphism with B
    auto reg = regular_module(s);
    auto rr = is_einjective_rel(reg, u, ctx.jobs());
    bool is_b = detail::isomorphic_semirings(*s, boolean_semiring());
    Assertion a{"regular-einjective-iff-boolean", sn,
                "the regular module is e-injective exactly when the semiring "
                "is B",
                rr.pass == is_b ? Status::kPass : Status::kFail, 1,
                {{"regular_einjective", rr.pass}, {"isomorphic_to_B", is_b}}};
    rep.add(std::move(a));
  }

  // M <= Hom_B(S, Ext(M)) over an additively idempotent semiring
  auto chain3 = ctx.intern(share(builtin_semiring("chain3")));
  std::size_t const k = std::min<std::size_t>(rep.universe_bound, 3);
  auto const& cu = ctx.universe(chain3, k, true);
  detail::Tally emb;
  auto h = boolean_embedding(chain3);
  for (auto const& m : ctx.catalog(chain3, k).entries) {
    auto mb = share(restrict_scalars(h, m));
    Extension e = ext_adjoin_infinity(mb);
    HomSemimodule q = extend_hom(h, share(e.module));
    // m -> (t -> t m)
    std::map<Map, Index> index;
    for (Index i = 0; i < q.maps.size(); ++i) {
      index.emplace(q.maps[i], i);
    }
    Map iota(m.order);
    bool found = true;
    for (Index x = 0; x < m.order && found; ++x) {
      Map f(chain3->order);
      for (Index t = 0; t < chain3->order; ++t) {
        f[t] = m.scale(t, x);
      }
      auto it = index.find(f);
      found = it != index.end();
      iota[x] = found ? it->second : 0;
    }
    bool embeds = found && is_morphism(m, q.module, iota) &&
                  is_injective_map(iota, q.module.order);
    auto r = is_einjective_rel(q.module, cu, ctx.jobs());
    emb.check(embeds && r.pass,
              {{"module", to_json(m, false)},
               {"embeds", embeds},
               {"target_order", q.module.order},
               {"target_einjective", r.pass}});
  }
  rep.add(emb.finish(
      "idempotent-embedding", chain3->name,
      "over an additively idempotent semiring S every module M embeds into "
      "Hom_B(S, Ext(M)), which is e-injective"));
  return rep;
}

// The congruence on S x M ---------------------------------------------------------

inline SuiteReport suite_p4_1(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P4.1";
  rep.max_size = ctx.max_size(3);
  rep.universe_bound = ctx.universe_max(3);
  rep.semirings = ctx.semirings({boolean_semiring(), truncated_naturals(2),
                                 builtin_semiring("chain3"), ring_z(4)});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(
      "alpha is asserted injective only over zerosumfree semirings");
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    bool zsf = detail::zerosumfree_check(*s).holds;
    bool entire = detail::entire_check(*s).holds;
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    detail::Tally cong, subtr, absorb, inj, via_alpha, via_ext, general;
    for (auto const& m : ctx.catalog(s, rep.max_size).entries) {
      auto mp = share(m);
      IlinResult il;
      try {
        il = ilin_congruence(mp);
        cong.check(true, {});
      } catch (std::logic_error const& e) {
        cong.check(false, {{"module", to_json(m, false)}, {"error", e.what()}});
        continue;
      }
      Json ref = detail::module_ref(m);
      subtr.check(il.alpha_subtractive, ref);
      absorb.check(il.absorbs_into_unit, ref);
      if (zsf) {
        inj.check(il.alpha_injective, ref);
      }
      bool has_inf = !infinite_elements(m).empty();
      if (zsf && il.alpha_injective) {
        auto q = share(il.quotient.module);
        auto ua = detail::single_pair(s, q, il.alpha, "alpha(M) <= (SxM)/~");
        bool passes = is_einjective_rel(m, ua, ctx.jobs()).pass;
        via_alpha.check(!passes || has_inf,
                        {{"module", ref}, {"passes_alpha_pair", passes}});
      }
      if (zsf && entire) {
        auto e = ext_adjoin_infinity(mp);
        auto ep = share(e.module);
        auto ue = detail::single_pair(s, ep, e.mu, "M <= Ext(M)");
        bool passes = is_einjective_rel(m, ue, ctx.jobs()).pass;
        via_ext.check(!passes || absorbing_infinity(m).has_value(),
                      {{"module", ref}, {"passes_ext_pair", passes}});
      }
      if (zsf) {
        bool e = is_einjective_rel(m, u, ctx.jobs()).pass;
        general.check(!e || has_inf, {{"module", ref}, {"einjective", e}});
      }
    }
    rep.add(cong.finish("relation-is-congruence", sn,
                        "the relation on S x M is a congruence"));
    rep.add(subtr.finish("alpha-subtractive", sn,
                         "alpha(M) is subtractive in (S x M)/~"));
    rep.add(absorb.finish("absorbs-into-unit", sn,
                          "[0,m] + [1,0] = [1,0] for every m"));
    if (zsf) {
      rep.add(inj.finish("alpha-injective", sn, "alpha is injective"));
      rep.add(via_alpha.finish(
          "alpha-pair-forces-infinite", sn,
          "if M extends along alpha(M) <= (S x M)/~ then some z has m + z = z "
          "for all m"));
      rep.add(general.finish(
          "einjective-has-infinite", sn,
          "an e-injective module has an element absorbing every other"));
    }
    if (zsf && entire) {
      rep.add(via_ext.finish(
          "ext-pair-forces-fixed-infinite", sn,
          "if M extends along M <= Ext(M) then its infinite element is fixed "
          "by every nonzero scalar"));
    }
  }
  return rep;
}

// Idempotent semirings with trivial strongly subtractive ideals -------------------

inline SuiteReport suite_p4_3(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P4.3";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(3);
  rep.semirings = ctx.semirings({builtin_semiring("endC3")});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(kTrivialIdealsNote);
  rep.notes.push_back(kEndReadingNote);
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Check idem = detail::idempotent_check(*s);
    Check triv = trivial_strongly_subtractive_check(s);
    Assertion p1{"premise-idempotent", sn, "the semiring is additively idempotent",
                 idem ? Status::kPass : Status::kFail, 1, Json::object()};
    if (!idem) {
      p1.detail["witness"] = idem.witness;
    }
    rep.add(std::move(p1));
    Assertion p2{"premise-trivial-ideals", sn,
                 "the only strongly subtractive left ideals are {0} and S",
                 triv ? Status::kPass : Status::kFail, 1, Json::object()};
    if (!triv) {
      p2.detail["ideal"] = triv.witness;
      rep.notes.push_back(
          sn + ": the premise fails, so the biconditional below is not "
               "implied; its exceptions are reported as found");
    }
    rep.add(std::move(p2));
    if (triv && detail::zerosumfree_check(*s)) {
      Check ent = detail::entire_check(*s);
      Assertion e{"premise-forces-entire", sn,
                  "zerosumfree with trivial strongly subtractive ideals implies "
                  "entire",
                  ent ? Status::kPass : Status::kFail, 1, Json::object()};
      if (!ent) {
        e.detail["witness"] = ent.witness;
      }
      rep.add(std::move(e));
    }
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    detail::Tally bic;
    Json rows = Json::array();
    for (auto const& m : ctx.catalog(s, rep.max_size).entries) {
      auto res = is_einjective_rel(m, u, ctx.jobs());
      auto inf = absorbing_infinity(m);
      Json row = {{"module", detail::module_ref(m)},
                  {"einjective", res.pass},
                  {"fixed_infinite", inf ? Json(*inf) : Json(nullptr)}};
      if (!res.pass) {
        row["witness"] = detail::witness_entry(m, u, *res.witness);
      }
      if (res.pass != inf.has_value()) {
        row["table"] = to_json(m, false);
      }
      bic.check(res.pass == inf.has_value(), row);
      rows.push_back(std::move(row));
    }
    Assertion b = bic.finish(
        "einjective-iff-fixed-infinite", sn,
        "e-injective exactly when an infinite element is fixed by every "
        "nonzero scalar");
    b.detail["modules"] = std::move(rows);
    rep.add(std::move(b));
  }
  return rep;
}

// Injective versus e-injective ------------------------------------------------------

inline SuiteReport suite_pe4_6(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "PE4.6";
  rep.max_size = ctx.max_size(8);
  rep.universe_bound = ctx.universe_max(4);
  rep.semirings = ctx.semirings({boolean_semiring()});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(
      "the injectivity search raises the bound k = 1, 2, ... up to max_size "
      "and records the first k with a witness");
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    if (!detail::isomorphic_semirings(*s, boolean_semiring())) {
      rep.add({"premise", sn, "the suite runs over B", Status::kFail, 1,
               {{"reason", "lattices are taken as modules over B"}}});
      continue;
    }
    Semimodule m3 = lattice_module(lattice_m3(), s);
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    auto er = is_einjective_rel(m3, u, ctx.jobs());
    Assertion a{"lattice-einjective", sn,
                "the non-distributive lattice M3 is e-injective",
                er.pass ? Status::kPass : Status::kFail, u.pairs.size(),
                Json::object()};
    if (!er.pass) {
      a.detail["witness"] = detail::witness_entry(m3, u, *er.witness);
    }
    rep.add(std::move(a));

    std::optional<std::size_t> found;
    Json witness;
    bool witness_ok = false;
    for (std::size_t k = 1; k <= rep.max_size && !found; ++k) {
      auto const& uk = ctx.universe(s, k, false);
      auto ir = is_injective_rel(m3, uk, ctx.jobs());
      if (!ir.pass) {
        found = k;
        witness = detail::witness_entry(m3, uk, *ir.witness, &witness_ok);
      }
    }
    Assertion b{"lattice-not-injective", sn,
                "M3 is not injective: some homomorphism into it does not "
                "extend",
                found && witness_ok ? Status::kRefuted : Status::kFail,
                found.value_or(rep.max_size), Json::object()};
    if (found) {
      b.detail["minimal_bound"] = *found;
      b.detail["witness"] = witness;
    } else {
      b.detail["searched_up_to"] = rep.max_size;
    }
    rep.add(std::move(b));

    // distributive lattices extend over the same bound
    std::size_t k = found.value_or(rep.universe_bound);
    auto const& uk = ctx.universe(s, k, false);
    detail::Tally ctl;
    for (auto const& l : {chain(3), lattice_product(chain(2), chain(2))}) {
      Semimodule dm = lattice_module(l, s);
      auto r = is_injective_rel(dm, uk, ctx.jobs());
      ctl.check(r.pass, r.pass ? Json(detail::module_ref(dm))
                               : detail::witness_entry(dm, uk, *r.witness));
    }
    Assertion c = ctl.finish(
        "distributive-control", sn,
        "the distributive lattices C3 and B x B pass the same injectivity "
        "bound");
    c.detail["bound"] = k;
    rep.add(std::move(c));
  }
  return rep;
}

// Finite families -------------------------------------------------------------------

inline SuiteReport suite_p5_1(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P5.1";
  rep.max_size = ctx.max_size(3);
  rep.universe_bound = ctx.universe_max(4);
  rep.semirings = ctx.semirings({boolean_semiring(), ring_z(4)});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(
      "finite direct sums and products coincide; families are all pairs of "
      "nonzero catalog modules");
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    std::vector<Semimodule> nonzero;
    for (auto const& m : ctx.catalog(s, rep.max_size).entries) {
      if (m.order > 1) {
        nonzero.push_back(m);
      }
    }
    detail::Tally fam, retract;
    Json rows = Json::array();
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      for (std::size_t j = i; j < nonzero.size(); ++j) {
        FamilyReport fr =
            check_family_closure(s, {nonzero[i], nonzero[j]}, u,
                                 FamilyMode::kSum, ctx.jobs());
        Json row = {{"family", {nonzero[i].name, nonzero[j].name}},
                    {"members_pass", fr.all_members_pass},
                    {"sum_pass", fr.combined_pass}};
        fam.check(fr.biconditional, row);
        rows.push_back(std::move(row));
      }
    }
    FamilyReport empty = check_family_closure(s, {}, u, FamilyMode::kSum, ctx.jobs());
    fam.check(empty.combined_pass, {{"family", Json::array()}});
    Assertion a = fam.finish(
        "sum-iff-members", sn,
        "a finite direct sum is e-injective exactly when every summand is");
    a.detail["families"] = std::move(rows);
    a.detail["zerosumfree"] = detail::zerosumfree_check(*s).holds;
    rep.add(std::move(a));

    // retracts of passing modules pass
    auto const& cat = ctx.catalog(s, rep.max_size).entries;
    std::vector<bool> passes;
    for (auto const& q : cat) {
      passes.push_back(is_einjective_rel(q, u, ctx.jobs()).pass);
    }
    for (std::size_t qi = 0; qi < cat.size(); ++qi) {
      if (!passes[qi]) {
        continue;
      }
      for (std::size_t mi = 0; mi < cat.size(); ++mi) {
        if (is_retract(cat[mi], cat[qi])) {
          retract.check(passes[mi], {{"retract", cat[mi].name},
                                     {"of", cat[qi].name}});
        }
      }
    }
    rep.add(retract.finish("retract-closure", sn,
                           "a retract of an e-injective module is e-injective"));
  }
  return rep;
}

// Compatible parts -------------------------------------------------------------------

inline SuiteReport suite_p5_2(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P5.2";
  rep.max_size = ctx.max_size(3);
  rep.universe_bound = ctx.universe_max(3);
  rep.semirings = ctx.semirings(
      {builtin_semiring("chain3"), truncated_naturals(2), ring_z(4)});
  rep.notes.push_back(kRelativeNote);
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    detail::Tally desc, iso, valid;
    std::vector<std::pair<Semimodule, bool>> mods;
    for (auto const& m : ctx.catalog(s, rep.max_size).entries) {
      mods.emplace_back(m, is_einjective_rel(m, u, ctx.jobs()).pass);
    }
    auto congs = semiring_congruences(*s);
    for (std::size_t ci = 0; ci < congs.size(); ++ci) {
      auto const& theta = congs[ci];
      auto qs = ctx.intern(share(quotient(*s, theta).semiring));
      auto const& qu = ctx.universe(qs, rep.universe_bound, true);
      Bisemimodule p = quotient_bisemimodule(s, theta);
      p.right_semiring = qs;
      for (auto const& [m, pass] : mods) {
        CompatiblePart cp = compatible_part(m, theta);
        cp.module.semiring = qs;
        Json ref = {{"module", m.name}, {"congruence", theta.class_of}};
        valid.check(validate_semimodule(cp.module).ok(), ref);
        HomSemimodule h = hom_semimodule(p, share(m));
        h.module.semiring = qs;
        iso.check(isomorphic(cp.module, h.module), ref);
        if (pass) {
          auto r = is_einjective_rel(cp.module, qu, ctx.jobs());
          Json row = ref;
          if (!r.pass) {
            row["witness"] = detail::witness_entry(cp.module, qu, *r.witness);
          }
          desc.check(r.pass, row);
        }
      }
    }
    rep.add(valid.finish("compatible-part-valid", sn,
                         "M(theta) is an S/theta-semimodule"));
    rep.add(iso.finish("compatible-part-is-hom", sn,
                       "M(theta) is isomorphic to Hom_S(S/theta, M)"));
    rep.add(desc.finish(
        "descends", sn,
        "if M is e-injective then M(theta) is e-injective over S/theta"));
  }
  return rep;
}

// Closure of the cyclic class ----------------------------------------------------------

namespace detail {

/// Every cyclic module, and every 2-generated module up to the bound, passes.
inline CyclicScan class_scan(SuiteContext& ctx, SemiringPtr const& s,
                             std::size_t k) {
  auto const& u = ctx.universe(s, k, true);
  std::vector<Semimodule> mods = with_semiring(enumerate_cyclic(s, true), s);
  auto fg = with_semiring(enumerate_fg(s, 2, k, true), s);
  mods.insert(mods.end(), fg.begin(), fg.end());
  return scan_modules(mods, u, ctx.jobs());
}

}  // namespace detail

inline SuiteReport suite_p6_1(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P6.1";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(4);
  rep.semirings =
      ctx.semirings({boolean_semiring(), field_f(2), boolean_algebra(2)});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(
      "a semiring passes when all its cyclic modules and all 2-generated "
      "modules of order <= the universe bound are e-injective; direct sums "
      "are formed for pairs whose sum has order <= max_size");
  std::size_t const k = rep.universe_bound;
  auto record = [&](std::string id, SemiringPtr const& s, std::string claim,
                    detail::CyclicScan const& r, Json extra) {
    Assertion a{std::move(id), s->name, std::move(claim),
                r.all_pass ? Status::kPass : Status::kFail, r.count,
                std::move(extra)};
    if (!r.all_pass) {
      a.detail["witness"] = r.failure;
    }
    rep.add(std::move(a));
  };
  std::vector<SemiringPtr> passing;
  for (auto const& s : rep.semirings) {
    auto r = detail::class_scan(ctx, s, k);
    record("base-passes", s, "the base semiring passes", r, Json::object());
    if (r.all_pass) {
      passing.push_back(s);
    }
  }
  for (auto const& s : passing) {
    for (auto const& theta : semiring_congruences(*s)) {
      if (theta.is_diagonal()) {
        continue;
      }
      Semiring qs = quotient(*s, theta).semiring;
      qs.name = s->name + "/theta";
      auto q = share(std::move(qs));
      record("quotient-passes", q, "a homomorphic image of a passing semiring passes",
             detail::class_scan(ctx, q, k), {{"congruence", theta.class_of}});
    }
  }
  for (std::size_t i = 0; i < passing.size(); ++i) {
    for (std::size_t j = i; j < passing.size(); ++j) {
      if (passing[i]->order * passing[j]->order > rep.max_size) {
        continue;
      }
      auto ds = share(direct_sum(*passing[i], *passing[j]));
      record("sum-passes", ds, "the direct sum of two passing semirings passes",
             detail::class_scan(ctx, ds, k),
             {{"summands", {passing[i]->name, passing[j]->name}}});
    }
  }
  return rep;
}

// Ring plus zerosumfree decomposition ---------------------------------------------------

namespace detail {

struct SplitVerdict {
  bool holds = false;
  Json detail = Json::object();
};

/// S = R (+) T with R a semisimple ring and T passing `t_ok`.
inline SplitVerdict split_verdict(Semiring const& s,
                                  std::function<bool(SemiringPtr const&, Json&)> t_ok) {
  SplitVerdict v;
  auto d = ring_zerosumfree_decomposition(s);
  if (!d) {
    v.detail["decomposition"] = nullptr;
    return v;
  }
  bool ring_ok = d->ring.order == 1 || semisimple_ring_check(d->ring).holds;
  auto t = share(d->zerosumfree);
  Json td = Json::object();
  bool tok = t_ok(t, td);
  v.holds = ring_ok && tok;
  v.detail = {{"e", d->e},
              {"f", d->f},
              {"ring_order", d->ring.order},
              {"ring_semisimple", ring_ok},
              {"zerosumfree_part_order", d->zerosumfree.order},
              {"zerosumfree_part", td}};
  return v;
}

}  // namespace detail

inline SuiteReport suite_p6_2(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "P6.2";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(4);
  rep.semirings = ctx.semirings(enumerate_semirings(std::min<std::size_t>(
      rep.max_size, kSemiringGuard)));
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(
      "by default the semirings are all semirings of order <= max_size; the "
      "class tested is cyclic modules plus 2-generated modules of order <= "
      "universe bound");
  std::size_t const k = rep.universe_bound;
  detail::Tally bic;
  Json rows = Json::array();
  for (auto const& s : rep.semirings) {
    auto lhs = detail::class_scan(ctx, s, k);
    auto rhs = detail::split_verdict(*s, [&](SemiringPtr const& t, Json& out) {
      bool zsf = detail::zerosumfree_check(*t).holds;
      bool inf = detail::infinite_check(*t).holds;
      bool cyc = zsf && inf && detail::class_scan(ctx, ctx.intern(t), k).all_pass;
      out = {{"zerosumfree", zsf}, {"has_infinite", inf}, {"passes", cyc}};
      return zsf && inf && cyc;
    });
    Json row = {{"semiring", to_json(*s)},
                {"class_passes", lhs.all_pass},
                {"decomposes", rhs.holds},
                {"decomposition", rhs.detail}};
    if (!lhs.all_pass) {
      row["witness"] = lhs.failure;
    }
    bic.check(lhs.all_pass == rhs.holds, row);
    rows.push_back(std::move(row));
  }
  Assertion a = bic.finish(
      "class-iff-ring-plus-zerosumfree", "*",
      "all cyclic (2-generated) modules are e-injective exactly when S is a "
      "semisimple ring times a zerosumfree factor that has an infinite "
      "element and whose modules pass");
  a.detail["semirings"] = std::move(rows);
  rep.add(std::move(a));
  return rep;
}

// The V construction over bounded distributive lattices ---------------------------------

struct VConstruction {
  Index a = 0;
  std::vector<Index> ideal;   // maximal ideal containing Sa + Ann(a)
  Semimodule v;               // 0, m, then the elements sa (s outside the ideal)
  bool degenerate = false;    // some s outside the ideal has sa = 0
};

/// Searches a bounded distributive lattice for a with Sa + Ann(a) != S and
/// builds V from a maximal ideal above it.
inline std::optional<VConstruction> v_construction(SemiringPtr const& s) {
  Semiring const& l = *s;
  std::size_t const n = l.order;
  auto ideals = two_sided_ideals(s, true);
  for (Index a = 0; a < n; ++a) {
    std::vector<char> j(n, 0);
    for (Index t = 0; t < n; ++t) {
      for (Index y = 0; y < n; ++y) {
        if (l.times(y, a) == 0) {
          j[l.plus(l.times(t, a), y)] = 1;
        }
      }
    }
    if (j[l.one]) {
      continue;
    }
    // the largest proper ideal containing J (ideals are sorted by size)
    SubSet const* max_ideal = nullptr;
    for (auto const& i : ideals) {
      if (i.size() == n) {
        continue;
      }
      bool contains = true;
      for (Index x = 0; x < n && contains; ++x) {
        contains = !j[x] || i.contains(x);
      }
      if (contains && (!max_ideal || i.size() > max_ideal->size())) {
        max_ideal = &i;
      }
    }
    if (!max_ideal) {
      continue;
    }
    VConstruction out;
    out.a = a;
    out.ideal = max_ideal->members;
    std::vector<Index> elems;  // sa, s outside the ideal
    for (Index t = 0; t < n; ++t) {
      if (!max_ideal->contains(t)) {
        Index x = l.times(t, a);
        if (x == 0) {
          out.degenerate = true;
        } else {
          elems.push_back(x);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (out.degenerate) {
      return out;
    }
    std::size_t const k = elems.size() + 2;
    Index const m = 1;
    std::vector<Index> pos(n, 0);
    for (Index i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = i + 2;
    }
    auto val = [&](Index v) { return v < 2 ? v : elems[v - 2]; };
    Semimodule& v = out.v;
    v.semiring = s;
    v.order = k;
    v.add.resize(k * k);
    v.act.resize(n * k);
    for (Index x = 0; x < k; ++x) {
      for (Index y = 0; y < k; ++y) {
        Index r;
        if (x == 0 || y == 0) {
          r = x + y;
        } else if (x == m || y == m) {
          r = x == m ? y : x;
        } else {
          r = pos[l.plus(val(x), val(y))];
        }
        v.add[x * k + y] = r;
      }
      for (Index t = 0; t < n; ++t) {
        Index r = 0;
        if (x != 0 && !max_ideal->contains(t)) {
          r = x == m ? m : pos[l.times(t, val(x))];
        }
        v.act[t * k + x] = r;
      }
    }
    v.name = "V";
    return out;
  }
  return std::nullopt;
}

inline SuiteReport suite_l6_3(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "L6.3";
  rep.universe_bound = ctx.universe_max(ctx.max_size(4));
  rep.max_size = rep.universe_bound;
  Semiring c4 = lattice_semiring(chain(4));
  c4.name = "chain4";
  Semiring c3b = lattice_semiring(lattice_product(chain(3), chain(2)));
  c3b.name = "chain3xB";
  rep.semirings = ctx.semirings({builtin_semiring("chain3"), c4, c3b,
                                 boolean_semiring(), boolean_algebra(2)});
  rep.notes.push_back(
      "the V construction is checked against the single inclusion {0, m} <= V; "
      "cyclic modules against the universe bound");
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Check lat = detail::lattice_check(*s);
    if (!lat) {
      rep.add({"premise", sn, "the semiring is a bounded distributive lattice",
               Status::kFail, 1, {{"witness", lat.witness}}});
      continue;
    }
    bool boolean = boolean_algebra_check(*s).holds;
    auto vc = v_construction(s);
    Assertion a{"splitting-iff-boolean", sn,
                "Sa + Ann(a) = S for every a exactly when the lattice is "
                "Boolean",
                vc.has_value() != boolean ? Status::kPass : Status::kFail,
                s->order,
                {{"boolean", boolean}}};
    if (vc) {
      a.detail["a"] = vc->a;
    }
    rep.add(std::move(a));
    if (!vc) {
      continue;
    }
    Assertion b{"v-construction", sn,
                "the cyclic module {0, m} is a subtractive submodule of V and "
                "is not e-injective",
                Status::kFail, 1,
                {{"a", vc->a}, {"maximal_ideal", vc->ideal}}};
    if (vc->degenerate) {
      b.detail["reason"] = "sa = 0 for some s outside the maximal ideal";
      rep.add(std::move(b));
      continue;
    }
    auto vp = share(vc->v);
    bool valid = validate_semimodule(*vp).ok();
    SubSet mm = SubSet::of(vp, {0, 1});
    bool subtractive = is_subtractive(mm).holds;
    Semimodule mmod = as_module(mm);
    bool cyclic = generated(share(mmod), {1}).size() == mmod.order;
    auto u = detail::single_pair(s, vp, {0, 1}, "{0,m} <= V");
    b.detail["V"] = to_json(*vp, false);
    b.detail["valid"] = valid;
    b.detail["subtractive"] = subtractive;
    b.detail["cyclic"] = cyclic;
    if (valid && subtractive && cyclic) {
      auto r = is_einjective_rel(mmod, u, ctx.jobs());
      if (!r.pass) {
        bool ok = false;
        b.detail["witness"] = detail::witness_entry(mmod, u, *r.witness, &ok);
        if (ok) {
          b.status = Status::kRefuted;
        }
      } else {
        // the counterexample: a retraction V -> {0, m} fixing m
        for (auto const& map : hom_maps(*vp, mmod)) {
          if (map[1] == 1) {
            b.detail["retraction"] = map;
            break;
          }
        }
      }
    }
    rep.add(std::move(b));

    auto cyc = detail::scan_modules(
        detail::with_semiring(enumerate_cyclic(s, true), s),
        ctx.universe(s, rep.universe_bound, true), ctx.jobs());
    Assertion c{"non-boolean-cyclic-failure", sn,
                "the lattice is not Boolean, so some cyclic module is not "
                "e-injective",
                !cyc.all_pass && cyc.witness_ok ? Status::kRefuted : Status::kFail,
                cyc.count, Json::object()};
    if (!cyc.all_pass) {
      c.detail["witness"] = cyc.failure;
    }
    rep.add(std::move(c));
  }
  return rep;
}

// Bounded distributive lattices -----------------------------------------------------

inline SuiteReport suite_t6_5(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "T6.5";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(rep.max_size);
  rep.semirings = ctx.semirings({builtin_semiring("chain3"), boolean_algebra(2)});
  rep.notes.push_back(kRelativeNote);
  std::size_t const k = rep.universe_bound;
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Check lat = detail::lattice_check(*s);
    if (!lat) {
      rep.add({"premise", sn, "the semiring is a bounded distributive lattice",
               Status::kFail, 1, {{"witness", lat.witness}}});
      continue;
    }
    std::vector<Index> atoms;
    bool boolean = boolean_algebra_check(*s, &atoms).holds;
    auto const& u = ctx.universe(s, k, true);
    auto cyclic = detail::with_semiring(enumerate_cyclic(s, true), s);
    auto cr = detail::scan_modules(cyclic, u, ctx.jobs());
    auto fg = detail::with_semiring(enumerate_fg(s, 2, k, true), s);
    auto fr = detail::scan_modules(fg, u, ctx.jobs());
    if (boolean) {
      bool iso = detail::isomorphic_semirings(*s, boolean_algebra(atoms.size()));
      rep.add({"boolean-is-power-of-B", sn,
               "a finite Boolean algebra is B^n, n the number of atoms",
               iso ? Status::kPass : Status::kFail, 1, {{"atoms", atoms}}});
      for (auto const* r : {&cr, &fr}) {
        Assertion a{r == &cr ? "cyclic-einjective" : "fg-einjective", sn,
                    r == &cr ? "every cyclic module is e-injective"
                             : "every 2-generated module is e-injective",
                    r->all_pass ? Status::kPass : Status::kFail, r->count,
                    Json::object()};
        if (!r->all_pass) {
          a.detail["witness"] = r->failure;
        }
        rep.add(std::move(a));
      }
    } else {
      Assertion a{"non-boolean-cyclic-failure", sn,
                  "the lattice is not Boolean, so some cyclic module is not "
                  "e-injective",
                  !cr.all_pass && cr.witness_ok ? Status::kRefuted : Status::kFail,
                  cr.count, Json::object()};
      if (!cr.all_pass) {
        a.detail["witness"] = cr.failure;
      } else {
        a.detail["reason"] = "no failing cyclic module within the universe";
      }
      rep.add(std::move(a));
    }
  }
  return rep;
}

// Left subtractive semirings ---------------------------------------------------------

inline SuiteReport suite_t6_7(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "T6.7";
  rep.max_size = ctx.max_size(4);
  rep.universe_bound = ctx.universe_max(4);
  rep.semirings = ctx.semirings(
      {field_f(2), ring_z(4), boolean_semiring(), builtin_semiring("chain3"),
       boolean_algebra(2), direct_sum(field_f(2), boolean_semiring()),
       direct_sum(ring_z(2), ring_z(2))});
  rep.notes.push_back(kRelativeNote);
  std::size_t const k = rep.universe_bound;
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Check sub = left_subtractive_check(s);
    if (!sub) {
      rep.add({"premise", sn, "every left ideal is subtractive", Status::kFail, 1,
               {{"witness", sub.witness}}});
      continue;
    }
    auto lhs = detail::class_scan(ctx, s, k);
    auto rhs = detail::split_verdict(*s, [&](SemiringPtr const& t, Json& out) {
      std::vector<Index> atoms;
      bool ba = t->order == 1 || boolean_algebra_check(*t, &atoms).holds;
      out = {{"boolean_algebra", ba}, {"atoms", atoms}};
      return ba;
    });
    Assertion a{"class-iff-ring-plus-boolean", sn,
                "all cyclic (2-generated) modules are e-injective exactly when "
                "S is a semisimple ring plus a finite Boolean algebra",
                lhs.all_pass == rhs.holds ? Status::kPass : Status::kFail,
                lhs.count,
                {{"class_passes", lhs.all_pass},
                 {"decomposes", rhs.holds},
                 {"decomposition", rhs.detail}}};
    if (!lhs.all_pass) {
      a.detail["witness"] = lhs.failure;
    }
    rep.add(std::move(a));
  }
  return rep;
}

// Simple semirings --------------------------------------------------------------------

inline SuiteReport suite_t6_10(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "T6.10";
  rep.max_size = ctx.max_size(8);
  rep.universe_bound = ctx.universe_max(rep.max_size);
  rep.semirings =
      ctx.semirings({builtin_semiring("endC3"), builtin_semiring("M2F2")});
  rep.notes.push_back(kRelativeNote);
  rep.notes.push_back(kEndReadingNote);
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    Simplicity simp = simplicity(s, true);
    rep.add({"simple", sn, "the semiring is congruence- and ideal-simple",
             simp.simple ? Status::kPass : Status::kFail, 1,
             {{"congruence_simple", simp.congruence_simple},
              {"ideal_simple", simp.ideal_simple}}});
    auto const& u = ctx.universe(s, rep.universe_bound, true);
    auto const& cat = ctx.catalog(s, rep.max_size);
    auto all = detail::scan_modules(cat.entries, u, ctx.jobs());
    Assertion a{"catalog-einjective", sn,
                "every catalog module is e-injective",
                all.all_pass ? Status::kPass : Status::kFail, all.count,
                {{"orders", [&] {
                    Json o = Json::array();
                    for (auto const& m : cat.entries) {
                      o.push_back(m.order);
                    }
                    return o;
                  }()}}};
    if (!all.all_pass) {
      a.detail["witness"] = all.failure;
    }
    rep.add(std::move(a));
    auto cyc = detail::scan_modules(
        detail::with_semiring(enumerate_cyclic(s, true), s), u, ctx.jobs());
    Assertion c{"cyclic-einjective", sn, "every cyclic module is e-injective",
                cyc.all_pass ? Status::kPass : Status::kFail, cyc.count,
                Json::object()};
    if (!cyc.all_pass) {
      c.detail["witness"] = cyc.failure;
    }
    rep.add(std::move(c));
  }
  return rep;
}

// Kernels, images and exact sequences ---------------------------------------------------

inline SuiteReport suite_ses2_8(SuiteContext& ctx) {
  SuiteReport rep;
  rep.suite = "SES2.8";
  rep.max_size = ctx.max_size(3);
  rep.universe_bound = 0;
  rep.semirings = ctx.semirings({boolean_semiring(), ring_z(4)});
  for (auto const& s : rep.semirings) {
    std::string const& sn = s->name;
    std::vector<SemimodulePtr> mods;
    for (auto const& m : ctx.catalog(s, rep.max_size).entries) {
      mods.push_back(share(m));
    }
    detail::Tally same_quot, kercong_iso, universal;
    std::optional<Json> gap;
    for (auto const& a : mods) {
      for (auto const& b : mods) {
        for (auto const& map : hom_maps(*a, *b)) {
          Morphism f{a, b, map};
          KernelData kd = kernel_data(f);
          Json ref = {{"source", a->name}, {"target", b->name}, {"map", map}};
          same_quot.check(bourne(kd.im) == bourne(kd.extended_im), ref);
          Quotient byf = quotient(a, kd.kercong);
          kercong_iso.check(isomorphic(byf.module, as_module(kd.im)), ref);
          Quotient byker = quotient_by(kd.ker);
          if (!gap && !isomorphic(byker.module, as_module(kd.im))) {
            gap = Json{{"source", to_json(*a, false)},
                       {"target", to_json(*b, false)},
                       {"map", map},
                       {"ker", kd.ker.members},
                       {"im", kd.im.members},
                       {"quotient_order", byker.module.order}};
          }
          Check ku = kernel_universal(f, kernel_obj(f), mods);
          Check cu = cokernel_universal(f, cokernel_obj(f), mods);
          universal.check(ku.holds && cu.holds, ref);
        }
      }
    }
    rep.add(same_quot.finish("image-quotients-agree", sn,
                             "N/im(f) = N/Im(f) for every morphism"));
    rep.add(kercong_iso.finish("kernel-congruence-quotient", sn,
                               "M modulo the kernel congruence is isomorphic "
                               "to im(f)"));
    rep.add(universal.finish(
        "universal-properties", sn,
        "kernels and cokernels satisfy their universal properties against "
        "every catalog module"));
    Assertion g{"kernel-quotient-differs", sn,
                "M/Ker(f) need not be isomorphic to im(f)",
                gap ? Status::kRefuted : Status::kPass, 1, Json::object()};
    if (gap) {
      g.detail["witness"] = *gap;
    } else {
      g.detail["note"] = "no morphism in this catalog separates the two";
    }
    rep.add(std::move(g));
  }

  // 0 -> 0 -> C3 -> B -> 0 and 0 -> 2Z4 -> Z4 -> Z2 -> 0
  auto b = ctx.intern(share(boolean_semiring()));
  auto c3 = share(lattice_module(chain(3), b));
  auto bm = share(regular_module(b));
  auto zero = share(trivial_module(b));
  Morphism f1{zero, c3, {0}};
  Morphism g1{c3, bm, {0, 1, 1}};
  ExactnessDiagnosis d1 = is_short_exact(f1, g1);
  rep.add({"c3-onto-b", "B",
           "0 -> 0 -> C3 -> B -> 0 has the kernel half but not the cokernel "
           "half",
           d1.kernel_half && !d1.cokernel_half && d1.composite_zero
               ? Status::kPass
               : Status::kFail,
           1,
           {{"kernel_half", d1.kernel_half},
            {"cokernel_half", d1.cokernel_half},
            {"diagnosis", d1.diagnosis},
            {"g", g1.map}}});
  auto z4 = ctx.intern(share(ring_z(4)));
  auto zm = share(regular_module(z4));
  SubSet two = SubSet::of(zm, {0, 2});
  auto twom = share(as_module(two));
  Quotient z2 = quotient_by(two);
  auto z2m = share(z2.module);
  ExactnessDiagnosis d2 =
      is_short_exact({twom, zm, two.members}, {zm, z2m, z2.projection});
  rep.add({"z4-exact", "Z4", "0 -> 2Z4 -> Z4 -> Z2 -> 0 is short exact",
           d2.exact() ? Status::kPass : Status::kFail, 1,
           {{"diagnosis", d2.diagnosis}}});
  return rep;
}

// Registry ---------------------------------------------------------------------------

struct SuiteInfo {
  std::string id;
  std::string summary;
  std::function<SuiteReport(SuiteContext&)> run;
};

inline std::vector<SuiteInfo> const& suites() {
  static std::vector<SuiteInfo> const all = {
      {"T4.4", "modules over additively idempotent division semirings",
       suite_t4_4},
      {"P4.1", "the congruence on S x M and the absorbing element", suite_p4_1},
      {"P4.3", "e-injectivity versus a fixed infinite element", suite_p4_3},
      {"PE4.6", "M3 over B: e-injective but not injective", suite_pe4_6},
      {"P5.1", "finite direct sums", suite_p5_1},
      {"P5.2", "compatible parts M(theta)", suite_p5_2},
      {"P6.1", "closure under images and finite sums", suite_p6_1},
      {"P6.2", "ring plus zerosumfree decomposition", suite_p6_2},
      {"L6.3", "the V construction on non-Boolean lattices", suite_l6_3},
      {"T6.5", "bounded distributive lattices", suite_t6_5},
      {"T6.7", "left subtractive semirings", suite_t6_7},
      {"T6.10", "simple semirings End(L) and M_n(F_p)", suite_t6_10},
      {"SES2.8", "kernels, images and short exact sequences", suite_ses2_8},
  };
  return all;
}

inline SuiteReport run_suite(std::string const& id, SuiteOptions const& opts) {
  for (auto const& s : suites()) {
    if (s.id == id) {
      SuiteContext ctx(opts);
      return s.run(ctx);
    }
  }
  throw PreconditionError("unknown suite: " + id);
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_SUITES_HPP_

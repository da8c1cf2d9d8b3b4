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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "semiring_lab/semiring_lab.hpp"

using namespace semiring_lab;

namespace {

SemiringPtr B() { return share(boolean_semiring()); }
SemimodulePtr C3() { return share(lattice_module(chain(3), B())); }

struct Z4Case {
  SemiringPtr s = share(ring_z(4));
  SemimodulePtr z4 = share(regular_module(s));
  Semimodule z2 = quotient_by(SubSet::of(z4, {0, 2})).module;
};

}  // namespace

TEST_CASE("test universes") {
  auto b = B();
  TestUniverse u2 = universe_for(b, 2, true);
  CHECK(u2.pairs.size() == 3);
  CHECK(u2.label == "U2(B)");
  for (auto const& s : {b, share(ring_z(4)), share(end_semiring(chain(3)))}) {
    TestUniverse u1 = universe_for(s, 1, true);
    REQUIRE(u1.pairs.size() == 1);
    CHECK(u1.pairs[0].b->order == 1);
  }
  Z4Case z;
  TestUniverse u4 = universe_for(z.s, 4, true);
  bool has_two = false;
  for (auto const& p : u4.pairs) {
    has_two = has_two || (isomorphic(*p.b, *z.z4) && p.a.size() == 2);
  }
  CHECK(has_two);
  CHECK_THROWS_AS(build_universe(enumerate_semimodules(b, 2), 3, true), PreconditionError);
}

TEST_CASE("deciders match brute force on small catalogs") {
  for (auto const& s : {B(), share(ring_z(4)), share(truncated_naturals(2)),
                        share(lattice_semiring(chain(3)))}) {
    TestUniverse ue = universe_for(s, 3, true);
    TestUniverse ui = universe_for(s, 3, false);
    for (auto const& m : enumerate_semimodules(s, 3).entries) {
      INFO(m.name);
      bool e_all = true, i_all = true;
      for (auto const& p : ue.pairs) e_all = e_all && oracle::e_condition(*p.b, p.a.members, m);
      for (auto const& p : ui.pairs) i_all = i_all && oracle::extends(*p.b, p.a.members, m);
      auto er = is_einjective_rel(m, ue);
      auto ir = is_injective_rel(m, ui);
      CHECK(er.pass == e_all);
      CHECK(ir.pass == i_all);
      if (er.witness) CHECK(revalidate_witness(m, ue, *er.witness).holds);
      if (ir.witness) CHECK(revalidate_witness(m, ui, *ir.witness).holds);
    }
  }
}

TEST_CASE("e-injectivity examples") {
  auto b = B();
  TestUniverse u4 = universe_for(b, 4, true);
  CHECK(is_einjective_rel(regular_module(b), u4).pass);
  CHECK(is_einjective_rel(lattice_module(lattice_m3(), b), u4).pass);
  CHECK(is_einjective_rel(trivial_module(b), u4).pass);

  Z4Case z;
  TestUniverse uz = universe_for(z.s, 4, true);
  auto r = is_einjective_rel(z.z2, uz);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == WitnessKind::kExtension);
  CHECK(revalidate_witness(z.z2, uz, *r.witness).holds);
  UniversePair const& p = uz.pairs[r.witness->pair_index];
  CHECK(isomorphic(*p.b, *z.z4));
  CHECK(p.a.size() == 2);
  Json j = to_json(*r.witness, uz);
  CHECK(j.at("kind") == "extension-failure");

  // a tampered witness does not revalidate
  Witness bad = *r.witness;
  bad.phi = Map(bad.phi.size(), 0);
  CHECK_FALSE(revalidate_witness(z.z2, uz, bad).holds);

  CHECK_THROWS_AS(is_einjective_rel(z.z2, universe_for(z.s, 2, false)), PreconditionError);
  CHECK_THROWS_AS(is_einjective_rel(regular_module(b), uz), PreconditionError);
}

TEST_CASE("injectivity examples") {
  auto b = B();
  TestUniverse u4 = universe_for(b, 4, false);
  CHECK(is_injective_rel(*C3(), u4).pass);
  CHECK(is_injective_rel(trivial_module(b), u4).pass);
  // the smallest failing universe for M3 is larger than 4
  CHECK(is_injective_rel(lattice_module(lattice_m3(), b), u4).pass);
}

TEST_CASE("every B-semimodule passes, and the end(C3) exception") {
  auto b = B();
  TestUniverse u4 = universe_for(b, 4, true);
  for (auto const& m : enumerate_semimodules(b, 4).entries) {
    CHECK(is_einjective_rel(m, u4).pass);
    CHECK(infinite_elements(m).size() == 1);
  }

  // Over End(C3) the pass set matches "has a fixed infinite element" with
  // one exception of order 3, which passes without one.
  auto e = share(end_semiring(chain(3)));
  TestUniverse u3 = universe_for(e, 3, true);
  std::vector<Semimodule> mismatched;
  for (auto const& m : enumerate_semimodules(e, 4).entries) {
    bool fixed_inf = false;
    for (Index inf : infinite_elements(m)) {
      bool fixed = true;
      for (Index s = 1; s < e->order; ++s) fixed = fixed && m.scale(s, inf) == inf;
      fixed_inf = fixed_inf || fixed;
    }
    if (is_einjective_rel(m, u3).pass != fixed_inf) mismatched.push_back(m);
  }
  REQUIRE(mismatched.size() == 1);
  CHECK(mismatched[0].order == 3);
  CHECK(is_einjective_rel(mismatched[0], u3).pass);
}

TEST_CASE("monotonicity and determinism") {
  Z4Case z;
  TestUniverse uz = universe_for(z.s, 4, true);
  auto full = is_einjective_rel(z.z2, uz);
  REQUIRE(full.witness);
  for (std::size_t n = 0; n <= uz.pairs.size(); ++n) {
    bool passes = is_einjective_rel(z.z2, prefix(uz, n)).pass;
    CHECK(passes == (n <= full.witness->pair_index));
  }
  for (unsigned jobs : {2u, 4u, 8u}) {
    auto r = is_einjective_rel(z.z2, uz, jobs);
    REQUIRE(r.witness);
    CHECK(r.witness->pair_index == full.witness->pair_index);
    CHECK(r.witness->phi == full.witness->phi);
  }
}

TEST_CASE("retracts") {
  auto b = B();
  auto bb = regular_module(b);
  auto c3 = C3();
  auto r = is_retract(bb, *c3);
  REQUIRE(r);
  CHECK(compose(r->retraction, r->section) == identity_map(2));
  CHECK(oracle::is_hom(bb, *c3, r->section));
  CHECK(oracle::is_hom(*c3, bb, r->retraction));
  auto self = is_retract(*c3, *c3);
  REQUIRE(self);
  CHECK(compose(self->retraction, self->section) == identity_map(3));
  CHECK_FALSE(is_retract(*c3, bb));

  // retracts of passing modules pass
  Z4Case z;
  TestUniverse u = universe_for(z.s, 4, true);
  auto cat = enumerate_semimodules(z.s, 4).entries;
  for (auto const& q : cat) {
    if (!is_einjective_rel(q, u).pass) continue;
    for (auto const& m : cat) {
      if (is_retract(m, q)) CHECK(is_einjective_rel(m, u).pass);
    }
  }
}

TEST_CASE("family closure") {
  auto b = B();
  TestUniverse ub = universe_for(b, 3, true);
  auto pair = check_family_closure(b, {regular_module(b), regular_module(b)}, ub);
  CHECK(pair.all_members_pass);
  CHECK(pair.combined_pass);
  CHECK(pair.biconditional);
  CHECK(pair.zerosumfree);

  Z4Case z;
  TestUniverse uz = universe_for(z.s, 4, true);
  auto mixed = check_family_closure(z.s, {z.z2, *z.z4}, uz);
  CHECK(mixed.members_pass == std::vector<bool>{false, true});
  CHECK_FALSE(mixed.combined_pass);
  CHECK(mixed.biconditional);
  CHECK_FALSE(mixed.zerosumfree);

  auto none = check_family_closure(b, {}, ub);
  CHECK(none.all_members_pass);
  CHECK(none.combined_pass);
}

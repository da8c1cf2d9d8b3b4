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

#include <fstream>
#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "semiring_lab/semiring_lab.hpp"

using namespace semiring_lab;

namespace {

SemiringPtr B() { return share(boolean_semiring()); }

Semimodule c3_over_b() { return lattice_module(chain(3), B()); }

std::vector<Semiring> all_builtin_semirings() {
  return {boolean_semiring(), ring_z(4), field_f(2), field_f(3),
          truncated_naturals(2), truncated_naturals(3), boolean_algebra(2),
          lattice_semiring(chain(3)), end_semiring(chain(3)),
          end_semiring(chain(2)), matrix_semiring(field_f(2), 2),
          direct_sum(field_f(2), boolean_semiring()), trivial_semiring()};
}

}  // namespace

TEST_CASE("builtin semirings validate and agree with the oracle") {
  for (auto const& s : all_builtin_semirings()) {
    INFO(s.name);
    CHECK(validate_semiring(s).ok());
    CHECK(oracle::semiring_ok(s));
  }
  for (auto const& name : builtin_names()) {
    INFO(name);
    Structure st = builtin(name);
    if (auto* s = std::get_if<Semiring>(&st)) {
      CHECK(validate_semiring(*s).ok());
    } else if (auto* l = std::get_if<Lattice>(&st)) {
      CHECK(validate_lattice(*l).ok());
    }
    Semimodule m = builtin_module(name);
    CHECK(validate_semimodule(m).ok());
    CHECK(oracle::module_ok(m));
  }
}

TEST_CASE("validator examples") {
  CHECK(validate_semiring(boolean_semiring()).ok());
  CHECK(validate_semiring(ring_z(4)).ok());

  Semiring bad = boolean_semiring();
  bad.mul[1 * 2 + 1] = 0;
  auto r = validate_semiring(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.has("mul-identity"));

  CHECK(validate_semimodule(regular_module(B())).ok());
  Semimodule m3 = lattice_module(lattice_m3(), B());
  CHECK(m3.order == 5);
  CHECK(validate_semimodule(m3).ok());

  Semimodule c3 = c3_over_b();
  c3.act[1 * 3 + 1] = 0;  // 1 * a = 0
  auto rc = validate_semimodule(c3);
  REQUIRE_FALSE(rc.ok());
  CHECK(rc.has("unit-action"));
  bool witnessed = false;
  for (auto const& v : rc.violations) {
    if (v.axiom == "unit-action") {
      witnessed = v.witness == std::vector<Index>{1, 1};  // (1, a)
    }
  }
  CHECK(witnessed);
}

TEST_CASE("validator agrees with the oracle on random single-cell edits") {
  std::mt19937 rng(20261015);
  auto semirings = all_builtin_semirings();
  for (int trial = 0; trial < 300; ++trial) {
    Semiring s = semirings[rng() % semirings.size()];
    if (s.order < 2) {
      continue;
    }
    auto& table = (rng() % 2) ? s.add : s.mul;
    std::size_t cell = rng() % table.size();
    table[cell] = static_cast<Index>(rng() % s.order);
    CHECK(validate_semiring(s).ok() == oracle::semiring_ok(s));
  }
  auto b = B();
  std::vector<Semimodule> mods = {c3_over_b(), lattice_module(lattice_m3(), b),
                                  regular_module(share(ring_z(4))),
                                  regular_module(share(end_semiring(chain(3))))};
  for (int trial = 0; trial < 300; ++trial) {
    Semimodule m = mods[rng() % mods.size()];
    auto& table = (rng() % 2) ? m.add : m.act;
    std::size_t cell = rng() % table.size();
    table[cell] = static_cast<Index>(rng() % m.order);
    CHECK(validate_semimodule(m).ok() == oracle::module_ok(m));
  }
}

TEST_CASE("shape errors are reported before axioms") {
  Semiring s = boolean_semiring();
  s.add.pop_back();
  CHECK_THROWS_AS(check_shape(s), ShapeError);
  Semiring t = boolean_semiring();
  t.mul[0] = 7;
  CHECK_THROWS_AS(check_shape(t), ShapeError);
}

TEST_CASE("named constructors") {
  CHECK(std::get<Semiring>(make_named("end_chain", {3})).order == 6);
  CHECK(std::get<Semiring>(make_named("matrix_F", {2, 2})).order == 16);
  Semiring ba = std::get<Semiring>(make_named("boolean_algebra", {2}));
  CHECK(ba.order == 4);
  CHECK(validate_semiring(ba).ok());
  CHECK_THROWS_AS(make_named("F", {4}), PreconditionError);
  CHECK_THROWS_AS(make_named("nonesuch"), PreconditionError);
  CHECK_THROWS_AS(builtin("nonesuch"), PreconditionError);
}

TEST_CASE("end semiring of C3 has the monotone-pair count") {
  // brute force: maps C3 -> C3 preserving 0 and joins
  Lattice c3 = chain(3);
  std::size_t count = 0;
  oracle::all_maps(3, 3, [&](Map const& f) {
    if (f[0] != 0) return;
    for (Index a = 0; a < 3; ++a)
      for (Index b = 0; b < 3; ++b)
        if (f[c3.vee(a, b)] != c3.vee(f[a], f[b])) return;
    ++count;
  });
  CHECK(count == 6);
  CHECK(end_semiring(c3).order == count);
}

TEST_CASE("hom sets match the brute-force oracle") {
  auto b = B();
  auto z4 = share(ring_z(4));
  CHECK(hom_maps(c3_over_b(), regular_module(b)).size() == 3);
  Semimodule z2 = quotient_by(SubSet::of(share(regular_module(z4)), {0, 2})).module;
  CHECK(hom_maps(regular_module(z4), z2).size() == 2);
  CHECK(hom_maps(c3_over_b(), trivial_module(b)).size() == 1);

  for (auto const& s : {b, z4, share(lattice_semiring(chain(3)))}) {
    auto cat = enumerate_semimodules(s, 3);
    for (auto const& m : cat.entries) {
      for (auto const& n : cat.entries) {
        INFO(m.name << " -> " << n.name);
        CHECK(hom_maps(m, n) == oracle::homs(m, n));
      }
    }
  }
}

TEST_CASE("isomorphism check") {
  auto b = B();
  auto bb = share(regular_module(b));
  auto id = iso_check(bb, bb);
  REQUIRE(id);
  CHECK(id->map == Map{0, 1});
  CHECK_FALSE(iso_check(share(c3_over_b()), bb));
  Semimodule sum = direct_sum(b, {regular_module(b), regular_module(b)});
  Semimodule square = lattice_module(lattice_product(chain(2), chain(2)), b);
  auto iso = iso_check(share(sum), share(square));
  REQUIRE(iso);
  CHECK(oracle::is_hom(sum, square, iso->map));
  CHECK(isomorphic(sum, square) == oracle::isomorphic(sum, square));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(7);
  auto s = share(end_semiring(chain(3)));
  auto cat = enumerate_semimodules(s, 4);
  for (auto const& m : cat.entries) {
    Map p(m.order);
    for (Index i = 0; i < m.order; ++i) p[i] = i;
    for (int round = 0; round < 5; ++round) {
      std::shuffle(p.begin() + 1, p.end(), rng);
      Semimodule r = relabel(m, p);
      CHECK(validate_semimodule(r).ok());
      CHECK(canonical_key(r) == canonical_key(m));
    }
    // automorphism count by brute force
    std::size_t autos = 0;
    Map q(m.order);
    for (Index i = 0; i < m.order; ++i) q[i] = i;
    do {
      autos += oracle::is_hom(m, m, q);
    } while (std::next_permutation(q.begin() + 1, q.end()));
    CHECK(automorphism_count(m) == autos);
    CHECK(canonical_labelling(view_of(m)).automorphisms == autos);
  }
  Semiring e = end_semiring(chain(3));
  Map p = {0, 2, 1, 5, 4, 3};
  CHECK(canonical_key(relabel(e, p)) == canonical_key(e));
}

TEST_CASE("structures round-trip through JSON") {
  for (auto const& s : all_builtin_semirings()) {
    Semiring back = semiring_from_json(Json::parse(to_json(s).dump()));
    CHECK(back == s);
  }
  Semimodule m3 = lattice_module(lattice_m3(), B());
  Semimodule back = semimodule_from_json(Json::parse(to_json(m3).dump()));
  CHECK(tables_equal(back, m3));
  Lattice n5 = lattice_n5();
  Lattice lb = lattice_from_json(to_json(n5));
  CHECK(lb.join == n5.join);
  CHECK(lb.meet == n5.meet);
  CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"kind":"ring"})")), FormatError);
  CHECK_THROWS_AS(semiring_from_json(Json::parse(R"({"kind":"semiring","order":2,"add":[[0,1]],"mul":[[0,0],[0,1]],"one":1})")),
                  ShapeError);
  CHECK_THROWS_AS(load_structure("builtin:nope"), PreconditionError);
}

TEST_CASE("canonical keys match the golden file") {
  std::ifstream in(std::string(SEMIRING_LAB_TEST_DATA) + "/canonical_keys.json");
  REQUIRE(in);
  Json golden = Json::parse(in);
  for (auto const& name : builtin_names()) {
    INFO(name);
    Structure st = builtin(name);
    if (auto* s = std::get_if<Semiring>(&st)) {
      CHECK(Json(canonical_key(*s)) == golden.at(name).at("ring"));
    }
    CHECK(Json(canonical_key(builtin_module(name))) == golden.at(name).at("module"));
  }
}

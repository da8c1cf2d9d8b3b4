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
SemimodulePtr BB() { return share(regular_module(B())); }
SemimodulePtr C3() { return share(lattice_module(chain(3), B())); }

struct RingCase {
  SemimodulePtr z4, two, z2;
  Morphism incl, red;
};

RingCase ring_case() {
  RingCase r;
  r.z4 = share(regular_module(share(ring_z(4))));
  r.two = share(as_module(SubSet::of(r.z4, {0, 2})));
  r.z2 = share(quotient_by(SubSet::of(r.z4, {0, 2})).module);
  r.incl = {r.two, r.z4, {0, 2}};
  r.red = {r.z4, r.z2, {0, 1, 0, 1}};
  return r;
}

std::vector<SemimodulePtr> tests_for(SemiringPtr const& s) {
  std::vector<SemimodulePtr> out;
  for (auto const& m : enumerate_semimodules(s, 3).entries) out.push_back(share(m));
  return out;
}

}  // namespace

TEST_CASE("kernels") {
  RingCase r = ring_case();
  KernelObject k = kernel_obj(r.red);
  CHECK(isomorphic(*k.object, *r.two));
  CHECK(validate_morphism(k.inclusion).ok());
  CHECK(kernel_universal(r.red, k, tests_for(r.z4->semiring)).holds);

  Morphism g{C3(), BB(), {0, 1, 1}};
  KernelObject kc = kernel_obj(g);
  CHECK(kc.object->order == 1);
  CHECK(kernel_universal(g, kc, tests_for(B())).holds);

  CHECK(kernel_obj(identity_morphism(C3())).object->order == 1);
}

TEST_CASE("cokernels") {
  RingCase r = ring_case();
  CokernelObject c = cokernel_obj(r.incl);
  CHECK(isomorphic(*c.object, *r.z2));
  CHECK(cokernel_universal(r.incl, c, tests_for(r.z4->semiring)).holds);

  auto c3 = C3();
  auto low = share(as_module(SubSet::of(c3, {0, 1})));
  Morphism f{low, c3, {0, 1}};
  CokernelObject cc = cokernel_obj(f);
  CHECK(isomorphic(*cc.object, *BB()));
  CHECK(cokernel_universal(f, cc, tests_for(B())).holds);

  CokernelObject z = cokernel_obj(zero_morphism(BB(), c3));
  CHECK(isomorphic(*z.object, *c3));
}

TEST_CASE("universal properties fail for a wrong kernel") {
  // {0} is not the kernel of the zero map C3 -> B
  auto c3 = C3();
  Morphism g = zero_morphism(c3, BB());
  auto zero = share(trivial_module(B()));
  KernelObject fake{zero, {zero, c3, {0}}};
  Check r = kernel_universal(g, fake, tests_for(B()));
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("short exact sequences") {
  RingCase r = ring_case();
  CHECK(is_short_exact(r.incl, r.red).exact());

  auto c3 = C3();
  auto zero = share(trivial_module(B()));
  ExactnessDiagnosis d = is_short_exact({zero, c3, {0}}, {c3, BB(), {0, 1, 1}});
  CHECK_FALSE(d.exact());
  CHECK(d.composite_zero);
  CHECK(d.kernel_half);
  CHECK_FALSE(d.cokernel_half);
  CHECK(d.diagnosis.find("cokernel half") != std::string::npos);

  CHECK(is_short_exact(identity_morphism(c3), zero_morphism(c3, zero)).exact());

  ExactnessDiagnosis nz = is_short_exact(identity_morphism(c3), {c3, BB(), {0, 1, 1}});
  CHECK_FALSE(nz.composite_zero);
}

TEST_CASE("hom semimodules") {
  auto b = B();
  for (auto const& m : enumerate_semimodules(b, 4).entries) {
    auto hom = hom_semimodule(regular_bisemimodule(b), share(m));
    CHECK(validate_semimodule(hom.module).ok());
    CHECK(isomorphic(hom.module, m));
  }
  // C3 over B with the trivial right B-action
  auto c3 = C3();
  Bisemimodule p{b, c3, {0, 0, 0, 1, 0, 2}};
  REQUIRE(validate_bisemimodule(p).ok());
  auto h = hom_semimodule(p, BB());
  CHECK(h.module.order == 3);
  CHECK(h.maps == oracle::homs(*c3, *BB()));
}

TEST_CASE("restriction and extension of scalars") {
  auto l3 = share(lattice_semiring(chain(3)));
  auto into = boolean_embedding(l3);
  REQUIRE(validate_semiring_morphism(into).ok());
  Semimodule res = restrict_scalars(into, regular_module(l3));
  CHECK(validate_semimodule(res).ok());
  CHECK(isomorphic(res, *C3()));

  // both 0 < a < 1 -> 0 < 0 < 1 and 0 < 1 < 1 are semiring maps onto B
  for (Map map : {Map{0, 0, 1}, Map{0, 1, 1}}) {
    SemiringMorphism onto{l3, B(), map};
    REQUIRE(validate_semiring_morphism(onto).ok());
    auto m = share(regular_module(l3));
    HomSemimodule e = extend_hom(onto, m);
    CHECK(validate_semimodule(e.module).ok());
    CHECK(e.module.semiring == onto.target);
    for (auto const& f : e.maps) {
      CHECK(validate_morphism(restrict_scalars(onto, regular_module(B())), *m, f).ok());
    }
  }

  auto id = SemiringMorphism{l3, l3, identity_map(3)};
  auto m = share(regular_module(l3));
  CHECK(isomorphic(restrict_scalars(id, *m), *m));
  CHECK(isomorphic(extend_hom(id, m).module, *m));

  CHECK_THROWS_AS(restrict_scalars({l3, B(), {0, 1, 0}}, regular_module(B())),
                  PreconditionError);
}

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

#include <filesystem>
#include <fstream>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "semiring_lab/semiring_lab.hpp"

using namespace semiring_lab;

namespace {

SemiringPtr B() { return share(boolean_semiring()); }

// Fills every table cell not pinned by the identity and zero laws, keeps the
// ones the oracle accepts, and reduces modulo brute-force isomorphism.
std::vector<Semimodule> naive_modules(SemiringPtr const& s, std::size_t n) {
  std::vector<Semimodule> valid;
  std::size_t const free_add = (n - 1) * (n - 1);
  std::vector<Index> addcells(free_add, 0);
  oracle::all_maps(free_add, n, [&](Map const& a) {
    Semimodule m;
    m.semiring = s;
    m.order = n;
    m.add.assign(n * n, 0);
    for (Index x = 0; x < n; ++x) {
      m.add[x] = x;
      m.add[x * n] = x;
    }
    for (Index x = 1; x < n; ++x)
      for (Index y = 1; y < n; ++y) m.add[x * n + y] = a[(x - 1) * (n - 1) + (y - 1)];
    if (!oracle::monoid_ok(n, m.add)) return;
    // scalars other than 0 and 1 act freely on nonzero elements
    std::vector<Index> others;
    for (Index t = 0; t < s->order; ++t)
      if (t != 0 && t != s->one) others.push_back(t);
    oracle::all_maps(others.size() * (n - 1), n, [&](Map const& act) {
      m.act.assign(s->order * n, 0);
      for (Index x = 0; x < n; ++x) m.act[s->one * n + x] = x;
      for (std::size_t i = 0; i < others.size(); ++i)
        for (Index x = 1; x < n; ++x) m.act[others[i] * n + x] = act[i * (n - 1) + (x - 1)];
      if (oracle::module_ok(m)) valid.push_back(m);
    });
  });
  std::vector<Semimodule> reps;
  for (auto const& m : valid) {
    bool seen = false;
    for (auto const& r : reps) seen = seen || oracle::isomorphic(m, r);
    if (!seen) reps.push_back(m);
  }
  return reps;
}

bool same_classes(std::vector<Semimodule> const& a, std::vector<Semimodule> const& b) {
  if (a.size() != b.size()) return false;
  for (auto const& x : a) {
    std::size_t matches = 0;
    for (auto const& y : b) matches += oracle::isomorphic(x, y);
    if (matches != 1) return false;
  }
  return true;
}

bool semirings_isomorphic(Semiring const& a, Semiring const& b) {
  if (a.order != b.order) return false;
  std::size_t const n = a.order;
  Map p(n);
  for (Index i = 0; i < n; ++i) p[i] = i;
  do {
    bool ok = p[a.one] == b.one;
    for (Index x = 0; x < n && ok; ++x)
      for (Index y = 0; y < n && ok; ++y)
        ok = p[a.plus(x, y)] == b.plus(p[x], p[y]) && p[a.times(x, y)] == b.times(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

std::vector<Semiring> naive_semirings(std::size_t n) {
  std::vector<Semiring> reps;
  std::size_t const cells = (n - 1) * (n - 1);
  oracle::all_maps(cells, n, [&](Map const& a) {
    std::vector<Index> add(n * n, 0);
    for (Index x = 0; x < n; ++x) add[x] = add[x * n] = x;
    for (Index x = 1; x < n; ++x)
      for (Index y = 1; y < n; ++y) add[x * n + y] = a[(x - 1) * (n - 1) + (y - 1)];
    if (!oracle::monoid_ok(n, add)) return;
    oracle::all_maps(cells, n, [&](Map const& mm) {
      Semiring s;
      s.order = n;
      s.add = add;
      s.mul.assign(n * n, 0);
      for (Index x = 1; x < n; ++x)
        for (Index y = 1; y < n; ++y) s.mul[x * n + y] = mm[(x - 1) * (n - 1) + (y - 1)];
      for (Index one = 1; one < n; ++one) {
        s.one = one;
        if (!oracle::semiring_ok(s)) continue;
        bool seen = false;
        for (auto const& r : reps) seen = seen || semirings_isomorphic(s, r);
        if (!seen) reps.push_back(s);
      }
    });
  });
  return reps;
}

}  // namespace

TEST_CASE("catalog counts") {
  auto b2 = enumerate_semimodules(B(), 2);
  CHECK(b2.entries.size() == 2);
  // finite join-semilattices with 0 are lattices: C3 on three elements,
  // C4 and B^2 on four
  CHECK(entries_up_to(enumerate_semimodules(B(), 4), 3).size() == 3);
  CHECK(enumerate_semimodules(B(), 4).entries.size() == 5);
  for (auto const& m : enumerate_semimodules(share(ring_z(4)), 4).entries) {
    CHECK(validate_semimodule(m).ok());
  }
}

TEST_CASE("catalogs agree with naive table enumeration") {
  std::vector<std::pair<SemiringPtr, std::size_t>> cases = {
      {B(), 4}, {share(ring_z(4)), 4}, {share(truncated_naturals(2)), 3},
      {share(end_semiring(chain(3))), 3}, {share(lattice_semiring(chain(3))), 3}};
  for (auto const& [s, top] : cases) {
    auto store = enumerate_semimodules(s, top);
    for (std::size_t n = 1; n <= top; ++n) {
      INFO(s->name << " order " << n);
      std::vector<Semimodule> ours;
      for (auto const& m : store.entries)
        if (m.order == n) ours.push_back(m);
      CHECK(same_classes(ours, naive_modules(s, n)));
    }
    for (auto const& m : store.entries) {
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= m.order; ++i) fact *= i;
      CHECK(fact % automorphism_count(m) == 0);
    }
  }
}

TEST_CASE("cyclic and finitely generated modules") {
  auto orders = [](std::vector<Semimodule> const& v) {
    std::vector<std::size_t> o;
    for (auto const& m : v) o.push_back(m.order);
    std::sort(o.begin(), o.end());
    return o;
  };
  CHECK(orders(enumerate_cyclic(B())) == std::vector<std::size_t>{1, 2});
  // the two quotients of order 2 differ: a acts as 0 on one, as 1 on the other
  auto l3 = enumerate_cyclic(share(lattice_semiring(chain(3))));
  CHECK(orders(l3) == std::vector<std::size_t>{1, 2, 2, 3});
  std::set<Index> a_acts;
  for (auto const& m : l3)
    if (m.order == 2) a_acts.insert(m.scale(1, 1));
  CHECK(a_acts == std::set<Index>{0, 1});
  CHECK(orders(enumerate_cyclic(share(ring_z(4)))) == std::vector<std::size_t>{1, 2, 4});

  for (auto const& s : {B(), share(ring_z(4)), share(end_semiring(chain(3))),
                        share(truncated_naturals(3))}) {
    CHECK(same_classes(enumerate_cyclic(s), enumerate_fg(s, 1, s->order)));
  }

  auto fg = enumerate_fg(B(), 2, 4);
  for (auto const& m : fg) CHECK(validate_semimodule(m).ok());
  auto has = [&](Semimodule const& x) {
    return std::any_of(fg.begin(), fg.end(), [&](auto const& m) { return isomorphic(m, x); });
  };
  auto b = B();
  CHECK(has(regular_module(b)));
  CHECK(has(lattice_module(chain(3), b)));
  CHECK(has(direct_sum(b, {regular_module(b), regular_module(b)})));
}

TEST_CASE("semiring enumeration") {
  auto two = enumerate_semirings(2);
  std::size_t at2 = 0;
  for (auto const& s : two) {
    CHECK(validate_semiring(s).ok());
    at2 += s.order == 2;
  }
  CHECK(at2 == 2);
  CHECK(at2 == naive_semirings(2).size());
  auto is_in = [&](Semiring const& x) {
    return std::any_of(two.begin(), two.end(),
                       [&](auto const& s) { return semirings_isomorphic(s, x); });
  };
  CHECK(is_in(boolean_semiring()));
  CHECK(is_in(field_f(2)));
  CHECK(canonical_key(boolean_semiring()) != canonical_key(field_f(2)));

  auto three = enumerate_semirings(3);
  std::vector<Semiring> ours;
  for (auto const& s : three)
    if (s.order == 3) ours.push_back(s);
  auto naive = naive_semirings(3);
  CHECK(ours.size() == naive.size());
  for (auto const& s : naive) {
    CHECK(std::count_if(ours.begin(), ours.end(),
                        [&](auto const& t) { return semirings_isomorphic(s, t); }) == 1);
  }
  CHECK_THROWS_AS(enumerate_semirings(5), GuardExceeded);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_semimodules(B(), 5), GuardExceeded);
  CHECK_NOTHROW(enumerate_semimodules(B(), 5, true));
  CHECK_THROWS_AS(enumerate_semimodules(share(ring_z(4)), 9, true), GuardExceeded);
}

TEST_CASE("catalog files") {
  auto dir = std::filesystem::temp_directory_path() / "semiring_lab_catalog_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "b4.jsonl").string();
  auto store = enumerate_semimodules(B(), 4);
  save_catalog(store, path);
  CatalogStore back = load_catalog(path);
  CHECK(back.max_order == 4);
  CHECK(*back.semiring == *store.semiring);
  REQUIRE(back.entries.size() == store.entries.size());
  for (std::size_t i = 0; i < back.entries.size(); ++i) {
    CHECK(tables_equal(back.entries[i], store.entries[i]));
    CHECK(back.entries[i].name == store.entries[i].name);
  }

  std::ifstream in(path);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  auto cut = (dir / "cut.jsonl").string();
  std::ofstream(cut) << header << '\n' << first << '\n';
  CHECK_THROWS_AS(load_catalog(cut), FormatError);
  auto garbage = (dir / "garbage.jsonl").string();
  std::ofstream(garbage) << header << '\n' << "{\"order\": 2, \"add\": [[0,1]" << '\n';
  CHECK_THROWS_WITH(load_catalog(garbage), Catch::Matchers::ContainsSubstring("corrupt entry"));
  CHECK_THROWS_AS(load_catalog((dir / "missing.jsonl").string()), FormatError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumeration does not depend on the job count") {
  auto e = share(end_semiring(chain(3)));
  auto one = enumerate_semimodules(e, 4, false, 1);
  for (unsigned jobs : {2u, 4u}) {
    auto many = enumerate_semimodules(e, 4, false, jobs);
    REQUIRE(many.entries.size() == one.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
      CHECK(tables_equal(many.entries[i], one.entries[i]));
    }
  }
}

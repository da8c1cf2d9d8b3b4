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

#include <map>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "semiring_lab/semiring_lab.hpp"

using namespace semiring_lab;

namespace {

// Each suite runs once per process.
Json const& report(std::string const& id) {
  static std::map<std::string, Json> cache;
  auto it = cache.find(id);
  if (it == cache.end()) {
    it = cache.emplace(id, run_suite(id, SuiteOptions{}).to_json()).first;
  }
  return it->second;
}

using Row = std::pair<std::string, std::string>;  // (id, status)

std::vector<Row> rows(Json const& r) {
  std::vector<Row> out;
  for (auto const& a : r.at("assertions")) {
    out.emplace_back(a.at("id").get<std::string>(), a.at("status").get<std::string>());
  }
  return out;
}

void collect_revalidated(Json const& j, std::vector<bool>& out) {
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) {
      if (k == "revalidated") out.push_back(v.get<bool>());
      collect_revalidated(v, out);
    }
  } else if (j.is_array()) {
    for (auto const& v : j) collect_revalidated(v, out);
  }
}

}  // namespace

TEST_CASE("every suite writes a well-formed report") {
  REQUIRE(suites().size() == 13);
  for (auto const& info : suites()) {
    INFO(info.id);
    Json const& r = report(info.id);
    CHECK(r.at("schema_version") == 1);
    CHECK(r.at("suite") == info.id);
    CHECK(r.at("tool_version") == kToolVersion);
    CHECK_FALSE(r.contains("wall_time_seconds"));
    CHECK(r.at("max_size").get<std::size_t>() >= 1);
    // SES2.8 runs no injectivity checks, so it has no universe and no notes
    if (info.id != "SES2.8") {
      CHECK(r.at("universe_bound").get<std::size_t>() >= 1);
      CHECK_FALSE(r.at("notes").empty());
    }
    CHECK_FALSE(r.at("semirings").empty());
    std::map<std::string, std::size_t> counts;
    for (auto const& a : r.at("assertions")) {
      for (auto const& key : {"id", "semiring", "claim", "status", "checked", "detail"}) {
        CHECK(a.contains(key));
      }
      ++counts[a.at("status").get<std::string>()];
    }
    for (auto const& status : {"pass", "fail", "refuted-with-witness"}) {
      CHECK(r.at("counts").at(status).get<std::size_t>() == counts[status]);
    }
    CHECK(r.at("verdict") == (counts["fail"] == 0 ? "confirmed" : "not-confirmed"));
    std::vector<bool> reval;
    collect_revalidated(r, reval);
    for (bool ok : reval) CHECK(ok);
  }
  CHECK_THROWS_AS(run_suite("T9.9", SuiteOptions{}), PreconditionError);
}

TEST_CASE("wall time appears only when requested") {
  SuiteReport r = run_suite("SES2.8", SuiteOptions{});
  CHECK(r.to_json(1.5).at("wall_time_seconds") == 1.5);
  CHECK_FALSE(r.to_json().contains("wall_time_seconds"));
}

TEST_CASE("confirmed suites") {
  CHECK(rows(report("T4.4")) ==
        std::vector<Row>{{"premise", "pass"},
                         {"finite-has-infinite", "pass"},
                         {"finite-einjective", "pass"},
                         {"einjective-iff-infinite", "pass"},
                         {"injective-implies-einjective", "pass"},
                         {"embeds-in-einjective", "pass"},
                         {"regular-einjective-iff-boolean", "pass"},
                         {"idempotent-embedding", "pass"}});
  CHECK(rows(report("PE4.6")) ==
        std::vector<Row>{{"lattice-einjective", "pass"},
                         {"lattice-not-injective", "refuted-with-witness"},
                         {"distributive-control", "pass"}});
  CHECK(report("PE4.6").at("assertions")[1].at("checked") == 6);
  CHECK(rows(report("T6.5")).front() == Row{"non-boolean-cyclic-failure", "refuted-with-witness"});
  CHECK(rows(report("SES2.8"))[3] == Row{"kernel-quotient-differs", "refuted-with-witness"});
  for (auto const& id : {"T4.4", "P4.1", "PE4.6", "P5.1", "P5.2", "P6.1", "P6.2",
                         "T6.5", "T6.7", "T6.10", "SES2.8"}) {
    INFO(id);
    CHECK(report(id).at("verdict") == "confirmed");
  }
}

TEST_CASE("P4.3: the premise fails and one module is an exception") {
  Json const& r = report("P4.3");
  CHECK(r.at("verdict") == "not-confirmed");
  CHECK(rows(r) == std::vector<Row>{{"premise-idempotent", "pass"},
                                    {"premise-trivial-ideals", "fail"},
                                    {"einjective-iff-fixed-infinite", "fail"}});
  CHECK(r.at("assertions")[1].at("detail").at("ideal").size() == 3);
  Json const& ex = r.at("assertions")[2].at("detail").at("exceptions");
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].at("module").at("order") == 3);
  CHECK(ex[0].at("einjective") == true);
  CHECK(ex[0].at("fixed_infinite").is_null());

  // the reported table is a valid module with no infinite element fixed by
  // every nonzero scalar
  auto e = share(end_semiring(chain(3)));
  Semimodule m = semimodule_from_json(ex[0].at("table"), e);
  CHECK(validate_semimodule(m).ok());
  for (Index inf : infinite_elements(m)) {
    bool fixed = true;
    for (Index s = 1; s < e->order; ++s) fixed = fixed && m.scale(s, inf) == inf;
    CHECK_FALSE(fixed);
  }
}

TEST_CASE("L6.3: the V construction admits a retraction") {
  Json const& r = report("L6.3");
  CHECK(r.at("verdict") == "not-confirmed");
  std::size_t v_fails = 0;
  for (auto const& a : r.at("assertions")) {
    std::string id = a.at("id");
    if (id == "splitting-iff-boolean") CHECK(a.at("status") == "pass");
    if (id == "non-boolean-cyclic-failure") CHECK(a.at("status") == "refuted-with-witness");
    if (id != "v-construction") continue;
    CHECK(a.at("status") == "fail");
    ++v_fails;
    if (a.at("semiring") != "chain3") continue;
    // the retraction V -> {0, m} is a homomorphism fixing {0, m}
    auto l3 = share(lattice_semiring(chain(3)));
    Semimodule v = semimodule_from_json(a.at("detail").at("V"), l3);
    Map ret = a.at("detail").at("retraction").get<Map>();
    SubSet sub = SubSet::of(share(v), {1});  // V lists 0 and m first
    Semimodule cyc = as_module(sub);
    Map onto;
    for (Index x : ret) onto.push_back(static_cast<Index>(
        std::find(sub.members.begin(), sub.members.end(), x) - sub.members.begin()));
    CHECK(oracle::is_hom(v, cyc, onto));
    for (Index i = 0; i < sub.size(); ++i) CHECK(onto[sub.members[i]] == i);
  }
  CHECK(v_fails == 3);
}

TEST_CASE("reports do not depend on the job count") {
  for (auto const& id : {"T4.4", "P4.3"}) {
    SuiteOptions many;
    many.jobs = 8;
    CHECK(run_suite(id, many).to_json().dump() == report(id).dump());
  }
}

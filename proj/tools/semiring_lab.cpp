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

// semiring-lab: command-line front end.
//
// Exit codes: 0 success or property holds, 1 property fails (a witness was
// found), 2 usage or input error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiring_lab/semiring_lab.hpp"

namespace sl = semiring_lab;
using sl::Json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kInputError = 2;

struct Common {
  std::string out;
  std::size_t max_size = 0;  // 0: command default
  std::size_t universe_max = 0;
  unsigned jobs = 1;
  bool force = false;
  bool timing = false;
};

void emit(Common const& c, Json const& j) {
  if (!c.out.empty()) {
    sl::write_json_file(c.out, j);
  }
}

std::string join(std::vector<sl::Index> const& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    s << (i ? "," : "") << v[i];
  }
  s << '}';
  return s.str();
}

Json violations_json(sl::ValidationReport const& r) {
  Json v = Json::array();
  for (auto const& x : r.violations) {
    v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  }
  return v;
}

std::vector<sl::Index> parse_indices(std::string const& s) {
  std::vector<sl::Index> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) {
      continue;
    }
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (std::exception const&) {
      pos = 0;
    }
    if (pos != tok.size()) {
      throw sl::FormatError("expected comma-separated indices, got \"" + s + "\"");
    }
    out.push_back(static_cast<sl::Index>(v));
  }
  return out;
}

/// Validated semimodule from a reference.
sl::SemimodulePtr module_ref(std::string const& ref) {
  sl::Semimodule m = sl::load_semimodule(ref);
  auto r = sl::validate_semimodule(m);
  if (!r.ok()) {
    throw sl::FormatError(ref + " is not a semimodule: " + r.summary());
  }
  return sl::share(std::move(m));
}

sl::SemiringPtr semiring_ref(std::string const& ref) {
  sl::Semiring s = sl::load_semiring(ref);
  auto r = sl::validate_semiring(s);
  if (!r.ok()) {
    throw sl::FormatError(ref + " is not a semiring: " + r.summary());
  }
  return sl::share(std::move(s));
}

int cmd_validate(Common const& c, std::string const& ref) {
  sl::Structure s = sl::load_structure(ref);
  sl::ValidationReport r;
  std::string kind;
  if (auto* x = std::get_if<sl::Semiring>(&s)) {
    kind = "semiring";
    r = sl::validate_semiring(*x);
  } else if (auto* m = std::get_if<sl::Semimodule>(&s)) {
    kind = "semimodule";
    r = sl::validate_semimodule(*m);
  } else {
    kind = "lattice";
    r = sl::validate_lattice(std::get<sl::Lattice>(s));
  }
  std::cout << kind << ": " << r.summary() << '\n';
  emit(c, {{"kind", kind},
           {"valid", r.ok()},
           {"violations", violations_json(r)},
           {"tool_version", sl::kToolVersion}});
  return r.ok() ? kOk : kPropertyFails;
}

int cmd_classify(Common const& c, std::string const& ref) {
  auto s = semiring_ref(ref);
  sl::ClassificationReport r = sl::classify_semiring(s);
  Json j = {{"semiring", sl::to_json(*s)},
            {"flags", r.flags},
            {"witnesses", r.witnesses},
            {"notes", {sl::kTrivialIdealsNote}},
            {"tool_version", sl::kToolVersion}};
  for (auto const& [name, value] : r.flags) {
    std::cout << name << '=' << (value ? "true" : "false");
    auto w = r.witnesses.find(name);
    if (w != r.witnesses.end()) {
      std::cout << "  witness " << join(w->second);
    }
    std::cout << '\n';
  }
  if (r.atoms) {
    std::cout << "atoms=" << Json(*r.atoms).dump() << '\n';
    j["atoms"] = *r.atoms;
  }
  emit(c, j);
  return kOk;
}

int cmd_subs(Common const& c, std::string const& ref) {
  auto m = module_ref(ref);
  auto subs = sl::subsemimodules(m, c.force);
  Json list = Json::array();
  std::cout << subs.size() << " subsemimodules of " << m->name << " (order "
            << m->order << ")\n";
  for (auto const& a : subs) {
    bool sub = sl::is_subtractive(a).holds;
    bool strong = sl::is_strongly_subtractive(a).holds;
    std::cout << "  " << join(a.members) << (sub ? "  subtractive" : "")
              << (strong ? "  strongly-subtractive" : "") << '\n';
    list.push_back(
        {{"members", a.members}, {"subtractive", sub}, {"strongly_subtractive", strong}});
  }
  auto special = sl::special_subsets(m);
  auto inf = sl::infinite_elements(*m);
  std::cout << "I+ = " << join(special.iplus.members)
            << "  Z = " << join(special.zeroic.members)
            << "  V = " << join(special.v.members)
            << "  infinite = " << join(inf) << '\n';
  emit(c, {{"module", sl::to_json(*m)},
           {"subsemimodules", list},
           {"iplus", special.iplus.members},
           {"zeroic", special.zeroic.members},
           {"v", special.v.members},
           {"infinite", inf},
           {"tool_version", sl::kToolVersion}});
  return kOk;
}

int cmd_quotient(Common const& c, std::string const& ref,
                 std::string const& subset) {
  auto m = module_ref(ref);
  if (subset.empty()) {
    auto congs = sl::all_congruences(*m, c.force);
    Json list = Json::array();
    std::cout << congs.size() << " congruences on " << m->name << '\n';
    for (auto const& t : congs) {
      std::cout << "  " << Json(t.class_of).dump() << "  (" << t.classes
                << " classes)\n";
      list.push_back(t.class_of);
    }
    emit(c, {{"module", sl::to_json(*m)},
             {"congruences", list},
             {"tool_version", sl::kToolVersion}});
    return kOk;
  }
  auto members = parse_indices(subset);
  for (sl::Index x : members) {
    if (x >= m->order) {
      throw sl::FormatError("subset element " + std::to_string(x) + " out of range");
    }
  }
  sl::SubSet l = sl::SubSet::of(m, members);
  if (!sl::is_subsemimodule(*m, l.mask)) {
    throw sl::PreconditionError(join(members) + " is not a subsemimodule");
  }
  sl::Quotient q = sl::quotient_by(l);
  std::cout << "M/L has order " << q.module.order
            << "; projection " << Json(q.projection).dump() << '\n';
  emit(c, {{"module", sl::to_json(*m)},
           {"subset", members},
           {"bourne", sl::bourne(l).class_of},
           {"quotient", sl::to_json(q.module, false)},
           {"projection", q.projection},
           {"tool_version", sl::kToolVersion}});
  return kOk;
}

int cmd_hom(Common const& c, std::string const& src_ref,
            std::string const& dst_ref) {
  auto src = module_ref(src_ref);
  auto dst = module_ref(dst_ref);
  auto maps = sl::hom_maps(*src, *dst);
  bool iso = sl::isomorphic(*src, *dst);
  std::cout << maps.size() << " homomorphisms; "
            << (iso ? "isomorphic" : "not isomorphic") << '\n';
  for (auto const& f : maps) {
    std::cout << "  " << Json(f).dump() << '\n';
  }
  emit(c, {{"source", sl::to_json(*src)},
           {"target", sl::to_json(*dst)},
           {"maps", maps},
           {"isomorphic", iso},
           {"tool_version", sl::kToolVersion}});
  return kOk;
}

int cmd_injectivity(Common const& c, std::string const& ref,
                    std::string const& catalog, bool essential) {
  auto m = module_ref(ref);
  std::size_t k = c.universe_max ? c.universe_max : (c.max_size ? c.max_size : 3);
  sl::TestUniverse u =
      catalog.empty()
          ? sl::universe_for(m->semiring, k, essential, c.force, c.jobs)
          : sl::build_universe(sl::load_catalog(catalog), k, essential);
  if (!sl::same_semiring(*u.semiring, *m->semiring)) {
    throw sl::PreconditionError("catalog is over a different semiring");
  }
  auto start = std::chrono::steady_clock::now();
  sl::InjectivityResult r = essential ? sl::is_einjective_rel(*m, u, c.jobs)
                                      : sl::is_injective_rel(*m, u, c.jobs);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  char const* what = essential ? "e-injective" : "injective";
  Json j = {{"module", sl::to_json(*m)},
            {"property", what},
            {"universe", u.label},
            {"pairs", r.pairs},
            {"pass", r.pass},
            {"tool_version", sl::kToolVersion}};
  if (r.pass) {
    std::cout << what << " relative to " << u.label << " (" << r.pairs
              << " pairs)\n";
  } else {
    Json w = sl::to_json(*r.witness, u);
    w["revalidated"] = sl::revalidate_witness(*m, u, *r.witness).holds;
    std::cout << "not " << what << " relative to " << u.label << "\n  witness "
              << w.dump() << '\n';
    j["witness"] = w;
  }
  if (c.timing) {
    j["wall_time_seconds"] = secs;
  }
  emit(c, j);
  return r.pass ? kOk : kPropertyFails;
}

int cmd_enumerate(Common const& c, std::string const& ref) {
  auto s = semiring_ref(ref);
  std::size_t k = c.max_size ? c.max_size : 3;
  sl::CatalogStore cat = sl::enumerate_semimodules(s, k, c.force, c.jobs);
  std::vector<std::size_t> counts(k + 1, 0);
  for (auto const& m : cat.entries) {
    ++counts[m.order];
  }
  std::cout << cat.entries.size() << " semimodules over " << s->name
            << " up to order " << k << '\n';
  for (std::size_t n = 1; n <= k; ++n) {
    std::cout << "  order " << n << ": " << counts[n] << '\n';
  }
  if (!c.out.empty()) {
    sl::save_catalog(cat, c.out);
  }
  return kOk;
}

int cmd_verify(Common const& c, std::string const& id,
               std::vector<std::string> const& semirings, bool list) {
  if (list || id.empty()) {
    for (auto const& s : sl::suites()) {
      std::cout << s.id << "  " << s.summary << '\n';
    }
    return id.empty() && !list ? kInputError : kOk;
  }
  sl::SuiteOptions o;
  o.semirings = semirings;
  if (c.max_size) {
    o.max_size = c.max_size;
  }
  if (c.universe_max) {
    o.universe_max = c.universe_max;
  }
  o.jobs = c.jobs;
  auto start = std::chrono::steady_clock::now();
  sl::SuiteReport rep = sl::run_suite(id, o);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  for (auto const& a : rep.assertions) {
    std::cout << '[' << sl::to_string(a.status) << "] " << a.semiring << ' '
              << a.id << " (" << a.checked << " checked)\n";
  }
  std::cout << rep.suite << ": " << (rep.confirmed() ? "confirmed" : "not-confirmed")
            << '\n';
  emit(c, rep.to_json(c.timing ? std::optional<double>(secs) : std::nullopt));
  return rep.confirmed() ? kOk : kPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semirings, semimodules and e-injectivity"};
  app.set_version_flag("--version", std::string(sl::kToolVersion));
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--out", c.out, "write a JSON report to FILE");
    sub->add_option("--max-size", c.max_size, "largest module order");
    sub->add_option("--universe-max", c.universe_max,
                    "largest test module in the universe");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--force", c.force, "raise enumeration guards");
    sub->add_flag("--timing", c.timing, "include wall time in the report");
  };

  std::string ref, ref2, subset, catalog, suite;
  std::vector<std::string> semirings;
  bool list = false;

  auto* validate = app.add_subcommand("validate", "check the axioms of a structure");
  validate->add_option("structure", ref)->required();
  auto* classify = app.add_subcommand("classify", "classification flags of a semiring");
  classify->add_option("semiring", ref)->required();
  auto* subs = app.add_subcommand("subs", "subsemimodules and distinguished subsets");
  subs->add_option("module", ref)->required();
  auto* quot = app.add_subcommand("quotient", "congruences, or the quotient by a subset");
  quot->add_option("module", ref)->required();
  quot->add_option("--subset", subset, "comma-separated members of L");
  auto* hom = app.add_subcommand("hom", "homomorphisms between two semimodules");
  hom->add_option("source", ref)->required();
  hom->add_option("target", ref2)->required();
  auto* einj = app.add_subcommand("einj", "e-injectivity relative to a universe");
  auto* inj = app.add_subcommand("inj", "injectivity relative to a universe");
  for (auto* sub : {einj, inj}) {
    sub->add_option("module,--module", ref, "semimodule reference");
    sub->add_option("--catalog", catalog, "catalog file for the universe");
  }
  auto* enumerate = app.add_subcommand("enumerate", "catalog of semimodules");
  enumerate->add_option("semiring,--semiring", ref, "semiring reference");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite);
  verify->add_option("--semiring", semirings, "semiring reference (repeatable)");
  verify->add_flag("--list", list, "list the suites");
  for (auto* sub : {validate, classify, subs, quot, hom, einj, inj, enumerate, verify}) {
    common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) {
      return cmd_validate(c, ref);
    }
    if (*classify) {
      return cmd_classify(c, ref);
    }
    if (*subs) {
      return cmd_subs(c, ref);
    }
    if (*quot) {
      return cmd_quotient(c, ref, subset);
    }
    if (*hom) {
      return cmd_hom(c, ref, ref2);
    }
    if (*einj || *inj) {
      if (ref.empty()) {
        throw sl::FormatError("a module is required");
      }
      return cmd_injectivity(c, ref, catalog, static_cast<bool>(*einj));
    }
    if (*enumerate) {
      if (ref.empty()) {
        throw sl::FormatError("a semiring is required");
      }
      return cmd_enumerate(c, ref);
    }
    if (*verify) {
      return cmd_verify(c, suite, semirings, list);
    }
  } catch (sl::Error const& e) {
    std::cerr << "semiring-lab: " << e.what() << '\n';
    return kInputError;
  } catch (std::exception const& e) {
    std::cerr << "semiring-lab: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

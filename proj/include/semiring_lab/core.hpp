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

#ifndef SEMIRING_LAB_CORE_HPP_
#define SEMIRING_LAB_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiring_lab {

/// Element of a finite carrier. Element 0 is always the additive identity.
using Index = std::uint32_t;

/// A total map between finite carriers, stored as an image vector.
using Map = std::vector<Index>;

inline constexpr char kToolVersion[] = "semiring-lab 1.0.0";

// Errors ---------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables with the wrong dimensions or out-of-range entries.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its feasibility bound.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON document or catalog file).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Tables ---------------------------------------------------------------------

/// A finite semiring given by explicit addition and multiplication tables.
/// The additive identity is index 0.
struct Semiring {
  std::size_t order = 1;
  std::vector<Index> add{0};
  std::vector<Index> mul{0};
  Index one = 0;
  std::string name;

  static constexpr Index zero = 0;

  Index plus(Index a, Index b) const { return add[a * order + b]; }
  Index times(Index a, Index b) const { return mul[a * order + b]; }

  friend bool operator==(Semiring const& a, Semiring const& b) {
    return a.order == b.order && a.one == b.one && a.add == b.add &&
           a.mul == b.mul;
  }
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// A finite left semimodule over a finite semiring. Row `s` of `act` holds
/// the map m -> s*m.
struct Semimodule {
  SemiringPtr semiring;
  std::size_t order = 1;
  std::vector<Index> add{0};
  std::vector<Index> act;
  std::string name;

  static constexpr Index zero = 0;

  Index plus(Index a, Index b) const { return add[a * order + b]; }
  Index scale(Index s, Index m) const { return act[s * order + m]; }
  std::size_t scalars() const { return semiring->order; }
};

using SemimodulePtr = std::shared_ptr<const Semimodule>;

/// True when both semimodules are over the same (table-equal) semiring.
inline bool same_semiring(Semiring const& a, Semiring const& b) {
  return &a == &b || a == b;
}

inline bool same_base(Semimodule const& a, Semimodule const& b) {
  return same_semiring(*a.semiring, *b.semiring);
}

inline bool tables_equal(Semimodule const& a, Semimodule const& b) {
  return same_base(a, b) && a.order == b.order && a.add == b.add &&
         a.act == b.act;
}

/// A finite lattice; `add`-style naming is avoided since lattices are used
/// both as semirings (join, meet) and as semimodules over B (join only).
struct Lattice {
  std::size_t order = 1;
  std::vector<Index> join{0};
  std::vector<Index> meet{0};
  Index bot = 0;
  Index top = 0;
  std::string name;

  Index vee(Index a, Index b) const { return join[a * order + b]; }
  Index wedge(Index a, Index b) const { return meet[a * order + b]; }
  bool leq(Index a, Index b) const { return vee(a, b) == b; }
};

/// An (S,T)-bisemimodule: a left S-semimodule with a commuting right
/// T-action. `right_act[p * |T| + t]` is p*t.
struct Bisemimodule {
  SemiringPtr right_semiring;
  SemimodulePtr carrier;
  std::vector<Index> right_act;

  Index right_scale(Index p, Index t) const {
    return right_act[p * right_semiring->order + t];
  }
};

/// Semimodule homomorphism candidate; validity is checked separately.
struct Morphism {
  SemimodulePtr source;
  SemimodulePtr target;
  Map map;

  Index operator()(Index x) const { return map[x]; }
};

struct SemiringMorphism {
  SemiringPtr source;
  SemiringPtr target;
  Map map;
};

/// A subsemimodule given by its member set. Always contains 0.
struct SubSet {
  SemimodulePtr parent;
  std::vector<Index> members;  // sorted
  std::vector<char> mask;      // mask[x] != 0 iff x is a member

  bool contains(Index x) const { return mask[x] != 0; }
  std::size_t size() const { return members.size(); }

  static SubSet of(SemimodulePtr parent, std::vector<Index> elems) {
    SubSet out;
    out.mask.assign(parent->order, 0);
    for (Index x : elems) {
      if (x >= parent->order) {
        throw ShapeError("subset element out of range");
      }
      out.mask[x] = 1;
    }
    out.mask[0] = 1;
    for (Index x = 0; x < parent->order; ++x) {
      if (out.mask[x]) {
        out.members.push_back(x);
      }
    }
    out.parent = std::move(parent);
    return out;
  }

  friend bool operator==(SubSet const& a, SubSet const& b) {
    return a.members == b.members;
  }
};

/// A partition of a carrier, normalized so that class ids are assigned in
/// order of first appearance; the class of element 0 is therefore 0. The
/// carrier (semimodule or semiring) is supplied alongside by the caller and
/// determines which compatibility laws apply.
struct Congruence {
  std::vector<Index> class_of;
  std::size_t classes = 0;

  static Congruence from_labels(std::vector<Index> const& labels) {
    Congruence c;
    c.class_of.resize(labels.size());
    // labels may be arbitrary ids; remap by first appearance
    std::vector<std::pair<Index, Index>> table;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Index l = labels[i];
      auto it = std::find_if(table.begin(), table.end(),
                             [l](auto const& p) { return p.first == l; });
      if (it == table.end()) {
        table.emplace_back(l, static_cast<Index>(table.size()));
        c.class_of[i] = table.back().second;
      } else {
        c.class_of[i] = it->second;
      }
    }
    c.classes = table.size();
    return c;
  }

  static Congruence diagonal(std::size_t n) {
    Congruence c;
    c.class_of.resize(n);
    std::iota(c.class_of.begin(), c.class_of.end(), Index{0});
    c.classes = n;
    return c;
  }

  static Congruence universal(std::size_t n) {
    Congruence c;
    c.class_of.assign(n, 0);
    c.classes = n == 0 ? 0 : 1;
    return c;
  }

  bool related(Index a, Index b) const { return class_of[a] == class_of[b]; }
  bool is_diagonal() const { return classes == class_of.size(); }
  bool is_universal() const { return classes <= 1; }

  /// Classes as sorted member lists, ordered by class id.
  std::vector<std::vector<Index>> blocks() const {
    std::vector<std::vector<Index>> out(classes);
    for (Index x = 0; x < class_of.size(); ++x) {
      out[class_of[x]].push_back(x);
    }
    return out;
  }

  friend bool operator==(Congruence const& a, Congruence const& b) {
    return a.class_of == b.class_of;
  }
  friend bool operator<(Congruence const& a, Congruence const& b) {
    return a.class_of < b.class_of;
  }
};

// Small helpers ----------------------------------------------------------------

inline SemiringPtr share(Semiring s) {
  return std::make_shared<const Semiring>(std::move(s));
}

inline SemimodulePtr share(Semimodule m) {
  return std::make_shared<const Semimodule>(std::move(m));
}

inline Map identity_map(std::size_t n) {
  Map m(n);
  std::iota(m.begin(), m.end(), Index{0});
  return m;
}

inline Map compose(Map const& outer, Map const& inner) {
  Map out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[inner[i]];
  }
  return out;
}

inline bool is_injective_map(Map const& m, std::size_t codomain) {
  std::vector<char> hit(codomain, 0);
  for (Index y : m) {
    if (hit[y]) {
      return false;
    }
    hit[y] = 1;
  }
  return true;
}

inline bool is_surjective_map(Map const& m, std::size_t codomain) {
  std::vector<char> hit(codomain, 0);
  for (Index y : m) {
    hit[y] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_CORE_HPP_

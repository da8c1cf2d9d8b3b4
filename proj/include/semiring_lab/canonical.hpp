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

// Canonical labelling of small finite algebras.
//
// Colour refinement followed by an individualisation-refinement tree; the
// tree is explored completely (no automorphism pruning), which is cheap at
// the orders this library enumerates. Element 0 always keeps label 0.
// The number of leaves reaching the minimal key equals the order of the
// automorphism group.

#ifndef SEMIRING_LAB_CANONICAL_HPP_
#define SEMIRING_LAB_CANONICAL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "semiring_lab/core.hpp"

namespace semiring_lab {

/// Operations of an algebra on {0..n-1}: n x n tables and length-n maps.
struct AlgebraView {
  std::size_t order = 0;
  std::vector<std::vector<Index> const*> binary;
  std::vector<Index const*> unary;
  /// Distinguished constants (besides 0), e.g. the unit of a semiring.
  std::vector<Index> constants;
};

struct Canonical {
  std::vector<Index> key;
  Map relabel;  // old index -> canonical index
  std::size_t automorphisms = 0;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(AlgebraView const& v) : v_(v) {}

  Canonical run() {
    std::vector<Index> colour(v_.order, 1);
    if (v_.order > 0) {
      colour[0] = 0;
    }
    // constants are individualised up front, in the order given
    Index next = 2;
    for (Index c : v_.constants) {
      if (c != 0 && colour[c] == 1) {
        colour[c] = next++;
      }
    }
    normalise(colour);
    search(refine(colour));
    best_.automorphisms = leaves_at_best_;
    return best_;
  }

 private:
  // Renumbers colours 0..k-1 preserving their order.
  static void normalise(std::vector<Index>& colour) {
    std::vector<Index> values(colour);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (Index& c : colour) {
      c = static_cast<Index>(
          std::lower_bound(values.begin(), values.end(), c) - values.begin());
    }
  }

  static std::size_t count(std::vector<Index> const& colour) {
    Index m = 0;
    for (Index c : colour) {
      m = std::max(m, c);
    }
    return colour.empty() ? 0 : m + 1;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Splits colour classes by an order-independent hash of each element's
  // neighbourhood. Collisions only weaken the refinement; keys are compared
  // exactly at the leaves.
  std::vector<Index> refine(std::vector<Index> colour) const {
    std::size_t const n = v_.order;
    std::size_t classes = count(colour);
    std::vector<std::pair<std::pair<Index, std::uint64_t>, Index>> sig(n);
    while (true) {
      for (Index x = 0; x < n; ++x) {
        std::uint64_t h = 0;
        std::uint64_t salt = 1;
        for (auto const* t : v_.binary) {
          std::uint64_t acc = 0;
          for (Index y = 0; y < n; ++y) {
            Index xy = (*t)[x * n + y], yx = (*t)[y * n + x];
            acc += mix((std::uint64_t{colour[y]} << 42) ^
                       (std::uint64_t{colour[xy]} << 21) ^ colour[yx]);
          }
          h = mix(h ^ (acc + salt++));
        }
        for (Index const* u : v_.unary) {
          std::uint64_t acc = 0;
          for (Index y = 0; y < n; ++y) {
            if (u[y] == x) {
              acc += mix(colour[y]);
            }
          }
          h = mix(h ^ mix(acc + (std::uint64_t{colour[u[x]]} << 32) + salt++));
        }
        sig[x] = {{colour[x], h}, x};
      }
      std::vector<std::pair<std::pair<Index, std::uint64_t>, Index>> sorted(sig);
      std::sort(sorted.begin(), sorted.end());
      std::vector<Index> next(n);
      Index k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sorted[i].first != sorted[i - 1].first) {
          ++k;
        }
        next[sorted[i].second] = k;
      }
      colour.swap(next);
      std::size_t now = n == 0 ? 0 : k + 1;
      if (now == classes) {
        return colour;
      }
      classes = now;
    }
  }

  std::vector<Index> key_for(Map const& p) const {
    std::size_t const n = v_.order;
    std::vector<Index> key;
    key.reserve(3 + v_.binary.size() * n * n + v_.unary.size() * n);
    key.push_back(static_cast<Index>(n));
    key.push_back(static_cast<Index>(v_.binary.size()));
    key.push_back(static_cast<Index>(v_.unary.size()));
    Map inv(n);
    for (Index x = 0; x < n; ++x) {
      inv[p[x]] = x;
    }
    for (auto const* t : v_.binary) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          key.push_back(p[(*t)[inv[a] * n + inv[b]]]);
        }
      }
    }
    for (Index const* u : v_.unary) {
      for (Index a = 0; a < n; ++a) {
        key.push_back(p[u[inv[a]]]);
      }
    }
    for (Index c : v_.constants) {
      key.push_back(p[c]);
    }
    return key;
  }

  void search(std::vector<Index> const& colour) {
    std::size_t const n = v_.order;
    std::size_t const k = count(colour);
    if (k == n) {
      std::vector<Index> key = key_for(colour);
      if (!have_best_ || key < best_.key) {
        best_.key = std::move(key);
        best_.relabel = colour;
        have_best_ = true;
        leaves_at_best_ = 1;
      } else if (key == best_.key) {
        ++leaves_at_best_;
      }
      return;
    }
    // first smallest non-singleton cell
    std::vector<std::size_t> size(k, 0);
    for (Index c : colour) {
      ++size[c];
    }
    Index cell = 0;
    std::size_t best_size = n + 1;
    for (Index c = 0; c < k; ++c) {
      if (size[c] > 1 && size[c] < best_size) {
        best_size = size[c];
        cell = c;
      }
    }
    for (Index x = 0; x < n; ++x) {
      if (colour[x] != cell) {
        continue;
      }
      // split x off in front of the rest of its cell
      std::vector<Index> c2(n);
      for (Index y = 0; y < n; ++y) {
        c2[y] = colour[y] * 2 + (colour[y] > cell || (colour[y] == cell && y != x));
      }
      normalise(c2);
      search(refine(std::move(c2)));
    }
  }

  AlgebraView const& v_;
  Canonical best_;
  bool have_best_ = false;
  std::size_t leaves_at_best_ = 0;
};

}  // namespace detail

inline Canonical canonical_labelling(AlgebraView const& v) {
  return detail::Canonizer(v).run();
}

inline AlgebraView view_of(Semimodule const& m) {
  AlgebraView v;
  v.order = m.order;
  v.binary.push_back(&m.add);
  for (Index s = 0; s < m.scalars(); ++s) {
    v.unary.push_back(m.act.data() + s * m.order);
  }
  return v;
}

inline AlgebraView view_of(Semiring const& s) {
  AlgebraView v;
  v.order = s.order;
  v.binary.push_back(&s.add);
  v.binary.push_back(&s.mul);
  v.constants.push_back(s.one);
  return v;
}

inline AlgebraView monoid_view(std::size_t n, std::vector<Index> const& add) {
  AlgebraView v;
  v.order = n;
  v.binary.push_back(&add);
  return v;
}

/// Applies an old->new relabelling to a semimodule.
inline Semimodule relabel(Semimodule const& m, Map const& p) {
  std::size_t const n = m.order;
  Semimodule out = m;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      out.add[p[a] * n + p[b]] = p[m.plus(a, b)];
    }
    for (Index s = 0; s < m.scalars(); ++s) {
      out.act[s * n + p[a]] = p[m.scale(s, a)];
    }
  }
  return out;
}

inline Semiring relabel(Semiring const& s, Map const& p) {
  std::size_t const n = s.order;
  Semiring out = s;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      out.add[p[a] * n + p[b]] = p[s.plus(a, b)];
      out.mul[p[a] * n + p[b]] = p[s.times(a, b)];
    }
  }
  out.one = p[s.one];
  return out;
}

/// Canonical key of a semimodule (fixed base semiring labelling).
inline std::vector<Index> canonical_key(Semimodule const& m) {
  return canonical_labelling(view_of(m)).key;
}

inline std::vector<Index> canonical_key(Semiring const& s) {
  return canonical_labelling(view_of(s)).key;
}

/// The canonical representative; equal for isomorphic inputs.
inline Semimodule canonical_form(Semimodule const& m) {
  Semimodule out = relabel(m, canonical_labelling(view_of(m)).relabel);
  return out;
}

inline Semiring canonical_form(Semiring const& s) {
  return relabel(s, canonical_labelling(view_of(s)).relabel);
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_CANONICAL_HPP_

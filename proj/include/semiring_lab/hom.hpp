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

// Homomorphism search between finite semimodules (and plain commutative
// monoids). Images are chosen only for a generating set of the source; every
// other value is forced by closing the partial map under addition and the
// scalar actions, so a conflict prunes the branch immediately.

#ifndef SEMIRING_LAB_HOM_HPP_
#define SEMIRING_LAB_HOM_HPP_

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "semiring_lab/core.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

/// Operations of a finite algebra seen by the homomorphism searcher: one
/// commutative binary operation with identity 0 plus unary operations. The
/// unary operations of source and target correspond positionally.
struct OpView {
  std::size_t order = 0;
  Index const* add = nullptr;
  std::vector<Index const*> unary;

  Index plus(Index a, Index b) const { return add[a * order + b]; }

  static OpView of(Semimodule const& m) {
    OpView v;
    v.order = m.order;
    v.add = m.add.data();
    for (Index s = 0; s < m.scalars(); ++s) {
      if (s != 0 && s != m.semiring->one) {
        v.unary.push_back(m.act.data() + s * m.order);
      }
    }
    return v;
  }

  static OpView monoid(std::size_t n, std::vector<Index> const& add) {
    OpView v;
    v.order = n;
    v.add = add.data();
    return v;
  }
};

/// Greedy generating set: an element is taken when it is not in the span of
/// the elements already taken.
inline std::vector<Index> generating_set(OpView const& v) {
  std::vector<char> span(v.order, 0);
  std::vector<Index> inside{0};
  span[0] = 1;
  std::vector<Index> gens;
  auto close = [&](Index start) {
    std::vector<Index> queue{start};
    span[start] = 1;
    inside.push_back(start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Index x = queue[q];
      auto visit = [&](Index y) {
        if (!span[y]) {
          span[y] = 1;
          inside.push_back(y);
          queue.push_back(y);
        }
      };
      for (std::size_t i = 0; i < inside.size(); ++i) {
        visit(v.plus(x, inside[i]));
      }
      for (Index const* u : v.unary) {
        visit(u[x]);
      }
    }
  };
  for (Index x = 0; x < v.order; ++x) {
    if (!span[x]) {
      gens.push_back(x);
      close(x);
    }
  }
  return gens;
}

struct HomSearchOptions {
  bool injective = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Optional prescribed values; entries equal to kFree are unconstrained.
  std::vector<Index> prescribed;

  static constexpr Index kFree = std::numeric_limits<Index>::max();
};

class HomSearcher {
 public:
  static constexpr Index kNone = std::numeric_limits<Index>::max();

  HomSearcher(OpView src, OpView dst, HomSearchOptions opts = {})
      : src_(std::move(src)), dst_(std::move(dst)), opts_(std::move(opts)) {
    if (src_.unary.size() != dst_.unary.size()) {
      throw PreconditionError("hom search between different signatures");
    }
    gens_ = generating_set(src_);
  }

  /// Calls `emit` for every homomorphism found, in search order. Stops when
  /// `emit` returns false or the limit is reached.
  void run(std::function<bool(Map const&)> const& emit) {
    img_.assign(src_.order, kNone);
    used_.assign(dst_.order, 0);
    trail_.clear();
    head_ = 0;
    found_ = 0;
    stopped_ = false;
    if (!assign(0, 0)) {
      return;
    }
    for (Index x = 0; x < opts_.prescribed.size(); ++x) {
      if (opts_.prescribed[x] != HomSearchOptions::kFree &&
          !assign(x, opts_.prescribed[x])) {
        return;
      }
    }
    if (!propagate()) {
      return;
    }
    dfs(0, emit);
  }

 private:
  bool assign(Index x, Index y) {
    if (img_[x] != kNone) {
      return img_[x] == y;
    }
    if (opts_.injective && used_[y]) {
      return false;
    }
    img_[x] = y;
    used_[y] = 1;
    trail_.push_back(x);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      Index x = trail_[head_++];
      Index y = img_[x];
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        Index z = trail_[i];
        if (!assign(src_.plus(x, z), dst_.plus(y, img_[z]))) {
          return false;
        }
      }
      for (std::size_t u = 0; u < src_.unary.size(); ++u) {
        if (!assign(src_.unary[u][x], dst_.unary[u][y])) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Index x = trail_.back();
      trail_.pop_back();
      // used_ is only a hint outside injective mode
      if (opts_.injective) {
        used_[img_[x]] = 0;
      }
      img_[x] = kNone;
    }
    head_ = mark;
  }

  void dfs(std::size_t k, std::function<bool(Map const&)> const& emit) {
    if (stopped_) {
      return;
    }
    if (k == gens_.size()) {
      if (trail_.size() != src_.order) {
        throw std::logic_error("generating set did not determine the map");
      }
      ++found_;
      if (!emit(img_) || found_ >= opts_.limit) {
        stopped_ = true;
      }
      return;
    }
    Index g = gens_[k];
    if (img_[g] != kNone) {
      dfs(k + 1, emit);
      return;
    }
    for (Index y = 0; y < dst_.order && !stopped_; ++y) {
      std::size_t mark = trail_.size();
      if (assign(g, y) && propagate()) {
        dfs(k + 1, emit);
      }
      undo(mark);
    }
  }

  OpView src_, dst_;
  HomSearchOptions opts_;
  std::vector<Index> gens_;
  std::vector<Index> img_;
  std::vector<char> used_;
  std::vector<Index> trail_;
  std::size_t head_ = 0;
  std::size_t found_ = 0;
  bool stopped_ = false;
};

/// All homomorphism maps src -> dst, sorted lexicographically.
inline std::vector<Map> hom_maps(Semimodule const& src, Semimodule const& dst,
                                 HomSearchOptions opts = {}) {
  if (!same_base(src, dst)) {
    throw PreconditionError("hom_set: semimodules over different semirings");
  }
  std::vector<Map> out;
  HomSearcher searcher(OpView::of(src), OpView::of(dst), std::move(opts));
  searcher.run([&](Map const& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Commutative-monoid homomorphisms (identity-preserving, additive).
inline std::vector<Map> monoid_hom_maps(std::size_t n,
                                        std::vector<Index> const& add_src,
                                        std::size_t m,
                                        std::vector<Index> const& add_dst) {
  std::vector<Map> out;
  HomSearcher searcher(OpView::monoid(n, add_src), OpView::monoid(m, add_dst));
  searcher.run([&](Map const& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Morphism> hom_set(SemimodulePtr const& src,
                                     SemimodulePtr const& dst) {
  std::vector<Morphism> out;
  for (auto& m : hom_maps(*src, *dst)) {
    out.push_back({src, dst, std::move(m)});
  }
  return out;
}

/// First homomorphism (in search order) agreeing with `prescribed` where it
/// is not kFree.
inline std::optional<Map> find_extension(Semimodule const& src,
                                         Semimodule const& dst,
                                         std::vector<Index> prescribed) {
  HomSearchOptions opts;
  opts.limit = 1;
  opts.prescribed = std::move(prescribed);
  std::optional<Map> out;
  HomSearcher searcher(OpView::of(src), OpView::of(dst), std::move(opts));
  searcher.run([&](Map const& m) {
    out = m;
    return false;
  });
  return out;
}

namespace detail {

// Label-invariant per-element statistics of the additive table.
inline std::vector<std::vector<std::size_t>> degree_profile(
    Semimodule const& m) {
  std::vector<std::vector<std::size_t>> prof;
  for (Index x = 0; x < m.order; ++x) {
    std::size_t absorbs = 0, absorbed = 0, to_zero = 0;
    for (Index y = 0; y < m.order; ++y) {
      absorbs += m.plus(x, y) == x;
      absorbed += m.plus(x, y) == y;
      to_zero += m.plus(x, y) == 0;
    }
    std::vector<std::size_t> row{absorbs, absorbed, to_zero,
                                 std::size_t(m.plus(x, x) == x)};
    for (Index s = 0; s < m.scalars(); ++s) {
      row.push_back(m.scale(s, x) == x);
      row.push_back(m.scale(s, x) == 0);
    }
    prof.push_back(std::move(row));
  }
  std::sort(prof.begin(), prof.end());
  return prof;
}

}  // namespace detail

/// A bijective homomorphism M -> N, or nothing. Bijective homomorphisms of
/// semimodules always have homomorphic inverses.
inline std::optional<Morphism> iso_check(SemimodulePtr const& m,
                                         SemimodulePtr const& n) {
  if (!same_base(*m, *n)) {
    throw PreconditionError("iso_check: semimodules over different semirings");
  }
  if (m->order != n->order) {
    return std::nullopt;
  }
  if (detail::degree_profile(*m) != detail::degree_profile(*n)) {
    return std::nullopt;
  }
  HomSearchOptions opts;
  opts.injective = true;
  opts.limit = 1;
  std::optional<Morphism> out;
  HomSearcher searcher(OpView::of(*m), OpView::of(*n), std::move(opts));
  searcher.run([&](Map const& f) {
    out = Morphism{m, n, f};
    return false;
  });
  return out;
}

inline bool isomorphic(Semimodule const& a, Semimodule const& b) {
  return iso_check(share(a), share(b)).has_value();
}

inline std::size_t automorphism_count(Semimodule const& m) {
  HomSearchOptions opts;
  opts.injective = true;
  std::size_t count = 0;
  HomSearcher searcher(OpView::of(m), OpView::of(m), std::move(opts));
  searcher.run([&](Map const&) {
    ++count;
    return true;
  });
  return count;
}

/// Pointwise sum of two maps into `m`.
inline Map pointwise_sum(Semimodule const& m, Map const& f, Map const& g) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = m.plus(f[i], g[i]);
  }
  return out;
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_HOM_HPP_

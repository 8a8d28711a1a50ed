/*
   Copyright 2026 The ppfunctor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ppf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ppf/error.hpp"

namespace ppf {

  namespace {
    std::size_t span_size(Group const& g, std::vector<Elem> const& gens) {
      ElementSet        mask(g.order());
      std::vector<Elem> queue{0};
      mask.insert(0);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto x : gens) {
          auto y = g.mul(queue[i], x);
          if (!mask.contains(y)) {
            mask.insert(y);
            queue.push_back(y);
          }
        }
      }
      return queue.size();
    }

    // Multiset of element orders, a cheap isomorphism invariant.
    std::map<std::uint32_t, std::size_t> order_profile(Group const& g) {
      std::map<std::uint32_t, std::size_t> out;
      for (Elem x = 0; x < g.order(); ++x) {
        ++out[g.elem_order(x)];
      }
      return out;
    }
  }  // namespace

  std::vector<Elem> generating_sequence(Group const& g, std::vector<Elem> first) {
    std::vector<Elem> gens;
    std::size_t       current = 1;
    for (auto x : first) {
      gens.push_back(x);
      auto sz = span_size(g, gens);
      if (sz == current) {
        gens.pop_back();
      } else {
        current = sz;
      }
    }
    while (current < g.order()) {
      Elem        best      = 0;
      std::size_t best_size = current;
      for (Elem x = 1; x < g.order(); ++x) {
        gens.push_back(x);
        auto sz = span_size(g, gens);
        gens.pop_back();
        if (sz > best_size
            || (sz == best_size && sz > current
                && g.elem_order(x) > g.elem_order(best))) {
          best      = x;
          best_size = sz;
        }
      }
      gens.push_back(best);
      current = best_size;
    }
    return gens;
  }

  IsomorphismSearch::IsomorphismSearch(GroupPtr         a,
                                       GroupPtr         b,
                                       std::vector<Pin> pins,
                                       Filter           filter)
      : a_(std::move(a)), b_(std::move(b)), filter_(std::move(filter)) {
    if (a_->order() > max_isomorphism_order
        || b_->order() > max_isomorphism_order) {
      std::ostringstream os;
      os << "isomorphism search too large: orders " << a_->order() << ", "
         << b_->order() << " exceed " << max_isomorphism_order;
      throw too_large(os.str());
    }
    if (a_->order() != b_->order() || order_profile(*a_) != order_profile(*b_)) {
      done_ = true;
      return;
    }
    std::vector<Elem> first;
    for (auto const& p : pins) {
      first.push_back(p.generator);
    }
    gens_ = generating_sequence(*a_, first);
    for (auto x : gens_) {
      std::vector<Elem> cands;
      auto              pin = std::find_if(pins.begin(), pins.end(),
                                           [x](Pin const& p) { return p.generator == x; });
      if (pin != pins.end()) {
        cands = pin->candidates;
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      } else {
        for (Elem y = 0; y < b_->order(); ++y) {
          cands.push_back(y);
        }
      }
      std::erase_if(cands, [&](Elem y) {
        return y >= b_->order() || b_->elem_order(y) != a_->elem_order(x);
      });
      candidates_.push_back(std::move(cands));
    }
    // A pinned element dropped as redundant still has to satisfy its pin.
    if (!pins.empty()) {
      auto user = std::move(filter_);
      filter_   = [pins, user](GroupMap const& f) {
        for (auto const& p : pins) {
          if (std::find(p.candidates.begin(), p.candidates.end(), f(p.generator))
              == p.candidates.end()) {
            return false;
          }
        }
        return !user || user(f);
      };
    }
    std::vector<Elem> base(a_->order(), static_cast<Elem>(b_->order()));
    base[0] = 0;
    maps_.assign(gens_.size() + 1, {});
    maps_[0] = std::move(base);
    pos_.assign(gens_.size() + 1, 0);
  }

  bool IsomorphismSearch::extend(std::size_t depth, Elem image) {
    auto const&       a     = *a_;
    auto const&       b     = *b_;
    auto const        unset = static_cast<Elem>(b.order());
    std::vector<Elem> map(a.order(), unset);
    std::vector<char> used(b.order(), 0);
    map[0]  = 0;
    used[0] = 1;
    std::vector<Elem> images(depth + 1);
    for (std::size_t i = 0; i < depth; ++i) {
      images[i] = maps_[depth][gens_[i]];
    }
    images[depth] = image;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto const x = queue[q];
      for (std::size_t i = 0; i <= depth; ++i) {
        auto const y  = a.mul(x, gens_[i]);
        auto const fy = b.mul(map[x], images[i]);
        if (map[y] == unset) {
          if (used[fy]) {
            return false;
          }
          map[y]   = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    maps_[depth + 1] = std::move(map);
    return true;
  }

  std::optional<GroupMap> IsomorphismSearch::next() {
    if (done_) {
      return std::nullopt;
    }
    std::size_t const k = gens_.size();
    if (k == 0) {
      done_ = true;
      GroupMap f(a_, b_, std::vector<Elem>{0});
      if (filter_ && !filter_(f)) {
        return std::nullopt;
      }
      return f;
    }
    if (yielded_) {
      yielded_ = false;
      ++pos_[depth_];
    }
    for (;;) {
      if (pos_[depth_] >= candidates_[depth_].size()) {
        if (depth_ == 0) {
          done_ = true;
          return std::nullopt;
        }
        --depth_;
        ++pos_[depth_];
        continue;
      }
      auto const img = candidates_[depth_][pos_[depth_]];
      if (!extend(depth_, img)) {
        ++pos_[depth_];
        continue;
      }
      if (depth_ + 1 < k) {
        ++depth_;
        pos_[depth_] = 0;
        continue;
      }
      // complete; extend() guarantees injectivity, and the span is all of A
      GroupMap f(a_, b_, maps_[k]);
      if (filter_ && !filter_(f)) {
        ++pos_[depth_];
        continue;
      }
      yielded_ = true;
      return f;
    }
  }

  std::vector<GroupMap> all_isomorphisms(GroupPtr const& a, GroupPtr const& b) {
    IsomorphismSearch     search(a, b);
    std::vector<GroupMap> out;
    while (auto f = search.next()) {
      out.push_back(std::move(*f));
    }
    return out;
  }

  bool are_isomorphic(GroupPtr const& a, GroupPtr const& b) {
    IsomorphismSearch search(a, b);
    return search.next().has_value();
  }

  std::size_t automorphism_count(GroupPtr const& g) {
    IsomorphismSearch search(g, g);
    std::size_t       n = 0;
    while (search.next()) {
      ++n;
    }
    return n;
  }

  std::size_t outer_automorphism_order(GroupPtr const& g) {
    if (g->order() > 64) {
      std::ostringstream os;
      os << "group too large for Out(G): order " << g->order()
         << " exceeds 64";
      throw too_large(os.str());
    }
    auto const aut = automorphism_count(g);
    auto const inn = g->order() / center(g).order();
    return aut / inn;
  }

}  // namespace ppf

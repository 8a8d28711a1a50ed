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

#include "ppf/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ppf/error.hpp"

namespace ppf {

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  Group Group::from_rows(std::vector<std::vector<Elem>> const& rows,
                         std::string                           name) {
    std::size_t const n = rows.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        std::ostringstream os;
        os << "table row " << i << " has " << rows[i].size()
           << " entries, expected " << n;
        throw structure_error(os.str());
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return from_flat(n, std::move(flat), std::move(name));
  }

  Group Group::from_flat(std::size_t       n,
                         std::vector<Elem> table,
                         std::string       name) {
    if (n == 0) {
      throw structure_error("group table is empty");
    }
    if (n > max_table_order) {
      std::ostringstream os;
      os << "group too large: order " << n << " exceeds " << max_table_order;
      throw too_large(os.str());
    }
    if (table.size() != n * n) {
      throw structure_error("group table has the wrong number of entries");
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] >= n) {
        std::ostringstream os;
        os << "table entry (" << k / n << "," << k % n << ") = " << table[k]
           << " is not an element identifier";
        throw structure_error(os.str());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i] != i || table[i * n] != i) {
        std::ostringstream os;
        os << "identity violation: row/column 0 is not the identity at " << i;
        throw structure_error(os.str());
      }
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        auto& s = seen[table[i * n + j]];
        if (s) {
          std::ostringstream os;
          os << "Latin-square violation: row " << i << " repeats element "
             << table[i * n + j];
          throw structure_error(os.str());
        }
        s = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        auto& s = seen[table[j * n + i]];
        if (s) {
          std::ostringstream os;
          os << "Latin-square violation: column " << i << " repeats element "
             << table[j * n + i];
          throw structure_error(os.str());
        }
        s = 1;
      }
    }
    if (n <= max_associativity_check) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const ab = table[a * n + b];
          for (std::size_t c = 0; c < n; ++c) {
            if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
              std::ostringstream os;
              os << "associativity violation at (" << a << "," << b << ","
                 << c << ")";
              throw structure_error(os.str());
            }
          }
        }
      }
    }
    Group g;
    g.order_ = n;
    g.table_ = std::move(table);
    g.name_  = std::move(name);
    g.finish();
    return g;
  }

  void Group::finish() {
    inverse_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) {
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          break;
        }
      }
    }
    orders_.assign(order_, 1);
    for (Elem a = 0; a < order_; ++a) {
      Elem          x = a;
      std::uint32_t k = 1;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      orders_[a] = k;
    }
  }

  Elem Group::pow(Elem x, long long k) const noexcept {
    long long const o = orders_[x];
    k %= o;
    if (k < 0) {
      k += o;
    }
    Elem result = 0;
    Elem base   = x;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::uint64_t Group::exponent() const noexcept {
    std::uint64_t e = 1;
    for (auto o : orders_) {
      e = std::lcm(e, static_cast<std::uint64_t>(o));
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup, GroupMap
  ////////////////////////////////////////////////////////////////////////

  Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
      : parent_(std::move(parent)), mask_(parent_->order()) {
    for (auto x : elements) {
      if (x >= parent_->order()) {
        throw structure_error("subgroup element out of range");
      }
      mask_.insert(x);
    }
    elements_ = mask_.to_vector();
    if (!mask_.contains(0)) {
      throw structure_error("subset does not contain the identity");
    }
    for (auto a : elements_) {
      if (!mask_.contains(parent_->inv(a))) {
        throw structure_error("subset is not closed under inverses");
      }
      for (auto b : elements_) {
        if (!mask_.contains(parent_->mul(a, b))) {
          throw structure_error("subset is not closed under multiplication");
        }
      }
    }
    if (parent_->order() % elements_.size() != 0) {
      throw structure_error("subgroup order does not divide group order");
    }
  }

  Subgroup Subgroup::closed(GroupPtr parent, ElementSet mask) {
    Subgroup s;
    s.parent_   = std::move(parent);
    s.elements_ = mask.to_vector();
    s.mask_     = std::move(mask);
    return s;
  }

  GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> images)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)) {
    if (images_.size() != source_->order()) {
      throw structure_error("group map is not total on its source");
    }
    for (auto y : images_) {
      if (y >= target_->order()) {
        throw structure_error("group map image out of range");
      }
    }
  }

  bool GroupMap::is_homomorphism() const noexcept {
    auto const& a = *source_;
    auto const& b = *target_;
    if (images_[0] != 0) {
      return false;
    }
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (images_[a.mul(x, y)] != b.mul(images_[x], images_[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool GroupMap::is_injective() const {
    ElementSet seen(target_->order());
    for (auto y : images_) {
      if (seen.contains(y)) {
        return false;
      }
      seen.insert(y);
    }
    return true;
  }

  bool GroupMap::is_bijective() const {
    return source_->order() == target_->order() && is_injective();
  }

  GroupMap GroupMap::after(GroupMap const& first) const {
    if (first.target_->order() != source_->order()) {
      throw structure_error("composing group maps with mismatched groups");
    }
    std::vector<Elem> im(first.source_->order());
    for (Elem x = 0; x < im.size(); ++x) {
      im[x] = images_[first.images_[x]];
    }
    return GroupMap(first.source_, target_, std::move(im));
  }

  GroupMap GroupMap::inverse() const {
    if (!is_bijective()) {
      throw structure_error("inverse of a non-bijective map");
    }
    std::vector<Elem> im(target_->order());
    for (Elem x = 0; x < images_.size(); ++x) {
      im[images_[x]] = x;
    }
    return GroupMap(target_, source_, std::move(im));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation and enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    ElementSet closure_mask(Group const& g, std::span<Elem const> gens) {
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
      return mask;
    }
  }  // namespace

  Subgroup trivial_subgroup(GroupPtr const& g) {
    ElementSet m(g->order());
    m.insert(0);
    return Subgroup::closed(g, std::move(m));
  }

  Subgroup whole_group(GroupPtr const& g) {
    ElementSet m(g->order());
    for (Elem x = 0; x < g->order(); ++x) {
      m.insert(x);
    }
    return Subgroup::closed(g, std::move(m));
  }

  Subgroup generate(GroupPtr const& g, std::span<Elem const> gens) {
    for (auto x : gens) {
      if (x >= g->order()) {
        throw structure_error("generator out of range");
      }
    }
    return Subgroup::closed(g, closure_mask(*g, gens));
  }

  Subgroup join(Subgroup const& s, Elem x) {
    if (s.contains(x)) {
      return s;
    }
    // Closure of s ∪ {x}, multiplying by x and by the elements of s.
    auto const&       g = *s.parent();
    ElementSet        mask = s.mask();
    std::vector<Elem> queue = s.elements();
    std::vector<Elem> gens  = s.elements();
    gens.push_back(x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto y : gens) {
        auto z = g.mul(queue[i], y);
        if (!mask.contains(z)) {
          mask.insert(z);
          queue.push_back(z);
        }
      }
    }
    return Subgroup::closed(s.parent(), std::move(mask));
  }

  std::vector<Subgroup> all_subgroups(GroupPtr const& g) {
    if (g->order() > max_subgroup_order) {
      std::ostringstream os;
      os << "group too large for subgroup enumeration: order " << g->order()
         << " exceeds " << max_subgroup_order;
      throw too_large(os.str());
    }
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Subgroup>                          found;
    std::vector<std::vector<Elem>>                 gens;
    found.push_back(trivial_subgroup(g));
    gens.emplace_back();
    seen.insert(found.back().mask());
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Elem x = 1; x < g->order(); ++x) {
        if (found[i].contains(x)) {
          continue;
        }
        auto gx = gens[i];
        gx.push_back(x);
        auto mask = closure_mask(*g, gx);
        if (seen.insert(mask).second) {
          found.push_back(Subgroup::closed(g, std::move(mask)));
          gens.push_back(std::move(gx));
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  std::vector<std::vector<Elem>> conjugacy_classes(Group const& g) {
    std::vector<std::vector<Elem>> classes;
    std::vector<char>              done(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (done[x]) {
        continue;
      }
      std::vector<Elem> cls;
      for (Elem h = 0; h < g.order(); ++h) {
        auto y = g.conj(h, x);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  Subgroup centralizer_in(Subgroup const& within, std::span<Elem const> elems) {
    auto const& g = *within.parent();
    ElementSet  mask(g.order());
    for (auto h : within.elements()) {
      bool ok = true;
      for (auto x : elems) {
        if (g.mul(h, x) != g.mul(x, h)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        mask.insert(h);
      }
    }
    return Subgroup::closed(within.parent(), std::move(mask));
  }

  Subgroup centralizer(GroupPtr const& g, std::span<Elem const> elems) {
    return centralizer_in(whole_group(g), elems);
  }

  Subgroup normalizer_in(Subgroup const& within, Subgroup const& p) {
    auto const& g = *within.parent();
    ElementSet  mask(g.order());
    for (auto h : within.elements()) {
      bool ok = true;
      for (auto x : p.elements()) {
        if (!p.contains(g.conj(h, x))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        mask.insert(h);
      }
    }
    return Subgroup::closed(within.parent(), std::move(mask));
  }

  Subgroup normalizer(Subgroup const& p) {
    return normalizer_in(whole_group(p.parent()), p);
  }

  Subgroup center(GroupPtr const& g) {
    auto all = whole_group(g);
    return centralizer_in(all, all.elements());
  }

  bool is_normal_in(Subgroup const& n, Subgroup const& within) {
    auto const& g = *n.parent();
    for (auto h : within.elements()) {
      for (auto x : n.elements()) {
        if (!n.contains(g.conj(h, x))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal(Subgroup const& n) {
    return is_normal_in(n, whole_group(n.parent()));
  }

  Subgroup conjugate(Subgroup const& s, Elem h) {
    auto const& g = *s.parent();
    ElementSet  mask(g.order());
    for (auto x : s.elements()) {
      mask.insert(g.conj(h, x));
    }
    return Subgroup::closed(s.parent(), std::move(mask));
  }

  Subgroup intersection(Subgroup const& a, Subgroup const& b) {
    ElementSet mask(a.parent()->order());
    for (auto x : a.elements()) {
      if (b.contains(x)) {
        mask.insert(x);
      }
    }
    return Subgroup::closed(a.parent(), std::move(mask));
  }

  Subgroup product(Subgroup const& a, Subgroup const& b) {
    auto const& g = *a.parent();
    ElementSet  mask(g.order());
    for (auto x : a.elements()) {
      for (auto y : b.elements()) {
        mask.insert(g.mul(x, y));
      }
    }
    auto elems = mask.to_vector();
    // |AB| = |A||B|/|A∩B| holds for every product set; closure is what must
    // be checked.
    for (auto x : elems) {
      for (auto y : elems) {
        if (!mask.contains(g.mul(x, y))) {
          throw structure_error("product set is not a subgroup");
        }
      }
    }
    return Subgroup::closed(a.parent(), std::move(mask));
  }

  ////////////////////////////////////////////////////////////////////////
  // Primes and element parts
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept {
    if (n == 0) {
      return false;
    }
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

  bool is_p_element(Group const& g, Elem x, unsigned p) noexcept {
    return is_power_of(g.elem_order(x), p);
  }

  bool is_pprime_element(Group const& g, Elem x, unsigned p) noexcept {
    return g.elem_order(x) % p != 0;
  }

  namespace {
    // ord(x) = pk * r with gcd(r, p) = 1
    void split_order(std::uint64_t  o,
                     unsigned       p,
                     std::uint64_t& pk,
                     std::uint64_t& r) noexcept {
      pk = 1;
      while (o % p == 0) {
        o /= p;
        pk *= p;
      }
      r = o;
    }

    // a with a * x ≡ 1 (mod m), gcd(x, m) = 1
    std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) noexcept {
      if (m == 1) {
        return 0;
      }
      for (std::uint64_t a = 1; a < m; ++a) {
        if ((a * x) % m == 1) {
          return a;
        }
      }
      return 0;
    }
  }  // namespace

  Elem pprime_part(Group const& g, Elem x, unsigned p) noexcept {
    std::uint64_t pk, r;
    split_order(g.elem_order(x), p, pk, r);
    auto a = inverse_mod(pk % r, r);
    return g.pow(x, static_cast<long long>(a * pk));
  }

  Elem p_part(Group const& g, Elem x, unsigned p) noexcept {
    std::uint64_t pk, r;
    split_order(g.elem_order(x), p, pk, r);
    auto b = inverse_mod(r % pk, pk);
    return g.pow(x, static_cast<long long>(b * r));
  }

  Subgroup sylow_subgroup(GroupPtr const& g, unsigned p) {
    auto s = trivial_subgroup(g);
    for (;;) {
      auto n     = normalizer(s);
      bool grown = false;
      for (auto x : n.elements()) {
        auto y = p_part(*g, x, p);
        if (!s.contains(y)) {
          s     = join(s, y);
          grown = true;
          break;
        }
      }
      if (!grown) {
        return s;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients, subgroups as groups, images
  ////////////////////////////////////////////////////////////////////////

  Subgroup Quotient::image(Subgroup const& s) const {
    ElementSet mask(group->order());
    for (auto x : s.elements()) {
      mask.insert(projection(x));
    }
    return Subgroup::closed(group, std::move(mask));
  }

  Subgroup Quotient::preimage(Subgroup const& s) const {
    ElementSet mask(parent->order());
    for (Elem x = 0; x < parent->order(); ++x) {
      if (s.contains(projection(x))) {
        mask.insert(x);
      }
    }
    return Subgroup::closed(parent, std::move(mask));
  }

  Quotient quotient(Subgroup const& n, std::string name) {
    if (!is_normal(n)) {
      throw structure_error("quotient by a subgroup that is not normal");
    }
    auto const&       g = *n.parent();
    std::vector<Elem> coset(g.order(), static_cast<Elem>(-1));
    std::vector<Elem> reps;
    for (Elem x = 0; x < g.order(); ++x) {
      if (coset[x] != static_cast<Elem>(-1)) {
        continue;
      }
      auto c = static_cast<Elem>(reps.size());
      reps.push_back(x);
      for (auto k : n.elements()) {
        coset[g.mul(x, k)] = c;
      }
    }
    std::size_t const q = reps.size();
    std::vector<Elem> table(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        table[a * q + b] = coset[g.mul(reps[a], reps[b])];
      }
    }
    if (name.empty()) {
      std::ostringstream os;
      os << g.name() << "/N" << n.order();
      name = os.str();
    }
    Quotient out;
    out.parent     = n.parent();
    out.kernel     = n;
    out.group      = share(Group::from_flat(q, std::move(table), name));
    out.projection = GroupMap(out.parent, out.group, std::move(coset));
    out.coset_rep  = std::move(reps);
    return out;
  }

  Subgroup SubgroupGroup::pull_back(Subgroup const& s) const {
    ElementSet mask(group->order());
    for (Elem x = 0; x < group->order(); ++x) {
      if (s.contains(embedding(x))) {
        mask.insert(x);
      }
    }
    return Subgroup::closed(group, std::move(mask));
  }

  Subgroup SubgroupGroup::push_forward(Subgroup const& s) const {
    return image(embedding, s);
  }

  Elem SubgroupGroup::local(Elem parent_elem) const {
    auto const& im = embedding.images();
    auto        it = std::lower_bound(im.begin(), im.end(), parent_elem);
    if (it == im.end() || *it != parent_elem) {
      throw structure_error("element is not in the subgroup");
    }
    return static_cast<Elem>(it - im.begin());
  }

  SubgroupGroup as_group(Subgroup const& s, std::string name) {
    auto const&       g     = *s.parent();
    auto const&       elems = s.elements();
    std::size_t const k     = elems.size();
    std::vector<Elem> local(g.order(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      local[elems[i]] = static_cast<Elem>(i);
    }
    std::vector<Elem> table(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        table[a * k + b] = local[g.mul(elems[a], elems[b])];
      }
    }
    if (name.empty()) {
      std::ostringstream os;
      os << "sub" << k << "(" << g.name() << ")";
      name = os.str();
    }
    SubgroupGroup out;
    out.group     = share(Group::from_flat(k, std::move(table), name));
    out.embedding = GroupMap(out.group, s.parent(), elems);
    return out;
  }

  Subgroup image(GroupMap const& f, Subgroup const& s) {
    ElementSet mask(f.target()->order());
    for (auto x : s.elements()) {
      mask.insert(f(x));
    }
    return Subgroup::closed(f.target(), std::move(mask));
  }

  Subgroup preimage(GroupMap const& f, Subgroup const& s) {
    ElementSet mask(f.source()->order());
    for (Elem x = 0; x < f.source()->order(); ++x) {
      if (s.contains(f(x))) {
        mask.insert(x);
      }
    }
    return Subgroup::closed(f.source(), std::move(mask));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  Subgroup DirectProduct::project_left(Subgroup const& x) const {
    ElementSet mask(left->order());
    for (auto e : x.elements()) {
      mask.insert(left_of(e));
    }
    return Subgroup::closed(left, std::move(mask));
  }

  Subgroup DirectProduct::project_right(Subgroup const& x) const {
    ElementSet mask(right->order());
    for (auto e : x.elements()) {
      mask.insert(right_of(e));
    }
    return Subgroup::closed(right, std::move(mask));
  }

  Subgroup DirectProduct::kernel_left(Subgroup const& x) const {
    ElementSet mask(left->order());
    for (auto e : x.elements()) {
      if (right_of(e) == 0) {
        mask.insert(left_of(e));
      }
    }
    return Subgroup::closed(left, std::move(mask));
  }

  Subgroup DirectProduct::kernel_right(Subgroup const& x) const {
    ElementSet mask(right->order());
    for (auto e : x.elements()) {
      if (left_of(e) == 0) {
        mask.insert(right_of(e));
      }
    }
    return Subgroup::closed(right, std::move(mask));
  }

  bool DirectProduct::is_twisted_diagonal(Subgroup const& x) const {
    return kernel_left(x).order() == 1 && kernel_right(x).order() == 1;
  }

  DirectProduct direct_product(GroupPtr const& left, GroupPtr const& right) {
    std::size_t const a = left->order();
    std::size_t const b = right->order();
    std::size_t const n = a * b;
    if (n > max_table_order) {
      std::ostringstream os;
      os << "direct product too large: order " << n << " exceeds "
         << max_table_order;
      throw too_large(os.str());
    }
    std::vector<Elem> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto h = left->mul(static_cast<Elem>(x / b), static_cast<Elem>(y / b));
        auto g = right->mul(static_cast<Elem>(x % b), static_cast<Elem>(y % b));
        table[x * n + y] = static_cast<Elem>(h * b + g);
      }
    }
    DirectProduct out;
    out.left  = left;
    out.right = right;
    out.group = share(Group::from_flat(
        n, std::move(table), left->name() + "x" + right->name()));
    return out;
  }

  GroupPtr semidirect_product(GroupPtr const& p,
                              unsigned        n,
                              GroupMap const& action,
                              std::string     name) {
    if (action.source()->order() != p->order()
        || action.target()->order() != p->order() || !action.is_bijective()
        || !action.is_homomorphism()) {
      throw structure_error("semidirect action is not an automorphism");
    }
    std::size_t const             k = p->order();
    std::vector<std::vector<Elem>> powers(n, std::vector<Elem>(k));
    for (Elem x = 0; x < k; ++x) {
      powers[0][x] = x;
    }
    for (unsigned i = 1; i < n; ++i) {
      for (Elem x = 0; x < k; ++x) {
        powers[i][x] = action(powers[i - 1][x]);
      }
    }
    for (Elem x = 0; x < k; ++x) {
      if (action(powers[n - 1][x]) != x) {
        throw structure_error("semidirect action order does not divide n");
      }
    }
    std::size_t const m = k * n;
    if (m > max_table_order) {
      throw too_large("semidirect product too large");
    }
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      auto const x = static_cast<Elem>(a % k);
      auto const i = a / k;
      for (std::size_t b = 0; b < m; ++b) {
        auto const y = static_cast<Elem>(b % k);
        auto const j = b / k;
        table[a * m + b] = static_cast<Elem>(((i + j) % n) * k
                                             + p->mul(x, powers[i][y]));
      }
    }
    return share(Group::from_flat(m, std::move(table), std::move(name)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  Permutation parse_cycles(std::string_view text, std::size_t degree) {
    Permutation              perm(degree);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<char>        used(degree, 0);
    std::vector<std::size_t> cycle;
    bool                     open = false;
    std::size_t              i    = 0;
    auto fail = [&](std::string const& token, std::size_t pos) {
      std::ostringstream os;
      os << "malformed cycle string: unexpected token '" << token
         << "' at position " << pos << " in \"" << text << "\"";
      throw format_error(os.str());
    };
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++i;
      } else if (c == '(') {
        if (open) {
          fail("(", i);
        }
        open = true;
        cycle.clear();
        ++i;
      } else if (c == ')') {
        if (!open) {
          fail(")", i);
        }
        open = false;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          perm[cycle[k]] = static_cast<std::uint32_t>(cycle[(k + 1) % cycle.size()]);
        }
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        std::string tok(text.substr(i, j - i));
        if (!open) {
          fail(tok, i);
        }
        std::size_t point = std::stoul(tok);
        if (point < 1 || point > degree) {
          std::ostringstream os;
          os << "malformed cycle string: point '" << tok << "' at position "
             << i << " is outside 1.." << degree;
          throw format_error(os.str());
        }
        if (used[point - 1]) {
          std::ostringstream os;
          os << "malformed cycle string: point '" << tok << "' at position "
             << i << " repeats; cycles must be disjoint";
          throw format_error(os.str());
        }
        used[point - 1] = 1;
        cycle.push_back(point - 1);
        i = j;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))
               && text[j] != '(' && text[j] != ')') {
          ++j;
        }
        fail(std::string(text.substr(i, std::max<std::size_t>(j - i, 1))), i);
      }
    }
    if (open) {
      fail("<end of input>", text.size());
    }
    return perm;
  }

  namespace {
    struct PermHash {
      std::size_t operator()(Permutation const& p) const noexcept {
        std::size_t h = 0;
        for (auto x : p) {
          h = h * 1000003u + x;
        }
        return h;
      }
    };
  }  // namespace

  Group from_permutation_generators(std::size_t                     degree,
                                    std::vector<Permutation> const& gens,
                                    std::string                     name) {
    for (auto const& g : gens) {
      if (g.size() != degree) {
        throw format_error("generator has the wrong degree");
      }
      std::vector<char> seen(degree, 0);
      for (auto x : g) {
        if (x >= degree || seen[x]) {
          throw format_error("generator is not a permutation");
        }
        seen[x] = 1;
      }
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Permutation>                               elems{id};
    std::unordered_map<Permutation, std::size_t, PermHash> index{{id, 0}};
    auto compose = [degree](Permutation const& x, Permutation const& y) {
      Permutation z(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        z[i] = y[x[i]];
      }
      return z;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        auto z = compose(elems[i], g);
        if (index.emplace(z, elems.size()).second) {
          elems.push_back(std::move(z));
          if (elems.size() > max_permutation_order) {
            std::ostringstream os;
            os << "group too large: permutation closure exceeds "
               << max_permutation_order << " elements";
            throw too_large(os.str());
          }
        }
      }
    }
    std::size_t const n = elems.size();
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Elem>(index.at(compose(elems[a], elems[b])));
      }
    }
    return Group::from_flat(n, std::move(table), std::move(name));
  }

}  // namespace ppf

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

#ifndef PPF_ELEMENT_SET_HPP_
#define PPF_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ppf {

  using Elem = std::uint32_t;

  // Fixed-universe bitset over element identifiers 0..universe-1.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept {
      return universe_;
    }

    bool contains(Elem x) const noexcept {
      return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u);
    }

    void insert(Elem x) noexcept {
      words_[x >> 6] |= (std::uint64_t{1} << (x & 63));
    }

    void erase(Elem x) noexcept {
      words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }

    std::size_t count() const noexcept {
      std::size_t n = 0;
      for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    std::vector<Elem> to_vector() const {
      std::vector<Elem> out;
      for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
          auto b = static_cast<std::size_t>(std::countr_zero(w));
          out.push_back(static_cast<Elem>(i * 64 + b));
          w &= w - 1;
        }
      }
      return out;
    }

    std::size_t hash() const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace ppf

#endif  // PPF_ELEMENT_SET_HPP_

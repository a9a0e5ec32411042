// Copyright 2026 The Coregame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef COREGAME_COALITION_HPP
#define COREGAME_COALITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "coregame/exact.hpp"

namespace coregame {

/// A sub-coalition w ∈ B^n, stored as a bit mask (player i is bit i).
class Coalition {
 public:
  static constexpr int kMaxPlayers = 62;

  Coalition() = default;
  Coalition(int n, std::uint64_t mask);

  static Coalition empty(int n) { return Coalition(n, 0); }
  static Coalition grand(int n);
  static Coalition singleton(int n, int i) { return Coalition(n, std::uint64_t{1} << i); }
  /// Accepts a 0/1 vector; throws kInvalidInput on other entries.
  static Coalition from_vector(const RatVector& v);
  /// Parses strings such as "1010" where the first character is player 0.
  static Coalition parse(std::string_view bits);

  int players() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  bool is_grand() const { return *this == grand(n_); }

  RatVector to_vector() const;
  std::string to_string() const;

  Coalition operator|(const Coalition& o) const { return Coalition(n_, mask_ | o.mask_); }
  Coalition operator&(const Coalition& o) const { return Coalition(n_, mask_ & o.mask_); }
  bool subset_of(const Coalition& o) const { return (mask_ & ~o.mask_) == 0; }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Number of coalitions 2^n, rejecting sizes beyond what a mask can hold.
std::uint64_t coalition_count(int n);

}  // namespace coregame

#endif  // COREGAME_COALITION_HPP

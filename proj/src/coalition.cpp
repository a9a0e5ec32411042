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
#include "coregame/coalition.hpp"

#include <bit>

namespace coregame {

Coalition::Coalition(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxPlayers) {
    throw Error(ErrorKind::kTooLarge, "coalitions support at most 62 players");
  }
  if (n < 64 && (mask >> n) != 0) {
    throw Error(ErrorKind::kInvalidInput, "coalition mask has bits beyond its player count");
  }
}

Coalition Coalition::grand(int n) {
  return Coalition(n, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

Coalition Coalition::from_vector(const RatVector& v) {
  std::uint64_t mask = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == Rational(1)) {
      mask |= std::uint64_t{1} << i;
    } else if (!v(i).is_zero()) {
      throw Error(ErrorKind::kInvalidInput, "coalition entries must be 0 or 1");
    }
  }
  return Coalition(static_cast<int>(v.size()), mask);
}

Coalition Coalition::parse(std::string_view bits) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::kInvalidInput, "coalition key must be a 0/1 string");
    }
  }
  return Coalition(static_cast<int>(bits.size()), mask);
}

int Coalition::size() const { return std::popcount(mask_); }

RatVector Coalition::to_vector() const {
  RatVector v = zeros(n_);
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) v(i) = 1;
  }
  return v;
}

std::string Coalition::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t coalition_count(int n) {
  if (n < 0 || n > Coalition::kMaxPlayers) {
    throw Error(ErrorKind::kTooLarge, "too many players to enumerate coalitions");
  }
  return std::uint64_t{1} << n;
}

}  // namespace coregame

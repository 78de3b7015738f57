// Copyright 2026 The lrep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Representation sets and the nine counting functions, evaluated strictly
// from their definitions.
//
//   B(n)   {(a,b,x,y) in N^4 : ax + by = n}
//   B'(n)  B(n) with gcd(a,b) = gcd(x,y) = 1
//   O(n)   B(n) with a, b, x, y all odd          (n even)
//   O'(n)  O(n) with gcd(a,b) = gcd(x,y) = 1     (n even)

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrep/arith.hpp"

namespace lrep {

struct RepQuadruple {
  std::uint64_t a, b, x, y;

  friend bool operator==(const RepQuadruple&, const RepQuadruple&) = default;
  friend auto operator<=>(const RepQuadruple&, const RepQuadruple&) = default;
};

enum class SetKind { kB, kBprime, kO, kOprime };

inline const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::kB: return "B";
    case SetKind::kBprime: return "Bprime";
    case SetKind::kO: return "O";
    case SetKind::kOprime: return "Oprime";
  }
  return "?";
}

inline bool is_odd_kind(SetKind kind) { return kind == SetKind::kO || kind == SetKind::kOprime; }
inline bool is_coprime_kind(SetKind kind) {
  return kind == SetKind::kBprime || kind == SetKind::kOprime;
}

inline void check_set_args(std::uint64_t n, SetKind kind) {
  if (n < 2) throw std::invalid_argument("representation sets require n >= 2");
  if (is_odd_kind(kind) && n % 2 != 0) {
    throw std::invalid_argument(std::string("set ") + to_string(kind) + " requires even n, got " +
                                std::to_string(n));
  }
}

/// Calls visit(q) for each quadruple of the set, in lexicographic (a, x, b, y)
/// order: a ascending, x with ax < n, then the divisor pairs (b, y) of n - ax
/// with b ascending.
template <typename Visitor>
void for_each_quadruple(std::uint64_t n, SetKind kind, Visitor&& visit) {
  check_set_args(n, kind);
  const bool odd = is_odd_kind(kind);
  const bool coprime = is_coprime_kind(kind);
  const std::uint64_t step = odd ? 2 : 1;
  for (std::uint64_t a = 1; a < n; a += step) {
    for (std::uint64_t x = 1; a * x < n; x += step) {
      const std::uint64_t m = n - a * x;
      for (std::uint64_t b = 1; b <= m; b += step) {
        if (m % b != 0) continue;
        const std::uint64_t y = m / b;
        if (odd && y % 2 == 0) continue;
        if (coprime && (std::gcd(a, b) != 1 || std::gcd(x, y) != 1)) continue;
        visit(RepQuadruple{a, b, x, y});
      }
    }
  }
}

inline std::vector<RepQuadruple> enumerate_set(std::uint64_t n, SetKind kind) {
  std::vector<RepQuadruple> out;
  for_each_quadruple(n, kind, [&](const RepQuadruple& q) { out.push_back(q); });
  return out;
}

/// Sum of weight(a, b) over the set.
template <typename Weight>
BigInt weighted_sum(std::uint64_t n, SetKind kind, Weight&& weight) {
  BigInt total = 0;
  for_each_quadruple(n, kind, [&](const RepQuadruple& q) { total += weight(q.a, q.b); });
  return total;
}

/// a^i b^j as a weight for `weighted_sum`.
inline auto monomial_weight(unsigned i, unsigned j) {
  return [i, j](std::uint64_t a, std::uint64_t b) { return ipow(a, i) * ipow(b, j); };
}

enum class CountFamily { kGp, kHp, kIp, kJp, kKp, kLp, kG, kH, kI };

inline constexpr std::array<CountFamily, 9> kAllFamilies = {
    CountFamily::kGp, CountFamily::kHp, CountFamily::kIp, CountFamily::kJp, CountFamily::kKp,
    CountFamily::kLp, CountFamily::kG,  CountFamily::kH,  CountFamily::kI};

inline const char* to_string(CountFamily family) {
  switch (family) {
    case CountFamily::kGp: return "Gp";
    case CountFamily::kHp: return "Hp";
    case CountFamily::kIp: return "Ip";
    case CountFamily::kJp: return "Jp";
    case CountFamily::kKp: return "Kp";
    case CountFamily::kLp: return "Lp";
    case CountFamily::kG: return "G";
    case CountFamily::kH: return "H";
    case CountFamily::kI: return "I";
  }
  return "?";
}

inline std::optional<CountFamily> parse_family(std::string_view name) {
  for (CountFamily f : kAllFamilies) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

/// Set whose quadruples (u, v, x, y) the family expands.
inline SetKind underlying_set(CountFamily family) {
  switch (family) {
    case CountFamily::kGp:
    case CountFamily::kHp:
    case CountFamily::kIp: return SetKind::kBprime;
    case CountFamily::kJp:
    case CountFamily::kKp:
    case CountFamily::kLp: return SetKind::kOprime;
    default: return SetKind::kB;
  }
}

inline bool requires_even_n(CountFamily family) {
  return underlying_set(family) == SetKind::kOprime;
}

inline void check_family_args(std::uint64_t n, CountFamily family) {
  if (n < 2) throw std::invalid_argument(std::string(to_string(family)) + " requires n >= 2");
  if (requires_even_n(family) && n % 2 != 0) {
    throw std::invalid_argument(std::string(to_string(family)) + " requires even n, got " +
                                std::to_string(n));
  }
}

namespace detail {

// Shapes of the two outer coordinates. G-type: (a+c)^(1/3) = u and b+d = v.
// H-type: a+c = u and (k(b+d))^(1/3) = v with gcd(b,d) = 1. I-type:
// (k(a+c))^(1/3) = u with gcd(a,c) = 1 and l(b+d) = v with gcd(b,d) = 1.
enum class Shape { kG, kH, kI };

inline Shape shape_of(CountFamily family) {
  switch (family) {
    case CountFamily::kGp:
    case CountFamily::kJp:
    case CountFamily::kG: return Shape::kG;
    case CountFamily::kHp:
    case CountFamily::kKp:
    case CountFamily::kH: return Shape::kH;
    default: return Shape::kI;
  }
}

inline std::uint64_t cube(std::uint64_t u) {
  if (u > 2642245) throw std::overflow_error("definitional oracle: u^3 exceeds 64 bits");
  return u * u * u;
}

// #{(a, c) : a >= 0, c >= 1, a + c = total}
inline std::uint64_t count_split(std::uint64_t total) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    const std::uint64_t c = total - a;
    if (c >= 1) ++count;
  }
  return count;
}

// #{(m, a, c) : m (a + c) = total, a >= 0, c >= 1, gcd(a, c) = 1}; the
// multiplier m is total / e for each divisor e = a + c.
inline std::uint64_t count_scaled_coprime_split(std::uint64_t total) {
  std::uint64_t count = 0;
  for (std::uint64_t e : divisors(factorize(total))) {
    for (std::uint64_t a = 0; a < e; ++a) {
      const std::uint64_t c = e - a;
      if (c >= 1 && std::gcd(a, c) == 1) ++count;
    }
  }
  return count;
}

// Literal loop counts of the admissible (a, c, [k]) for a given u and of the
// admissible (b, d, [k|l]) for a given v. Memoized per call; each value is
// still produced by the explicit loop.
class FamilyExpander {
 public:
  explicit FamilyExpander(Shape shape) : shape_(shape) {}

  std::uint64_t left(std::uint64_t u) {
    return memo(left_, u, [&] {
      switch (shape_) {
        case Shape::kG: return count_split(cube(u));
        case Shape::kH: return count_split(u);
        case Shape::kI: return count_scaled_coprime_split(cube(u));
      }
      return std::uint64_t{0};
    });
  }

  std::uint64_t right(std::uint64_t v) {
    return memo(right_, v, [&] {
      switch (shape_) {
        case Shape::kG: return count_split(v);
        case Shape::kH: return count_scaled_coprime_split(cube(v));
        case Shape::kI: return count_scaled_coprime_split(v);
      }
      return std::uint64_t{0};
    });
  }

 private:
  template <typename F>
  static std::uint64_t memo(std::map<std::uint64_t, std::uint64_t>& cache, std::uint64_t key,
                            F&& compute) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const std::uint64_t value = compute();
    cache.emplace(key, value);
    return value;
  }

  Shape shape_;
  std::map<std::uint64_t, std::uint64_t> left_;
  std::map<std::uint64_t, std::uint64_t> right_;
};

}  // namespace detail

/// Counts the tuples of `family` at n from the definition. For each
/// (u, v, x, y) of the underlying set the admissible outer coordinates are
/// counted by explicit loops and the two independent factors multiplied.
/// Uses no totient identity.
inline BigInt count_definitional(std::uint64_t n, CountFamily family) {
  check_family_args(n, family);
  detail::FamilyExpander expand(detail::shape_of(family));
  BigInt total = 0;
  for_each_quadruple(n, underlying_set(family), [&](const RepQuadruple& q) {
    total += BigInt(expand.left(q.a)) * expand.right(q.b);
  });
  return total;
}

/// sum of u^3 v over the underlying set.
inline BigInt count_reduced(std::uint64_t n, CountFamily family) {
  check_family_args(n, family);
  return weighted_sum(n, underlying_set(family), monomial_weight(3, 1));
}

}  // namespace lrep

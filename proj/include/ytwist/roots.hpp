// Copyright 2026 The ytwist authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YTWIST_ROOTS_HPP
#define YTWIST_ROOTS_HPP

#include <string>
#include <vector>

namespace ytwist {

enum class Series { B, D };

char series_letter(Series s);
Series series_from_letter(char c);

// Integer coefficient vector over the orthonormal e-basis e_1..e_N.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(std::vector<int> coeffs) : c(std::move(coeffs)) {}
  static Root basis(size_t n, size_t i);  // e_i, 1-based

  size_t rank() const { return c.size(); }
  bool is_zero() const;
  long dot(const Root& o) const;
  int coeff(size_t i) const { return c[i - 1]; }  // 1-based

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  bool operator==(const Root& o) const { return c == o.c; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const { return c < o.c; }

  // "e1", "e1+e2", "-e1-e3", ...
  std::string label() const;
};

// Full root set of B_N (±e_i, ±e_i±e_j) or D_N (±e_i±e_j only),
// sorted, with |Λ| = 2N² resp. 2N(N−1). Requires N >= 2.
std::vector<Root> build_root_system(Series s, int N);

// Roots supported entirely on the e-basis window [lo, hi] (1-based,
// inclusive), taken with the window's own series structure.
std::vector<Root> window_roots(Series s, int N, int lo, int hi);

bool contains_root(const std::vector<Root>& lambda, const Root& r);

}  // namespace ytwist

#endif  // YTWIST_ROOTS_HPP

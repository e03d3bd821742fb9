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

#include "ytwist/roots.hpp"

#include <algorithm>

#include "ytwist/scalar.hpp"

namespace ytwist {

char series_letter(Series s) { return s == Series::B ? 'B' : 'D'; }

Series series_from_letter(char c) {
  if (c == 'B' || c == 'b') return Series::B;
  if (c == 'D' || c == 'd') return Series::D;
  throw Error(ErrorKind::InvalidArgument,
              std::string("unknown series '") + c + "', expected B or D");
}

Root Root::basis(size_t n, size_t i) {
  Root r(std::vector<int>(n, 0));
  r.c[i - 1] = 1;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

long Root::dot(const Root& o) const {
  long s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += long(c[i]) * long(o.c[i]);
  return s;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

std::string Root::label() const {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] > 0 && !out.empty()) out += "+";
    if (c[i] < 0) out += "-";
    if (std::abs(c[i]) != 1) out += std::to_string(std::abs(c[i]));
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::vector<Root> window_roots(Series s, int N, int lo, int hi) {
  std::vector<Root> out;
  for (int i = lo; i <= hi; ++i) {
    if (s == Series::B) {
      out.push_back(Root::basis(N, i));
      out.push_back(-Root::basis(N, i));
    }
    for (int j = i + 1; j <= hi; ++j) {
      Root ei = Root::basis(N, i);
      Root ej = Root::basis(N, j);
      out.push_back(ei + ej);
      out.push_back(ei - ej);
      out.push_back(-(ei + ej));
      out.push_back(ej - ei);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> build_root_system(Series s, int N) {
  if (N < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "root system rank must be at least 2, got " +
                    std::to_string(N));
  }
  return window_roots(s, N, 1, N);
}

bool contains_root(const std::vector<Root>& lambda, const Root& r) {
  return std::binary_search(lambda.begin(), lambda.end(), r);
}

}  // namespace ytwist

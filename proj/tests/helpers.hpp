// Copyright 2026 The salv Authors
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

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "salv/error.hpp"
#include "salv/salvetti.hpp"

namespace testing {

using salv::CoxeterMatrix;
using salv::CoxeterSystem;
using salv::Elem;
using salv::Gen;
using salv::TypeSubset;

inline oracle::Word word_of(const Elem& e) { return oracle::Word(e.word.begin(), e.word.end()); }

inline CoxeterMatrix d4() {
  std::vector<std::vector<int>> m(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  for (int leaf : {0, 2, 3}) m[1][leaf] = m[leaf][1] = 3;
  return CoxeterMatrix(m);
}

inline CoxeterMatrix f4() {
  std::vector<std::vector<int>> m(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  m[0][1] = m[1][0] = 3;
  m[1][2] = m[2][1] = 4;
  m[2][3] = m[3][2] = 3;
  return CoxeterMatrix(m);
}

inline CoxeterMatrix e_type(int n) {
  // Branch node 2 with arms 0-1-2, 2-3 (short) and 2-4-...-(n-1).
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&](int a, int b) { m[a][b] = m[b][a] = 3; };
  bond(0, 1);
  bond(1, 2);
  bond(2, 3);
  bond(2, 4);
  for (int i = 4; i + 1 < n; ++i) bond(i, i + 1);
  return CoxeterMatrix(m);
}

inline std::vector<Gen> random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, rank - 1);
  std::vector<Gen> w(len(rng));
  for (auto& g : w) g = static_cast<Gen>(letter(rng));
  return w;
}

inline salv::Arrangement interval(int m) {
  return salv::Arrangement(salv::preset_chamber(salv::ChamberPreset::Interval, CoxeterSystem(salv::matrices::dihedral(m))));
}

inline salv::Arrangement simplex(const CoxeterMatrix& m) {
  return salv::Arrangement(salv::preset_chamber(salv::ChamberPreset::Simplex, CoxeterSystem(m)));
}

template <typename Fn>
salv::ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const salv::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an error");
}

}  // namespace testing

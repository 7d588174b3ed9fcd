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

#include "salv/complex.hpp"

#include <algorithm>
#include <map>

namespace salv {

long long SimplicialComplex::euler() const {
  long long chi = 0;
  for (std::size_t d = 0; d < simplices.size(); ++d) {
    const auto n = static_cast<long long>(simplices[d].size());
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

SimplicialComplex order_complex(std::size_t n, const std::vector<std::vector<std::uint32_t>>& above) {
  SimplicialComplex out;
  out.vertex_count = n;
  std::vector<std::vector<std::uint32_t>> sorted_above(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted_above[i] = above[i];
    std::sort(sorted_above[i].begin(), sorted_above[i].end());
  }

  Simplex chain;
  // Depth-first over chains; each chain is emitted once, from its minimum.
  auto extend = [&](auto&& self, std::uint32_t top) -> void {
    const std::size_t d = chain.size() - 1;
    if (out.simplices.size() <= d) out.simplices.resize(d + 1);
    out.simplices[d].push_back(chain);
    for (std::uint32_t next : sorted_above[top]) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    chain = {v};
    extend(extend, v);
  }
  for (auto& level : out.simplices) std::sort(level.begin(), level.end());
  return out;
}

DeltaComplex to_delta(const SimplicialComplex& complex) {
  DeltaComplex out;
  out.faces.resize(complex.simplices.size());
  if (complex.simplices.empty()) return out;
  out.faces[0].assign(complex.simplices[0].size(), {});
  for (std::size_t d = 1; d < complex.simplices.size(); ++d) {
    std::map<Simplex, std::uint32_t> index;
    const auto& lower = complex.simplices[d - 1];
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], static_cast<std::uint32_t>(k));
    for (const Simplex& s : complex.simplices[d]) {
      std::vector<std::uint32_t> faces;
      for (std::size_t i = 0; i <= d; ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        faces.push_back(index.at(face));
      }
      out.faces[d].push_back(std::move(faces));
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> covers(const std::vector<std::vector<std::uint32_t>>& above) {
  std::vector<std::vector<std::uint32_t>> out(above.size());
  for (std::size_t i = 0; i < above.size(); ++i) {
    for (std::uint32_t j : above[i]) {
      const bool direct = std::none_of(above[i].begin(), above[i].end(), [&](std::uint32_t h) {
        const auto& up = above[h];
        return std::find(up.begin(), up.end(), j) != up.end();
      });
      if (direct) out[i].push_back(j);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace salv

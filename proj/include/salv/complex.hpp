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

#include <cstdint>
#include <vector>

namespace salv {

using Simplex = std::vector<std::uint32_t>;

/// An abstract simplicial complex on vertices 0..vertex_count-1. Simplices are
/// stored with increasing vertex indices, grouped by dimension.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Simplex>> simplices;  // simplices[d]

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int d) const {
    return d >= 0 && d < static_cast<int>(simplices.size()) ? simplices[static_cast<std::size_t>(d)].size() : 0;
  }
  long long euler() const;
};

/// A Δ-complex given by its ordered face maps: faces[d][k][i] is the index of
/// the i-th face (vertex i deleted) of the k-th d-simplex among the
/// (d-1)-simplices. faces[0] lists the vertices with no faces.
struct DeltaComplex {
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;

  int dimension() const { return static_cast<int>(faces.size()) - 1; }
  std::size_t count(int d) const {
    return d >= 0 && d < static_cast<int>(faces.size()) ? faces[static_cast<std::size_t>(d)].size() : 0;
  }
};

/// Order complex of a finite poset whose elements 0..n-1 are numbered along a
/// linear extension. `above[i]` lists the elements strictly greater than i.
SimplicialComplex order_complex(std::size_t n, const std::vector<std::vector<std::uint32_t>>& above);

/// Face-map presentation of a simplicial complex.
DeltaComplex to_delta(const SimplicialComplex& complex);

/// Covering relations of a poset given by strict up-sets.
std::vector<std::vector<std::uint32_t>> covers(const std::vector<std::vector<std::uint32_t>>& above);

}  // namespace salv

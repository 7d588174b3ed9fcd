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
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "salv/complex.hpp"

namespace salv {

using Integer = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> columns;  // (row, value), rows increasing

  static SparseMatrix from_dense(const std::vector<std::vector<long long>>& dense);
  std::vector<std::vector<long long>> to_dense() const;
};

struct SmithForm {
  std::vector<Integer> factors;  // nonzero invariant factors d1 | d2 | ..., all positive
  std::size_t rank() const { return factors.size(); }
};

/// Smith normal form over the integers. Unit pivots are eliminated sparsely;
/// the remainder is diagonalized densely with minimal-absolute-value
/// pivoting. Entries are 64-bit until an overflow forces a restart in
/// arbitrary precision.
SmithForm smith_normal_form(const SparseMatrix& m);
SmithForm smith_normal_form(const std::vector<std::vector<long long>>& dense);

/// Boundary matrices of a finite complex: boundary[d] maps d-chains to
/// (d-1)-chains (rows = (d-1)-cells, cols = d-cells); boundary[0] is empty.
struct ChainComplex {
  std::vector<std::size_t> cell_counts;
  std::vector<SparseMatrix> boundary;

  int dimension() const { return static_cast<int>(cell_counts.size()) - 1; }
};

/// Alternating-sign boundary of ordered simplices. Verifies ∂∂ = 0 and throws
/// BoundaryCompositionNonzero otherwise.
ChainComplex chain_complex(const SimplicialComplex& complex);
ChainComplex chain_complex(const DeltaComplex& complex);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;
  long long euler = 0;

  std::vector<std::size_t> betti() const;
  bool torsion_free() const;
};

/// Unreduced integral homology.
HomologyResult homology(const ChainComplex& cc);
long long euler(const ChainComplex& cc);

}  // namespace salv

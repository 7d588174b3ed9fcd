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

#include "salv/homology.hpp"

#include <map>

#include "salv/error.hpp"

namespace salv {

namespace {

void verify_composition(const SparseMatrix& lower, const SparseMatrix& upper, std::size_t degree) {
  // lower: C_{d-1} <- C_d, upper: C_d <- C_{d+1}
  for (std::size_t c = 0; c < upper.cols; ++c) {
    std::map<std::uint32_t, long long> acc;
    for (const auto& [mid, coeff] : upper.columns[c]) {
      for (const auto& [row, v] : lower.columns[mid]) acc[row] += coeff * v;
    }
    for (const auto& [row, v] : acc) {
      if (v != 0) {
        throw Error(ErrorKind::BoundaryCompositionNonzero, "homology",
                    "boundary composition nonzero in degree " + std::to_string(degree) + " at cell " +
                        std::to_string(c));
      }
    }
  }
}

void verify(const ChainComplex& cc) {
  for (std::size_t d = 1; d + 1 < cc.boundary.size(); ++d) verify_composition(cc.boundary[d], cc.boundary[d + 1], d + 1);
}

}  // namespace

ChainComplex chain_complex(const DeltaComplex& complex) {
  ChainComplex cc;
  const std::size_t top = complex.faces.size();
  cc.cell_counts.resize(top);
  cc.boundary.resize(top);
  for (std::size_t d = 0; d < top; ++d) cc.cell_counts[d] = complex.faces[d].size();
  for (std::size_t d = 1; d < top; ++d) {
    SparseMatrix& b = cc.boundary[d];
    b.rows = cc.cell_counts[d - 1];
    b.cols = cc.cell_counts[d];
    b.columns.resize(b.cols);
    for (std::size_t k = 0; k < b.cols; ++k) {
      std::map<std::uint32_t, long long> col;
      const auto& faces = complex.faces[d][k];
      for (std::size_t i = 0; i < faces.size(); ++i) col[faces[i]] += i % 2 == 0 ? 1 : -1;
      for (const auto& [row, v] : col) {
        if (v != 0) b.columns[k].emplace_back(row, v);
      }
    }
  }
  verify(cc);
  return cc;
}

ChainComplex chain_complex(const SimplicialComplex& complex) { return chain_complex(to_delta(complex)); }

long long euler(const ChainComplex& cc) {
  long long chi = 0;
  for (std::size_t d = 0; d < cc.cell_counts.size(); ++d) {
    const auto n = static_cast<long long>(cc.cell_counts[d]);
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

HomologyResult homology(const ChainComplex& cc) {
  const std::size_t top = cc.cell_counts.size();
  std::vector<SmithForm> forms(top + 1);
  for (std::size_t d = 1; d < top; ++d) forms[d] = smith_normal_form(cc.boundary[d]);

  HomologyResult out;
  out.degrees.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rank_in = forms[d].rank();
    const std::size_t rank_out = forms[d + 1].rank();
    out.degrees[d].betti = cc.cell_counts[d] - rank_in - rank_out;
    for (const Integer& f : forms[d + 1].factors) {
      if (f > 1) out.degrees[d].torsion.push_back(f);
    }
  }
  out.euler = euler(cc);
  return out;
}

std::vector<std::size_t> HomologyResult::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool HomologyResult::torsion_free() const {
  for (const auto& d : degrees) {
    if (!d.torsion.empty()) return false;
  }
  return true;
}

}  // namespace salv

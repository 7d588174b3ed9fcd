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

#include "salv/salvetti.hpp"

#include <algorithm>
#include <map>

#include "salv/error.hpp"

namespace salv {

namespace {

constexpr const char* kModule = "salvetti";

struct CellLess {
  bool operator()(const SalCell& a, const SalCell& b) const { return sal_cell_less(a, b); }
};

bool chain_less(const SalChain& a, const SalChain& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), sal_cell_less);
}

// ∏(a, b : m) = a b a ... with m letters.
std::vector<Gen> alternating(Gen a, Gen b, int m) {
  std::vector<Gen> out;
  for (int k = 0; k < m; ++k) out.push_back(k % 2 == 0 ? a : b);
  return out;
}

}  // namespace

bool sal_cell_less(const SalCell& a, const SalCell& b) {
  if (a.type != b.type) {
    if (a.type.size() != b.type.size()) return a.type.size() < b.type.size();
    return canonical_less(a.type, b.type);
  }
  return a.elem < b.elem;
}

std::optional<std::size_t> SalPoset::index_of(const SalCell& c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c, sal_cell_less);
  if (it == cells.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

bool Salvetti::sal_leq(const SalCell& a, const SalCell& b) const {
  if (!a.type.subset_of(b.type)) return false;
  const auto& sys = system();
  const Elem x = sys.multiply(sys.inverse(b.elem), a.elem);
  return sys.in_parabolic(x, b.type) && sys.is_coset_minimal(x, a.type);
}

void Salvetti::check_pair(const GeometricCell& p) const {
  if (!arrangement_.chamber_complex().is_acceptable(p.face.type) ||
      !system().is_coset_minimal(p.face.rep, p.face.type) ||
      !arrangement_.face_below_chamber(p.face, p.chamber)) {
    throw Error(ErrorKind::MalformedPair, kModule, "face does not lie beneath the chamber");
  }
}

bool Salvetti::geometric_leq(const GeometricCell& p, const GeometricCell& q) const {
  check_pair(p);
  check_pair(q);
  return arrangement_.face_leq(p.face, q.face) &&
         arrangement_.local_chamber_leq(p.face, p.chamber, q.face, q.chamber);
}

SalCell Salvetti::phi(const GeometricCell& p) const {
  check_pair(p);
  return {p.face.type, p.chamber.elem};
}

GeometricCell Salvetti::phi_inverse(const SalCell& c) const {
  return {arrangement_.face(c.elem, c.type), Chamber{c.elem}};
}

SalCell Salvetti::translate(const Elem& u, const SalCell& c) const {
  return {c.type, system().multiply(u, c.elem)};
}

std::vector<SalCell> Salvetti::cells_below(const SalCell& c) const {
  const auto& sys = system();
  std::vector<SalCell> out;
  const auto& group = arrangement_.parabolic_elements(c.type);
  for (TypeSubset t : arrangement_.chamber_complex().acceptable()) {
    if (t == c.type || !t.subset_of(c.type)) continue;
    for (const Elem& u : group) {
      if (sys.is_coset_minimal(u, t)) out.push_back({t, sys.multiply(c.elem, u)});
    }
  }
  std::sort(out.begin(), out.end(), sal_cell_less);
  return out;
}

SalPoset Salvetti::build_sal() const {
  const auto& sys = system();
  if (!sys.is_finite()) {
    throw Error(ErrorKind::WouldNotTerminate, kModule,
                "the Salvetti poset of an infinite group is infinite; use the quotient complex");
  }
  SalPoset poset;
  for (const Elem& w : sys.enumerate(sys.generators())) {
    for (TypeSubset t : arrangement_.chamber_complex().acceptable()) poset.cells.push_back({t, w});
  }
  std::sort(poset.cells.begin(), poset.cells.end(), sal_cell_less);
  const std::size_t n = poset.cells.size();
  poset.below.resize(n);
  poset.above.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const SalCell& c : cells_below(poset.cells[i])) {
      const auto j = static_cast<std::uint32_t>(*poset.index_of(c));
      poset.below[i].push_back(j);
      poset.above[j].push_back(static_cast<std::uint32_t>(i));
    }
  }
  for (auto& v : poset.below) std::sort(v.begin(), v.end());
  for (auto& v : poset.above) std::sort(v.begin(), v.end());
  return poset;
}

SimplicialComplex Salvetti::order_complex(const SalPoset& poset) const {
  return salv::order_complex(poset.cells.size(), poset.above);
}

QuotientComplex Salvetti::quotient_complex() const {
  const auto& sys = system();
  QuotientComplex out;
  std::map<SalCell, std::vector<SalCell>, CellLess> below_cache;
  auto below = [&](const SalCell& c) -> const std::vector<SalCell>& {
    auto it = below_cache.find(c);
    if (it == below_cache.end()) it = below_cache.emplace(c, cells_below(c)).first;
    return it->second;
  };

  // Chains are grown downward from a top cell (T, 1); every element met lies
  // in the finite group W_T.
  SalChain reversed;
  auto grow = [&](auto&& self) -> void {
    const std::size_t d = reversed.size() - 1;
    if (out.simplices.size() <= d) out.simplices.resize(d + 1);
    out.simplices[d].emplace_back(reversed.rbegin(), reversed.rend());
    const SalCell bottom = reversed.back();
    for (const SalCell& c : below(bottom)) {
      reversed.push_back(c);
      self(self);
      reversed.pop_back();
    }
  };
  for (TypeSubset t : arrangement_.chamber_complex().acceptable()) {
    reversed = {SalCell{t, sys.identity()}};
    grow(grow);
  }
  for (auto& level : out.simplices) std::sort(level.begin(), level.end(), chain_less);

  out.delta.faces.resize(out.simplices.size());
  out.delta.faces[0].assign(out.simplices[0].size(), {});
  for (std::size_t d = 1; d < out.simplices.size(); ++d) {
    const auto& lower = out.simplices[d - 1];
    for (const SalChain& chain : out.simplices[d]) {
      std::vector<std::uint32_t> faces;
      for (std::size_t i = 0; i <= d; ++i) {
        SalChain face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (i == d) {
          const Elem shift = sys.inverse(face.back().elem);
          for (SalCell& c : face) c = translate(shift, c);
        }
        auto it = std::lower_bound(lower.begin(), lower.end(), face, chain_less);
        if (it == lower.end() || *it != face) {
          throw Error(ErrorKind::BoundaryCompositionNonzero, kModule, "quotient face is not a normalized chain");
        }
        faces.push_back(static_cast<std::uint32_t>(it - lower.begin()));
      }
      out.delta.faces[d].push_back(std::move(faces));
    }
  }
  return out;
}

Presentation Salvetti::pi1_presentation() const {
  const auto& m = system().matrix();
  Presentation p;
  p.generator_count = system().rank();
  for (TypeSubset t : arrangement_.chamber_complex().acceptable_of_size(2)) {
    const auto st = t.members();
    const int order = m(st[0], st[1]);
    p.relations.push_back({alternating(st[0], st[1], order), alternating(st[1], st[0], order)});
  }
  return p;
}

std::vector<EdgeTerm> Salvetti::two_cell_boundary(TypeSubset t, const Elem& w) const {
  if (t.size() != 2 || !arrangement_.chamber_complex().is_acceptable(t)) {
    throw Error(ErrorKind::PreconditionViolated, kModule, "2-cells need an acceptable pair");
  }
  const auto& sys = system();
  const auto st = t.members();
  const Gen s = st[0];
  const Gen u = st[1];
  const int m = sys.matrix()(s, u);
  std::vector<EdgeTerm> out;
  // Path from x(w) along s, t, s, ... to the opposite vertex.
  for (int k = 0; k < m; ++k) {
    const auto prefix = alternating(s, u, k);
    out.push_back({k % 2 == 0 ? s : u, sys.multiply(w, sys.reduce(prefix)), 1});
  }
  // Then back along the t, s, t, ... path, traversed in reverse.
  for (int k = m - 1; k >= 0; --k) {
    const auto prefix = alternating(u, s, k);
    out.push_back({k % 2 == 0 ? u : s, sys.multiply(w, sys.reduce(prefix)), -1});
  }
  return out;
}

std::string Presentation::to_text() const {
  std::string out;
  auto word = [this](const std::vector<Gen>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += " ";
      s += symbol(w[i]);
    }
    return s;
  };
  for (const Relation& r : relations) out += word(r.left) + " = " + word(r.right) + "\n";
  return out;
}

std::vector<std::pair<Gen, int>> quotient_image(const std::vector<EdgeTerm>& word) {
  std::vector<std::pair<Gen, int>> out;
  for (const EdgeTerm& e : word) out.emplace_back(e.label, e.exponent);
  return out;
}

DegreeHomology h1_from_presentation(const Presentation& p) {
  std::vector<std::vector<long long>> rows;
  for (const Relation& r : p.relations) {
    std::vector<long long> row(static_cast<std::size_t>(p.generator_count), 0);
    for (Gen g : r.left) ++row[g];
    for (Gen g : r.right) --row[g];
    rows.push_back(std::move(row));
  }
  DegreeHomology out;
  if (rows.empty()) {
    out.betti = static_cast<std::size_t>(p.generator_count);
    return out;
  }
  const SmithForm form = smith_normal_form(rows);
  out.betti = static_cast<std::size_t>(p.generator_count) - form.rank();
  for (const Integer& f : form.factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

}  // namespace salv

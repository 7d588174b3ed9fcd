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

#include "salv/arrangement.hpp"

#include <algorithm>
#include <set>

#include "salv/error.hpp"

namespace salv {

namespace {

constexpr const char* kModule = "arrangement";

struct FaceLess {
  bool operator()(const Face& a, const Face& b) const { return face_order_less(a, b); }
};

}  // namespace

bool face_order_less(const Face& a, const Face& b) {
  if (a.type != b.type) {
    if (a.type.size() != b.type.size()) return a.type.size() > b.type.size();
    return canonical_less(a.type, b.type);
  }
  return a.rep < b.rep;
}

std::optional<std::size_t> FacePoset::index_of(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f, face_order_less);
  if (it == faces.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - faces.begin());
}

Arrangement::Arrangement(ChamberComplex chamber) : chamber_(std::move(chamber)) {
  // Acceptable subsets are spherical, so each W_T is finite.
  for (TypeSubset t : chamber_.acceptable()) {
    parabolic_cache_.emplace(t.bits(), system().enumerate(t));
    reflection_cache_.emplace(t.bits(), system().parabolic_reflections(t));
  }
}

const std::vector<Elem>& Arrangement::parabolic_elements(TypeSubset t) const {
  auto it = parabolic_cache_.find(t.bits());
  if (it == parabolic_cache_.end()) {
    throw Error(ErrorKind::PreconditionViolated, kModule, format_subset(t) + " is not acceptable");
  }
  return it->second;
}

Face Arrangement::face(const Elem& w, TypeSubset t) const {
  if (!chamber_.is_acceptable(t)) {
    throw Error(ErrorKind::PreconditionViolated, kModule, format_subset(t) + " is not acceptable");
  }
  return {system().coset_min(w, t), t};
}

bool Arrangement::face_leq(const Face& f, const Face& g) const {
  // f = w·W_U lies below g = v·W_T iff v·W_T ⊆ w·W_U.
  if (!g.type.subset_of(f.type)) return false;
  const auto& sys = system();
  return sys.in_parabolic(sys.multiply(sys.inverse(f.rep), g.rep), f.type);
}

bool Arrangement::face_below_chamber(const Face& f, const Chamber& c) const {
  return face_leq(f, chamber_face(c));
}

std::vector<Chamber> Arrangement::chambers_above(const Face& f) const {
  std::vector<Chamber> out;
  for (const Elem& u : parabolic_elements(f.type)) out.push_back({system().multiply(f.rep, u)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> Arrangement::faces_above(const Face& f) const {
  std::set<Face, FaceLess> found;
  for (TypeSubset t : chamber_.acceptable()) {
    if (t == f.type || !t.subset_of(f.type)) continue;
    for (const Elem& u : parabolic_elements(f.type)) found.insert(face(system().multiply(f.rep, u), t));
  }
  return {found.begin(), found.end()};
}

FacePoset Arrangement::build_faces(std::optional<std::size_t> max_length) const {
  const auto& sys = system();
  const auto elems = sys.enumerate(sys.generators(), max_length);
  FacePoset poset;
  const auto order = sys.parabolic_order(sys.generators());
  poset.truncated = !order || elems.size() < *order;

  std::set<Face, FaceLess> found;
  for (const Elem& w : elems) {
    for (TypeSubset t : chamber_.acceptable()) found.insert(face(w, t));
  }
  poset.faces.assign(found.begin(), found.end());
  poset.above.resize(poset.faces.size());
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    for (const Face& g : faces_above(poset.faces[i])) {
      if (auto j = poset.index_of(g)) poset.above[i].push_back(static_cast<std::uint32_t>(*j));
    }
    std::sort(poset.above[i].begin(), poset.above[i].end());
  }
  return poset;
}

std::vector<Reflection> Arrangement::separating(const Chamber& c, const Chamber& d) const {
  const auto& sys = system();
  std::vector<Reflection> out;
  for (const Reflection& r : sys.inversion_set(sys.multiply(sys.inverse(c.elem), d.elem))) {
    out.push_back({sys.conjugate(r.elem, c.elem)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Arrangement::separates(const Reflection& r, const Chamber& c, const Chamber& d) const {
  const auto& sys = system();
  const Elem cinv = sys.inverse(c.elem);
  const Elem x = sys.multiply(cinv, d.elem);
  return sys.multiply(sys.multiply(cinv, r.elem), d.elem).length() < x.length();
}

std::size_t Arrangement::distance(const Chamber& c, const Chamber& d) const {
  const auto& sys = system();
  return sys.multiply(sys.inverse(c.elem), d.elem).length();
}

Chamber Arrangement::project(const Face& f, const Chamber& c) const {
  const auto& sys = system();
  const Elem offset = sys.coset_min(sys.multiply(sys.inverse(c.elem), f.rep), f.type);
  return {sys.multiply(c.elem, offset)};
}

std::vector<Reflection> Arrangement::walls_through(const Face& g) const {
  const auto& sys = system();
  std::vector<Reflection> out;
  parabolic_elements(g.type);  // rejects unacceptable types
  for (const Reflection& r : reflection_cache_.at(g.type.bits())) out.push_back({sys.conjugate(r.elem, g.rep)});
  std::sort(out.begin(), out.end());
  return out;
}

bool Arrangement::local_chamber_leq(const Face& f, const Chamber& c, const Face& g, const Chamber& d) const {
  if (!face_leq(f, g)) {
    throw Error(ErrorKind::PreconditionViolated, kModule, "local chamber comparison needs F <= G");
  }
  if (g.type.empty() || c == d) return true;
  for (const Reflection& r : walls_through(g)) {
    if (separates(r, c, d)) return false;
  }
  return true;
}

SimplicialComplex Arrangement::manifold_complex(const FacePoset& poset) const {
  if (poset.truncated) {
    throw Error(ErrorKind::TruncatedPoset, kModule, "homology of a truncated face poset is meaningless");
  }
  return order_complex(poset.faces.size(), poset.above);
}

SimplicialComplex Arrangement::walls_subcomplex(const FacePoset& poset) const {
  if (poset.truncated) {
    throw Error(ErrorKind::TruncatedPoset, kModule, "homology of a truncated face poset is meaningless");
  }
  std::vector<std::int64_t> remap(poset.faces.size(), -1);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    if (!poset.faces[i].type.empty()) remap[i] = next++;
  }
  std::vector<std::vector<std::uint32_t>> above(next);
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    if (remap[i] < 0) continue;
    for (std::uint32_t j : poset.above[i]) {
      if (remap[j] >= 0) above[static_cast<std::size_t>(remap[i])].push_back(static_cast<std::uint32_t>(remap[j]));
    }
  }
  return order_complex(next, above);
}

}  // namespace salv

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

#include "salv/coxeter.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "salv/error.hpp"

namespace salv {

namespace {

constexpr const char* kModule = "coxeter";

// Guard for full enumerations of finite but huge groups (E8 and friends).
constexpr std::uint64_t kEnumerationLimit = 4'000'000;

std::string key_of(const Elem& e) { return std::string(e.word.begin(), e.word.end()); }

Elem elem_of(const std::string& key) {
  Elem e;
  e.word.assign(key.begin(), key.end());
  return e;
}

// Tits: all reduced words of one element are connected by braid moves.
// `start` must be reduced.
std::vector<std::string> braid_orbit(const CoxeterMatrix& m, const std::string& start) {
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::string cur = queue[head];
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Gen a = static_cast<Gen>(cur[i]);
      const Gen b = static_cast<Gen>(cur[i + 1]);
      if (a == b) continue;
      const int mab = m(a, b);
      if (mab == kInfinity || i + static_cast<std::size_t>(mab) > n) continue;
      bool alternating = true;
      for (int k = 2; k < mab; ++k) {
        if (static_cast<Gen>(cur[i + k]) != (k % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      std::string next = cur;
      for (int k = 0; k < mab; ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

}  // namespace

// ---------------------------------------------------------------------------
// TypeSubset / Elem / CoxeterMatrix

TypeSubset::TypeSubset(std::initializer_list<Gen> members) {
  for (Gen s : members) bits_ |= std::uint64_t{1} << s;
}

TypeSubset TypeSubset::all(int rank) {
  return TypeSubset(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
}

std::vector<Gen> TypeSubset::members() const {
  std::vector<Gen> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Gen>(std::countr_zero(b)));
  return out;
}

bool canonical_less(TypeSubset a, TypeSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
  return a.word <=> b.word;
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> rows)
    : rank_(static_cast<int>(rows.size())) {
  if (rank_ == 0 || rank_ > kMaxRank) {
    throw Error(ErrorKind::DimensionMismatch, kModule,
                "rank must be between 1 and " + std::to_string(kMaxRank));
  }
  entries_.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::DimensionMismatch, kModule,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
  }
}

std::vector<std::vector<int>> CoxeterMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

namespace matrices {

namespace {
std::vector<std::vector<int>> commuting(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}
void bond(std::vector<std::vector<int>>& m, int i, int j, int order) {
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = order;
  m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = order;
}
}  // namespace

CoxeterMatrix dihedral(int m) { return CoxeterMatrix({{1, m}, {m, 1}}); }

CoxeterMatrix type_a(int n) {
  auto m = commuting(n);
  for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1, 3);
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix type_b(int n) {
  auto m = commuting(n);
  for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1, i == 0 ? 4 : 3);
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix type_h3() {
  auto m = commuting(3);
  bond(m, 0, 1, 5);
  bond(m, 1, 2, 3);
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix affine_a2() { return CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}); }

CoxeterMatrix rank_one() { return CoxeterMatrix(std::vector<std::vector<int>>{{1}}); }

}  // namespace matrices

// ---------------------------------------------------------------------------
// CoxeterSystem

struct CoxeterSystem::State {
  CoxeterMatrix matrix;
  bool memoize = true;
  mutable std::shared_mutex mutex;
  // key: canonical word followed by one generator byte; value: canonical product.
  mutable std::unordered_map<std::string, std::string> right_products;
};

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, bool memoize)
    : state_(std::make_shared<State>()) {
  const int n = matrix.rank();
  for (int i = 0; i < n; ++i) {
    if (matrix(i, i) != 1) {
      throw Error(ErrorKind::BadDiagonal, kModule,
                  "m[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                      std::to_string(matrix(i, i)) + ", expected 1");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix(i, j) != matrix(j, i)) {
        throw Error(ErrorKind::MatrixAsymmetric, kModule,
                    "m[" + std::to_string(i) + "][" + std::to_string(j) + "] != m[" +
                        std::to_string(j) + "][" + std::to_string(i) + "]");
      }
      const int v = matrix(i, j);
      if (v != kInfinity && v < 2) {
        throw Error(ErrorKind::BadBondOrder, kModule,
                    "m[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                        std::to_string(v) + "; off-diagonal orders must be >= 2 or 0 (infinity)");
      }
    }
  }
  state_->matrix = std::move(matrix);
  state_->memoize = memoize;
}

const CoxeterMatrix& CoxeterSystem::matrix() const { return state_->matrix; }
int CoxeterSystem::rank() const { return state_->matrix.rank(); }
bool CoxeterSystem::memoized() const { return state_->memoize; }

Elem CoxeterSystem::generator(Gen s) const { return reduce({s}); }

std::string CoxeterSystem::right_step(const std::string& word, Gen s) const {
  if (word.empty()) return std::string(1, static_cast<char>(s));
  // Prefixes of ShortLex-least words are ShortLex-least.
  if (static_cast<Gen>(word.back()) == s) return word.substr(0, word.size() - 1);

  std::string key;
  if (state_->memoize) {
    key = word;
    key.push_back(static_cast<char>(s));
    std::shared_lock lock(state_->mutex);
    if (auto it = state_->right_products.find(key); it != state_->right_products.end()) return it->second;
  }

  const auto& m = state_->matrix;
  std::string result;
  bool descent = false;
  for (const std::string& u : braid_orbit(m, word)) {
    if (static_cast<Gen>(u.back()) != s) continue;
    std::string shorter = u.substr(0, u.size() - 1);
    if (!descent || shorter < result) result = std::move(shorter);
    descent = true;
  }
  if (!descent) {
    std::string longer = word;
    longer.push_back(static_cast<char>(s));
    auto orbit = braid_orbit(m, longer);
    result = *std::min_element(orbit.begin(), orbit.end());
  }

  if (state_->memoize) {
    std::unique_lock lock(state_->mutex);
    state_->right_products.emplace(std::move(key), result);
  }
  return result;
}

Elem CoxeterSystem::reduce(std::span<const Gen> word) const {
  std::string cur;
  for (Gen s : word) {
    if (s >= rank()) {
      throw Error(ErrorKind::LetterOutOfRange, kModule,
                  "letter " + std::to_string(s) + " with rank " + std::to_string(rank()));
    }
    cur = right_step(cur, s);
  }
  return elem_of(cur);
}

Elem CoxeterSystem::multiply(const Elem& a, const Elem& b) const {
  std::string cur = key_of(a);
  for (Gen s : b.word) cur = right_step(cur, s);
  return elem_of(cur);
}

Elem CoxeterSystem::multiply(const Elem& a, Gen s) const {
  if (s >= rank()) {
    throw Error(ErrorKind::LetterOutOfRange, kModule, "letter " + std::to_string(s));
  }
  return elem_of(right_step(key_of(a), s));
}

Elem CoxeterSystem::left_multiply(Gen s, const Elem& a) const {
  std::vector<Gen> word;
  word.reserve(a.length() + 1);
  word.push_back(s);
  word.insert(word.end(), a.word.begin(), a.word.end());
  return reduce(word);
}

Elem CoxeterSystem::inverse(const Elem& a) const {
  std::vector<Gen> reversed(a.word.rbegin(), a.word.rend());
  return reduce(reversed);
}

TypeSubset CoxeterSystem::descents(const Elem& a, Side side) const {
  TypeSubset out;
  for (int i = 0; i < rank(); ++i) {
    const Gen s = static_cast<Gen>(i);
    const Elem p = side == Side::Right ? multiply(a, s) : left_multiply(s, a);
    if (p.length() < a.length()) out = out.with(s);
  }
  return out;
}

bool CoxeterSystem::is_spherical(TypeSubset t) const { return parabolic_order(t).has_value(); }

std::optional<std::uint64_t> CoxeterSystem::parabolic_order(TypeSubset t) const {
  std::uint64_t total = 1;
  for (const auto& c : components(t)) {
    if (!c.order) return std::nullopt;
    if (__builtin_mul_overflow(total, *c.order, &total)) {
      throw Error(ErrorKind::WouldNotTerminate, kModule, "parabolic order exceeds 64 bits");
    }
  }
  return total;
}

std::vector<Elem> CoxeterSystem::enumerate(TypeSubset t, std::optional<std::size_t> max_length) const {
  if (!max_length) {
    const auto order = parabolic_order(t);
    if (!order) {
      throw Error(ErrorKind::WouldNotTerminate, kModule,
                  "enumeration of an infinite parabolic subgroup requires a length bound");
    }
    if (*order > kEnumerationLimit) {
      throw Error(ErrorKind::WouldNotTerminate, kModule,
                  "group of order " + std::to_string(*order) + " is too large to enumerate");
    }
  }
  const auto gens = t.members();
  std::vector<Elem> out{identity()};
  std::vector<std::string> level{std::string()};
  std::unordered_set<std::string> seen{std::string()};
  for (std::size_t len = 0; !level.empty() && (!max_length || len < *max_length); ++len) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (Gen s : gens) {
        std::string ws = right_step(w, s);
        if (ws.size() <= w.size()) continue;
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    }
    for (const auto& w : next) out.push_back(elem_of(w));
    if (out.size() > kEnumerationLimit) {
      throw Error(ErrorKind::WouldNotTerminate, kModule, "enumeration exceeded the element limit");
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterSystem::is_coset_minimal(const Elem& w, TypeSubset t) const {
  for (Gen s : t.members()) {
    if (multiply(w, s).length() < w.length()) return false;
  }
  return true;
}

Elem CoxeterSystem::coset_min(const Elem& w, TypeSubset t) const {
  const auto gens = t.members();
  std::string cur = key_of(w);
  for (bool shortened = true; shortened;) {
    shortened = false;
    for (Gen s : gens) {
      std::string next = right_step(cur, s);
      if (next.size() < cur.size()) {
        cur = std::move(next);
        shortened = true;
        break;
      }
    }
  }
  return elem_of(cur);
}

bool CoxeterSystem::in_parabolic(const Elem& w, TypeSubset t) const {
  return coset_min(w, t).is_identity();
}

Elem CoxeterSystem::conjugate(const Elem& x, const Elem& g) const {
  return multiply(multiply(g, x), inverse(g));
}

std::vector<Reflection> CoxeterSystem::reflections(std::optional<std::size_t> max_length) const {
  if (!max_length && !is_finite()) {
    throw Error(ErrorKind::WouldNotTerminate, kModule,
                "the reflection set of an infinite group requires a length bound");
  }
  if (max_length && *max_length == 0) return {};
  // Every reflection has a reduced palindromic word w s w^-1.
  std::optional<std::size_t> half;
  if (max_length) half = (*max_length - 1) / 2;
  std::set<Elem> found;
  for (const Elem& w : enumerate(generators(), half)) {
    const Elem winv = inverse(w);
    for (int i = 0; i < rank(); ++i) {
      Elem r = multiply(multiply(w, static_cast<Gen>(i)), winv);
      if (!max_length || r.length() <= *max_length) found.insert(std::move(r));
    }
  }
  std::vector<Reflection> out;
  for (const auto& r : found) out.push_back({r});
  return out;
}

std::vector<Reflection> CoxeterSystem::parabolic_reflections(TypeSubset t) const {
  std::set<Elem> found;
  const auto gens = t.members();
  for (const Elem& w : enumerate(t)) {
    const Elem winv = inverse(w);
    for (Gen s : gens) found.insert(multiply(multiply(w, s), winv));
  }
  std::vector<Reflection> out;
  for (const auto& r : found) out.push_back({r});
  return out;
}

std::vector<Reflection> CoxeterSystem::inversion_set(const Elem& w) const {
  std::vector<Reflection> out;
  Elem prefix;
  for (Gen s : w.word) {
    out.push_back({conjugate(generator(s), prefix)});
    prefix = multiply(prefix, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace salv

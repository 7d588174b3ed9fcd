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
// Reference implementations used only by the tests. They share no code with
// the library beyond the plain data types: group elements are tracked as
// matrices of the geometric representation, homology ranks are computed by
// straightforward elimination.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Word = std::vector<std::uint8_t>;
using Key = std::vector<long long>;

class Geometric {
 public:
  explicit Geometric(std::vector<std::vector<int>> m) : m_(std::move(m)), n_(static_cast<int>(m_.size())) {
    bilinear_.assign(static_cast<std::size_t>(n_ * n_), 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const int mij = m_[i][j];
        bilinear_[idx(i, j)] = i == j ? 1.0 : mij == 0 ? -1.0 : -std::cos(std::numbers::pi / mij);
      }
    }
    for (int s = 0; s < n_; ++s) {
      Mat g = identity();
      // σ_s(α_j) = α_j - 2 B(α_s, α_j) α_s; column j is the image of α_j.
      for (int j = 0; j < n_; ++j) g[idx(s, j)] -= 2.0 * bilinear_[idx(s, j)];
      gens_.push_back(g);
    }
  }

  using Mat = std::vector<double>;

  int rank() const { return n_; }
  Mat identity() const {
    Mat out(static_cast<std::size_t>(n_ * n_), 0.0);
    for (int i = 0; i < n_; ++i) out[idx(i, i)] = 1.0;
    return out;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat out(static_cast<std::size_t>(n_ * n_), 0.0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        for (int j = 0; j < n_; ++j) out[idx(i, j)] += a[idx(i, k)] * b[idx(k, j)];
    return out;
  }
  Mat of(const Word& w) const {
    Mat out = identity();
    for (auto s : w) out = mul(out, gens_[s]);
    return out;
  }
  Mat gen(int s) const { return gens_[static_cast<std::size_t>(s)]; }
  static Key key(const std::vector<double>& v) {
    Key k;
    for (double x : v) k.push_back(std::llround(x * 1e6));
    return k;
  }
  Key key_of(const Word& w) const { return key(of(w)); }
  std::vector<double> apply(const Mat& a, const std::vector<double>& v) const {
    std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)] += a[idx(i, j)] * v[static_cast<std::size_t>(j)];
    return out;
  }
  // The root w·α_s: column s of the matrix of w.
  std::vector<double> root(const Word& w, int s) const {
    const Mat m = of(w);
    std::vector<double> out;
    for (int i = 0; i < n_; ++i) out.push_back(m[idx(i, s)]);
    return out;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  std::vector<std::vector<int>> m_;
  int n_;
  std::vector<double> bilinear_;
  std::vector<Mat> gens_;
};

// Breadth-first search of the Cayley graph, extending words in ShortLex
// order, so the first word reaching an element is its ShortLex-least
// reduced word.
struct Enumeration {
  std::vector<Word> words;          // ShortLex order
  std::map<Key, std::size_t> index;  // matrix key -> position in words
};

inline Enumeration enumerate(const Geometric& g, std::uint64_t subset_bits, std::size_t max_length,
                             std::size_t limit = 2000000) {
  Enumeration e;
  e.words.push_back({});
  e.index.emplace(g.key_of({}), 0);
  std::size_t begin = 0;
  for (std::size_t len = 0; len < max_length; ++len) {
    const std::size_t end = e.words.size();
    for (std::size_t i = begin; i < end; ++i) {
      const Word base = e.words[i];
      const auto mat = g.of(base);
      for (int s = 0; s < g.rank(); ++s) {
        if (!(subset_bits >> s & 1)) continue;
        const Key k = Geometric::key(g.mul(mat, g.gen(s)));
        if (e.index.count(k)) continue;
        Word w = base;
        w.push_back(static_cast<std::uint8_t>(s));
        e.index.emplace(k, e.words.size());
        e.words.push_back(std::move(w));
        if (e.words.size() > limit) return e;
      }
    }
    if (end == e.words.size()) break;
    begin = end;
  }
  return e;
}

inline std::uint64_t all_bits(int rank) { return (std::uint64_t{1} << rank) - 1; }

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline int sign_of(const std::vector<double>& root) {
  for (double x : root) {
    if (x > 1e-9) return 1;
    if (x < -1e-9) return -1;
  }
  return 0;
}

inline std::vector<double> negate(std::vector<double> v) {
  for (double& x : v) x = -x;
  return v;
}

// Reflection subgroup data of a finite Coxeter group.
struct Roots {
  std::vector<std::vector<double>> positive;  // one per reflection
  std::vector<Key> reflection;                // matrix key of the matching reflection
};

inline Roots positive_roots(const Geometric& g, const Enumeration& e) {
  Roots out;
  std::set<Key> seen;
  for (const Word& w : e.words) {
    for (int s = 0; s < g.rank(); ++s) {
      auto r = g.root(w, s);
      if (sign_of(r) < 0) r = negate(r);
      if (!seen.insert(Geometric::key(r)).second) continue;
      out.positive.push_back(r);
      out.reflection.push_back(g.key_of(concat(concat(w, {static_cast<std::uint8_t>(s)}), reversed(w))));
    }
  }
  return out;
}

// Reflections (as matrix keys) whose wall separates chamber c from chamber d.
inline std::set<Key> separating(const Geometric& g, const Roots& roots, const Word& c, const Word& d) {
  const auto cinv = g.of(reversed(c));
  const auto dinv = g.of(reversed(d));
  std::set<Key> out;
  for (std::size_t i = 0; i < roots.positive.size(); ++i) {
    if (sign_of(g.apply(cinv, roots.positive[i])) != sign_of(g.apply(dinv, roots.positive[i]))) {
      out.insert(roots.reflection[i]);
    }
  }
  return out;
}

// Reflections whose wall contains the face v·W_T: roots in v·span(α_t, t ∈ T).
inline std::set<Key> walls_through(const Geometric& g, const Roots& roots, const Word& v, std::uint64_t t) {
  const auto vinv = g.of(reversed(v));
  std::set<Key> out;
  for (std::size_t i = 0; i < roots.positive.size(); ++i) {
    const auto local = g.apply(vinv, roots.positive[i]);
    bool inside = true;
    for (int s = 0; s < g.rank(); ++s) {
      if (!(t >> s & 1) && std::abs(local[static_cast<std::size_t>(s)]) > 1e-9) inside = false;
    }
    if (inside) out.insert(roots.reflection[i]);
  }
  return out;
}

// The coset v·W_T as a set of matrix keys.
inline std::set<Key> coset(const Geometric& g, const Word& v, std::uint64_t t) {
  std::set<Key> out;
  for (const Word& u : enumerate(g, t, 64).words) out.insert(g.key_of(concat(v, u)));
  return out;
}

// ---------------------------------------------------------------------------
// Homology by elimination.

using Dense = std::vector<std::vector<long long>>;

inline std::size_t rank_mod_p(Dense m, long long p = 1000000007LL) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto power = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = power(m[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const long long f = static_cast<long long>((__int128)m[r][c] * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = static_cast<long long>(((__int128)m[r][k] - (__int128)f * m[rank][k]) % p);
        if (m[r][k] < 0) m[r][k] += p;
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_rational(const Dense& input) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& row : input) m.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Boundary matrices of a simplicial complex given as sorted vertex lists per
// dimension, built without the library's chain code.
inline std::vector<Dense> boundaries(const std::vector<std::vector<std::vector<std::uint32_t>>>& simplices) {
  std::vector<Dense> out(simplices.size());
  for (std::size_t d = 1; d < simplices.size(); ++d) {
    std::map<std::vector<std::uint32_t>, std::size_t> lower;
    for (std::size_t i = 0; i < simplices[d - 1].size(); ++i) lower.emplace(simplices[d - 1][i], i);
    Dense m(simplices[d - 1].size(), std::vector<long long>(simplices[d].size(), 0));
    for (std::size_t k = 0; k < simplices[d].size(); ++k) {
      const auto& s = simplices[d][k];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m[lower.at(face)][k] += i % 2 == 0 ? 1 : -1;
      }
    }
    out[d] = std::move(m);
  }
  return out;
}

// Betti numbers over F_p (equal to rational Betti numbers absent p-torsion).
inline std::vector<std::size_t> betti_mod_p(const std::vector<std::vector<std::vector<std::uint32_t>>>& simplices) {
  const auto b = boundaries(simplices);
  std::vector<std::size_t> ranks(simplices.size() + 1, 0);
  for (std::size_t d = 1; d < simplices.size(); ++d) ranks[d] = rank_mod_p(b[d]);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < simplices.size(); ++d) out.push_back(simplices[d].size() - ranks[d] - ranks[d + 1]);
  return out;
}

}  // namespace oracle

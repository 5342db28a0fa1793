// Copyright 2026 The Authors.
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

#include "pathroid/resolution.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "pathroid/exchange.h"

namespace pathroid {
namespace {

constexpr std::size_t kMaxEngineVariables = 32;

// Generators as one contiguous exponent array.
struct FlatIdeal {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<std::uint32_t> exps;
  std::vector<std::uint32_t> box;  // lcm of all generators
};

FlatIdeal flatten(const MonomialIdeal& I) {
  if (I.ringDim() > kMaxEngineVariables) {
    throw std::invalid_argument("homology engine supports at most 32 variables");
  }
  FlatIdeal f;
  f.n = I.ringDim();
  f.count = I.size();
  f.box.assign(f.n, 0);
  for (const Monomial& g : I.gens()) {
    for (std::size_t j = 0; j < f.n; ++j) {
      if (g[j] > std::numeric_limits<std::uint32_t>::max() / 2) {
        throw std::overflow_error("exponent too large for the homology engine");
      }
      auto e = static_cast<std::uint32_t>(g[j]);
      f.exps.push_back(e);
      f.box[j] = std::max(f.box[j], e);
    }
  }
  return f;
}

// Per-thread buffers for one multidegree.
struct Scratch {
  std::vector<std::uint32_t> lcm;
  std::vector<std::uint32_t> facets;  // compressed masks
  std::vector<char> marked;
  std::vector<VertexSet> faces;
};

// Reduced homology of K^a(I) in compressed labels, or nullopt when a is not
// in the lcm lattice or K^a is a cone (all homology vanishes).
std::optional<std::vector<std::size_t>> koszulHomologyAt(
    const FlatIdeal& f, const std::uint32_t* a, Scratch& s) {
  const std::size_t n = f.n;
  // Compressed position of each supported variable.
  std::uint32_t position[kMaxEngineVariables];
  std::uint32_t supportSize = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] > 0) position[j] = supportSize++;
  }
  s.lcm.assign(n, 0);
  s.facets.clear();
  const std::uint32_t full = (supportSize == 32) ? 0xffffffffu : ((1u << supportSize) - 1);
  bool cone = false;
  for (std::size_t g = 0; g < f.count; ++g) {
    const std::uint32_t* e = &f.exps[g * n];
    bool divides = true;
    for (std::size_t j = 0; j < n && divides; ++j) divides = e[j] <= a[j];
    if (!divides) continue;
    std::uint32_t facet = 0;
    for (std::size_t j = 0; j < n; ++j) {
      s.lcm[j] = std::max(s.lcm[j], e[j]);
      if (a[j] > e[j]) facet |= 1u << position[j];
    }
    if (facet == full && supportSize > 0) cone = true;
    s.facets.push_back(facet);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (s.lcm[j] != a[j]) return std::nullopt;
  }
  if (s.facets.empty() || cone) return std::nullopt;

  // Downward closure by bit masks.
  const std::size_t universe = std::size_t{1} << supportSize;
  s.marked.assign(universe, 0);
  for (std::uint32_t facet : s.facets) s.marked[facet] = 1;
  for (std::size_t m = universe; m-- > 0;) {
    if (!s.marked[m]) continue;
    for (std::size_t rest = m; rest != 0; rest &= rest - 1) {
      s.marked[m & ~(rest & (~rest + 1))] = 1;
    }
  }
  s.faces.clear();
  for (std::size_t m = 0; m < universe; ++m) {
    if (s.marked[m]) s.faces.push_back(m);
  }
  return reducedHomologyOfFaces(s.faces);
}

std::uint64_t boxVolume(const FlatIdeal& f) {
  std::uint64_t volume = 1;
  for (std::uint32_t b : f.box) {
    if (__builtin_mul_overflow(volume, std::uint64_t{b} + 1, &volume)) {
      throw BudgetExceeded("multidegree box too large");
    }
  }
  return volume;
}

// Visits every multidegree in the box whose support has more than
// `minSupport()` variables, sharded across workers by chunks.
void scanBox(const FlatIdeal& f, const EngineOptions& opts,
             const std::function<int()>& minSupport,
             const std::function<void(const std::uint32_t*,
                                      const std::vector<std::size_t>&)>& visit,
             const std::function<bool()>& done) {
  const std::uint64_t volume = boxVolume(f);
  const int workers = std::max(1, opts.workers);
  const std::uint64_t chunk = std::max<std::uint64_t>(256, volume / (workers * 16ull) + 1);
  std::atomic<std::uint64_t> nextChunk{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failureMutex;

  auto work = [&]() {
    try {
      Scratch scratch;
      std::vector<std::uint32_t> a(f.n);
      while (!stop.load()) {
        std::uint64_t begin = nextChunk.fetch_add(1) * chunk;
        if (begin >= volume) return;
        std::uint64_t end = std::min(volume, begin + chunk);
        std::uint64_t rest = begin;
        for (std::size_t j = 0; j < f.n; ++j) {
          a[j] = static_cast<std::uint32_t>(rest % (f.box[j] + 1));
          rest /= f.box[j] + 1;
        }
        opts.budget.check();
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          int support = 0;
          for (std::uint32_t x : a) support += x > 0;
          if (support > minSupport()) {
            if (auto h = koszulHomologyAt(f, a.data(), scratch)) visit(a.data(), *h);
          }
          for (std::size_t j = 0; j < f.n; ++j) {
            if (++a[j] <= f.box[j]) break;
            a[j] = 0;
          }
        }
        if (done()) stop = true;
      }
    } catch (...) {
      std::lock_guard lock(failureMutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void requireNonzero(const MonomialIdeal& I) {
  if (I.isZero()) throw std::invalid_argument("operation needs a nonzero ideal");
}

void requireProper(const MonomialIdeal& I) {
  requireNonzero(I);
  if (I.isUnit()) throw std::invalid_argument("depth of S/I needs a proper ideal");
}

}  // namespace

std::size_t BettiTable::at(int i, const Monomial& a) const {
  auto it = entries.find({i, a});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out(maxIndex() + 1, 0);
  for (const auto& [key, rank] : entries) out[key.first] += rank;
  return out;
}

int BettiTable::maxIndex() const {
  int best = -1;
  for (const auto& [key, rank] : entries) best = std::max(best, key.first);
  return best;
}

SimplicialComplex upperKoszulComplex(const MonomialIdeal& I, const Monomial& a) {
  requireNonzero(I);
  if (a.dim() != I.ringDim()) {
    throw std::invalid_argument("multidegree length differs from ring dimension");
  }
  VertexSet support = a.supportMask();
  std::vector<VertexSet> facets;
  for (const Monomial& g : I.gens()) {
    if (!g.divides(a)) continue;
    VertexSet facet = 0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a[j] > g[j]) facet |= VertexSet{1} << j;
    }
    facets.push_back(facet);
  }
  return SimplicialComplex::fromFacets(support, std::move(facets));
}

BettiTable bettiNumbers(const MonomialIdeal& I, const EngineOptions& opts) {
  requireNonzero(I);
  FlatIdeal f = flatten(I);
  BettiTable table;
  table.ringDim = I.ringDim();
  std::mutex mutex;
  if (I.isUnit()) {
    table.entries[{0, Monomial::one(I.ringDim())}] = 1;
    return table;
  }
  scanBox(
      f, opts, [] { return 0; },
      [&](const std::uint32_t* a, const std::vector<std::size_t>& h) {
        Monomial degree(std::vector<Exponent>(a, a + f.n));
        std::lock_guard lock(mutex);
        for (std::size_t c = 0; c < h.size(); ++c) {
          if (h[c] > 0) table.entries[{static_cast<int>(c), degree}] = h[c];
        }
      },
      [] { return false; });
  return table;
}

int projectiveDimension(const MonomialIdeal& I, const EngineOptions& opts) {
  requireProper(I);
  FlatIdeal f = flatten(I);
  const int ceiling = static_cast<int>(I.ringDim()) - 1;
  // b_{i,a} != 0 needs a face of size i inside supp(a) other than supp(a)
  // itself, so only supports larger than best + 1 can raise the maximum.
  std::atomic<int> best{0};
  scanBox(
      f, opts, [&] { return best.load() + 1; },
      [&](const std::uint32_t*, const std::vector<std::size_t>& h) {
        for (int c = static_cast<int>(h.size()) - 1; c >= 0; --c) {
          if (h[c] == 0) continue;
          int current = best.load();
          while (c > current && !best.compare_exchange_weak(current, c)) {
          }
          break;
        }
      },
      [&] { return best.load() >= ceiling; });
  return best.load() + 1;
}

int depthOfQuotient(const MonomialIdeal& I, const EngineOptions& opts) {
  return static_cast<int>(I.ringDim()) - projectiveDimension(I, opts);
}

int stanleyReisnerDepthOracle(const MonomialIdeal& I) {
  requireProper(I);
  if (!I.isSquarefree()) {
    throw std::invalid_argument("Stanley-Reisner oracle needs a squarefree ideal");
  }
  const std::size_t n = I.ringDim();
  if (n > 20) throw std::invalid_argument("Stanley-Reisner oracle supports at most 20 variables");
  std::vector<VertexSet> nonFaces;
  for (const Monomial& g : I.gens()) nonFaces.push_back(g.supportMask());
  const VertexSet universe = VertexSet{1} << n;
  std::vector<char> isFace(universe, 1);
  for (VertexSet m = 0; m < universe; ++m) {
    for (VertexSet g : nonFaces) {
      if ((g & ~m) == 0) {
        isFace[m] = 0;
        break;
      }
    }
  }
  int pd = 0;
  std::vector<VertexSet> faces;
  for (VertexSet sigma = 0; sigma < universe; ++sigma) {
    faces.clear();
    VertexSet sub = sigma;
    while (true) {
      if (isFace[sub]) faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & sigma;
    }
    std::vector<std::size_t> h = reducedHomologyOfFaces(faces);
    const int size = cardinality(sigma);
    for (std::size_t c = 0; c < h.size(); ++c) {
      // H̃_{c-1}(Δ_σ) contributes to b_{i,σ} with i = |σ| - c.
      if (h[c] > 0) pd = std::max(pd, size - static_cast<int>(c));
    }
  }
  return static_cast<int>(n) - pd;
}

std::vector<int> depthSequence(const MonomialIdeal& I, int kMax,
                               const EngineOptions& opts) {
  std::vector<int> depths;
  MonomialIdeal current = I;
  for (int k = 1; k <= kMax; ++k) {
    if (k > 1) current = multiply(current, I);
    depths.push_back(depthOfQuotient(current, opts));
  }
  return depths;
}

DepthProfile depthProfile(const MonomialIdeal& I, int limitDepthHint, int kMax,
                          const EngineOptions& opts) {
  requireProper(I);
  if (!I.isEquigenerated() || !checkPolymatroidalExchange(I).holds) {
    throw std::invalid_argument("depth profile needs a polymatroidal ideal");
  }
  DepthProfile profile;
  MonomialIdeal current = I;
  for (int k = 1; k <= kMax; ++k) {
    if (k > 1) current = multiply(current, I);
    int d = depthOfQuotient(current, opts);
    if (!profile.depths.empty() && d > profile.depths.back()) {
      throw std::logic_error("depth of powers increased at k = " + std::to_string(k));
    }
    profile.depths.push_back(d);
    if (d < limitDepthHint) {
      throw std::logic_error("depth " + std::to_string(d) + " fell below the limit hint " +
                             std::to_string(limitDepthHint));
    }
    if (d == limitDepthHint) {
      profile.limitDepth = d;
      profile.dstab = k;
      return profile;
    }
  }
  throw KMaxExceeded("depth did not reach the limit hint within k <= " +
                     std::to_string(kMax));
}

}  // namespace pathroid

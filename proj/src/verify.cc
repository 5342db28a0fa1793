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

#include "pathroid/verify.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pathroid/arrangement.h"
#include "pathroid/cm.h"
#include "pathroid/exchange.h"
#include "pathroid/oracles.h"
#include "pathroid/resolution.h"
#include "pathroid/spread.h"

namespace pathroid {
namespace {

struct Outcome {
  bool checked = false;
  std::vector<SweepFailure> failures;
  std::vector<std::string> skipped;
  std::vector<std::string> notes;

  void fail(std::string instance, std::string expected, std::string actual) {
    failures.push_back({std::move(instance), std::move(expected),
                        std::move(actual)});
  }
};

// Runs `check` on every item, `workers` at a time, and merges the outcomes in
// item order. Unexpected exceptions are rethrown after all workers stop.
template <class Item, class Check>
SweepReport runInstances(std::string name, const std::vector<Item>& items,
                         int workers, Check check) {
  std::vector<Outcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        outcomes[i] = check(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!error) error = std::current_exception();
        next.store(items.size());
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(workers, 1)), items.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.suiteName = std::move(name);
  for (auto& o : outcomes) {
    if (o.checked) ++report.instancesChecked;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
    for (auto& s : o.skipped) report.skipped.push_back(std::move(s));
    for (auto& n : o.notes) report.notes.push_back(std::move(n));
  }
  return report;
}

EngineOptions engineOptions(const SweepOptions& opts) {
  EngineOptions e;
  if (opts.instanceBudgetSeconds > 0) {
    e.budget = Budget::seconds(opts.instanceBudgetSeconds);
  }
  return e;
}

std::string joinInts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string listInts(const std::vector<int>& v) {
  return "[" + joinInts(v) + "]";
}

struct SpecInstance {
  PartitionSpec spec;
  int t;
};

std::string replay(const std::string& suite, const PartitionSpec& spec, int t) {
  return "pathroid verify --suite " + suite + " --partition " +
         spec.toString() + " --t " + std::to_string(t);
}

// (spec, t) pairs with sum <= maxN, 2 <= t <= n that satisfy `keep`, or the
// single instance named by the options.
template <class Keep>
std::vector<SpecInstance> specInstances(int maxN, const SweepOptions& opts,
                                        Keep keep) {
  std::vector<PartitionSpec> specs;
  if (opts.onlySpec) {
    specs.push_back(*opts.onlySpec);
  } else {
    specs = partitionsUpTo(maxN);
  }
  std::vector<SpecInstance> out;
  for (const auto& spec : specs) {
    for (int t = 2; t <= spec.vertexCount(); ++t) {
      if (opts.onlyT && *opts.onlyT != t) continue;
      if (keep(spec, t)) out.push_back({spec, t});
    }
  }
  return out;
}

bool anyInstance(const PartitionSpec&, int) { return true; }

int ceilHalf(int t) { return (t + 1) / 2; }

int ceilDiv(int a, int b) { return (a + b - 1) / b; }

bool allBlocksAtMost(const PartitionSpec& spec, int bound) {
  for (int s : spec.sizes()) {
    if (s > bound) return false;
  }
  return true;
}

bool allBlocksAtLeast(const PartitionSpec& spec, int bound) {
  for (int s : spec.sizes()) {
    if (s < bound) return false;
  }
  return true;
}

// First k from which the computed window is constant.
int stableFrom(const std::vector<int>& depths) {
  int k = static_cast<int>(depths.size());
  while (k > 1 && depths[k - 2] == depths.back()) --k;
  return k;
}

std::string witnessText(const ExchangeWitness<VertexSet>& w) {
  return "A=" + formatVertexSet(w.first) + " B=" + formatVertexSet(w.second) +
         " a=" + std::to_string(w.index + 1);
}

// True iff "equal or non-adjacent" is an equivalence relation on the
// vertices with at least two classes; the classes are returned.
std::optional<std::vector<VertexSet>> complementCliques(const SimpleGraph& g) {
  const int n = static_cast<int>(g.vertexCount());
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> classes;
  VertexSet seen = 0;
  for (int v = 0; v < n; ++v) {
    if ((seen >> v) & 1u) continue;
    VertexSet cls = all & ~g.neighbours(v);
    for (int w : members(cls)) {
      if ((all & ~g.neighbours(w)) != cls) return std::nullopt;
    }
    classes.push_back(cls);
    seen |= cls;
  }
  if (classes.size() < 2) return std::nullopt;
  return classes;
}

// Depth-first existence check for an arrangement with no equal neighbours.
bool arrangementExists(std::vector<int> counts) {
  std::map<std::pair<std::vector<int>, int>, bool> memo;
  std::function<bool(int)> go = [&](int last) -> bool {
    bool done = std::all_of(counts.begin(), counts.end(),
                            [](int c) { return c == 0; });
    if (done) return true;
    auto key = std::make_pair(counts, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int c = 0; c < static_cast<int>(counts.size()) && !ok; ++c) {
      if (c == last || counts[c] == 0) continue;
      --counts[c];
      ok = go(c);
      ++counts[c];
    }
    memo[key] = ok;
    return ok;
  };
  return go(-1);
}

std::string skippedText(const std::string& instance, const std::exception& e) {
  return instance + " (" + e.what() + ")";
}

}  // namespace

Json toJson(const SweepReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        {{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", r.suiteName},
          {"passed", r.passed()},
          {"instancesChecked", r.instancesChecked},
          {"failures", failures},
          {"skipped", r.skipped},
          {"notes", r.notes}};
}

SweepReport suitePathExchange(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, anyInstance);
  return runInstances("path-exchange", items, opts.workers, [&](const SpecInstance& in) {
    Outcome o;
    const std::string id = replay("path-exchange", in.spec, in.t);
    std::vector<VertexSet> supports =
        enumerateTPaths(completeMultipartite(in.spec), in.t).vertexSets;
    if (opts.mutateSupports) opts.mutateSupports(in.spec, in.t, supports);
    if (supports.empty()) return o;
    o.checked = true;
    auto verdict = checkBasisExchange(SetSystem(in.spec.vertexCount(), supports));
    if (!verdict.holds) {
      o.fail(id, "basis exchange holds", "fails at " + witnessText(*verdict.witness));
    }
    return o;
  });
}

SweepReport suiteEdgeIdealMatroidality(int maxVertices, const SweepOptions& opts) {
  // (vertex count, edge mask over the pairs in lex order); graphs are built
  // per instance to keep memory flat.
  std::vector<std::pair<int, std::uint32_t>> items;
  std::optional<SimpleGraph> single;
  if (opts.onlyGraph) {
    single = graphFromJson(*opts.onlyGraph);
    items.emplace_back(0, 0);
  } else {
    for (int n = 2; n <= maxVertices; ++n) {
      const int pairCount = n * (n - 1) / 2;
      for (std::uint32_t mask = 1; mask < (1u << pairCount); ++mask) {
        items.emplace_back(n, mask);
      }
    }
  }
  auto build = [&](const std::pair<int, std::uint32_t>& item) -> std::optional<SimpleGraph> {
    if (single) return single;
    const int n = item.first;
    std::vector<std::pair<int, int>> edges;
    VertexSet covered = 0;
    int e = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++e) {
        if ((item.second >> e) & 1u) {
          edges.emplace_back(i, j);
          covered |= (VertexSet{1} << i) | (VertexSet{1} << j);
        }
      }
    }
    if (cardinality(covered) != n) return std::nullopt;
    return SimpleGraph(n, edges);
  };
  return runInstances("edge-matroidal", items, opts.workers,
                      [&](const std::pair<int, std::uint32_t>& item) {
    Outcome o;
    std::optional<SimpleGraph> built = build(item);
    if (!built || !built->isolatedVertices().empty()) return o;
    const SimpleGraph& g = *built;
    o.checked = true;
    const std::string id =
        "pathroid verify --suite edge-matroidal --graph '" + toJson(g).dump() + "'";
    EdgeIdealMatroidality m = isMatroidalEdgeIdeal(g);
    auto oracle = complementCliques(g);
    auto structural = completeMultipartiteBlocks(g);
    if (m.matroidal != oracle.has_value()) {
      o.fail(id,
             oracle ? "matroidal (complete multipartite)" : "not matroidal",
             m.matroidal ? "matroidal" : "not matroidal");
      return o;
    }
    if (structural.has_value() != oracle.has_value()) {
      o.fail(id, "structural recognition agrees with complement cliques",
             structural ? "recognised as multipartite" : "not recognised");
      return o;
    }
    if (m.matroidal) {
      std::vector<VertexSet> recovered;
      for (const auto& block : *m.blocks) {
        VertexSet s = 0;
        for (int v : block) s |= VertexSet{1} << v;
        recovered.push_back(s);
      }
      std::vector<VertexSet> expected = *oracle;
      std::sort(recovered.begin(), recovered.end());
      std::sort(expected.begin(), expected.end());
      if (recovered != expected) {
        o.fail(id, "neighbourhood classes equal the independent blocks",
               "blocks differ");
      }
    }
    return o;
  });
}

SweepReport suiteCohenMacaulay(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, anyInstance);
  return runInstances("cm", items, opts.workers, [&](const SpecInstance& in) {
    Outcome o;
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (I.isZero()) return o;
    o.checked = true;
    const std::string id = replay("cm", in.spec, in.t);
    const bool criterion = allBlocksAtMost(in.spec, ceilHalf(in.t));
    const bool recognised =
        I.isPrincipal() || recognizeSquarefreeVeronese(I).matches;
    CMVerdict verdict;
    try {
      verdict = classifyPathIdealCM(in.spec, in.t);
    } catch (const std::logic_error& e) {
      o.fail(id, "classifier agrees with recognition", e.what());
      return o;
    }
    if (criterion != recognised) {
      o.fail(id, std::string("recognition ") + (criterion ? "CM" : "not CM"),
             recognised ? "CM" : "not CM");
    }
    if (verdict.isCM != criterion) {
      o.fail(id, criterion ? "isCM" : "not CM", verdict.isCM ? "isCM" : "not CM");
    }
    if (!criterion) {
      int first = 0;
      while (in.spec.sizes()[first] <= ceilHalf(in.t)) ++first;
      if (verdict.failingBlock != first + 1) {
        o.fail(id, "failing block " + std::to_string(first + 1),
               verdict.failingBlock ? std::to_string(*verdict.failingBlock)
                                    : "none");
      }
    }
    return o;
  });
}

SweepReport suiteArrangement(int maxColours, int maxT, const SweepOptions& opts) {
  std::vector<std::vector<int>> vectors;
  if (opts.onlyCounts) {
    vectors.push_back(*opts.onlyCounts);
  } else {
    std::vector<int> current;
    std::function<void(int)> extend = [&](int remaining) {
      if (!current.empty()) vectors.push_back(current);
      if (static_cast<int>(current.size()) == maxColours) return;
      for (int c = 1; c <= remaining; ++c) {
        current.push_back(c);
        extend(remaining - c);
        current.pop_back();
      }
    };
    extend(maxT);
  }
  return runInstances("arrangement", vectors, opts.workers,
                      [&](const std::vector<int>& v) {
    Outcome o;
    o.checked = true;
    const std::string id =
        "pathroid verify --suite arrangement --counts " + joinInts(v);
    ColorCounts counts(v);
    const bool feasible = counts.largest() <= counts.threshold();
    auto seq = arrange(counts);
    if (seq.has_value() != feasible) {
      o.fail(id, feasible ? "arrangement" : "infeasible",
             seq ? "arrangement" : "infeasible");
    }
    if (seq && !isValidArrangement(*seq, counts)) {
      o.fail(id, "valid arrangement", "invalid " + listInts(*seq));
    }
    if (arrangementExists(v) != feasible) {
      o.fail(id, "exhaustive search agrees with the ceil(t/2) boundary",
             feasible ? "no arrangement exists" : "an arrangement exists");
    }
    return o;
  });
}

SweepReport suiteBipartiteDepth(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, [](const PartitionSpec& spec, int t) {
    if (spec.blockCount() != 2 || t >= spec.vertexCount()) return false;
    int p = std::min(spec.sizes()[0], spec.sizes()[1]);
    int q = std::max(spec.sizes()[0], spec.sizes()[1]);
    return p >= t / 2 && q > ceilHalf(t);
  });
  return runInstances("bipartite-depth", items, opts.workers,
                      [&](const SpecInstance& in) {
    Outcome o;
    const std::string id = replay("bipartite-depth", in.spec, in.t);
    const int t = in.t;
    const int c = ceilHalf(t);
    const int p = std::min(in.spec.sizes()[0], in.spec.sizes()[1]);
    const int q = std::max(in.spec.sizes()[0], in.spec.sizes()[1]);
    const int n = p + q;
    MonomialIdeal I = pathIdeal(in.spec, t);
    DstabFormula formula = closedFormDstab(in.spec, t);
    try {
      if (p == t / 2) {
        const int dstab = ceilDiv(q - 1, q - c);
        std::vector<int> expected;
        for (int k = 1; k <= dstab + 1; ++k) {
          expected.push_back(p + std::max(0, k * (c - q) + q - 1));
        }
        std::vector<int> depths = depthSequence(I, dstab + 1, engineOptions(opts));
        o.checked = true;
        if (depths != expected) {
          o.fail(id, "depths " + listInts(expected), "depths " + listInts(depths));
        }
        if (stableFrom(depths) != dstab) {
          o.fail(id, "dstab " + std::to_string(dstab),
                 "dstab " + std::to_string(stableFrom(depths)));
        }
        if (limitDepthFormula(I) != p) {
          o.fail(id, "limit depth " + std::to_string(p),
                 "n - spread = " + std::to_string(limitDepthFormula(I)));
        }
        if (formula.kind != DstabFormula::Kind::kExact || formula.value != dstab) {
          o.fail(id, "closed form exact " + std::to_string(dstab),
                 toJson(formula).dump());
        }
      } else {
        const int limit = t % 2 == 1 ? 0 : 1;
        const int lo = t % 2 == 1 ? 2 : 1;
        const int hi = t % 2 == 1 ? n - 1 : n - 2;
        if (limitDepthFormula(I) != limit) {
          o.checked = true;
          o.fail(id, "limit depth " + std::to_string(limit),
                 "n - spread = " + std::to_string(limitDepthFormula(I)));
          return o;
        }
        DepthProfile profile = depthProfile(I, limit, n, engineOptions(opts));
        o.checked = true;
        if (profile.dstab < lo || profile.dstab > hi) {
          o.fail(id, "dstab in [" + std::to_string(lo) + "," + std::to_string(hi) + "]",
                 "dstab " + std::to_string(profile.dstab) + ", depths " +
                     listInts(profile.depths));
        }
        if (!formula.admits(profile.dstab)) {
          o.fail(id, "closed form admits computed dstab", toJson(formula).dump());
        }
      }
    } catch (const BudgetExceeded& e) {
      o.checked = false;
      o.skipped.push_back(skippedText(id, e));
    } catch (const KMaxExceeded& e) {
      o.checked = true;
      o.fail(id, "depth reaches its limit", e.what());
    } catch (const std::logic_error& e) {
      o.checked = true;
      o.fail(id, "non-increasing depth reaching its limit", e.what());
    }
    return o;
  });
}

SweepReport suiteSquarefreeVeroneseDepth(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, [](const PartitionSpec& spec, int t) {
    return t < spec.vertexCount() && allBlocksAtMost(spec, ceilHalf(t));
  });
  return runInstances("sqfr-depth", items, opts.workers,
                      [&](const SpecInstance& in) {
    Outcome o;
    const std::string id = replay("sqfr-depth", in.spec, in.t);
    const int n = in.spec.vertexCount();
    const int dstab = ceilDiv(n - 1, n - in.t);
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (limitDepthFormula(I) != 0) {
      o.checked = true;
      o.fail(id, "limit depth 0",
             "n - spread = " + std::to_string(limitDepthFormula(I)));
      return o;
    }
    DstabFormula formula = closedFormDstab(in.spec, in.t);
    if (formula.kind != DstabFormula::Kind::kExact || formula.value != dstab) {
      o.fail(id, "closed form exact " + std::to_string(dstab),
             toJson(formula).dump());
    }
    if (n == 4 && in.t == 3 && dstab != 3) {
      o.notes.push_back(id + ": four-vertex value 3 differs from formula " +
                        std::to_string(dstab));
    }
    try {
      DepthProfile profile = depthProfile(I, 0, n, engineOptions(opts));
      o.checked = true;
      if (profile.dstab != dstab) {
        o.fail(id, "dstab " + std::to_string(dstab),
               "dstab " + std::to_string(profile.dstab) + ", depths " +
                   listInts(profile.depths));
      }
    } catch (const BudgetExceeded& e) {
      o.skipped.push_back(skippedText(id, e));
    } catch (const KMaxExceeded& e) {
      o.checked = true;
      o.fail(id, "depth reaches 0", e.what());
    } catch (const std::logic_error& e) {
      o.checked = true;
      o.fail(id, "non-increasing depth reaching 0", e.what());
    }
    return o;
  });
}

SweepReport suiteManyBlockDepth(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, [](const PartitionSpec& spec, int t) {
    if (spec.blockCount() < 3) return false;
    const int n = spec.vertexCount();
    if (t == 2) return true;
    if (t == 3 && n >= 5) return true;
    return t >= 3 && t < n && allBlocksAtLeast(spec, ceilHalf(t));
  });
  return runInstances("many-block-depth", items, opts.workers, [&](const SpecInstance& in) {
    Outcome o;
    const std::string id = replay("many-block-depth", in.spec, in.t);
    const int n = in.spec.vertexCount();
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (I.isZero()) return o;
    try {
      if (in.t <= 3) {
        std::vector<int> depths = depthSequence(I, 2, engineOptions(opts));
        o.checked = true;
        if (depths[1] != 0 || depths[0] == 0) {
          o.fail(id, "depth(S/I^2) = 0 and dstab 2", "depths " + listInts(depths));
        }
        DstabFormula formula = closedFormDstab(in.spec, in.t);
        if (!formula.admits(2)) {
          o.fail(id, "closed form admits 2", toJson(formula).dump());
        }
      }
      if (in.t >= 3 && allBlocksAtLeast(in.spec, ceilHalf(in.t)) && in.t < n) {
        o.checked = true;
        LinearRelationGraph gamma = linearRelationGraph(I);
        if (static_cast<int>(gamma.vertexCount()) != n || !gamma.isComplete()) {
          o.fail(id, "complete linear relation graph on " + std::to_string(n),
                 toJson(gamma).dump());
          return o;
        }
        if (limitDepthFormula(I) != 0) {
          o.fail(id, "limit depth 0",
                 "n - spread = " + std::to_string(limitDepthFormula(I)));
          return o;
        }
        DepthProfile profile = depthProfile(I, 0, n, engineOptions(opts));
        if (profile.dstab <= 1 || profile.dstab >= n) {
          o.fail(id, "1 < dstab < " + std::to_string(n),
                 "dstab " + std::to_string(profile.dstab));
        }
      }
    } catch (const BudgetExceeded& e) {
      o.checked = false;
      o.failures.clear();
      o.skipped.push_back(skippedText(id, e));
    } catch (const KMaxExceeded& e) {
      o.checked = true;
      o.fail(id, "depth reaches 0", e.what());
    } catch (const std::logic_error& e) {
      o.checked = true;
      o.fail(id, "non-increasing depth reaching 0", e.what());
    }
    return o;
  });
}

namespace {

struct IdealInstance {
  std::string id;
  MonomialIdeal ideal;
  // Set for path ideals of K_spec, whose closed-form dstab is compared too.
  std::optional<SpecInstance> source;
};

// Checks dstab < spread and that depth settles at n - spread.
Outcome checkSpreadEquations(const IdealInstance& in, const SweepOptions& opts) {
  Outcome o;
  const MonomialIdeal& I = in.ideal;
  const int n = static_cast<int>(I.ringDim());
  const int spread = analyticSpread(I);
  try {
    DepthProfile profile = depthProfile(I, n - spread, n, engineOptions(opts));
    o.checked = true;
    if (in.source) {
      DstabFormula f = closedFormDstab(in.source->spec, in.source->t);
      if (f.kind != DstabFormula::Kind::kUncovered && !f.admits(profile.dstab)) {
        o.fail(in.id, "closed form " + toJson(f).dump(),
               "dstab " + std::to_string(profile.dstab));
      }
    }
    if (profile.dstab >= spread) {
      o.fail(in.id, "dstab < " + std::to_string(spread),
             "dstab " + std::to_string(profile.dstab) +
                 (I.isPrincipal() ? " (principal ideal)" : ""));
    }
    // One step past dstab must keep the limit.
    MonomialIdeal next = power(I, profile.dstab + 1);
    int after = depthOfQuotient(next, engineOptions(opts));
    if (after != n - spread) {
      o.fail(in.id, "depth " + std::to_string(n - spread) + " at k = dstab + 1",
             "depth " + std::to_string(after));
    }
  } catch (const BudgetExceeded& e) {
    o.checked = false;
    o.failures.clear();
    o.skipped.push_back(skippedText(in.id, e));
  } catch (const KMaxExceeded& e) {
    o.checked = true;
    o.fail(in.id, "depth reaches n - spread = " + std::to_string(n - spread),
           e.what());
  } catch (const std::logic_error& e) {
    o.checked = true;
    o.fail(in.id, "depth non-increasing to n - spread", e.what());
  }
  return o;
}

}  // namespace

SweepReport suiteSpreadEquations(int maxN, const SweepOptions& opts) {
  std::vector<IdealInstance> items;
  auto specs = opts.onlyGraph ? std::vector<SpecInstance>{}
                              : specInstances(maxN, opts, anyInstance);
  for (const auto& in : specs) {
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (I.isZero()) continue;
    items.push_back({replay("spread-equations", in.spec, in.t), std::move(I), in});
  }
  // Polymatroidal path ideals of arbitrary small graphs.
  std::vector<SimpleGraph> graphs;
  if (opts.onlyGraph) {
    graphs.push_back(graphFromJson(*opts.onlyGraph));
  } else if (!opts.onlySpec && !opts.onlyT) {
    const int maxV = std::min(maxN, 5);
    for (int n = 3; n <= maxV; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      }
      for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if ((mask >> e) & 1u) edges.push_back(pairs[e]);
        }
        graphs.emplace_back(n, edges);
      }
    }
  }
  std::set<std::vector<Monomial>> seen;
  for (const auto& in : items) seen.insert(in.ideal.gens());
  for (const auto& g : graphs) {
    for (int t = 2; t <= static_cast<int>(g.vertexCount()); ++t) {
      if (opts.onlyT && *opts.onlyT != t) continue;
      MonomialIdeal I = pathIdeal(g, t);
      if (I.isZero() || !isFullySupported(I)) continue;
      if (!seen.insert(I.gens()).second) continue;
      if (!checkPolymatroidalExchange(I).holds) continue;
      items.push_back({"pathroid verify --suite spread-equations --graph '" +
                           toJson(g).dump() + "' --t " + std::to_string(t),
                       std::move(I), std::nullopt});
    }
  }
  return runInstances("spread-equations", items, opts.workers,
                      [&](const IdealInstance& in) {
    return checkSpreadEquations(in, opts);
  });
}

SweepReport suiteFiberChain(int maxN, const SweepOptions& opts) {
  auto items = specInstances(maxN, opts, anyInstance);
  return runInstances("fiber-chain", items, opts.workers,
                      [&](const SpecInstance& in) {
    Outcome o;
    const std::string id = replay("fiber-chain", in.spec, in.t);
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (I.isZero()) return o;
    o.checked = true;
    const std::size_t n = I.ringDim();

    auto checkChains = [&](const MonomialIdeal& J, const std::string& what) {
      for (std::size_t i = 0; i < n; ++i) {
        FiberDecomposition f = fiberDecompose(J, i);
        if (auto broken = f.firstBrokenLink()) {
          o.fail(id, what + ": fiber chain for x" + std::to_string(i + 1),
                 "I_" + std::to_string(*broken) + " not in I_" +
                     std::to_string(*broken + 1));
        }
        if (f.reconstruct() != J) {
          o.fail(id, what + ": fibers reconstruct the ideal",
                 "mismatch at x" + std::to_string(i + 1));
        }
      }
    };
    checkChains(I, "I_t");
    checkChains(power(I, 2), "square");
    for (int s = in.t + 1; s <= in.spec.vertexCount(); ++s) {
      MonomialIdeal J = pathIdeal(in.spec, s);
      if (J.isZero()) continue;
      checkChains(multiply(I, J), "product with I_" + std::to_string(s));
    }

    if (isFullySupported(I) && gcdOf(I).isOne()) {
      std::vector<MonomialIdeal> ones;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& layers = fiberDecompose(I, i).layers;
        ones.push_back(layers.size() > 1 ? layers[1] : MonomialIdeal(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (const Monomial& g : ones[i].gens()) {
          bool found = false;
          for (std::size_t j = 0; j < n && !found; ++j) {
            found = j != i && ones[j].isGenerator(g);
          }
          if (!found) {
            o.fail(id, "generator " + g.toString() + " of I_{1," +
                           std::to_string(i + 1) + "} appears in another I_{1,j}",
                   "missing");
          }
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && ones[j].contains(ones[i]) && ones[i] != ones[j]) {
            o.fail(id,
                   "I_{1," + std::to_string(i + 1) + "} in I_{1," +
                       std::to_string(j + 1) + "} forces equality",
                   "strict containment");
          }
        }
      }
    }
    return o;
  });
}

namespace {

struct OracleInstance {
  std::string id;
  MonomialIdeal ideal;
  enum Kind { kStanleyReisner, kPolarized, kTaylor, kPersistence } kind;
};

MonomialIdeal edgeIdealOfCycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n));
  return pathIdeal(SimpleGraph(n, edges), 2);
}

}  // namespace

SweepReport suiteOracles(int maxN, const SweepOptions& opts) {
  std::vector<OracleInstance> items;
  const int persistenceN = std::min(maxN, 6);
  for (const auto& in : specInstances(maxN, opts, anyInstance)) {
    MonomialIdeal I = pathIdeal(in.spec, in.t);
    if (I.isZero()) continue;
    const std::string id = replay("oracles", in.spec, in.t);
    items.push_back({id, I, OracleInstance::kStanleyReisner});
    if (I.size() <= 6) items.push_back({id, I, OracleInstance::kTaylor});
    MonomialIdeal sq = power(I, 2);
    if (sq.size() <= 6) items.push_back({id, sq, OracleInstance::kTaylor});
    if (in.spec.vertexCount() <= persistenceN) {
      items.push_back({id, I, OracleInstance::kPersistence});
      // Squares through polarization, up to 10 polarized variables.
      std::size_t polarizedVars = 0;
      for (std::size_t i : support(sq)) {
        Exponent d = 0;
        for (const Monomial& g : sq.gens()) d = std::max(d, g[i]);
        polarizedVars += d;
      }
      if (polarizedVars <= 10) items.push_back({id + " --power 2", sq, OracleInstance::kPolarized});
    }
  }
  if (!opts.onlySpec && !opts.onlyT) {
    // Non-matroidal squarefree inputs: cycles and paths.
    for (int n = 3; n <= std::min(maxN, 7); ++n) {
      std::string id = "cycle C" + std::to_string(n) + " edge ideal";
      items.push_back({id, edgeIdealOfCycle(n), OracleInstance::kStanleyReisner});
    }
    // Fixed-seed random ideals with at most six generators.
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const int gens = 1 + static_cast<int>(rng() % 6);
      std::vector<Monomial> ms;
      for (int g = 0; g < gens; ++g) {
        std::vector<Exponent> e(n);
        for (auto& x : e) x = rng() % 4;
        ms.emplace_back(e);
      }
      MonomialIdeal I = MonomialIdeal::minimalize(ms, n);
      if (I.isZero() || I.isUnit()) continue;
      items.push_back({"random ideal " + toJson(I).dump(), I,
                       OracleInstance::kTaylor});
    }
  }
  return runInstances("oracles", items, opts.workers, [&](const OracleInstance& in) {
    Outcome o;
    try {
      switch (in.kind) {
        case OracleInstance::kStanleyReisner: {
          int engine = depthOfQuotient(in.ideal, engineOptions(opts));
          int oracle = stanleyReisnerDepthOracle(in.ideal);
          o.checked = true;
          if (engine != oracle) {
            o.fail(in.id, "Stanley-Reisner depth " + std::to_string(oracle),
                   "Koszul depth " + std::to_string(engine));
          }
          break;
        }
        case OracleInstance::kPolarized: {
          int engine = depthOfQuotient(in.ideal, engineOptions(opts));
          int oracle = polarizedDepthOracle(in.ideal);
          o.checked = true;
          if (engine != oracle) {
            o.fail(in.id, "polarized Stanley-Reisner depth " + std::to_string(oracle),
                   "Koszul depth " + std::to_string(engine));
          }
          break;
        }
        case OracleInstance::kTaylor: {
          std::vector<std::size_t> engine =
              bettiNumbers(in.ideal, engineOptions(opts)).totals();
          std::vector<std::size_t> oracle = taylorBettiTotals(in.ideal);
          o.checked = true;
          if (engine != oracle) {
            Json e = engine, t = oracle;
            o.fail(in.id + " " + toJson(in.ideal).dump(),
                   "Taylor totals " + t.dump(), "Koszul totals " + e.dump());
          }
          break;
        }
        case OracleInstance::kPersistence: {
          o.checked = true;
          for (int k = 1; k <= 2; ++k) {
            MonomialIdeal lhs = colon(power(in.ideal, k + 1), in.ideal);
            if (lhs != power(in.ideal, k)) {
              o.fail(in.id, "I^" + std::to_string(k + 1) + " : I = I^" +
                                std::to_string(k),
                     toJson(lhs).dump());
            }
          }
          break;
        }
      }
    } catch (const BudgetExceeded& e) {
      o.checked = false;
      o.skipped.push_back(skippedText(in.id, e));
    }
    return o;
  });
}

MonomialIdeal sixVertexThreePathIdeal() {
  const std::vector<std::vector<int>> listed = {
      {1, 2, 4}, {1, 3, 4}, {1, 4, 5}, {1, 4, 6}, {2, 3, 4},
      {2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 4, 6}, {4, 5, 6}};
  std::vector<VertexSet> supports;
  for (const auto& s : listed) {
    VertexSet a = 0;
    for (int v : s) a |= VertexSet{1} << (v - 1);
    supports.push_back(a);
  }
  return squarefreeIdeal(6, supports);
}

SixVertexSearch reconstructSixVertexGraph() {
  const MonomialIdeal target = sixVertexThreePathIdeal();
  const Monomial u = Monomial::squarefree(6, 0b001111);
  const Monomial v = Monomial::squarefree(6, 0b111100);
  const Monomial x5u = Monomial::squarefree(6, 0b011110);
  const Monomial x6u = Monomial::squarefree(6, 0b101110);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  }
  // Each listed support must span at least two edges to carry a 3-path.
  std::vector<std::uint32_t> supportPairs;
  for (const Monomial& g : target.gens()) {
    VertexSet s = g.supportMask();
    std::uint32_t m = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      VertexSet pe = (VertexSet{1} << pairs[e].first) | (VertexSet{1} << pairs[e].second);
      if ((s & pe) == pe) m |= 1u << e;
    }
    supportPairs.push_back(m);
  }
  SixVertexSearch out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    bool plausible = std::all_of(supportPairs.begin(), supportPairs.end(),
                                 [&](std::uint32_t m) {
                                   return __builtin_popcount(mask & m) >= 2;
                                 });
    if (!plausible) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1u) edges.push_back(pairs[e]);
    }
    SimpleGraph g(6, edges);
    if (pathIdeal(g, 3) != target) continue;
    out.i3Matches.push_back(g);
    MonomialIdeal i4 = pathIdeal(g, 4);
    if (!i4.isGenerator(u) || !i4.isGenerator(v)) continue;
    out.withPair.push_back(g);
    if (!i4.isGenerator(x5u) && !i4.isGenerator(x6u)) out.hits.push_back(g);
  }
  return out;
}

SweepReport suiteSixVertexExample(const SweepOptions& opts) {
  SixVertexSearch search = reconstructSixVertexGraph();
  const MonomialIdeal target = sixVertexThreePathIdeal();
  const Monomial x4 = Monomial::variable(6, 3);
  const Monomial u = Monomial::squarefree(6, 0b001111);
  const Monomial v = Monomial::squarefree(6, 0b111100);
  SweepReport report = runInstances(
      "six-vertex", search.hits, opts.workers, [&](const SimpleGraph& g) {
        Outcome o;
        o.checked = true;
        const std::string id = "pathroid check-matroidal --graph '" +
                               toJson(g).dump() + "' --t 4";
        MonomialIdeal i3 = pathIdeal(g, 3);
        MonomialIdeal j = colon(i3, x4);
        if (multiply(j, x4) != i3 || !j.isSquarefree() ||
            *j.generatingDegree() != 2 || j.contains(x4)) {
          o.fail(id, "I_3 = x4 * (edge ideal on {1,2,3,5,6})", toJson(j).dump());
        }
        if (!checkPolymatroidalExchange(i3).holds) {
          o.fail(id, "I_3 matroidal", "exchange fails");
        }
        MonomialIdeal i4 = pathIdeal(g, 4);
        if (checkPolymatroidalExchange(i4).holds) {
          o.fail(id, "I_4 not matroidal", "exchange holds");
        }
        if (!exchangeFailsAt(i4, u, v, 0)) {
          o.fail(id, "exchange fails at (x1x2x3x4, x3x4x5x6, i = 1)",
                 "an exchange partner exists");
        }
        return o;
      });
  if (search.hits.empty()) {
    report.failures.push_back({"pathroid verify --suite six-vertex",
                               "at least one graph with the listed I_3",
                               "no graph found"});
  }
  report.notes.push_back(std::to_string(search.i3Matches.size()) +
                         " graphs have the listed I_3; " +
                         std::to_string(search.withPair.size()) +
                         " also have u and v in G(I_4); " +
                         std::to_string(search.hits.size()) +
                         " also lack x5 u / x1 and x6 u / x1");
  return report;
}

std::vector<std::string> suiteNames() {
  return {"path-exchange",    "edge-matroidal", "cm",
          "arrangement",      "bipartite-depth", "sqfr-depth",
          "many-block-depth", "spread-equations", "fiber-chain",
          "oracles",          "six-vertex"};
}

SweepReport runSuite(const std::string& name, const SweepOptions& opts) {
  if (name == "path-exchange") return suitePathExchange(8, opts);
  if (name == "edge-matroidal") return suiteEdgeIdealMatroidality(6, opts);
  if (name == "cm") return suiteCohenMacaulay(8, opts);
  if (name == "arrangement") return suiteArrangement(6, 12, opts);
  if (name == "bipartite-depth") return suiteBipartiteDepth(7, opts);
  if (name == "sqfr-depth") return suiteSquarefreeVeroneseDepth(7, opts);
  if (name == "many-block-depth") return suiteManyBlockDepth(7, opts);
  if (name == "spread-equations") return suiteSpreadEquations(7, opts);
  if (name == "fiber-chain") return suiteFiberChain(7, opts);
  if (name == "oracles") return suiteOracles(7, opts);
  if (name == "six-vertex") return suiteSixVertexExample(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace pathroid

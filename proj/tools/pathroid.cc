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

// Command-line front end: ideal construction, matroidality, CM verdicts,
// Betti numbers, depth of powers and the verification sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pathroid/arrangement.h"
#include "pathroid/cm.h"
#include "pathroid/exchange.h"
#include "pathroid/graph.h"
#include "pathroid/json_io.h"
#include "pathroid/resolution.h"
#include "pathroid/spread.h"
#include "pathroid/verify.h"

namespace {

using pathroid::Json;

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kBudget = 2,
  kNotMatroidal = 3,
  kInfeasible = 4,
  kNotCM = 5,
  kSuiteFailure = 6,
};

struct Globals {
  std::string format = "json";
  int workers = 1;
  double budgetSeconds = 0;
  std::size_t maxVertices = 16;
};

struct Inputs {
  std::string partition;
  std::string graph;
  std::string ideal;
  int t = 0;
  int power = 1;
};

Json parseJsonArgument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  return Json::parse(in);
}

pathroid::SimpleGraph loadGraph(const Inputs& in, const Globals& g) {
  pathroid::SimpleGraph graph = pathroid::graphFromJson(parseJsonArgument(in.graph));
  if (graph.vertexCount() > g.maxVertices) {
    throw std::invalid_argument(
        "graph has " + std::to_string(graph.vertexCount()) +
        " vertices, above --max-vertices " + std::to_string(g.maxVertices));
  }
  return graph;
}

void requireT(const Inputs& in) {
  if (in.t < 2) throw std::invalid_argument("--t must be at least 2");
}

// The ideal named by --partition/--graph with --t, or by --ideal, raised to
// --power.
pathroid::MonomialIdeal loadIdeal(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I;
  if (!in.ideal.empty()) {
    I = pathroid::idealFromJson(parseJsonArgument(in.ideal));
  } else if (!in.partition.empty()) {
    requireT(in);
    I = pathroid::pathIdeal(pathroid::PartitionSpec::parse(in.partition), in.t);
  } else if (!in.graph.empty()) {
    requireT(in);
    I = pathroid::pathIdeal(loadGraph(in, g), in.t);
  } else {
    throw std::invalid_argument("one of --partition, --graph, --ideal is required");
  }
  if (in.power < 1) throw std::invalid_argument("--power must be positive");
  if (in.power > 1 && !I.isZero()) I = pathroid::power(I, in.power);
  return I;
}

pathroid::EngineOptions engine(const Globals& g) {
  pathroid::EngineOptions opts;
  if (g.budgetSeconds > 0) opts.budget = pathroid::Budget::seconds(g.budgetSeconds);
  opts.workers = g.workers;
  return opts;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.format == "text") {
    std::cout << text << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::string idealText(const pathroid::MonomialIdeal& I) {
  std::string s;
  for (const auto& m : I.gens()) s += m.toString() + "\n";
  if (!s.empty()) s.pop_back();
  return s.empty() ? "0" : s;
}

std::string listText(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? " " : "") + std::to_string(v[i]);
  }
  return s;
}

void addInputs(CLI::App* cmd, Inputs& in, bool withPower) {
  cmd->add_option("--partition", in.partition, "Block sizes, e.g. 1,2,3");
  cmd->add_option("--graph", in.graph, "Graph JSON file or inline JSON");
  cmd->add_option("--t", in.t, "Path length in vertices");
  if (withPower) {
    cmd->add_option("--ideal", in.ideal, "Ideal JSON file or inline JSON");
    cmd->add_option("--power", in.power, "Power k of the ideal");
  }
}

int runGens(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  emit(g, pathroid::toJson(I), idealText(I));
  return kOk;
}

int runArrange(const std::vector<int>& counts, const Globals& g) {
  pathroid::ColorCounts cc(counts);
  auto seq = pathroid::arrange(cc);
  if (!seq) {
    emit(g, {{"feasible", false}, {"largest", cc.largest()},
             {"threshold", cc.threshold()}},
         "infeasible: largest count " + std::to_string(cc.largest()) +
             " exceeds " + std::to_string(cc.threshold()));
    return kInfeasible;
  }
  emit(g, {{"feasible", true}, {"sequence", *seq}}, listText(*seq));
  return kOk;
}

int runCheckMatroidal(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  if (I.isZero()) throw std::invalid_argument("the ideal is zero");
  if (I.isSquarefree()) {
    std::vector<pathroid::VertexSet> bases;
    for (const auto& m : I.gens()) bases.push_back(m.supportMask());
    auto verdict = pathroid::checkBasisExchange(
        pathroid::SetSystem(static_cast<int>(I.ringDim()), bases));
    std::string text = verdict.holds ? "matroidal" : "not matroidal";
    if (verdict.witness) {
      text += ": A=" + pathroid::formatVertexSet(verdict.witness->first) +
              " B=" + pathroid::formatVertexSet(verdict.witness->second) +
              " a=" + std::to_string(verdict.witness->index + 1);
    }
    emit(g, pathroid::toJson(verdict), text);
    return verdict.holds ? kOk : kNotMatroidal;
  }
  auto verdict = pathroid::checkPolymatroidalExchange(I);
  std::string text = verdict.holds ? "polymatroidal" : "not polymatroidal";
  if (verdict.witness) {
    text += ": u=" + verdict.witness->first.toString() +
            " v=" + verdict.witness->second.toString() +
            " i=" + std::to_string(verdict.witness->index + 1);
  }
  emit(g, pathroid::toJson(verdict), text);
  return verdict.holds ? kOk : kNotMatroidal;
}

int runIsCM(const Inputs& in, const Globals& g) {
  requireT(in);
  if (in.partition.empty()) throw std::invalid_argument("--partition is required");
  auto verdict = pathroid::classifyPathIdealCM(
      pathroid::PartitionSpec::parse(in.partition), in.t);
  std::string text = verdict.isCM ? "Cohen-Macaulay (" +
                                        pathroid::cmKindName(verdict.kind) + ")"
                                  : "not Cohen-Macaulay";
  if (verdict.failingBlock) {
    text += ": block " + std::to_string(*verdict.failingBlock) + " too large";
  }
  emit(g, pathroid::toJson(verdict), text);
  return verdict.isCM ? kOk : kNotCM;
}

int runBetti(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  auto table = pathroid::bettiNumbers(I, engine(g));
  std::string text;
  auto totals = table.totals();
  for (std::size_t i = 0; i < totals.size(); ++i) {
    text += (i ? "\n" : "") + std::string("b_") + std::to_string(i) + " = " +
            std::to_string(totals[i]);
  }
  emit(g, pathroid::toJson(table), text);
  return kOk;
}

int runDepth(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  int depth = pathroid::depthOfQuotient(I, engine(g));
  int n = static_cast<int>(I.ringDim());
  emit(g, {{"depth", depth}, {"projectiveDimension", n - depth}, {"ringDim", n}},
       "depth(S/I) = " + std::to_string(depth));
  return kOk;
}

int runDstab(const Inputs& in, int kMax, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  if (!pathroid::checkPolymatroidalExchange(I).holds) {
    std::cerr << "the ideal is not polymatroidal; no limit depth is predicted\n";
    return kNotMatroidal;
  }
  const int n = static_cast<int>(I.ringDim());
  const int limit = pathroid::limitDepthFormula(I);
  auto profile =
      pathroid::depthProfile(I, limit, kMax > 0 ? kMax : n, engine(g));
  emit(g,
       {{"depths", profile.depths},
        {"limitDepth", profile.limitDepth},
        {"dstab", profile.dstab}},
       "depths " + listText(profile.depths) + "; limit " +
           std::to_string(profile.limitDepth) + "; dstab " +
           std::to_string(profile.dstab));
  return kOk;
}

int runDstabFormula(const Inputs& in, const Globals& g) {
  requireT(in);
  if (in.partition.empty()) throw std::invalid_argument("--partition is required");
  auto f = pathroid::closedFormDstab(pathroid::PartitionSpec::parse(in.partition), in.t);
  std::string text = pathroid::kindName(f.kind);
  if (f.kind == pathroid::DstabFormula::Kind::kExact) {
    text += " " + std::to_string(f.value);
  } else if (f.kind == pathroid::DstabFormula::Kind::kBounds) {
    text += " [" + std::to_string(f.lo) + ", " + std::to_string(f.hi) + "]";
  }
  emit(g, pathroid::toJson(f), text + " (" + f.regime + ")");
  return kOk;
}

int runLrg(const Inputs& in, const Globals& g) {
  pathroid::MonomialIdeal I = loadIdeal(in, g);
  auto gamma = pathroid::linearRelationGraph(I);
  Json j = pathroid::toJson(gamma);
  std::string text = std::to_string(gamma.vertexCount()) + " vertices, " +
                     std::to_string(gamma.edges.size()) + " edges, " +
                     std::to_string(gamma.components) + " components";
  if (!pathroid::checkPolymatroidalExchange(I).holds) {
    j["spread"] = nullptr;
    std::cerr << "the ideal is not polymatroidal; refusing to report the "
                 "analytic spread\n";
    emit(g, j, text);
    return kNotMatroidal;
  }
  j["spread"] = pathroid::analyticSpread(I);
  emit(g, j, text + ", spread " + std::to_string(pathroid::analyticSpread(I)));
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  bool all = false;
  std::string report = "pathroid-verify.json";
  std::string counts;
};

std::vector<int> parseCounts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int runVerify(const VerifyArgs& args, const Inputs& in, const Globals& g) {
  pathroid::SweepOptions opts;
  opts.workers = g.workers;
  opts.instanceBudgetSeconds = g.budgetSeconds;
  if (!in.partition.empty()) opts.onlySpec = pathroid::PartitionSpec::parse(in.partition);
  if (in.t > 0) opts.onlyT = in.t;
  if (!in.graph.empty()) opts.onlyGraph = parseJsonArgument(in.graph);
  if (!args.counts.empty()) opts.onlyCounts = parseCounts(args.counts);

  std::vector<std::string> names = args.all ? pathroid::suiteNames() : args.suites;
  Json report = {{"suites", Json::array()}};
  int code = kOk;
  std::string text;
  try {
    if (names.empty()) throw std::invalid_argument("give --suite NAME or --all");
    for (const auto& name : names) {
      pathroid::SweepReport r = pathroid::runSuite(name, opts);
      report["suites"].push_back(pathroid::toJson(r));
      text += (r.passed() ? "PASS " : "FAIL ") + name + " (" +
              std::to_string(r.instancesChecked) + " instances";
      if (!r.skipped.empty()) text += ", " + std::to_string(r.skipped.size()) + " over budget";
      text += ")\n";
      for (const auto& f : r.failures) {
        text += "  " + f.instance + "\n    expected: " + f.expected +
                "\n    actual:   " + f.actual + "\n";
      }
      if (!r.passed()) {
        code = kSuiteFailure;
      } else if (!r.skipped.empty() && code == kOk) {
        code = kBudget;
      }
    }
  } catch (const std::exception& e) {
    report["error"] = e.what();
    text += std::string("error: ") + e.what() + "\n";
    code = kInternal;
  }
  report["exitCode"] = code;
  std::ofstream(args.report) << report.dump(2) << "\n";
  if (!text.empty()) text.pop_back();
  emit(g, report, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path ideals of graphs: matroidality, Cohen-Macaulayness and "
               "depth of powers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", g.budgetSeconds,
                 "Wall clock for homology computations (per instance in sweeps)");
  app.add_option("--max-vertices", g.maxVertices, "Largest accepted input graph");

  Inputs in;
  auto* gens = app.add_subcommand("gens", "Minimal generators of I_t or its power");
  addInputs(gens, in, true);

  std::string counts;
  auto* arrangeCmd = app.add_subcommand("arrange", "Order coloured items with no equal neighbours");
  arrangeCmd->add_option("--counts", counts, "Items per colour, e.g. 5,3,2,2")->required();

  auto* matroidal = app.add_subcommand("check-matroidal", "Exchange property verdict");
  addInputs(matroidal, in, true);
  auto* cm = app.add_subcommand("is-cm", "Cohen-Macaulay verdict for I_t(K_spec)");
  addInputs(cm, in, false);
  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers");
  addInputs(betti, in, true);
  auto* depth = app.add_subcommand("depth", "depth(S/I^k)");
  addInputs(depth, in, true);
  int kMax = 0;
  auto* dstab = app.add_subcommand("dstab", "Depth profile and index of depth stability");
  addInputs(dstab, in, true);
  dstab->add_option("--k-max", kMax, "Largest power tried (default: ring dimension)");
  auto* formula = app.add_subcommand("dstab-formula", "Closed-form dstab for I_t(K_spec)");
  addInputs(formula, in, false);
  auto* lrg = app.add_subcommand("lrg", "Linear relation graph and analytic spread");
  addInputs(lrg, in, true);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--suite", va.suites, "Suite name (repeatable)")
      ->check(CLI::IsMember(pathroid::suiteNames()));
  verify->add_flag("--all", va.all, "Run every suite");
  verify->add_option("--report", va.report, "JSON report path");
  verify->add_option("--counts", va.counts, "Restrict the arrangement suite");
  addInputs(verify, in, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gens) return runGens(in, g);
    if (*arrangeCmd) return runArrange(parseCounts(counts), g);
    if (*matroidal) return runCheckMatroidal(in, g);
    if (*cm) return runIsCM(in, g);
    if (*betti) return runBetti(in, g);
    if (*depth) return runDepth(in, g);
    if (*dstab) return runDstab(in, kMax, g);
    if (*formula) return runDstabFormula(in, g);
    if (*lrg) return runLrg(in, g);
    if (*verify) return runVerify(va, in, g);
  } catch (const pathroid::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

// Copyright 2026 The cmatch Authors.
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

// cmatch command-line front end. Reports are JSON on stdout; diagnostics go
// to stderr. Exit codes: 0 ok, 1 failures found, 2 usage or parse error,
// 3 precondition violation.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "cmatch/json.hpp"

namespace {

using namespace cmatch;

constexpr int kOk = 0, kFailures = 1, kUsage = 2, kPrecondition = 3;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColouredGraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

Json load_json(const std::string& arg, const char* what) {
  std::string text = !arg.empty() && arg.front() == '{' ? arg : slurp(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const std::string& path, const ColouredGraph& g) {
  if (path.empty() || path == "-") {
    write_graph(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_graph(out, g);
}

// A fresh seed when none was given; always reported on stderr.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  std::uint64_t s = (std::uint64_t{rd()} << 32) ^ rd();
  std::cerr << "seed: " << s << "\n";
  return s;
}

Graph pick(const ColouredGraph& g, const std::optional<int>& colour) {
  if (!colour) return g.support();
  if (*colour < 1 || *colour > g.colours())
    throw PreconditionError("--colour must be in [1, " + std::to_string(g.colours()) + "]");
  return g.colour_subgraph(*colour - 1);
}

struct Ground2 {
  Ground ground = Ground::complete();
  std::optional<BlowupSpec> spec;
};

Ground2 load_ground(const std::string& arg) {
  if (arg == "complete") return {};
  BlowupSpec spec = spec_from_json(load_json(arg, "ground spec"));
  return {Ground::blowup(spec), spec};
}

int report_exit(const VerifyReport& r) {
  emit(verify_json(r));
  return r.passed() ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-coloured graph matchings, decompositions and reductions"};
  app.require_subcommand(1);
  std::function<int()> action;

  // Graph queries.
  std::string file;
  std::optional<int> colour;
  auto* matching = app.add_subcommand("matching", "Maximum matching of a graph file");
  auto* two = app.add_subcommand("two-matching", "Maximum 2-matching of a graph file");
  auto* ge = app.add_subcommand("ge", "Gallai-Edmonds decomposition of a graph file");
  for (auto* sub : {matching, two, ge}) {
    sub->add_option("FILE", file, "Graph file (stdin if omitted)");
    sub->add_option("--colour", colour, "Use one colour class instead of the support");
  }
  matching->callback([&] {
    action = [&] {
      Graph g = pick(load_graph(file), colour);
      Json j = matching_json(max_matching(g));
      j["n"] = g.order();
      emit(j);
      return kOk;
    };
  });
  two->callback([&] {
    action = [&] {
      Graph g = pick(load_graph(file), colour);
      Json j = two_matching_json(max_two_matching(g));
      j["n"] = g.order();
      emit(j);
      return kOk;
    };
  });
  ge->callback([&] {
    action = [&] {
      Graph g = pick(load_graph(file), colour);
      emit(ge_json(ge_decompose(g)));
      return kOk;
    };
  });

  std::string mode = "m";
  std::vector<int> thresholds;
  std::optional<int> k0;
  auto* cm = app.add_subcommand("cm", "Largest monochromatic connected (2-)matchings");
  cm->add_option("FILE", file, "Graph file (stdin if omitted)");
  cm->add_option("--mode", mode, "m or 2m")->check(CLI::IsMember({"m", "2m"}));
  cm->add_option("--thresholds", thresholds, "Vertex-count threshold per colour")->delimiter(',');
  cm->add_option("--k0", k0, "Colours below k0 count bipartite components (default k)");
  cm->callback([&] {
    action = [&] {
      ColouredGraph g = load_graph(file);
      const CmMode md = mode_from_string(mode);
      const int kk0 = k0.value_or(g.colours());
      if (kk0 < 0 || kk0 > g.colours()) throw PreconditionError("--k0 out of range");
      Json j = cm_report_json(largest_mono_cm(g), md, kk0, thresholds);
      if (!thresholds.empty()) {
        auto w = has_cm_at_least(g, thresholds, kk0, md);
        j["threshold_met"] = w.has_value();
        if (w) {
          j["witness"] = {{"colour", w->colour + 1},
                          {"component", w->component},
                          {"vertices", w->vertices}};
          std::cerr << describe(*w, md) << "\n";
        }
      }
      emit(j);
      return kOk;
    };
  });

  // Reduction.
  std::string ground_arg = "complete", params_arg, out;
  auto* reduce = app.add_subcommand("reduce", "Reduce an almost-complete colouring to a complete one");
  reduce->add_option("FILE", file, "Graph file (stdin if omitted)");
  reduce->add_option("--ground", ground_arg, "complete, or a blow-up spec JSON file");
  reduce->add_option("--params", params_arg, "Parameter JSON file or inline document")->required();
  reduce->add_option("--out", out, "Where to write the output graph");
  reduce->callback([&] {
    action = [&] {
      ColouredGraph g = load_graph(file);
      ReductionParams p = params_from_json(load_json(params_arg, "params"));
      Ground2 gr = load_ground(ground_arg);
      ReductionReport r = gr.spec ? reduce_blowup(g, *gr.spec, p) : reduce_complete(g, p);
      if (!out.empty()) write_output(out, r.g_prime);
      emit(reduction_json(r));
      return r.passed() ? kOk : kFailures;
    };
  });

  // Verifiers.
  auto* verify = app.add_subcommand("verify", "Desk-scale verifiers");
  verify->require_subcommand(1);
  int m = 1, n = 10, jobs = 1;
  std::uint64_t trials = 100;
  std::optional<std::uint64_t> sample, seed;
  auto add_jobs = [&](CLI::App* s) {
    s->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_random = [&](CLI::App* s, int default_n) {
    s->add_option("--trials", trials, "Number of random instances");
    s->add_option("--seed", seed, "Seed");
    s->add_option("--n", n, "Maximum order")->default_val(default_n);
    add_jobs(s);
  };
  for (const char* name : {"lemma51", "corollary", "lemma52"}) {
    auto* s = verify->add_subcommand(name, std::string("Colourings checked by ") + name);
    s->add_option("--m", m, "Size parameter")->required();
    s->add_option("--sample", sample, "Random sample size instead of exhaustive");
    s->add_option("--seed", seed, "Seed for sampling");
    add_jobs(s);
    std::string which = name;
    s->callback([&, which] {
      action = [&, which] {
        std::optional<std::uint64_t> sd;
        if (sample) sd = resolve_seed(seed);
        if (which == "lemma51") return report_exit(verify_lemma_three_colours(m, sample, sd.value_or(0), jobs));
        if (which == "corollary") return report_exit(verify_corollary_cm(m, sample, sd.value_or(0), jobs));
        return report_exit(verify_lemma_bip(m, sample, sd.value_or(0), jobs));
      };
    });
  }
  auto* vge = verify->add_subcommand("ge", "Gallai-Edmonds properties on random graphs");
  add_random(vge, 10);
  vge->callback([&] {
    action = [&] { return report_exit(verify_ge_random(trials, resolve_seed(seed), n, jobs)); };
  });
  auto* vcrit = verify->add_subcommand("critical", "Critical vertices on random connected graphs");
  add_random(vcrit, 12);
  vcrit->callback([&] {
    action = [&] { return report_exit(verify_critical_random(trials, resolve_seed(seed), n, jobs)); };
  });
  auto* vext = verify->add_subcommand("extension", "Maximal star extensions on random graphs");
  add_random(vext, 10);
  vext->add_option("--mode", mode, "m or 2m")->check(CLI::IsMember({"m", "2m"}));
  vext->callback([&] {
    action = [&] {
      return report_exit(
          verify_extensions_random(mode_from_string(mode), trials, resolve_seed(seed), n, jobs));
    };
  });
  auto* vpb = verify->add_subcommand("pulleyblank", "2-matching structure on one graph or random graphs");
  vpb->add_option("FILE", file, "Check a single graph");
  add_random(vpb, 10);
  vpb->callback([&] {
    action = [&] {
      if (file.empty()) return report_exit(verify_two_matching_cover_random(trials, resolve_seed(seed), n, jobs));
      TwoMatchingCoverResult r = verify_two_matching_cover(load_graph(file).support());
      emit({{"lemma", "pulleyblank"},
            {"D", r.d},
            {"D_prime", r.d_prime},
            {"neighbourhood", r.neighbourhood},
            {"shapes", r.shapes},
            {"satisfying", r.satisfying},
            {"universal", r.universal()},
            {"existential", r.existential()}});
      return r.existential() ? kOk : kFailures;
    };
  });
  auto* vc41 = verify->add_subcommand("claim41", "Re-derive the complement matching bound");
  vc41->add_option("FILE", file, "Graph file (stdin if omitted)");
  vc41->add_option("--params", params_arg, "Parameter JSON file or inline document")->required();
  vc41->add_option("--ground", ground_arg, "complete, or a blow-up spec JSON file");
  vc41->callback([&] {
    action = [&] {
      ColouredGraph g = load_graph(file);
      ReductionParams p = params_from_json(load_json(params_arg, "params"));
      Ground2 gr = load_ground(ground_arg);
      ColouredGraph g1 = maximalize(g, gr.ground, p);
      Claim41Report r = derive_claim41_bound(
          g1, gr.ground, p, gr.spec ? GroundKind::blowup : GroundKind::complete);
      emit(claim41_json(r));
      return r.passed() ? kOk : kFailures;
    };
  });
  std::string eps = "1/10", slack = "1", fourth = "yz";
  auto* vst = verify->add_subcommand("stability", "Distance of a colouring from structure (C)");
  vst->add_option("FILE", file, "Graph file (stdin if omitted)");
  vst->add_option("--m", m, "Size parameter")->required();
  vst->add_option("--eps", eps, "Rational epsilon");
  vst->add_option("--slack", slack, "Rational bound on each block's wrong fraction");
  vst->add_option("--fourth", fourth, "Fourth block: yz or yw")->check(CLI::IsMember({"yz", "yw"}));
  vst->add_option("--seed", seed, "Seed for the local search");
  vst->callback([&] {
    action = [&] {
      ColouredGraph g = load_graph(file);
      StabilityReport r =
          verify_stability_structure(g, m, parse_rational(eps), parse_rational(slack),
                                     fourth == "yz" ? FourthBlock::yz : FourthBlock::yw,
                                     seed.value_or(0));
      emit(stability_json(r));
      return r.within_slack ? kOk : kFailures;
    };
  });

  // Generators.
  int z = 0, w = 0;
  auto* gen = app.add_subcommand("generate", "Extremal colourings");
  gen->require_subcommand(1);
  auto* gc = gen->add_subcommand("structure-c", "Structure-(C) colouring of K_{4m+1}");
  gc->add_option("--m", m, "Size parameter")->required();
  gc->add_option("--z", z, "|Z|")->required();
  gc->add_option("--w", w, "|W|")->required();
  gc->add_option("--seed", seed, "Seed for the free pairs");
  gc->add_option("--out", out, "Output file (stdout if omitted)");
  gc->callback([&] {
    action = [&] {
      write_output(out, gen_structure_c(m, z, w, resolve_seed(seed)));
      return kOk;
    };
  });
  auto* gb = gen->add_subcommand("structure-b2", "Structure-(B2) colouring of K_{2m,2m+1}");
  gb->add_option("--m", m, "Size parameter")->required();
  gb->add_option("--z", z, "|Z|")->required();
  gb->add_option("--out", out, "Output file (stdout if omitted)");
  gb->callback([&] {
    action = [&] {
      write_output(out, gen_structure_b2(m, z));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailures;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailures;
  }
}

// Command-line front end: fold, intersect, join, rank, index, member, basis,
// conjugate, sample, analyze, examples, experiment. Data goes to stdout or
// --out; diagnostics go to stderr; the exit code is nonzero on any error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stallings/conjecture.hpp"
#include "stallings/errors.hpp"
#include "stallings/experiment.hpp"
#include "stallings/io.hpp"
#include "stallings/random.hpp"
#include "stallings/subgroup.hpp"

namespace {

using namespace stallings;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

Subgroup load_input(const std::string& path) { return load_subgroup(read_file(path)); }

// Inline alternative to a subgroup file: --rank plus semicolon-separated
// generator words ("1 2 -1; 2").
Subgroup subgroup_from_inline(int rank, const std::string& generators) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos <= generators.size()) {
    std::size_t semi = generators.find(';', pos);
    std::string part = generators.substr(pos, semi == std::string::npos ? semi : semi - pos);
    pos = semi == std::string::npos ? generators.size() + 1 : semi + 1;
    Word w = Word::parse(part);
    if (w.max_index() > rank) {
      throw AlphabetError("generator uses letter outside alphabet of rank " +
                          std::to_string(rank));
    }
    if (!w.empty()) words.push_back(std::move(w));
  }
  return Subgroup::generated_by(rank, words);
}

int run(int argc, char** argv) {
  CLI::App app{"Stallings-graph calculus for finitely generated subgroups of free groups"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, word_text, generators_text;
  std::string out_h_path, out_k_path;
  int rank = 0;
  std::uint64_t seed = 0;

  // --- fold ---
  auto* fold_cmd = app.add_subcommand("fold", "Fold generator words into a core graph");
  fold_cmd->add_option("input", in_a, "subgroup file");
  fold_cmd->add_option("--rank", rank, "ambient rank for --generators");
  fold_cmd->add_option("--generators", generators_text, "inline generators, ';'-separated");
  fold_cmd->add_option("--out", out_path, "output file (default stdout)");
  fold_cmd->callback([&] {
    if (in_a.empty() && generators_text.empty()) {
      throw Error("fold needs a subgroup file or --rank with --generators");
    }
    Subgroup s = in_a.empty() ? subgroup_from_inline(rank, generators_text) : [&] {
      SubgroupFile f = parse_subgroup(read_file(in_a));
      return Subgroup::generated_by(f.rank, f.generators);
    }();
    emit(out_path, write_graph(s.graph()));
  });

  // --- intersect / join ---
  for (auto [name, help] : {std::pair{"intersect", "Intersection via pullback"},
                            std::pair{"join", "Subgroup generated by the union"}}) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("a", in_a, "subgroup or graph file")->required();
    cmd->add_option("b", in_b, "subgroup or graph file")->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
    std::string op = name;
    cmd->callback([&, op] {
      Subgroup a = load_input(in_a), b = load_input(in_b);
      Subgroup r = op == "intersect" ? intersect(a, b) : join(a, b);
      emit(out_path, write_graph(r.graph()));
    });
  }

  // --- rank ---
  auto* rank_cmd = app.add_subcommand("rank", "Rank and reduced rank of a subgroup");
  rank_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  rank_cmd->add_option("--out", out_path, "output file (default stdout)");
  rank_cmd->callback([&] {
    Subgroup s = load_input(in_a);
    emit(out_path, "rank=" + std::to_string(s.rank()) +
                       "\nreduced_rank=" + std::to_string(s.reduced_rank()) + "\n");
  });

  // --- index ---
  auto* index_cmd = app.add_subcommand("index", "Index in the ambient free group");
  index_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  index_cmd->add_option("--out", out_path, "output file (default stdout)");
  index_cmd->callback([&] {
    auto idx = index_in_whole_group(load_input(in_a));
    emit(out_path, "index=" + (idx ? std::to_string(*idx) : std::string("infinite")) + "\n");
  });

  // --- member ---
  auto* member_cmd = app.add_subcommand("member", "Test whether a word lies in a subgroup");
  member_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  member_cmd->add_option("--word", word_text, "word as signed letters, e.g. \"1 2 -1\"")
      ->required();
  member_cmd->add_option("--out", out_path, "output file (default stdout)");
  member_cmd->callback([&] {
    Subgroup s = load_input(in_a);
    Word w = Word::parse(word_text);
    if (w.max_index() > s.ambient_rank()) {
      throw AlphabetError("word uses letter outside alphabet of rank " +
                          std::to_string(s.ambient_rank()));
    }
    emit(out_path, s.contains(w) ? "true\n" : "false\n");
  });

  // --- basis ---
  auto* basis_cmd = app.add_subcommand("basis", "Free basis from a spanning tree");
  basis_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  basis_cmd->add_option("--out", out_path, "output file (default stdout)");
  basis_cmd->callback([&] {
    Subgroup s = load_input(in_a);
    emit(out_path, write_subgroup(s.ambient_rank(), basis(s)));
  });

  // --- conjugate ---
  auto* conj_cmd = app.add_subcommand("conjugate", "Conjugate a subgroup by a word");
  conj_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  conj_cmd->add_option("--word", word_text, "conjugator, e.g. \"1 -2\"")->required();
  conj_cmd->add_option("--out", out_path, "output file (default stdout)");
  conj_cmd->callback([&] {
    Subgroup s = load_input(in_a);
    emit(out_path, write_graph(conjugate(s, Word::parse(word_text)).graph()));
  });

  // --- analyze ---
  auto* analyze_cmd = app.add_subcommand("analyze", "Inequality report for a subgroup pair");
  analyze_cmd->add_option("a", in_a, "subgroup or graph file")->required();
  analyze_cmd->add_option("b", in_b, "subgroup or graph file")->required();
  analyze_cmd->add_option("--out", out_path, "output file (default stdout)");
  analyze_cmd->callback([&] {
    emit(out_path, format_report(analyze_pair(load_input(in_a), load_input(in_b))));
  });

  // --- examples ---
  auto* examples_cmd = app.add_subcommand("examples", "Builtin counterexample pairs");
  std::string family;
  int ex_v = 4, ex_l = 4;
  examples_cmd->add_option("name", family, "iehnc or guzman")->required();
  examples_cmd->add_option("--v", ex_v, "iehnc: path parameter v >= 3");
  examples_cmd->add_option("--l", ex_l, "iehnc: extra generators l >= 1");
  examples_cmd->add_option("--out-h", out_h_path, "write H here (default stdout)");
  examples_cmd->add_option("--out-k", out_k_path, "write K here (default stdout)");
  examples_cmd->callback([&] {
    ExamplePair pair = [&] {
      if (family == "iehnc") return example_iehnc(ex_v, ex_l);
      if (family == "guzman") return example_guzman();
      throw CLI::ValidationError("examples", "unknown example '" + family +
                                                 "' (expected iehnc or guzman)");
    }();
    std::string h_text = write_subgroup(pair.h.ambient_rank(), pair.h_generators, {"H"});
    std::string k_text = write_subgroup(pair.k.ambient_rank(), pair.k_generators, {"K"});
    if (out_h_path.empty() && out_k_path.empty()) {
      std::cout << h_text << k_text;
    } else {
      emit(out_h_path, h_text);
      emit(out_k_path, k_text);
    }
  });

  // --- sample ---
  auto* sample_cmd = app.add_subcommand("sample", "Draw one random subgroup");
  std::string distribution = "graph";
  int vertices = 5, gen_count = 4, max_len = 5, max_rejections = 10'000;
  bool finite_index = false;
  sample_cmd->add_option("--distribution", distribution, "graph or word")->required();
  sample_cmd->add_option("--rank", rank, "ambient rank >= 2")->required();
  sample_cmd->add_option("--vertices", vertices, "graph-based: vertex count");
  sample_cmd->add_option("--gen-count", gen_count, "word-based: generator count");
  sample_cmd->add_option("--max-len", max_len, "word-based: words have length < max-len");
  sample_cmd->add_option("--seed", seed, "RNG seed")->required();
  sample_cmd->add_option("--max-rejections", max_rejections, "graph-based attempt budget");
  sample_cmd->add_flag("--finite-index", finite_index, "graph-based: total permutations");
  sample_cmd->add_option("--out", out_path, "output file (default stdout)");
  sample_cmd->callback([&] {
    RandomStream rng(seed);
    if (distribution == "graph") {
      GraphBasedParams p{rank, vertices, max_rejections, finite_index};
      GraphSample s = sample_graph_based(p, rng);
      emit(out_path, write_graph(s.subgroup.graph(),
                                 {"seed=" + std::to_string(seed) +
                                  " attempt=" + std::to_string(s.attempts)}));
    } else if (distribution == "word") {
      WordBasedParams p{rank, gen_count, max_len};
      WordSample s = sample_word_based(p, rng);
      std::vector<std::string> comments{"seed=" + std::to_string(seed)};
      for (const Word& w : s.generators) comments.push_back("generator " + w.str());
      emit(out_path, write_graph(s.subgroup.graph(), comments));
    } else {
      throw CLI::ValidationError("sample", "unknown distribution '" + distribution + "'");
    }
  });

  // --- experiment ---
  auto* exp_cmd = app.add_subcommand("experiment", "Counterexample-frequency sweep, CSV output");
  int param_min = 2, param_max = 10, samples = 1000, jobs = 1;
  exp_cmd->add_option("--distribution", distribution, "graph or word")->required();
  exp_cmd->add_option("--rank", rank, "ambient rank >= 2")->required();
  exp_cmd->add_option("--param-min", param_min, "first parameter point")->required();
  exp_cmd->add_option("--param-max", param_max, "last parameter point")->required();
  exp_cmd->add_option("--samples", samples, "pairs per parameter point")->required();
  exp_cmd->add_option("--seed", seed, "RNG seed")->required();
  exp_cmd->add_option("--gen-count", gen_count, "word-based: generator count");
  exp_cmd->add_option("--max-rejections", max_rejections, "graph-based attempt budget");
  exp_cmd->add_option("--jobs", jobs, "worker threads (output is jobs-independent)");
  exp_cmd->add_option("--out", out_path, "output file (default stdout)");
  exp_cmd->callback([&] {
    ExperimentParams p;
    if (distribution == "graph") {
      p.distribution = Distribution::graph_based;
    } else if (distribution == "word") {
      p.distribution = Distribution::word_based;
    } else {
      throw CLI::ValidationError("experiment", "unknown distribution '" + distribution + "'");
    }
    p.ambient_rank = rank;
    p.param_min = param_min;
    p.param_max = param_max;
    p.samples = samples;
    p.seed = seed;
    p.generator_count = gen_count;
    p.max_rejections = max_rejections;
    emit(out_path, to_csv(run_experiment(p, jobs)));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

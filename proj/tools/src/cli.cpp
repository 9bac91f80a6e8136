#include "vcc/tools/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vcc/articulation.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/dominators.hpp"
#include "vcc/error.hpp"
#include "vcc/io.hpp"
#include "vcc/kvcc.hpp"
#include "vcc/sparsify.hpp"
#include "vcc/testkit/generators.hpp"
#include "vcc/tools/bench.hpp"
#include "vcc/twovcc.hpp"

namespace vcc::cli {

namespace {

using nlohmann::json;

struct Input {
  std::string file = "-";
  bool json = false;
};

void add_input(CLI::App* sub, Input& input) {
  sub->add_option("file", input.file, "edge-list file, '-' for standard input")
      ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  sub->add_flag("--json", input.json, "emit JSON");
}

DiGraph load(const Input& input, std::istream& in) {
  if (input.file == "-") return read_edge_list(in);
  std::ifstream file(input.file);
  if (!file) throw Error(Errc::ParseError, "cannot open " + input.file);
  return read_edge_list(file);
}

void print_set(std::ostream& out, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
}

void print_sets(std::ostream& out, const std::vector<VertexSet>& sets, bool as_json) {
  if (as_json) {
    out << json(sets).dump() << '\n';
    return;
  }
  for (const auto& s : sets) print_set(out, s);
}

template <typename T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 0) throw CLI::ValidationError("list", "bad entry '" + item + "'");
    values.push_back(static_cast<T>(v));
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex connectivity toolkit for directed graphs", "vcc"};
  app.require_subcommand(1);

  Input scc_in;
  auto* scc = app.add_subcommand("scc", "strongly connected components");
  add_input(scc, scc_in);

  Input dom_in;
  Vertex root = 0;
  auto* domtree = app.add_subcommand("domtree", "dominator tree, one 'w idom(w)' line per vertex");
  add_input(domtree, dom_in);
  domtree->add_option("--root", root, "start vertex")->capture_default_str();

  Input sap_in;
  auto* sap = app.add_subcommand("sap", "strong articulation points");
  add_input(sap, sap_in);

  Input two_in;
  std::string algo = "split";
  auto* two = app.add_subcommand("2vcc", "2-vertex-connected components");
  add_input(two, two_in);
  two->add_option("--algo", algo, "es | split | domtree | per-vertex")
      ->check(CLI::IsMember({"es", "split", "domtree", "per-vertex"}))
      ->capture_default_str();

  Input k_in;
  std::size_t k = 3;
  auto* kvcc = app.add_subcommand("kvcc", "k-vertex-connected components");
  add_input(kvcc, k_in);
  kvcc->add_option("-k", k, "connectivity k >= 2")->required();

  Input cut_in;
  auto* cut = app.add_subcommand("cut", "a minimum vertex cut");
  add_input(cut, cut_in);

  Input sp_in;
  int problem = 1;
  auto* sparsify = app.add_subcommand("sparsify", "sparsification preserving 2-VCCs");
  add_input(sparsify, sp_in);
  sparsify->add_option("--problem", problem, "1 | 2 | 3")->check(CLI::Range(1, 3))->capture_default_str();

  testkit::GenSpec gen_spec;
  std::string gen_model = "uniform";
  std::string gen_sizes;
  auto* gen = app.add_subcommand("gen", "random graph in edge-list format");
  gen->add_option("--model", gen_model)->check(CLI::IsMember({"uniform", "planted"}))->capture_default_str();
  gen->add_option("-n", gen_spec.n)->required();
  gen->add_option("-m", gen_spec.m)->required();
  gen->add_option("--seed", gen_spec.seed)->capture_default_str();
  gen->add_option("--sizes", gen_sizes, "planted clique sizes a,b,...");
  gen->add_flag("--strong", gen_spec.strong, "uniform model: start from a Hamiltonian cycle");

  bench::BenchOptions bench_opts;
  std::string bench_model = "planted";
  std::string bench_sizes = "50,100,200";
  std::string bench_algos = "es,split";
  auto* bench_cmd = app.add_subcommand("bench", "time 2-VCC algorithms, CSV on standard output");
  bench_cmd->add_option("--model", bench_model)->check(CLI::IsMember({"uniform", "planted"}))->capture_default_str();
  bench_cmd->add_option("--n", bench_sizes, "vertex counts a,b,...")->capture_default_str();
  bench_cmd->add_option("--density", bench_opts.density, "m / n")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--algos", bench_algos, "comma-separated variants")->capture_default_str();
  bench_cmd->add_option("--reps", bench_opts.repetitions)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench_cmd->add_flag("--median", bench_opts.median, "one row per point with the median time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*gen) {
      gen_spec.model = gen_model == "planted" ? testkit::GenModel::Planted : testkit::GenModel::Uniform;
      if (!gen_sizes.empty()) gen_spec.sizes = split_list<std::size_t>(gen_sizes);
    }
    if (*bench_cmd) {
      bench_opts.model = bench_model == "planted" ? testkit::GenModel::Planted : testkit::GenModel::Uniform;
      bench_opts.sizes = split_list<std::size_t>(bench_sizes);
      bench_opts.algos.clear();
      std::stringstream ss(bench_algos);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name != "es" && name != "split" && name != "domtree" && name != "per-vertex") {
          throw CLI::ValidationError("--algos", "unknown variant '" + name + "'");
        }
        bench_opts.algos.push_back(parse_two_vcc_algorithm(name));
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*scc) {
      print_sets(out, strongly_connected_components(load(scc_in, in)).components, scc_in.json);
    } else if (*domtree) {
      const DominatorTree t = dominator_tree(load(dom_in, in), root);
      if (dom_in.json) {
        json idom = json::array();
        for (Vertex p : t.idom) idom.push_back(p < 0 ? json(nullptr) : json(p));
        out << json{{"root", t.root}, {"idom", idom}}.dump() << '\n';
      } else {
        for (std::size_t w = 0; w < t.size(); ++w) {
          out << w << ' ';
          if (t.idom[w] < 0) out << '-';
          else out << t.idom[w];
          out << '\n';
        }
      }
    } else if (*sap) {
      const VertexSet points = strong_articulation_points(load(sap_in, in));
      if (sap_in.json) {
        out << json(points).dump() << '\n';
      } else {
        for (Vertex v : points) out << v << '\n';
      }
    } else if (*two) {
      print_sets(out, two_vccs(load(two_in, in), parse_two_vcc_algorithm(algo)), two_in.json);
    } else if (*kvcc) {
      print_sets(out, k_vccs(load(k_in, in), k), k_in.json);
    } else if (*cut) {
      const VertexCut c = min_vertex_cut(load(cut_in, in));
      if (cut_in.json) out << json(c.vertices).dump() << '\n';
      else print_set(out, c.vertices);
    } else if (*sparsify) {
      const DiGraph g = load(sp_in, in);
      const SparsifyResult r = problem == 1   ? sparsify_problem1(g)
                               : problem == 2 ? sparsify_problem2(g)
                                              : sparsify_problem3(g);
      if (sp_in.json) {
        out << json{{"problem", r.problem},
                    {"n", g.vertex_count()},
                    {"input_edges", r.input_edge_count},
                    {"retained", r.retained},
                    {"components", r.components},
                    {"verified", r.verified()}}
                   .dump()
            << '\n';
      } else {
        write_edge_list(out, g.vertex_count(), r.retained);
        out << "# retained " << r.size() << " of " << r.input_edge_count << " edges\n";
      }
    } else if (*gen) {
      write_edge_list(out, testkit::gen_random(gen_spec));
    } else if (*bench_cmd) {
      bench::write_csv(out, bench::run_bench(bench_opts));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace vcc::cli

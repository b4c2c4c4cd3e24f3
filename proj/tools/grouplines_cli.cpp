// grouplines: build group graphs, recognise line graphs and their
// complements, and check the classification theorems over a group catalog.
//
// Exit codes: 0 success (or "yes"), 1 "no" or disagreements found,
// 2 usage or input error, 3 order cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grouplines/classification.hpp"
#include "grouplines/io.hpp"
#include "grouplines/power_graph.hpp"
#include "grouplines/recognition.hpp"

namespace {

using namespace grouplines;

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t order_cap() {
  const char* env = std::getenv("GROUPLINES_MAX_ORDER");
  if (!env || !*env) return kDefaultOrderCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("GROUPLINES_MAX_ORDER must be a positive integer, got '") + env +
                   "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Everything is rendered before anything is written, so error paths leave no
// partial output.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

// Input for check and root: either a group and a kind, or a graph file.
struct GraphInput {
  std::string group;
  std::string kind = "pg";
  std::string graph_file;

  Graph load() const {
    if (!graph_file.empty()) return graph_from_json(read_file(graph_file));
    if (group.empty()) throw UsageError("give a group spec or --graph FILE");
    const GroupGraphKind k = parse_graph_kind(kind);
    return build_group_graph(make_group(parse_group_spec(group), order_cap()), k);
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("group", in.group, "Group spec, e.g. cyclic:6 or product(cyclic:3,quaternion:2)");
  cmd->add_option("kind", in.kind, "Graph kind: pg, epg, ppg or pepg")->capture_default_str();
  cmd->add_option("--graph", in.graph_file, "Graph JSON file instead of a group");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups and line-graph recognition"};
  app.require_subcommand(1);

  // build-graph
  std::string bg_group, bg_kind, bg_format = "json", bg_out;
  auto* build = app.add_subcommand("build-graph", "Build PG, EPG or a proper graph of a group");
  build->add_option("group", bg_group, "Group spec")->required();
  build->add_option("kind", bg_kind, "pg, epg, ppg or pepg")->required();
  build->add_option("--format", bg_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  build->add_option("--out", bg_out, "Output file (default: standard output)");

  // check
  GraphInput check_in;
  std::string check_mode = "line";
  auto* check = app.add_subcommand("check", "Decide line / co-line and print a certificate");
  add_graph_input(check, check_in);
  check->add_option("--mode", check_mode, "line or co-line")
      ->check(CLI::IsMember({"line", "co-line"}))
      ->capture_default_str();

  // root
  GraphInput root_in;
  auto* root = app.add_subcommand("root", "Print a root graph R with L(R) isomorphic to the input");
  add_graph_input(root, root_in);

  // verify
  std::string v_theorem = "all", v_report = "csv", v_out;
  std::size_t v_max = 96, v_jobs = 1;
  std::vector<std::string> v_families;
  auto* verify = app.add_subcommand("verify", "Compare theorem predicates with graph recognition");
  verify->add_option("--theorem", v_theorem, "Theorem id (T3.1 ... T3.11, C3.3, C-dihedral, C-semidihedral) or all")
      ->capture_default_str();
  verify->add_option("--max", v_max, "Largest group order in the sweep")->capture_default_str();
  verify->add_option("--report", v_report, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}))
      ->capture_default_str();
  verify->add_option("--jobs", v_jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--family", v_families,
                     "Restrict to catalog families (cyclic, dihedral, quaternion, semidihedral, "
                     "elemabelian, product)");
  verify->add_option("--out", v_out, "Output file (default: standard output)");

  // list-catalog
  std::size_t lc_max = 0;
  std::vector<std::string> lc_families;
  auto* list = app.add_subcommand("list-catalog", "List the built-in group catalog");
  list->add_option("--max", lc_max, "Largest group order (default: the order cap)");
  list->add_option("--family", lc_families, "Restrict to catalog families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      const GroupTable g = make_group(parse_group_spec(bg_group), order_cap());
      const Graph graph = build_group_graph(g, parse_graph_kind(bg_kind));
      emit(bg_format == "dot" ? graph_to_dot(graph) : graph_to_json(graph) + "\n", bg_out);
      return 0;
    }
    if (*check) {
      const Graph graph = check_in.load();
      const bool co = check_mode == "co-line";
      const LineCertificate cert = co ? is_complement_of_line_graph(graph) : is_line_graph(graph);
      std::cout << certificate_to_json(cert, co) << "\n";
      return cert.verdict ? 0 : kExitNo;
    }
    if (*root) {
      const Graph graph = root_in.load();
      const LineCertificate cert = is_line_graph(graph);
      if (!cert.verdict) {
        std::cerr << "not a line graph: contains forbidden pattern " << cert.forbidden->pattern
                  << " (" << forbidden_catalog().entry(cert.forbidden->pattern).name << ")\n";
        return kExitNo;
      }
      std::cout << graph_to_json(*cert.root) << "\n";
      return 0;
    }
    if (*verify) {
      CatalogOptions options;
      if (v_max > order_cap())
        throw OrderCapError("--max " + std::to_string(v_max) + " exceeds the order cap " +
                            std::to_string(order_cap()));
      options.max_order = v_max;
      options.jobs = v_jobs;
      options.families = {v_families.begin(), v_families.end()};
      if (v_theorem != "all") {
        const auto id = parse_theorem_id(v_theorem);
        if (!id) throw UsageError("unknown theorem id '" + v_theorem + "'");
        options.theorems = {*id};
      }
      const auto reports = run_catalog(options);
      emit(v_report == "md" ? reports_to_markdown(reports) : reports_to_csv(reports), v_out);
      std::size_t disagreements = 0;
      for (const auto& r : reports) disagreements += r.disagreements();
      if (disagreements) std::cerr << disagreements << " disagreement rows\n";
      return disagreements ? kExitNo : 0;
    }
    if (*list) {
      CatalogOptions options;
      options.max_order = lc_max ? lc_max : order_cap();
      options.families = {lc_families.begin(), lc_families.end()};
      std::ostringstream out;
      for (const auto& e : select_catalog(options))
        out << to_string(e.spec) << '\t' << e.spec.order() << '\t' << e.family << '\n';
      emit(out.str(), "");
      return 0;
    }
  } catch (const OrderCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphFormatError& e) {
    std::cerr << "error: malformed graph file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

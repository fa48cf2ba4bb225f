#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plabic/bap.hpp"
#include "plabic/bridge.hpp"
#include "plabic/error.hpp"
#include "plabic/graph.hpp"
#include "plabic/io.hpp"
#include "plabic/matrix.hpp"
#include "plabic/measurement.hpp"
#include "plabic/necklace.hpp"
#include "plabic/plucker.hpp"

using namespace plabic;

namespace {

void print_subset(std::ostream& out, const KSubset& subset) {
  out << "{";
  bool first = true;
  for (int i : subset.elements()) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "}";
}

int run_validate(const std::string& path) {
  const PlabicGraph graph = read_graph_file(path);
  const std::vector<std::string> violations = validate(graph);
  if (violations.empty()) {
    std::cout << "valid\n";
    return 0;
  }
  for (const std::string& violation : violations) {
    std::cout << violation << "\n";
  }
  return 2;
}

int run_trips(const std::string& path) {
  const PlabicGraph graph = read_graph_file(path);
  require_valid(graph);
  for (const Trip& trip : trips(graph)) {
    if (trip.cycle) {
      std::cout << "cycle through " << trip.edges.size() << " edges\n";
    } else {
      std::cout << trip.start << " -> " << trip.end << "\n";
    }
  }
  return 0;
}

int run_reduced(const std::string& path) {
  const PlabicGraph graph = read_graph_file(path);
  const ReducednessReport report = is_reduced(graph);
  if (report.reduced) {
    std::cout << "reduced\n";
  } else {
    std::cout << "not reduced: " << report.violation << "\n";
  }
  return 0;
}

int run_perm(const std::string& path) {
  const PlabicGraph graph = read_graph_file(path);
  const BoundedAffinePermutation f = bap_from_graph(graph);
  std::cout << "f = " << f.to_string() << "\n";
  std::cout << "type (" << f.k() << ", " << f.n() << ")\n";
  const GrassmannNecklace necklace = necklace_from_bap(f);
  for (int a = 1; a <= f.n(); ++a) {
    std::cout << "I_" << a << " = ";
    print_subset(std::cout, necklace.term(a));
    std::cout << "\n";
  }
  const DualGrassmannNecklace dual = dual_necklace_from_bap(f);
  for (int a = 1; a <= f.n(); ++a) {
    std::cout << "J_" << a << " = ";
    print_subset(std::cout, dual.term(a));
    std::cout << "\n";
  }
  const Positroid matroid = positroid_from_necklace(necklace);
  std::cout << "positroid with " << matroid.members().size() << " bases:";
  for (const KSubset& basis : matroid.members()) {
    std::cout << " ";
    print_subset(std::cout, basis);
  }
  std::cout << "\n";
  return 0;
}

int run_measure(const std::string& path) {
  const FileKind kind = sniff_file(path);
  if (kind == FileKind::graph) {
    const PlabicGraph graph = read_graph_file(path);
    write_plucker(std::cout, boundary_measurement(graph));
  } else if (kind == FileKind::matrix) {
    write_plucker(std::cout, plucker_vector(read_matrix_file(path)));
  } else {
    throw ValidationError("measure needs a graph or matrix file");
  }
  return 0;
}

int run_symcheck(const std::string& path) {
  const FileKind kind = sniff_file(path);
  if (kind == FileKind::script) {
    const BridgeScript script = read_script_file(path);
    std::cout << "script symmetric: "
              << (is_symmetric_script(script) ? "yes" : "no") << "\n";
    return 0;
  }
  if (kind == FileKind::matrix) {
    const RationalMatrix matrix = read_matrix_file(path);
    std::cout << "cell symmetric: "
              << (is_symmetric_bap(bap_from_matrix(matrix)) ? "yes" : "no")
              << "\n";
    std::cout << "point symmetric: "
              << (is_symmetric_point(plucker_vector(matrix)) ? "yes" : "no")
              << "\n";
    return 0;
  }
  PlabicGraph graph = read_graph_file(path);
  require_valid(graph);
  const bool graph_symmetric = is_symmetric_graph(graph);
  std::cout << "graph symmetric: " << (graph_symmetric ? "yes" : "no") << "\n";
  if (graph_symmetric) {
    if (!graph.has_mirror()) ensure_symmetry(graph);
    std::cout << "weighting symmetric: "
              << (is_symmetric_weighting(graph) ? "yes" : "no") << "\n";
  }
  if (is_reduced(graph).reduced) {
    std::cout << "cell symmetric: "
              << (is_symmetric_bap(bap_from_graph(graph)) ? "yes" : "no")
              << "\n";
  }
  std::cout << "point symmetric: "
            << (is_symmetric_point(boundary_measurement(graph)) ? "yes" : "no")
            << "\n";
  return 0;
}

int run_decompose(const std::string& path, bool symmetric) {
  const RationalMatrix matrix = read_matrix_file(path);
  const Decomposition result =
      symmetric ? sym_decompose(matrix) : decompose(matrix);
  write_script(std::cout, result.script);
  for (const DecompositionStep& step : result.steps) {
    std::cout << "# removed " << (step.move.pair ? "pair " : "bridge ")
              << step.move.site << " weight "
              << format_rational(step.move.weight) << " -> "
              << step.bap_after.to_string() << "\n";
  }
  return 0;
}

int run_realize(const std::string& path, bool as_matrix) {
  const BridgeScript script = read_script_file(path);
  if (as_matrix) {
    write_matrix(std::cout, realize_matrix(script));
  } else {
    write_graph(std::cout, realize(script));
  }
  return 0;
}

int run_render(const std::string& path) {
  const PlabicGraph graph = read_graph_file(path);
  std::cout << to_dot(graph);
  return 0;
}

int run_enumerate(int k, int n, bool symmetric) {
  int count = 0;
  for (const BoundedAffinePermutation& f : enumerate_baps(k, n)) {
    if (symmetric && !is_symmetric_bap(f)) continue;
    std::cout << f.to_string() << "\n";
    ++count;
  }
  std::cout << count << " cells\n";
  return 0;
}

int run_verify_equivalence(int half) {
  if (half < 1) throw ValidationError("size must be positive");
  const int n = 2 * half;
  int checked = 0;
  int symmetric_count = 0;
  for (const BoundedAffinePermutation& f : enumerate_baps(half, n)) {
    ++checked;
    const bool sym_bap = is_symmetric_bap(f);
    const GrassmannNecklace necklace = necklace_from_bap(f);
    const bool sym_neck = is_symmetric_necklace(necklace);
    const bool sym_dual = is_symmetric_dual_necklace(dual_necklace_from_bap(f));
    const bool sym_pos = is_symmetric_positroid(positroid_from_necklace(necklace));
    if (sym_bap != sym_neck || sym_bap != sym_dual || sym_bap != sym_pos) {
      throw MathError("symmetry predicates disagree on " + f.to_string());
    }
    if (!sym_bap) continue;
    ++symmetric_count;
    const PlabicGraph graph = symmetric_graph_from_bap(f);
    if (!is_symmetric_graph(graph)) {
      throw MathError("built graph lost its symmetry on " + f.to_string());
    }
    if (!is_symmetric_point(boundary_measurement(graph))) {
      throw MathError("unit-weight point is not symmetric on " +
                      f.to_string());
    }
  }
  std::cout << "checked " << checked << " cells of Bd(" << half << ", " << n
            << "): symmetry notions agree, " << symmetric_count
            << " symmetric cells realized by symmetric graphs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for plabic graphs and positroid cells"};
  app.require_subcommand(1);

  std::string file;
  bool symmetric = false;
  bool as_matrix = false;
  int arg_k = 0;
  int arg_n = 0;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "List violated graph invariants");
  cmd_validate->add_option("file", file, "graph file")->required();

  CLI::App* cmd_trips =
      app.add_subcommand("trips", "Walk all trips by the rules of the road");
  cmd_trips->add_option("file", file, "graph file")->required();

  CLI::App* cmd_reduced =
      app.add_subcommand("reduced", "Decide reducedness");
  cmd_reduced->add_option("file", file, "graph file")->required();

  CLI::App* cmd_perm = app.add_subcommand(
      "perm", "Trip permutation, necklaces, and positroid of a reduced graph");
  cmd_perm->add_option("file", file, "graph file")->required();

  CLI::App* cmd_measure = app.add_subcommand(
      "measure", "Boundary measurement of a graph, or minors of a matrix");
  cmd_measure->add_option("file", file, "graph or matrix file")->required();

  CLI::App* cmd_symcheck = app.add_subcommand(
      "symcheck", "Reflection symmetry of a graph, matrix, or script");
  cmd_symcheck->add_option("file", file, "input file")->required();

  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "Recover a bridge script from a totally nonnegative point");
  cmd_decompose->add_option("file", file, "matrix file")->required();
  cmd_decompose->add_flag("--symmetric", symmetric,
                          "use center and pair moves only");

  CLI::App* cmd_realize =
      app.add_subcommand("realize", "Build the graph of a bridge script");
  cmd_realize->add_option("file", file, "script file")->required();
  cmd_realize->add_flag("--matrix", as_matrix,
                        "emit the row-echelon point instead");

  CLI::App* cmd_render =
      app.add_subcommand("render", "Emit Graphviz dot for a graph");
  cmd_render->add_option("file", file, "graph file")->required();

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate-bap", "List the bounded affine permutations of a type");
  cmd_enumerate->add_option("k", arg_k, "number of window values above n")
      ->required();
  cmd_enumerate->add_option("n", arg_n, "window size")->required();
  cmd_enumerate->add_flag("--symmetric", symmetric,
                          "reflection-symmetric cells only");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify-equivalence",
      "Exhaustively check that all symmetry notions agree on Bd(n, 2n)");
  cmd_verify->add_option("n", arg_n, "half the ambient size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error parse: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmd_validate->parsed()) return run_validate(file);
    if (cmd_trips->parsed()) return run_trips(file);
    if (cmd_reduced->parsed()) return run_reduced(file);
    if (cmd_perm->parsed()) return run_perm(file);
    if (cmd_measure->parsed()) return run_measure(file);
    if (cmd_symcheck->parsed()) return run_symcheck(file);
    if (cmd_decompose->parsed()) return run_decompose(file, symmetric);
    if (cmd_realize->parsed()) return run_realize(file, as_matrix);
    if (cmd_render->parsed()) return run_render(file);
    if (cmd_enumerate->parsed()) return run_enumerate(arg_k, arg_n, symmetric);
    if (cmd_verify->parsed()) return run_verify_equivalence(arg_n);
  } catch (const ParseError& e) {
    std::cerr << "error parse: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error validation: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error math: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

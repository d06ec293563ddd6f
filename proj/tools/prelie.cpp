// Command-line front end: tree enumeration, the blow-up differential, kernel
// bases, dimension tables and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prelie/bridge.hpp"
#include "prelie/freelie.hpp"
#include "prelie/parallel.hpp"
#include "prelie/verify.hpp"

namespace {

using nlohmann::json;
using namespace prelie;

struct CommonOptions {
  int alphabet = 0;  // 0 = multilinear
  std::string format = "plain";
  int threads = 0;  // 0 = default

  LabelMode mode() const {
    return alphabet == 0 ? LabelMode::multilinear() : LabelMode::alphabet(alphabet);
  }
  int thread_count() const { return threads > 0 ? threads : default_thread_count(); }
};

void add_format_flag(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

void add_threads_flag(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--threads", opts.threads, "Worker threads (never affects output bytes)")
      ->envname("PRELIE_THREADS")
      ->check(CLI::PositiveNumber);
}

void add_alphabet_flag(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--alphabet", opts.alphabet,
                  "Alphabet size m: labels from {1..m} with repetition (default multilinear)")
      ->check(CLI::PositiveNumber);
}

// One term of a vector as the fixed {"coefficient","tree"} schema.
json term_json(const Rational& coeff, const Tree& tree) {
  return json{{"coefficient", fraction_string(coeff)}, {"tree", render_tree(tree)}};
}

std::string render_tree_vector(const TreeVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [tree, coeff] : v) {
    Rational magnitude = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) out += plain_string(magnitude) + "*";
    out += render_tree(tree);
  }
  return out;
}

int cmd_enum(int n, bool special, const CommonOptions& opts) {
  std::vector<Tree> trees = special ? enumerate_special_trees(n, opts.mode())
                                    : enumerate_trees(n, opts.mode());
  if (opts.format == "json") {
    json out = json::array();
    for (const Tree& t : trees) out.push_back(render_tree(t));
    std::cout << out.dump() << "\n";
  } else {
    // plain and csv coincide: one canonical expression per line
    for (const Tree& t : trees) std::cout << render_tree(t) << "\n";
  }
  return 0;
}

int cmd_delta(const std::string& expr, const CommonOptions& opts) {
  Tree t = parse_tree(expr);
  TreeVector image = delta(t);
  if (opts.format == "json") {
    json out = json::array();
    for (const auto& [tree, coeff] : image) out.push_back(term_json(coeff, tree));
    std::cout << out.dump() << "\n";
  } else if (opts.format == "csv") {
    std::cout << "coefficient,tree\n";
    for (const auto& [tree, coeff] : image)
      std::cout << plain_string(coeff) << "," << render_tree(tree) << "\n";
  } else {
    for (const auto& [tree, coeff] : image)
      std::cout << plain_string(coeff) << " " << render_tree(tree) << "\n";
  }
  return 0;
}

int cmd_kernel(int n, int bound, const CommonOptions& opts) {
  if (n > bound)
    throw CLI::ValidationError("kernel", "n exceeds the extraction bound (raise --bound)");
  ComponentSpec spec{opts.mode(), n};
  SubspaceBasis<Tree> basis = lie_kernel_basis(spec, opts.thread_count());
  if (opts.format == "json") {
    json vectors = json::array();
    for (int i = 0; i < basis.dimension(); ++i) {
      json terms = json::array();
      for (const auto& [tree, coeff] : basis.vector_at(i)) terms.push_back(term_json(coeff, tree));
      vectors.push_back(std::move(terms));
    }
    std::cout << json{{"dimension", basis.dimension()}, {"basis", std::move(vectors)}}.dump()
              << "\n";
  } else if (opts.format == "csv") {
    std::cout << "vector,coefficient,tree\n";
    for (int i = 0; i < basis.dimension(); ++i)
      for (const auto& [tree, coeff] : basis.vector_at(i))
        std::cout << i << "," << plain_string(coeff) << "," << render_tree(tree) << "\n";
    std::cout << "dim = " << basis.dimension() << "\n";
  } else {
    for (int i = 0; i < basis.dimension(); ++i)
      std::cout << render_tree_vector(basis.vector_at(i)) << "\n";
    std::cout << "dim = " << basis.dimension() << "\n";
  }
  return 0;
}

int cmd_dims(int max_n, const CommonOptions& opts) {
  struct Row {
    int n;
    std::size_t trees;
    std::size_t special_trees;
    int rank;
    int kernel_dim;
    std::int64_t expected;
    bool match;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    ComponentSpec spec{opts.mode(), n};
    SparseMatrix<Tree, Tree> m = delta_matrix(spec, opts.thread_count());
    int r = rank(m, opts.thread_count());
    int kernel_dim = m.col_count() - r;
    std::int64_t expected;
    if (opts.mode().is_multilinear()) {
      expected = 1;
      for (int i = 2; i < n; ++i) expected *= i;
    } else {
      expected = witt_dimension(opts.mode().alphabet_size, n);
    }
    rows.push_back({n, m.col_keys.size(), m.row_keys.size(), r, kernel_dim, expected,
                    kernel_dim == expected});
  }
  if (opts.format == "json") {
    json out = json::array();
    for (const Row& row : rows)
      out.push_back(json{{"n", row.n},
                         {"trees", row.trees},
                         {"special_trees", row.special_trees},
                         {"rank", row.rank},
                         {"kernel_dim", row.kernel_dim},
                         {"expected", row.expected},
                         {"match", row.match}});
    std::cout << out.dump() << "\n";
  } else {
    const char* sep = opts.format == "csv" ? "," : "\t";
    std::cout << "n" << sep << "trees" << sep << "special_trees" << sep << "rank" << sep
              << "kernel_dim" << sep << "expected" << sep << "match\n";
    for (const Row& row : rows)
      std::cout << row.n << sep << row.trees << sep << row.special_trees << sep << row.rank << sep
                << row.kernel_dim << sep << row.expected << sep << (row.match ? "ok" : "MISMATCH")
                << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, const CommonOptions& opts) {
  std::vector<SuiteResult> results = run_verification(suite, max_n, opts.thread_count());
  std::cout << format_report(results);
  for (const SuiteResult& r : results)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free pre-Lie algebras on rooted trees: the blow-up differential and its kernel"};
  app.require_subcommand(1);

  CommonOptions opts;

  // trees enum
  CLI::App* trees = app.add_subcommand("trees", "Tree enumeration");
  trees->require_subcommand(1);
  CLI::App* enum_cmd = trees->add_subcommand("enum", "List canonical trees, one per line");
  int enum_n = 1;
  bool enum_special = false;
  enum_cmd->add_option("--n", enum_n, "Vertex count (ordinary vertices with --special)")
      ->required()
      ->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--special", enum_special, "Enumerate degree-1 trees instead");
  add_alphabet_flag(enum_cmd, opts);
  add_format_flag(enum_cmd, opts);

  // delta
  CLI::App* delta_cmd = app.add_subcommand("delta", "Apply the blow-up differential to a tree");
  std::string delta_expr;
  delta_cmd->add_option("expression", delta_expr, "Degree-0 tree expression, e.g. \"1(2,3)\"")
      ->required();
  add_format_flag(delta_cmd, opts);

  // kernel
  CLI::App* kernel_cmd = app.add_subcommand("kernel", "Reduced basis of ker(delta) = Lie elements");
  int kernel_n = 1;
  int kernel_bound = 6;
  kernel_cmd->add_option("--n", kernel_n, "Component size")->required()->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--bound", kernel_bound, "Kernel extraction bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_alphabet_flag(kernel_cmd, opts);
  add_format_flag(kernel_cmd, opts);
  add_threads_flag(kernel_cmd, opts);

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  std::string verify_suite;
  int verify_max_n = 4;
  verify_cmd->add_option("suite", verify_suite, "all|square|leibniz|prelie|oracle")
      ->required()
      ->check(CLI::IsMember({"all", "square", "leibniz", "prelie", "oracle"}));
  verify_cmd->add_option("--max-n", verify_max_n, "Largest component size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_threads_flag(verify_cmd, opts);

  // dims
  CLI::App* dims_cmd = app.add_subcommand("dims", "Dimension table per component");
  int dims_max_n = 4;
  dims_cmd->add_option("--max-n", dims_max_n, "Largest component size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_alphabet_flag(dims_cmd, opts);
  add_format_flag(dims_cmd, opts);
  add_threads_flag(dims_cmd, opts);

  try {
    app.parse(argc, argv);
    if (enum_cmd->parsed()) return cmd_enum(enum_n, enum_special, opts);
    if (delta_cmd->parsed()) return cmd_delta(delta_expr, opts);
    if (kernel_cmd->parsed()) return cmd_kernel(kernel_n, kernel_bound, opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_max_n, opts);
    if (dims_cmd->parsed()) return cmd_dims(dims_max_n, opts);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

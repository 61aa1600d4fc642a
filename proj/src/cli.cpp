#include "torfib/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "torfib/criteria.hpp"
#include "torfib/datasets.hpp"
#include "torfib/error.hpp"
#include "torfib/graver.hpp"
#include "torfib/intlin.hpp"
#include "torfib/product.hpp"
#include "torfib/veronese.hpp"

namespace torfib {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrix files

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), line_no, start + 1});
  }
  return out;
}

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_of(const Token& t) {
  if (!is_integer_token(t.text)) throw ParseError("expected an integer, found '" + t.text + "'", t.line, t.column);
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

std::size_t count_of(const Token& t, const std::string& what) {
  if (!is_integer_token(t.text) || t.text[0] == '-' || t.text[0] == '+')
    throw ParseError("expected a non-negative " + what + ", found '" + t.text + "'", t.line, t.column);
  Integer v(t.text);
  if (!v.fits_ulong_p()) throw ParseError(what + " is too large", t.line, t.column);
  return v.get_ui();
}

}  // namespace

BlockedConfiguration parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false, have_blocks = false;
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> entries;
  std::vector<std::size_t> blocks;
  std::size_t last_line = 0, last_column = 1;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line, line_no);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;
    last_line = line_no;
    last_column = line.size() + 1;

    if (!have_header) {
      if (tokens.size() != 2)
        throw ParseError("malformed header: expected 'rows cols'", line_no, tokens.size() > 2 ? tokens[2].column : 1);
      rows = count_of(tokens[0], "row count");
      cols = count_of(tokens[1], "column count");
      have_header = true;
      continue;
    }
    if (have_blocks) throw ParseError("unexpected content after the blocks line", line_no, tokens[0].column);

    if (tokens[0].text.rfind("blocks:", 0) == 0) {
      if (entries.size() != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                             std::to_string(entries.size()),
                         line_no, tokens[0].column);
      std::vector<Token> values(tokens.begin() + 1, tokens.end());
      if (tokens[0].text.size() > 7)
        values.insert(values.begin(), {tokens[0].text.substr(7), line_no, tokens[0].column + 7});
      std::size_t sum = 0;
      for (const auto& t : values) {
        blocks.push_back(count_of(t, "block size"));
        sum += blocks.back();
      }
      if (sum != cols)
        throw ParseError("block sizes sum to " + std::to_string(sum) + " but the matrix has " + std::to_string(cols) +
                             " columns",
                         line_no, tokens[0].column);
      have_blocks = true;
      continue;
    }

    for (const auto& t : tokens) {
      if (entries.size() == rows * cols)
        throw ParseError("unexpected extra entry '" + t.text + "'; the header announces " +
                             std::to_string(rows * cols) + " entries",
                         t.line, t.column);
      entries.push_back(integer_of(t));
    }
  }

  if (!have_header) throw ParseError("missing header 'rows cols'", line_no + 1, 1);
  if (entries.size() != rows * cols)
    throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(entries.size()),
                     last_line, last_column);

  IntegerMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = entries[i * cols + j];
  if (!have_blocks) return BlockedConfiguration::singletons(std::move(M));
  return BlockedConfiguration(std::move(M), std::move(blocks));
}

BlockedConfiguration parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string serialize_matrix(const BlockedConfiguration& config) {
  std::ostringstream os;
  os << config.rows() << ' ' << config.cols() << '\n' << to_string(config.matrix());
  if (!config.all_singletons()) {
    os << "blocks:";
    for (std::size_t d : config.block_sizes()) os << ' ' << d;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Formatting helpers

namespace {

Json json_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json json_vector(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json json_matrix(const IntegerMatrix& M) {
  Json a = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(json_vector(M.row(i)));
  return a;
}

Json json_sequence(const std::vector<std::size_t>& s) {
  Json a = Json::array();
  for (std::size_t x : s) a.push_back(x + 1);
  return a;
}

Json json_config(const BlockedConfiguration& C) {
  return Json{{"rows", C.rows()}, {"cols", C.cols()}, {"matrix", json_matrix(C.matrix())},
              {"blocks", C.block_sizes()}};
}

template <class T>
Json json_optional(const std::optional<T>& v) {
  return v ? json_vector(*v) : Json(nullptr);
}

std::string sequence_string(const std::vector<std::size_t>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i] + 1);
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tag_string(const GraverTag& t) {
  std::string s = "g=" + to_string(t.g) + " beta=" + sequence_string(t.beta);
  if (t.g_bottom != t.g) s += " g'=" + to_string(t.g_bottom);
  return s + " gamma=" + sequence_string(t.gamma);
}

Json json_tag(const ColumnTag& tag) {
  if (const auto* s = std::get_if<SimpleTag>(&tag))
    return Json{{"kind", "simple"}, {"alpha", s->alpha + 1}, {"beta", s->beta + 1}, {"gamma", s->gamma + 1}};
  const auto& g = std::get<GraverTag>(tag);
  return Json{{"kind", "graver"},
              {"block", g.block + 1},
              {"g", json_vector(g.g)},
              {"alpha", json_sequence(positive_support_sequence(g.g))},
              {"beta", json_sequence(g.beta)},
              {"g_bottom", json_vector(g.g_bottom)},
              {"alpha_prime", json_sequence(negative_support_sequence(g.g_bottom))},
              {"gamma", json_sequence(g.gamma)}};
}

Json json_product(const ProductConfiguration& P) {
  Json tags = Json::array();
  for (const auto& t : P.column_index) tags.push_back(json_tag(t));
  return Json{{"rows", P.matrix.rows()},   {"cols", P.cols()},        {"top_rows", P.top_rows},
              {"simple_count", P.simple_count}, {"block_sizes", P.block_sizes}, {"matrix", json_matrix(P.matrix)},
              {"columns", tags}};
}

Json json_graver(const GraverBasis& G) {
  Json a = Json::array();
  for (const auto& g : G.elements) a.push_back(json_vector(g));
  return a;
}

void print_graver(std::ostream& out, const GraverBasis& G) {
  for (std::size_t i = 0; i < G.elements.size(); i += 2) out << "±" << to_string(G.elements[i]) << '\n';
}

std::string graver_summary(const GraverBasis& G) {
  std::string s;
  for (std::size_t i = 0; i < G.elements.size(); i += 2) s += (i ? ", " : "") + std::string("±") + to_string(G.elements[i]);
  return s.empty() ? "(empty)" : s;
}

Json json_verdict(const ColumnVerdict& v) {
  return Json{{"tag", json_tag(v.column_tag)},
              {"column", json_vector(v.column)},
              {"redundant", v.redundant},
              {"integral", v.integral},
              {"in_fraction_field", v.in_fraction_field},
              {"redundant_witness", json_optional(v.redundant_witness)},
              {"integral_witness", json_optional(v.integral_witness)},
              {"fraction_witness", json_optional(v.fraction_witness)}};
}

Json json_report(const ProductReport& R) {
  Json verdicts = Json::array();
  for (const auto& v : R.verdicts) verdicts.push_back(json_verdict(v));
  return Json{{"verdicts", verdicts},
              {"all_redundant", R.all_redundant},
              {"dense", R.dense},
              {"finite", R.finite},
              {"tfp_normal", R.tfp_normal ? Json(*R.tfp_normal) : Json(nullptr)},
              {"segre_equals_tfp", R.segre_equals_tfp},
              {"normalization_equals_segre", R.normalization_equals_segre}};
}

void print_verdicts(std::ostream& out, const ProductReport& R) {
  for (const auto& v : R.verdicts)
    out << "  " << tag_string(v.column_tag) << ": redundant=" << yes_no(v.redundant)
        << " integral=" << yes_no(v.integral) << " fraction_field=" << yes_no(v.in_fraction_field) << '\n';
}

void print_aggregates(std::ostream& out, const ProductReport& R) {
  if (R.tfp_normal) out << "fiber product normal: " << yes_no(*R.tfp_normal) << '\n';
  out << "all Graver columns redundant: " << yes_no(R.all_redundant) << '\n'
      << "dense (every Graver column in the fraction field): " << yes_no(R.dense) << '\n'
      << "finite (every Graver column integral): " << yes_no(R.finite) << '\n'
      << "Segre product equals fiber product: " << yes_no(R.segre_equals_tfp) << '\n';
  if (R.normalization_equals_segre) out << "normalization of the fiber product equals the Segre product\n";
}

Json json_normality(const NormalityResult& N) {
  return Json{{"normal", N.normal}, {"hole", json_optional(N.hole)}};
}

std::string normality_string(const NormalityResult& N) {
  return N.normal ? "yes" : "no (hole " + to_string(*N.hole) + ")";
}

// ---------------------------------------------------------------------------
// Commands

struct Context {
  const JobSpec& job;
  std::ostream& out;
  std::vector<BlockedConfiguration> inputs;
  Json result = Json::object();
};

void expect_inputs(const JobSpec& job, std::size_t n, const std::string& usage) {
  if (job.inputs.size() != n)
    throw UsageError("'" + job.command + "' expects " + usage + ", got " + std::to_string(job.inputs.size()) +
                     " argument(s)");
}

std::size_t fiber_bound(const JobSpec& job) {
  std::string text;
  if (auto it = job.options.find("fiber-bound"); it != job.options.end())
    text = it->second;
  else if (const char* env = std::getenv("TORFIB_FIBER_BOUND"))
    text = env;
  if (text.empty()) return 10000;
  if (!is_integer_token(text) || text[0] == '-') throw UsageError("invalid fiber bound '" + text + "'");
  return std::stoul(text);
}

SegreOptions segre_options(const JobSpec& job, bool prune_by_default) {
  SegreOptions o;
  o.merge_duplicates = job.flag("merge-duplicates");
  o.drop_redundant_sequences = prune_by_default && !job.flag("full");
  return o;
}

void cmd_kernel(Context& c) {
  const auto& A = c.inputs[0];
  LatticeBasis K = integer_kernel(A.matrix());
  c.out << "codimension: " << K.rank() << '\n';
  Json basis = Json::array();
  for (const auto& v : K.basis()) {
    c.out << to_string(v) << '\n';
    basis.push_back(json_vector(v));
  }
  c.result = Json{{"codimension", K.rank()}, {"basis", basis}};
}

void cmd_graver(Context& c) {
  GraverBasis G = graver_basis(c.inputs[0]);
  print_graver(c.out, G);
  c.result = Json{{"size", G.elements.size()}, {"elements", json_graver(G)}};
}

void cmd_star(Context& c) {
  auto w = total_degree_functional(c.inputs[0]);
  c.out << "condition (*): " << yes_no(w.has_value()) << '\n';
  if (w) c.out << "functional: " << to_string(*w) << '\n';
  c.result = Json{{"condition_star", w.has_value()}, {"functional", json_optional(w)}};
}

void cmd_tfp(Context& c) {
  ProductConfiguration P = tfp_config(c.inputs[0], c.inputs[1], c.inputs[2]);
  c.out << serialize_matrix(P.blocked());
  c.result = json_product(P);
}

void cmd_segre(Context& c) {
  SegrePresentation P = segre_presentation(c.inputs[0], c.inputs[1], c.inputs[2], segre_options(c.job, true));
  c.out << "# A'\n"
        << serialize_matrix(P.A_prime) << "# B'\n"
        << serialize_matrix(P.B_prime) << "# C'\n"
        << serialize_matrix(P.C_prime) << "# product (" << P.product.simple_count << " simple, "
        << P.product.cols() - P.product.simple_count << " Graver columns)\n"
        << serialize_matrix(P.product.blocked());
  c.result = Json{{"A_prime", json_config(P.A_prime)},
                  {"B_prime", json_config(P.B_prime)},
                  {"C_prime", json_config(P.C_prime)},
                  {"graver_basis", json_graver(P.graver)},
                  {"product", json_product(P.product)}};
}

void cmd_criteria(Context& c) {
  SegrePresentation P = segre_presentation(c.inputs[0], c.inputs[1], c.inputs[2], segre_options(c.job, false));
  AnalyzeOptions options;
  options.check_tfp_normal = c.job.flag("normal");
  ProductReport R = analyze_product(P, options);
  c.out << "Graver basis of A: " << graver_summary(P.graver) << '\n'
        << "simple columns: " << P.product.simple_count << '\n'
        << "Graver columns: " << R.verdicts.size() << '\n';
  print_verdicts(c.out, R);
  print_aggregates(c.out, R);
  c.result = json_report(R);
}

void cmd_normal(Context& c) {
  NormalityResult N = is_normal(c.inputs[0].matrix());
  c.out << "normal: " << normality_string(N) << '\n';
  c.result = json_normality(N);
}

std::size_t positive_count(const std::string& text, const std::string& what) {
  if (!is_integer_token(text) || text[0] == '-' || text[0] == '+')
    throw UsageError("invalid " + what + " '" + text + "'");
  return std::stoul(text);
}

// "1,2/3" -> {{0,1},{2}}
PartitionGrading parse_partition(const std::string& text, std::size_t n1) {
  std::vector<std::vector<std::size_t>> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '/')) {
    std::vector<std::size_t> members;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      std::size_t x = positive_count(item, "partition element");
      if (x == 0) throw UsageError("partition elements are 1-based");
      members.push_back(x - 1);
    }
    parts.push_back(std::move(members));
  }
  return PartitionGrading(n1, std::move(parts));
}

void cmd_veronese(Context& c) {
  const JobSpec& job = c.job;
  expect_inputs(job, 2, "k n");
  std::size_t k = positive_count(job.inputs[0], "degree k");
  std::size_t n = positive_count(job.inputs[1], "variable count n");
  if (auto it = job.options.find("partition"); it != job.options.end()) {
    PartitionedVeronese pv = partition_blocked_config(k, parse_partition(it->second, n));
    c.out << "# A\n" << serialize_matrix(pv.A) << "# B\n" << serialize_matrix(pv.B);
    c.result = Json{{"k", k}, {"n1", n}, {"n0", pv.grading.n0()}, {"A", json_config(pv.A)}, {"B", json_config(pv.B)}};
    return;
  }
  VeroneseConfiguration V = veronese_config(k, n);
  c.out << serialize_matrix(V.config);
  c.result = Json{{"k", k}, {"n", n}, {"config", json_config(V.config)}};
}

// Sums of at most `steps` columns of A, in a deterministic order.
std::vector<IntVector> reachable_degrees(const BlockedConfiguration& A, std::size_t steps) {
  std::set<IntVector> seen{zero_vector(A.rows())};
  std::vector<IntVector> frontier{zero_vector(A.rows())};
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<IntVector> next;
    for (const auto& p : frontier)
      for (std::size_t j = 0; j < A.cols(); ++j) {
        IntVector q = p + A.column(j);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void cmd_neutral(Context& c) {
  const auto& A = c.inputs[0];
  const auto& C = c.inputs[1];
  const std::size_t bound = fiber_bound(c.job);
  std::size_t steps = 2;
  if (auto it = c.job.options.find("steps"); it != c.job.options.end()) steps = positive_count(it->second, "step count");

  bool neutral = check_neutral_tfp(A, C);
  c.out << "fiber product with the neutral configuration reproduces C: " << yes_no(neutral) << '\n';

  GradingCertificate identity{to_rational(IntegerMatrix::identity(A.rows())), A};
  GradingCertificate cert_C = require_homogeneity(A, C, "C");
  SegrePresentation S = segre_presentation(A, A, C);
  GradingCertificate cert_S = product_grading(S);
  BlockedConfiguration S_config = S.product.blocked();

  Json fibers = Json::array();
  bool all_one = true, all_equal = true;
  for (const auto& a : reachable_degrees(A, steps)) {
    std::size_t n_A = degree_fiber_count(A, identity, a, bound);
    std::size_t n_C = degree_fiber_count(C, cert_C, a, bound);
    std::size_t n_S = degree_fiber_count(S_config, cert_S, a, bound);
    all_one = all_one && n_A == 1;
    all_equal = all_equal && n_S == n_C;
    c.out << "  degree " << to_string(a) << ": neutral " << n_A << ", C " << n_C << ", Segre " << n_S << '\n';
    fibers.push_back(Json{{"degree", json_vector(a)}, {"neutral", n_A}, {"C", n_C}, {"segre", n_S}});
  }
  c.out << "neutral fibers are single points: " << yes_no(all_one) << '\n'
        << "Segre fibers match C: " << yes_no(all_equal) << '\n';
  c.result = Json{{"neutral_tfp", neutral},
                  {"fiber_bound", bound},
                  {"steps", steps},
                  {"fibers", fibers},
                  {"neutral_fibers_trivial", all_one},
                  {"segre_fibers_match", all_equal}};
}

Json reproduce_non_normal(std::ostream& out) {
  Dataset d = non_normal_product();
  LatticeBasis K = integer_kernel(d.A.matrix());
  SegrePresentation P = segre_presentation(d.A, d.B, d.C);
  AnalyzeOptions options;
  options.check_tfp_normal = true;
  ProductReport R = analyze_product(P, options);
  NormalityResult nB = is_normal(d.B.matrix());
  NormalityResult nC = is_normal(d.C.matrix());
  NormalityResult nP = is_normal(P.product.simple_matrix());

  out << "== " << d.name << " ==\n";
  out << "kernel of A:";
  for (const auto& v : K.basis()) out << ' ' << to_string(v);
  out << "\nGraver basis of A: " << graver_summary(P.graver) << '\n'
      << "B normal: " << normality_string(nB) << '\n'
      << "C normal: " << normality_string(nC) << '\n'
      << "simple columns: " << P.product.simple_count << '\n'
      << "Graver columns: " << R.verdicts.size() << '\n';
  print_verdicts(out, R);
  out << "fiber product normal: " << normality_string(nP) << '\n';
  ProductReport shown = R;
  shown.tfp_normal.reset();
  print_aggregates(out, shown);

  Json kernel = Json::array();
  for (const auto& v : K.basis()) kernel.push_back(json_vector(v));
  return Json{{"dataset", d.name},
              {"A", json_config(d.A)},
              {"B", json_config(d.B)},
              {"C", json_config(d.C)},
              {"kernel", kernel},
              {"graver_basis", json_graver(P.graver)},
              {"B_normal", json_normality(nB)},
              {"C_normal", json_normality(nC)},
              {"tfp_normal", json_normality(nP)},
              {"presentation", json_product(P.product)},
              {"report", json_report(R)}};
}

Json reproduce_hierarchical(std::ostream& out) {
  Dataset d = hierarchical_model();
  SegrePresentation P = segre_presentation(d.A, d.B, d.C);
  ProductReport R = analyze_product(P);
  SegrePresentation pruned = segre_presentation(d.A, d.B, d.C, {false, true});
  SegrePresentation merged = segre_presentation(d.A, d.B, d.C, {true, true});

  std::size_t essential = 0;
  for (const auto& v : R.verdicts) essential += !v.redundant;

  out << "== " << d.name << " ==\n"
      << "Graver basis of A: " << graver_summary(P.graver) << '\n'
      << "simple columns: " << P.product.simple_count << '\n'
      << "Graver columns: " << R.verdicts.size() << '\n'
      << "non-redundant Graver columns: " << essential << '\n';
  for (const auto& v : R.verdicts)
    if (!v.redundant)
      out << "  " << tag_string(v.column_tag) << ": integral=" << yes_no(v.integral)
          << " fraction_field=" << yes_no(v.in_fraction_field) << '\n';
  print_aggregates(out, R);
  out << "presentation keeping +g and -g apart: " << pruned.product.cols() << " columns\n"
      << "presentation merging equal extra columns: " << merged.product.cols() << " columns\n"
      << "product matrix (" << pruned.product.matrix.rows() << " x " << pruned.product.cols() << "):\n"
      << to_string(pruned.product.matrix);

  return Json{{"dataset", d.name},
              {"A", json_config(d.A)},
              {"B", json_config(d.B)},
              {"C", json_config(d.C)},
              {"graver_basis", json_graver(P.graver)},
              {"report", json_report(R)},
              {"non_redundant", essential},
              {"pruned", Json{{"A_prime", json_config(pruned.A_prime)},
                              {"B_prime", json_config(pruned.B_prime)},
                              {"C_prime", json_config(pruned.C_prime)},
                              {"product", json_product(pruned.product)}}},
              {"merged", Json{{"A_prime", json_config(merged.A_prime)},
                              {"B_prime", json_config(merged.B_prime)},
                              {"C_prime", json_config(merged.C_prime)},
                              {"product", json_product(merged.product)}}}};
}

void cmd_reproduce(Context& c) {
  expect_inputs(c.job, 1, "an example name (nonnormal or hierarchical)");
  const std::string& which = c.job.inputs[0];
  if (which == "nonnormal")
    c.result = reproduce_non_normal(c.out);
  else if (which == "hierarchical")
    c.result = reproduce_hierarchical(c.out);
  else
    throw UsageError("unknown example '" + which + "'; use nonnormal or hierarchical");
}

struct CommandInfo {
  std::size_t files;  // matrix files read before running; 0 for literal arguments
  std::string usage;
  std::function<void(Context&)> handler;
};

const std::map<std::string, CommandInfo>& commands() {
  static const std::map<std::string, CommandInfo> table = {
      {"kernel", {1, "A", cmd_kernel}},
      {"graver", {1, "A", cmd_graver}},
      {"star", {1, "A", cmd_star}},
      {"tfp", {3, "A B C", cmd_tfp}},
      {"segre", {3, "A B C", cmd_segre}},
      {"criteria", {3, "A B C", cmd_criteria}},
      {"normal", {1, "D", cmd_normal}},
      {"veronese", {0, "k n", cmd_veronese}},
      {"neutral", {2, "A C", cmd_neutral}},
      {"reproduce", {0, "nonnormal|hierarchical", cmd_reproduce}},
  };
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch

JobSpec parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Graver bases, toric fiber products and Segre products of integer configurations", "torfib"};
  app.require_subcommand(1);

  JobSpec job;
  std::string json_path, partition, fiber, steps;
  bool merge = false, full = false, normal = false;

  for (const auto& [name, info] : commands()) {
    CLI::App* sub = app.add_subcommand(name, info.usage);
    sub->add_option("inputs", job.inputs, info.usage)->required();
    sub->add_option("--json", json_path, "Also write the result as JSON to this path ('-' for stdout only)");
    if (name == "segre" || name == "criteria") sub->add_flag("--merge-duplicates", merge, "One A' column per distinct a^g");
    if (name == "segre") sub->add_flag("--full", full, "Keep index sequences whose Graver columns are all redundant");
    if (name == "criteria") sub->add_flag("--normal", normal, "Also decide normality of the fiber product");
    if (name == "veronese") sub->add_option("--partition", partition, "Parts of {1..n}, e.g. 1,2/3");
    if (name == "neutral") {
      sub->add_option("--fiber-bound", fiber, "Cap on generator applications per fiber (default 10000)");
      sub->add_option("--steps", steps, "Test degrees reachable in at most this many steps (default 2)");
    }
    sub->callback([&job, name = name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    job.command = "help";
    job.options["help"] = app.help();
    return job;
  } catch (const CLI::CallForAllHelp&) {
    job.command = "help";
    job.options["help"] = app.help("", CLI::AppFormatMode::All);
    return job;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!json_path.empty()) job.options["json"] = json_path;
  if (!partition.empty()) job.options["partition"] = partition;
  if (!fiber.empty()) job.options["fiber-bound"] = fiber;
  if (!steps.empty()) job.options["steps"] = steps;
  if (merge) job.options["merge-duplicates"] = "true";
  if (full) job.options["full"] = "true";
  if (normal) job.options["normal"] = "true";
  return job;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.command == "help") {
    out << job.options.at("help");
    return 0;
  }
  try {
    auto it = commands().find(job.command);
    if (it == commands().end()) throw UsageError("unknown command '" + job.command + "'");
    const CommandInfo& info = it->second;

    const auto json_it = job.options.find("json");
    const bool json_stdout = json_it != job.options.end() && json_it->second == "-";
    std::ostringstream discard;
    Context c{job, json_stdout ? discard : out, {}};

    // Every input file parses before any computation starts.
    if (info.files > 0) {
      expect_inputs(job, info.files, info.usage);
      for (const auto& path : job.inputs) c.inputs.push_back(parse_matrix_file(path));
    }
    info.handler(c);

    if (json_it != job.options.end()) {
      Json doc = Json{{"command", job.command}, {"result", c.result}};
      if (json_stdout) {
        out << doc.dump(2) << '\n';
      } else {
        std::ofstream f(json_it->second);
        if (!f) throw Error("cannot write '" + json_it->second + "'");
        f << doc.dump(2) << '\n';
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "torfib: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "torfib: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "torfib: " << e.what() << '\n';
    return 1;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec job;
  try {
    job = parse_command_line(argc, argv);
  } catch (const UsageError& e) {
    err << "torfib: " << e.what() << '\n';
    return 2;
  }
  return run(job, out, err);
}

}  // namespace torfib

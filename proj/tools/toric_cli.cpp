// toric: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error or
// infeasible program, 3 non-generic weight, 4 resource limit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/all.hpp"

using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct Globals {
  bool json = false;
  bool pretty = false;
  std::size_t max_fiber = kDefaultFiberLimit;
  std::size_t max_graver = 22;
  Int max_degree = 0;
  std::size_t max_elements = 0;
  unsigned threads = 1;

  Limits limits() const { return {max_elements, max_degree}; }
  UniversalOptions universal() const { return {max_graver, threads, limits()}; }
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch: return 1;
    case ErrorKind::NonGenericOmega: return 3;
    case ErrorKind::LimitExceeded:
    case ErrorKind::Overflow: return 4;
    default: return 2;
  }
}

IntMatrix load_matrix(const std::string& path) {
  if (path == "-") return io::read_matrix(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, path + ": cannot open");
  return io::read_matrix(in, path);
}

RationalVector load_weight(const std::string& inline_weight, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) fail(ErrorKind::Parse, file + ": cannot open");
    return io::read_weight(in, file);
  }
  return io::parse_rational_list(inline_weight, "--weight");
}

/// Writes to the -o file when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(ErrorKind::Parse, path + ": cannot write");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json to_json(std::span<const Int> v) { return json(std::vector<Int>(v.begin(), v.end())); }

json to_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

json to_json(const RationalVector& w) {
  json a = json::array();
  for (const auto& q : w) a.push_back(q.get_str());
  return a;
}

std::string binomial_string(std::span<const Int> v) {
  return MonomialIdeal::monomial_string(positive_part(v)) + " - " + MonomialIdeal::monomial_string(negative_part(v));
}

void emit_vectors(std::ostream& out, const Globals& g, std::size_t cols, const std::vector<IntVec>& vs) {
  if (g.pretty) {
    for (const auto& v : vs) out << binomial_string(v) << '\n';
    return;
  }
  io::write_vector_list(out, cols, vs);
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Int max_degree(const ConfigMatrix& A, const std::vector<IntVec>& vs) {
  Int m = 0;
  for (const auto& v : vs) m = std::max(m, A.degree(v));
  return m;
}

// ---- subcommands ----

struct GroebnerArgs {
  std::string matrix, weight, weight_file, tiebreak = "degrevlex", out;
};

int cmd_groebner(const Globals& g, const GroebnerArgs& a) {
  ConfigMatrix A(load_matrix(a.matrix));
  A.require_pointed();
  RationalVector w;
  if (a.weight.empty() && a.weight_file.empty()) w = to_rational(*A.grading());
  else w = load_weight(a.weight, a.weight_file);
  TermOrder ord = A.order(w, parse_tiebreak(a.tiebreak));
  GroebnerBasis G = groebner_basis(A, ord, g.limits());
  std::vector<IntVec> vs = G.vectors();
  Output out(a.out);
  if (g.json) {
    json j;
    j["command"] = "groebner";
    j["columns"] = A.n();
    j["order"] = {{"weight", to_json(w)}, {"tiebreak", to_string(ord.tiebreak)}};
    j["count"] = vs.size();
    j["max_degree"] = max_degree(A, vs);
    j["vectors"] = to_json(vs);
    j["initial_ideal"] = to_json(initial_ideal(G).generators());
    emit_json(out.stream(), j);
  } else {
    emit_vectors(out.stream(), g, A.n(), vs);
  }
  return 0;
}

struct ListArgs {
  std::string matrix, out;
};

int cmd_graver(const Globals& g, const ListArgs& a) {
  ConfigMatrix A(load_matrix(a.matrix));
  std::vector<IntVec> vs = graver(A, g.limits());
  Output out(a.out);
  if (g.json) {
    json j;
    j["command"] = "graver";
    j["columns"] = A.n();
    j["count"] = vs.size();
    j["max_degree"] = max_degree(A, vs);
    j["vectors"] = to_json(vs);
    emit_json(out.stream(), j);
  } else {
    emit_vectors(out.stream(), g, A.n(), vs);
  }
  return 0;
}

int cmd_circuits(const Globals& g, const ListArgs& a) {
  ConfigMatrix A(load_matrix(a.matrix));
  std::vector<Circuit> cs = circuits(A);
  std::vector<IntVec> vs;
  for (const auto& c : cs) vs.push_back(c.vector);
  Output out(a.out);
  if (g.json) {
    json j;
    j["command"] = "circuits";
    j["columns"] = A.n();
    j["count"] = cs.size();
    j["vectors"] = to_json(vs);
    json details = json::array();
    for (const auto& c : cs) {
      json e;
      e["vector"] = to_json(c.vector);
      e["index"] = c.index.get_str();
      if (A.pointed()) {
        e["degree"] = A.degree(c.vector);
        e["true_degree"] = true_degree(c, A).get_str();
      }
      details.push_back(e);
    }
    j["circuits"] = details;
    emit_json(out.stream(), j);
  } else {
    emit_vectors(out.stream(), g, A.n(), vs);
  }
  return 0;
}

int cmd_universal(const Globals& g, const ListArgs& a) {
  ConfigMatrix A(load_matrix(a.matrix));
  UniversalResult u = universal_gb(A, g.universal());
  Output out(a.out);
  if (g.json) {
    json j;
    j["command"] = "universal";
    j["columns"] = A.n();
    j["count"] = u.ugb.size();
    j["vectors"] = to_json(u.ugb);
    j["initial_ideal_count"] = u.initial_ideals.size();
    json ideals = json::array();
    for (std::size_t k = 0; k < u.initial_ideals.size(); ++k)
      ideals.push_back({{"generators", to_json(u.initial_ideals[k].generators())},
                        {"witness", to_json(u.witnesses[k])}});
    j["initial_ideals"] = ideals;
    emit_json(out.stream(), j);
  } else {
    out.stream() << "# initial ideals: " << u.initial_ideals.size() << '\n';
    emit_vectors(out.stream(), g, A.n(), u.ugb);
  }
  return 0;
}

struct SolveArgs {
  std::string matrix, weight, weight_file, rhs, method = "reduce", tiebreak = "degrevlex";
};

int cmd_solve(const Globals& g, const SolveArgs& a) {
  IPInstance inst(ConfigMatrix(load_matrix(a.matrix)), load_weight(a.weight, a.weight_file),
                  io::parse_integer_list(a.rhs, "--rhs"), parse_tiebreak(a.tiebreak));
  std::optional<Exponents> x;
  if (a.method == "reduce") {
    inst.A.require_pointed();
    auto start = feasible_point(inst.A, inst.b);
    if (start) x = normal_form(*start, groebner_basis(inst.A, inst.order(), g.limits()));
  } else if (a.method == "eliminate") {
    x = solve_ip_elimination(inst);
  } else if (a.method == "enumerate") {
    TermOrder ord = inst.order();
    for (const auto& p : fiber(inst.A, inst.b, g.max_fiber))
      if (!x || ord.compare(p, *x) == Ordering::Less) x = p;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown method '" + a.method + "' (expected reduce, eliminate or enumerate)");
  }
  if (g.json) {
    json j;
    j["command"] = "solve";
    j["method"] = a.method;
    j["feasible"] = x.has_value();
    if (x) {
      j["solution"] = to_json(*x);
      j["cost"] = inst.cost(*x).get_str();
    }
    emit_json(std::cout, j);
  } else if (x) {
    std::cout << to_string(*x) << " cost " << inst.cost(*x).get_str() << '\n';
  } else {
    std::cout << "INFEASIBLE\n";
  }
  return x ? 0 : 2;
}

struct FanArgs {
  std::string matrix, mode = "count", weight, weight_file, tiebreak = "degrevlex";
};

int cmd_fan(const Globals& g, const FanArgs& a) {
  ConfigMatrix A(load_matrix(a.matrix));
  const bool has_weight = !a.weight.empty() || !a.weight_file.empty();
  json j;
  j["command"] = "fan";
  j["mode"] = a.mode;
  if (a.mode == "count") {
    auto ideals = enumerate_initial_ideals(A, g.universal());
    j["count"] = ideals.size();
    if (g.json) emit_json(std::cout, j);
    else std::cout << ideals.size() << '\n';
    return 0;
  }
  if (a.mode == "cones") {
    struct Row {
      json witness;
      std::string witness_text;
      Cone cone;
    };
    std::vector<Row> rows;
    if (has_weight) {
      RationalVector w = load_weight(a.weight, a.weight_file);
      GroebnerBasis G = groebner_basis(A, A.order(w, parse_tiebreak(a.tiebreak)), g.limits());
      std::string text = "(";
      for (std::size_t i = 0; i < w.size(); ++i) text += (i ? "," : "") + w[i].get_str();
      rows.push_back({to_json(w), text + ")", groebner_cone(G)});
    } else {
      UniversalResult u = universal_gb(A, g.universal());
      for (std::size_t k = 0; k < u.bases.size(); ++k)
        rows.push_back({to_json(u.witnesses[k]), to_string(u.witnesses[k]), groebner_cone(u.bases[k])});
    }
    json cones = json::array();
    for (const auto& r : rows) {
      if (!g.json) std::cout << "facets " << r.cone.facet_count() << " witness " << r.witness_text << '\n';
      cones.push_back({{"witness", r.witness},
                       {"facets", r.cone.facet_count()},
                       {"lineality_dim", r.cone.lineality_dim},
                       {"inequalities", to_json(r.cone.inequalities)}});
    }
    j["cones"] = cones;
    if (g.json) emit_json(std::cout, j);
    return 0;
  }
  if (a.mode == "triangulate") {
    require(has_weight, ErrorKind::InvalidArgument, "triangulate needs --weight or --weight-file");
    SimplicialComplex delta = regular_triangulation(A, load_weight(a.weight, a.weight_file));
    json facets = json::array();
    for (const auto& f : delta.facets()) {
      json face = json::array();
      std::string line;
      for (std::size_t k = 0; k < f.size(); ++k) {
        face.push_back(f[k] + 1);
        line += (k ? " " : "") + std::to_string(f[k] + 1);
      }
      facets.push_back(face);
      if (!g.json) std::cout << line << '\n';
    }
    j["facets"] = facets;
    if (g.json) emit_json(std::cout, j);
    return 0;
  }
  fail(ErrorKind::InvalidArgument, "unknown fan mode '" + a.mode + "' (expected count, cones or triangulate)");
}

struct GenArgs {
  std::string kind, out;
  std::vector<std::string> params;
};

std::size_t param_count(const std::string& s) {
  IntVec v = io::parse_integer_list(s, "gen");
  require(v.size() == 1 && v[0] >= 0, ErrorKind::InvalidArgument, "expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v[0]);
}

int cmd_gen(const Globals& g, const GenArgs& a) {
  std::vector<std::string> p;
  for (const auto& s : a.params) {
    std::string t = s;
    for (char& c : t)
      if (c == ',') c = ' ';
    std::istringstream in(t);
    std::string tok;
    while (in >> tok) p.push_back(tok);
  }
  auto need = [&](std::size_t k) {
    require(p.size() == k, ErrorKind::InvalidArgument,
            "gen " + a.kind + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
  };
  IntMatrix M;
  if (a.kind == "segre") {
    require(!p.empty(), ErrorKind::InvalidArgument, "gen segre needs factor dimensions");
    std::vector<std::size_t> dims;
    for (const auto& s : p) dims.push_back(param_count(s));
    M = gen::segre(dims);
  } else if (a.kind == "hypersimplex2") {
    need(1);
    M = gen::hypersimplex2(param_count(p[0]));
  } else if (a.kind == "lawrence") {
    need(1);
    M = gen::lawrence(load_matrix(p[0]));
  } else if (a.kind == "monomial-curve") {
    require(!p.empty(), ErrorKind::InvalidArgument, "gen monomial-curve needs exponents");
    IntVec e;
    for (const auto& s : p) e.push_back(static_cast<Int>(param_count(s)));
    M = gen::monomial_curve(e);
  } else if (a.kind == "tt-graph") {
    need(2);
    M = gen::tt_graph(param_count(p[0]), param_count(p[1]));
  } else if (a.kind == "transport") {
    need(2);
    M = gen::transport(param_count(p[0]), param_count(p[1]));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown generator '" + a.kind +
                                         "' (expected segre, hypersimplex2, lawrence, monomial-curve, tt-graph, transport)");
  }
  Output out(a.out);
  if (g.json) {
    json rows = json::array();
    for (const auto& r : M.to_int_rows()) rows.push_back(to_json(r));
    emit_json(out.stream(), {{"command", "gen"}, {"kind", a.kind}, {"rows", M.rows()}, {"cols", M.cols()}, {"matrix", rows}});
  } else {
    io::write_matrix(out.stream(), M);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric ideals, Groebner and Graver bases, Groebner fans and integer programs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Structured JSON report instead of text");
  app.add_flag("--pretty", g.pretty, "Render vectors as binomials");
  app.add_option("--max-fiber", g.max_fiber, "Largest fiber enumerated")->capture_default_str();
  app.add_option("--max-graver-bits", g.max_graver, "Largest Graver basis for sign-pattern enumeration")
      ->capture_default_str();
  app.add_option("--max-degree", g.max_degree, "Largest leading-term degree in a Groebner computation (0: none)")
      ->capture_default_str();
  app.add_option("--max-elements", g.max_elements, "Largest working basis in a Groebner computation (0: none)")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for fan enumeration")->check(CLI::Range(1u, 256u));

  GroebnerArgs ga;
  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of the toric ideal");
  groebner->add_option("matrix", ga.matrix, "Matrix file ('-' for stdin)")->required();
  groebner->add_option("-w,--weight", ga.weight, "Weight vector, e.g. 1,0,3/2 (default: the grading)");
  groebner->add_option("--weight-file", ga.weight_file, "Weight file");
  groebner->add_option("-t,--tiebreak", ga.tiebreak, "lex or degrevlex")->capture_default_str();
  groebner->add_option("-o,--out", ga.out, "Output file");

  ListArgs gr, ci, un;
  auto* graver_cmd = app.add_subcommand("graver", "Graver basis via the Lawrence lifting");
  graver_cmd->add_option("matrix", gr.matrix)->required();
  graver_cmd->add_option("-o,--out", gr.out);
  auto* circuits_cmd = app.add_subcommand("circuits", "Circuits of the configuration");
  circuits_cmd->add_option("matrix", ci.matrix)->required();
  circuits_cmd->add_option("-o,--out", ci.out);
  auto* universal_cmd = app.add_subcommand("universal", "Universal Groebner basis and initial-ideal count");
  universal_cmd->add_option("matrix", un.matrix)->required();
  universal_cmd->add_option("-o,--out", un.out);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Minimize w.x subject to Ax = b, x >= 0 integer");
  solve->add_option("matrix", sa.matrix)->required();
  solve->add_option("-w,--weight", sa.weight, "Cost vector");
  solve->add_option("--weight-file", sa.weight_file, "Cost vector file");
  solve->add_option("-b,--rhs", sa.rhs, "Right-hand side, e.g. 2,3")->required();
  solve->add_option("-m,--method", sa.method, "reduce, eliminate or enumerate")->capture_default_str();
  solve->add_option("-t,--tiebreak", sa.tiebreak)->capture_default_str();

  FanArgs fa;
  auto* fan = app.add_subcommand("fan", "Groebner fan and regular triangulations");
  fan->add_option("matrix", fa.matrix)->required();
  fan->add_option("--mode", fa.mode, "count, cones or triangulate")->capture_default_str();
  fan->add_option("-w,--weight", fa.weight, "Weight vector");
  fan->add_option("--weight-file", fa.weight_file, "Weight file");
  fan->add_option("-t,--tiebreak", fa.tiebreak)->capture_default_str();

  GenArgs gg;
  auto* gen_cmd = app.add_subcommand("gen", "Write a standard configuration matrix");
  gen_cmd->add_option("kind", gg.kind, "segre, hypersimplex2, lawrence, monomial-curve, tt-graph, transport")
      ->required();
  gen_cmd->add_option("params", gg.params, "Parameters, e.g. 3 3 3");
  gen_cmd->add_option("-o,--out", gg.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*groebner) return cmd_groebner(g, ga);
    if (*graver_cmd) return cmd_graver(g, gr);
    if (*circuits_cmd) return cmd_circuits(g, ci);
    if (*universal_cmd) return cmd_universal(g, un);
    if (*solve) {
      require(!sa.weight.empty() || !sa.weight_file.empty(), ErrorKind::InvalidArgument,
              "solve needs --weight or --weight-file");
      return cmd_solve(g, sa);
    }
    if (*fan) return cmd_fan(g, fa);
    if (*gen_cmd) return cmd_gen(g, gg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 1;
}

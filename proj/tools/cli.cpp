#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "efpoly/ef_analysis.hpp"
#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/model_gen.hpp"
#include "efpoly/model_io.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/projection.hpp"
#include "efpoly/redundancy.hpp"
#include "efpoly/verification.hpp"

namespace efpoly::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  hex.reserve(2 * len);
  static constexpr char digits[] = "0123456789abcdef";
  for (unsigned int i = 0; i < len; ++i) {
    hex += digits[md[i] >> 4];
    hex += digits[md[i] & 0xF];
  }
  return hex;
}

namespace {

/// Bad input that is not a parse error: unreadable file, wrong model kind.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string sha256;
  ModelFile model;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Input load_input(const std::string& path) {
  Input in;
  in.path = path;
  const std::string text = read_file(path);
  in.sha256 = sha256_hex(text);
  try {
    in.model = parse_model(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  return in;
}

template <class F>
auto expect(const Input& in, F&& f) {
  try {
    return f(in.model);
  } catch (const ParseError& e) {
    throw InputError(in.path + ": " + e.what());
  }
}

HPoly as_hpoly(const Input& in) {
  if (std::holds_alternative<VPoly>(in.model.body)) return hull(std::get<VPoly>(in.model.body));
  return expect(in, expect_hpoly);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Report {
 public:
  Report(std::ostream& os, const std::string& command) : os_(os) { put("command", command); }

  void put(const std::string& key, const std::string& value) { os_ << key << ": " << value << '\n'; }
  void put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }

  void input(const std::string& role, const Input& in) {
    put(role, in.path + " sha256:" + in.sha256 + " kind:" + in.model.kind());
  }

  void space(const VarSpace& s) {
    std::string names;
    for (const auto& v : s.variables()) {
      if (!names.empty()) names += ' ';
      names += v.name();
    }
    put("space", names);
  }

  void rows(const HPoly& p) {
    space(p.space());
    put("row_count", p.num_rows());
    for (const auto& r : p.rows()) put("row", to_string(r.coeffs) + " " + to_string(r.sense) + " " + r.rhs.to_string());
  }

  void write_model(const std::string& path, const ModelFile& m) {
    if (path.empty()) return;
    const std::string text = print_model(m);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
    if (!f.flush()) throw InputError("cannot write " + path);
    put("output", path + " sha256:" + sha256_hex(text));
  }

 private:
  std::ostream& os_;
};

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string describe_map(const AffineMapSpec& m) {
  std::string s = to_string(m.matrix());
  if (!m.is_linear()) s += " + (" + to_string(m.offset()) + ")";
  return s;
}

// ---- commands ----

int cmd_vertices(std::ostream& out, const std::string& file, const std::string& out_path) {
  const Input in = load_input(file);
  const HPoly p = expect(in, expect_hpoly);
  Report r(out, "vertices");
  r.input("input", in);
  try {
    const VPoly v = enumerate_vertices(p);
    r.space(v.space());
    r.put("vertex_count", v.size());
    for (const auto& x : v.sorted_vertices()) r.put("vertex", to_string(x));
    if (v.empty()) {
      r.put("empty", "yes");
      return 0;
    }
    r.write_model(out_path, ModelFile{in.model.name, VPoly(v.space(), v.sorted_vertices())});
    return 0;
  } catch (const UnboundedPolyhedron& e) {
    r.put("bounded", "no");
    r.put("ray", to_string(e.ray()));
    return 1;
  }
}

int cmd_hull(std::ostream& out, const std::string& file, const std::string& out_path) {
  const Input in = load_input(file);
  const HPoly h = hull(expect(in, expect_vpoly));
  Report r(out, "hull");
  r.input("input", in);
  r.rows(h);
  r.write_model(out_path, ModelFile{in.model.name, h});
  return 0;
}

int cmd_project(std::ostream& out, const std::string& file, const std::vector<std::string>& keep,
                const std::string& out_path) {
  const Input in = load_input(file);
  const HPoly p = as_hpoly(in);
  const ProjectionResult res = project(p, keep);
  Report r(out, "project");
  r.input("input", in);
  std::string kept;
  for (const auto& k : keep) kept += (kept.empty() ? "" : " ") + k;
  r.put("keep", kept);
  r.put("projection", res.describe());
  if (res.kind == ProjectionResult::Kind::Polyhedron) r.rows(res.poly);
  if (res.is_full_space()) r.space(res.space);
  if (res.is_empty()) r.put("farkas", to_string(res.witness));
  r.write_model(out_path, ModelFile{in.model.name, res.as_hpoly()});
  return 0;
}

int cmd_minimize(std::ostream& out, const std::string& file, const std::string& out_path) {
  const Input in = load_input(file);
  const HPoly p = expect(in, expect_hpoly);
  const RedundancyReport rep = redundancy_report(p);
  Report r(out, "minimize");
  r.input("input", in);
  r.put("redundant_rows", rep.redundant_rows.empty() ? "none" : join(rep.redundant_rows));
  r.put("columns_checked", yes_no(rep.columns_checked));
  for (const auto& [cls, map] : rep.redundant_classes) r.put("redundant_class", cls + " = " + describe_map(map));
  r.put("minimal", yes_no(rep.minimal));
  const HPoly reduced = remove_row_redundancy(p);
  r.rows(reduced);
  r.write_model(out_path, ModelFile{in.model.name, reduced});
  return 0;
}

void put_verdict(Report& r, const std::string& prefix, const EFVerdict& v) {
  if (v.projection) r.put(prefix + "projection", v.projection->describe());
  if (v.def1) r.put(prefix + "def1", *v.def1 ? "holds" : "fails");
  if (v.def2_checked) r.put(prefix + "def2", v.def2 ? "holds" : "fails");
  if (v.def3) r.put(prefix + "def3", *v.def3 ? "holds" : "fails");
  if (!v.counterexample.empty()) r.put(prefix + "counterexample", to_string(v.counterexample));
  for (const auto& n : v.notes) r.put(prefix + "note", n);
}

int cmd_check_ef(std::ostream& out, int def, const std::string& target_file, const std::string& cand_file,
                 const std::string& map_file) {
  const Input target = load_input(target_file);
  const Input cand = load_input(cand_file);
  const HPoly candidate = expect(cand, expect_hpoly);
  std::optional<Input> map_in;
  std::optional<AffineMapSpec> map;
  if (!map_file.empty()) {
    map_in = load_input(map_file);
    map = expect(*map_in, expect_map);
  }
  const EFVerdict v = std::holds_alternative<VPoly>(target.model.body)
                          ? check_ef(std::get<VPoly>(target.model.body), candidate, def, map)
                          : check_ef(expect(target, expect_hpoly), candidate, def, map);
  Report r(out, "check-ef");
  r.input("target", target);
  r.input("candidate", cand);
  if (map_in) r.input("map", *map_in);
  r.put("definition", std::to_string(def));
  put_verdict(r, "", v);
  const bool holds = v.holds(def);
  r.put("result", holds ? "holds" : "fails");
  std::string summary = "definition " + std::to_string(def) + (holds ? " holds" : " fails");
  if (v.projection && def != 2) summary += ", projection = " + v.projection->describe();
  r.put("summary", summary);
  return holds ? 0 : 1;
}

int cmd_check_augmentation(std::ostream& out, const std::string& base_file, const std::string& cand_file) {
  const Input base = load_input(base_file);
  const Input cand = load_input(cand_file);
  const AugmentationCheck c = check_augmentation(expect(base, expect_hpoly), expect(cand, expect_hpoly));
  Report r(out, "check-augmentation");
  r.input("base", base);
  r.input("candidate", cand);
  r.put("reason", to_string(c.reason));
  if (!c.witness.empty()) r.put("witness", to_string(c.witness));
  if (!c.detail.empty()) r.put("detail", c.detail);
  r.put("result", c.holds ? "holds" : "fails");
  return c.holds ? 0 : 1;
}

std::string class_list(const VarSpace& s) {
  std::string out;
  for (const auto& c : s.classes()) out += (out.empty() ? "" : " ") + c;
  return out;
}

int cmd_check_independent(std::ostream& out, const std::string& p_file, const std::string& q_file) {
  const Input p = load_input(p_file);
  const Input q = load_input(q_file);
  const HPoly hp = as_hpoly(p);
  const HPoly hq = as_hpoly(q);
  const bool ind = independent_spaces(hp, hq);
  Report r(out, "check-independent");
  r.input("p", p);
  r.input("q", q);
  r.put("p_classes", class_list(hp.space()));
  r.put("q_classes", class_list(hq.space()));
  r.put("result", ind ? "independent" : "overlapping");
  return ind ? 0 : 1;
}

int cmd_classify(std::ostream& out, const std::string& p_file, const std::string& q_file,
                 const std::vector<std::string>& map_files) {
  const Input p = load_input(p_file);
  const Input q = load_input(q_file);
  std::vector<Input> map_ins;
  std::vector<AffineMapSpec> maps;
  for (const auto& f : map_files) {
    map_ins.push_back(load_input(f));
    maps.push_back(expect(map_ins.back(), expect_map));
  }
  const RelationClass rc = classify_relationship(as_hpoly(p), as_hpoly(q), maps);
  Report r(out, "classify");
  r.input("p", p);
  r.input("q", q);
  for (const auto& m : map_ins) r.input("map", m);
  put_verdict(r, "q_of_p.", rc.q_of_p);
  put_verdict(r, "p_of_q.", rc.p_of_q);
  if (!rc.caveat.empty()) r.put("caveat", rc.caveat);
  r.put("result", to_string(rc.tag));
  return 0;
}

int cmd_augment_pair(std::ostream& out, const std::string& p1_file, const std::string& p2_file,
                     const std::string& spec_file, const std::string& out_path) {
  const Input p1 = load_input(p1_file);
  const Input p2 = load_input(p2_file);
  const Input spec = load_input(spec_file);
  const HPoly w = construct_mutual_augmentation(expect(p1, expect_hpoly), expect(p2, expect_hpoly),
                                                expect(spec, expect_augspec));
  Report r(out, "augment-pair");
  r.input("p1", p1);
  r.input("p2", p2);
  r.input("spec", spec);
  r.put("projections", "verified");
  r.rows(w);
  r.write_model(out_path, ModelFile{"W", w});
  return 0;
}

int cmd_pushforward(std::ostream& out, const std::vector<std::string>& alpha_text, const std::string& map_file) {
  RatVector alpha;
  for (const auto& a : alpha_text) {
    try {
      alpha.push_back(Rational::parse(a));
    } catch (const ParseError& e) {
      throw InputError(std::string("--alpha: ") + e.what());
    }
  }
  const Input m = load_input(map_file);
  const auto [c, constant] = pushforward_objective(alpha, expect(m, expect_map));
  Report r(out, "pushforward");
  r.input("map", m);
  r.put("alpha", to_string(alpha));
  r.put("objective", to_string(c));
  r.put("constant", constant.to_string());
  return 0;
}

int cmd_gen(std::ostream& out, const std::string& kind, unsigned n, const std::string& out_path) {
  ModelFile m;
  m.name = kind + "-n" + std::to_string(n);
  if (kind == "tsp-standard") m.body = gen_standard_tsp(n);
  else if (kind == "tsp-alternate") m.body = gen_alternate_tsp(n);
  else if (kind == "mst-edmonds") m.body = gen_mst_edmonds(n).poly;
  else if (kind == "mst-martin") m.body = gen_mst_martin(n);
  else m.body = gen_mst_martin_reduced(n);

  if (out_path.empty()) {
    out << print_model(m);
    return 0;
  }
  Report r(out, "gen");
  r.put("model", kind);
  r.put("n", std::to_string(n));
  r.write_model(out_path, m);
  return 0;
}

int cmd_solve_lp(std::ostream& out, const std::string& file) {
  const Input in = load_input(file);
  const LpOutcome res = solve(expect(in, expect_lp).program());
  Report r(out, "solve-lp");
  r.input("input", in);
  r.put("status", to_string(res.status));
  if (res.optimum) r.put("optimum", res.optimum->to_string());
  if (res.point) r.put("point", to_string(*res.point));
  if (res.ray) r.put("ray", to_string(*res.ray));
  if (res.dual_certificate) r.put("farkas", to_string(*res.dual_certificate));
  return res.status == LpStatus::Optimal ? 0 : 1;
}

int cmd_verify(std::ostream& out, const VerifyOptions& opts) {
  const auto outcomes = run_verification(opts);
  Report r(out, "verify-paper");
  r.put("seed", std::to_string(opts.seed));
  if (!opts.filter.empty()) r.put("filter", opts.filter);
  if (outcomes.empty()) throw InputError("no check matches filter '" + opts.filter + "'");
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    r.put("check", o.name);
    r.put(o.name + ".title", o.title);
    for (const auto& [k, v] : o.facts) r.put(o.name + "." + k, v);
    r.put(o.name + ".status", o.passed ? "PASS" : "FAIL");
    passed += o.passed ? 1 : 0;
  }
  r.put("checks", outcomes.size());
  r.put("passed", passed);
  const bool all = passed == outcomes.size();
  r.put("result", all ? "all checks pass" : "some checks fail");
  return all ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polyhedral tools for extended formulations", "efpoly"};
  app.require_subcommand(1);

  std::string file, file2, out_path, target, candidate, base, map_file, spec_file, filter;
  std::vector<std::string> keep, maps, alpha;
  int def = 1;
  unsigned n = 0;
  std::string kind;
  std::uint64_t seed = VerifyOptions{}.seed;

  auto* vertices = app.add_subcommand("vertices", "Enumerate the vertices of an hpoly");
  vertices->add_option("file", file, "hpoly model")->required();
  vertices->add_option("--out", out_path, "Write the vertices as a vpoly model");

  auto* hull_cmd = app.add_subcommand("hull", "Facet description of a vpoly");
  hull_cmd->add_option("file", file, "vpoly model")->required();
  hull_cmd->add_option("--out", out_path, "Write the result as an hpoly model");

  auto* project_cmd = app.add_subcommand("project", "Project onto some variable classes");
  project_cmd->add_option("file", file, "hpoly or vpoly model")->required();
  project_cmd->add_option("--keep", keep, "Classes to keep")->required()->delimiter(',');
  project_cmd->add_option("--out", out_path, "Write the projection as an hpoly model");

  auto* minimize = app.add_subcommand("minimize", "Row and column redundancy report");
  minimize->add_option("file", file, "hpoly model")->required();
  minimize->add_option("--out", out_path, "Write the row-irredundant hpoly");

  auto* check_ef_cmd = app.add_subcommand("check-ef", "Is the candidate an extended formulation of the target");
  check_ef_cmd->add_option("--def", def, "Definition 1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  check_ef_cmd->add_option("--target", target, "hpoly or vpoly model")->required();
  check_ef_cmd->add_option("--candidate", candidate, "hpoly model")->required();
  check_ef_cmd->add_option("--map", map_file, "map from candidate to target variables");

  auto* check_aug = app.add_subcommand("check-augmentation", "Is the candidate an augmentation of the base");
  check_aug->add_option("--base", base, "hpoly model")->required();
  check_aug->add_option("--candidate", candidate, "hpoly model")->required();

  auto* check_ind = app.add_subcommand("check-independent", "Do two models live in independent spaces");
  check_ind->add_option("p", file, "model")->required();
  check_ind->add_option("q", file2, "model")->required();

  auto* classify = app.add_subcommand("classify", "Classify the relation between two models");
  classify->add_option("p", file, "model")->required();
  classify->add_option("q", file2, "model")->required();
  classify->add_option("--map", maps, "Witness map; may be repeated")->take_all();

  auto* augment = app.add_subcommand("augment-pair", "Build the mutual augmentation W of two polyhedra");
  augment->add_option("p1", file, "hpoly model")->required();
  augment->add_option("p2", file2, "hpoly model")->required();
  augment->add_option("--spec", spec_file, "augspec model")->required();
  augment->add_option("--out", out_path, "Write W as an hpoly model");

  auto* push = app.add_subcommand("pushforward", "Pull an objective back through an affine map");
  push->add_option("--alpha", alpha, "Objective coefficients")->required()->delimiter(',');
  push->add_option("--map", map_file, "map model")->required();

  auto* gen = app.add_subcommand("gen", "Generate a TSP or MST model");
  gen->add_option("kind", kind, "Model family")
      ->required()
      ->check(CLI::IsMember({"tsp-standard", "tsp-alternate", "mst-edmonds", "mst-martin", "mst-martin-reduced"}));
  gen->add_option("--n", n, "Number of cities or vertices")->required();
  gen->add_option("--out", out_path, "Write the model here instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve-lp", "Solve an lp model exactly");
  solve_cmd->add_option("file", file, "lp model")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the worked examples and property suites");
  verify->add_option("--filter", filter, "Only checks whose name contains this");
  verify->add_option("--seed", seed, "Base seed for randomized checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (vertices->parsed()) return cmd_vertices(out, file, out_path);
    if (hull_cmd->parsed()) return cmd_hull(out, file, out_path);
    if (project_cmd->parsed()) return cmd_project(out, file, keep, out_path);
    if (minimize->parsed()) return cmd_minimize(out, file, out_path);
    if (check_ef_cmd->parsed()) return cmd_check_ef(out, def, target, candidate, map_file);
    if (check_aug->parsed()) return cmd_check_augmentation(out, base, candidate);
    if (check_ind->parsed()) return cmd_check_independent(out, file, file2);
    if (classify->parsed()) return cmd_classify(out, file, file2, maps);
    if (augment->parsed()) return cmd_augment_pair(out, file, file2, spec_file, out_path);
    if (push->parsed()) return cmd_pushforward(out, alpha, map_file);
    if (gen->parsed()) return cmd_gen(out, kind, n, out_path);
    if (solve_cmd->parsed()) return cmd_solve_lp(out, file);
    if (verify->parsed()) return cmd_verify(out, VerifyOptions{seed, filter});
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace efpoly::cli

#include "orth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "orth/bounds.hpp"
#include "orth/factor.hpp"
#include "orth/identities.hpp"
#include "orth/normal_form.hpp"
#include "orth/textio.hpp"

namespace orth::cli {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io-error", "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

// the syntax error names the file it came from
template <class T, class F>
T load(const std::string& path, F parse) {
  const std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw Error(e.category(), path + ": " + e.what());
  }
}

OrthoSet load_set(const std::string& path) {
  return load<OrthoSet>(path, [](const std::string& t) { return parse_set(t); });
}

PeiMap load_pei(const std::string& path) {
  return load<PeiMap>(path, [](const std::string& t) { return parse_pei(t); });
}

const char* flag(bool b) { return b ? "1" : "0"; }

void print_set(std::ostream& out, const std::string& key, const OrthoSet& S) {
  const RankHeight rh = rank_height(S);
  out << key << "=" << serialize(tidy(S)) << "\n";
  out << "rank=" << rh.rank << " height=" << rh.height << "\n";
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

// zeros print as '.'
std::string degree_list(const std::vector<std::string>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s + "]";
}

std::string betti_text(const Homology& h) {
  std::vector<std::string> xs;
  for (Int b : h.betti) xs.push_back(b == 0 ? "." : std::to_string(b));
  return degree_list(xs);
}

std::string torsion_text(const Homology& h) {
  std::vector<std::string> xs;
  for (const auto& t : h.torsion) {
    if (t.empty()) {
      xs.push_back(".");
      continue;
    }
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "*" : "") + std::to_string(t[i]);
    xs.push_back(s);
  }
  return degree_list(xs);
}

void print_homology(std::ostream& out, const ColoredGraph& g, const FlagHomologyReport& r) {
  out << "vertices=" << g.vertices() << " colors=" << g.colors() << " edges=" << g.edges.size()
      << " simplices=" << r.simplices << "\n";
  out << "conditions=" << flag(r.conditions_ok) << "\n";
  out << "betti=" << betti_text(r.homology) << "\n";
  out << "torsion=" << torsion_text(r.homology) << "\n";
  out << "bouquet=";
  if (r.bouquet)
    out << "(" << r.bouquet->first << "," << r.bouquet->second << ")\n";
  else
    out << "none\n";
  if (!r.note.empty()) out << "note=" << r.note << "\n";
}

int cmd_set_eval(std::ostream& out, const std::string& file, const std::string& op, const std::string& with,
                 const std::string& point) {
  const OrthoSet S = load_set(file);
  const bool binary = op == "union" || op == "intersect" || op == "difference" || op == "equals" ||
                      op == "subset" || op == "disjoint";
  if (binary && with.empty()) fail("usage", "--op " + op + " needs --with");
  if (!binary && !with.empty()) fail("usage", "--with is only used by binary operations");
  const OrthoSet T = binary ? load_set(with) : OrthoSet(S.dim());
  if (binary) require_dim(S.dim(), T.dim());
  OrthoSet result = S;
  if (op == "union") result = unite(S, T);
  if (op == "intersect") result = intersect(S, T);
  if (op == "difference") result = subtract(S, T);
  if (op == "complement") result = complement(S);
  if (op == "equals") {
    out << "equals=" << flag(equals(S, T)) << "\n";
  } else if (op == "subset") {
    out << "subset=" << flag(subset(S, T)) << "\n";
  } else if (op == "disjoint") {
    out << "disjoint=" << flag(disjoint(S, T)) << "\n";
  } else {
    print_set(out, "set", result);
    if (op == "info") out << "pieces=" << S.size() << "\n";
  }
  // membership in the result, or in S for the predicates
  if (!point.empty()) {
    const Point p = parse_point(point);
    require_dim(S.dim(), static_cast<int>(p.size()));
    out << "contains=" << flag(result.contains(p)) << "\n";
  }
  return Ok;
}

int cmd_elem_eval(std::ostream& out, const std::string& file, const std::string& then, const std::string& point,
                  bool inverse) {
  const PeiMap g = load_pei(file);
  out << "injective=" << flag(g.injective) << " bijective=" << flag(g.bijective) << " pet=" << flag(g.pet)
      << " diagonal=" << flag(g.diagonal) << "\n";
  out << "pieces=" << g.pieces.size() << " rank=" << rank(g) << "\n";
  print_set(out, "domain", g.domain);
  out << "image=" << serialize(tidy(image_set(g))) << "\n";
  out << "support=" << serialize(tidy(support(g))) << "\n";
  if (!point.empty()) {
    const Point p = parse_point(point);
    out << "point=" << to_string(p) << " value=" << to_string(orth::apply(g, p)) << "\n";
  }
  if (inverse) out << "inverse=" << serialize(simplify(invert(g))) << "\n";
  if (!then.empty()) out << "composite=" << serialize(simplify(compose(g, load_pei(then)))) << "\n";
  return Ok;
}

int cmd_invariants(std::ostream& out, const std::string& file, int k, bool matrix, bool abelian) {
  const PeiMap g = load_pei(file);
  if (k < 0 || k > g.dim()) fail("out-of-range", "k must lie in 0..N");
  const Invariants inv = invariants(g, k);
  out << "k=" << k << " rank=" << inv.rank << "\n";
  out << "in_Gk=" << flag(inv.in_Gk) << " in_C=" << flag(inv.in_C) << " in_Cord=" << flag(inv.in_Cord)
      << " stagnant=" << flag(inv.stagnant) << "\n";
  out << "parity_germs=" << opt_int(inv.parity_germs) << " parity_axes=" << opt_int(inv.parity_axes)
      << " in_altGk=" << flag(inv.in_altGk) << " pet=" << flag(inv.is_pet) << "\n";
  Int total = 0;
  for (const auto& [germ, f] : inv.flow) {
    out << "flow[" << serialize(germ) << "]=" << f << "\n";
    total += f;
  }
  if (inv.in_C) out << "flow_total=" << total << "\n";
  if (matrix) {
    if (!inv.in_Cord) fail("precondition", "--matrix needs an element of C^ord");
    const GermMatrix m = matrix_of(g, k);
    const MatrixClass mc = classify(m);
    out << "matrix_rows=" << m.rows.size() << " in_D=" << flag(mc.in_D) << " in_E=" << flag(mc.in_E) << "\n";
    for (const auto& [germ, row] : m.rows) {
      out << "row[" << serialize(germ) << "]=(";
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << ")\n";
    }
  }
  if (abelian) {
    if (!inv.in_Gk) fail("precondition", "--abelian needs rk g <= k");
    const AbelianClass ac = abelianization_class(g, k);
    out << "abelian=(";
    for (std::size_t i = 0; i < ac.value.size(); ++i) out << (i ? "," : "") << ac.value[i];
    out << ") word_based=" << flag(ac.word_based) << " experimental=" << flag(ac.experimental) << "\n";
  }
  return Ok;
}

int cmd_normal_form(std::ostream& out, const std::string& file, const std::string& mode, Int base) {
  const OrthoSet S = load_set(file);
  const NormalForm nf = normal_form(S, mode == "pet" ? NormalMode::Pet : NormalMode::Pei, base);
  print_set(out, "set", nf.set);
  out << "stacks=" << nf.stacks.size() << "\n";
  for (std::size_t i = 0; i < nf.stacks.size(); ++i) {
    out << "stack[" << i << "]=[";
    for (std::size_t j = 0; j < nf.stacks[i].size(); ++j) out << (j ? ", " : "") << serialize(nf.stacks[i][j]);
    out << "]\n";
  }
  const bool witness = nf.witness.bijective || is_bijection_onto(nf.witness, nf.set);
  out << "witness_verified=" << flag(witness && equals(nf.witness.domain, S) && equals(image_set(nf.witness), nf.set))
      << " witness_pet=" << flag(nf.witness.pet) << "\n";
  if (mode == "pet") out << "no_parallel_suborthant=" << flag(no_parallel_suborthant(nf.stacks)) << "\n";
  return Ok;
}

int cmd_factor(std::ostream& out, const std::string& file) {
  const PeiMap g = load_pei(file);
  if (!g.bijective) fail("not-bijective", "factor needs a bijection");
  const std::vector<Generator> word = factor_generators(g);
  out << "letters=" << word.size() << "\n";
  for (std::size_t i = 0; i < word.size(); ++i) out << "gen[" << i << "]=" << serialize(word[i]) << "\n";
  const bool ok = equals(realize_word(word, g.domain), g);
  out << "verified=" << flag(ok) << "\n";
  return ok ? Ok : CheckFailed;
}

int cmd_verify_identities(std::ostream& out) {
  int passed = 0, failed = 0;
  for (const IdentityCheck& c : verify_identities()) {
    out << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.statement;
    if (!c.note.empty()) out << " (" << c.note << ")";
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << "\n";
    (c.passed ? passed : failed)++;
  }
  out << "passed=" << passed << " failed=" << failed << "\n";
  return failed == 0 ? Ok : CheckFailed;
}

int cmd_flag_homology(std::ostream& out, const std::string& file, std::size_t max_simplices) {
  const ColoredGraph g = load<ColoredGraph>(file, [](const std::string& t) { return parse_graph(t); });
  print_homology(out, g, flag_homology(g, max_simplices));
  return Ok;
}

int cmd_fl_bounds(std::ostream& out, const std::string& file, const std::string& group) {
  const OrthoSet S = load_set(file);
  out << to_string(fl_bounds(S, group == "pei" ? GroupKind::Pei : GroupKind::Pet)) << "\n";
  return Ok;
}

ColoredGraph complete_bipartite(int a, int b) {
  std::vector<int> color(a + b, 0);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < b; ++j) color[a + j] = 1;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return make_colored_graph(std::move(color), std::move(edges));
}

int cmd_selftest(std::ostream& out) {
  bool all = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "pass " : "FAIL ") << name << " " << detail << "\n";
    all = all && ok;
  };

  int id_pass = 0, id_total = 0;
  for (const IdentityCheck& c : verify_identities()) {
    ++id_total;
    id_pass += c.passed ? 1 : 0;
  }
  line("identities", id_pass == id_total, std::to_string(id_pass) + "/" + std::to_string(id_total));

  // three quadrants of Z^3 stacked along axis 2
  std::vector<Orthant> Ls;
  for (Int j = 0; j < 3; ++j) Ls.push_back(Orthant::make({0, 0, j}, {1, 1, 0}));
  const OrthoSet S = OrthoSet::from_pieces(3, Ls);
  const PeiMap lam = realize(unit_translation(Ls[0], 0, Ls[1], 1), S);
  line("unit-translation-flow", flow(lam, germ_of(Ls[0])) == -1 && flow(lam, germ_of(Ls[1])) == 1, "(-1,+1)");
  std::mt19937_64 rng(2024);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  int flow_ok = 0;
  const int words = 40;
  for (int t = 0; t < words; ++t) {
    PeiMap g = identity_map(S);
    for (int l = 0; l < 4; ++l) {
      const int i = pick(3), j = (i + 1 + pick(2)) % 3;
      const int x = pick(2);
      const Generator gen = pick(3) == 0 ? unit_endotranslation(Ls[i], x, 1 - x)
                                         : unit_translation(Ls[i], x, Ls[j], pick(2));
      g = compose(g, realize(gen, S));
    }
    const Invariants inv = invariants(g, 2);
    Int sum = 0;
    for (const auto& [germ, f] : inv.flow) sum += f;
    flow_ok += inv.in_C && sum == 0 ? 1 : 0;
  }
  line("total-flow", flow_ok == words, std::to_string(flow_ok) + "/" + std::to_string(words));

  const FlagHomologyReport k22 = flag_homology(complete_bipartite(2, 2));
  line("k22", k22.bouquet == std::make_optional(std::pair<int, Int>{1, 1}), "bouquet=(1,1)");
  const FlagHomologyReport k33 = flag_homology(complete_bipartite(3, 3));
  line("k33", k33.bouquet == std::make_optional(std::pair<int, Int>{1, 4}), "bouquet=(1,4)");
  out << "selftest=" << (all ? "pass" : "fail") << "\n";
  return all ? Ok : CheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orthctl: orthohedral sets, piecewise isometries and their invariants"};
  app.name("orthctl");
  app.require_subcommand(1);

  std::string file, with, point, then, op = "info", mode = "pei", group = "pet";
  int k = 1;
  Int base = 1;
  std::size_t max_simplices = 5000;
  bool inverse = false, matrix = false, abelian = false;

  auto* set_eval = app.add_subcommand("set-eval", "evaluate a set operation");
  set_eval->add_option("file", file, "set record")->required();
  set_eval->add_option("--op", op, "info|union|intersect|difference|complement|equals|subset|disjoint")
      ->check(CLI::IsMember({"info", "union", "intersect", "difference", "complement", "equals", "subset",
                             "disjoint"}));
  set_eval->add_option("--with", with, "second operand");
  set_eval->add_option("--contains", point, "membership test for a point (x1,...,xN)");

  auto* elem_eval = app.add_subcommand("elem-eval", "validate and evaluate an element");
  elem_eval->add_option("file", file, "map record")->required();
  elem_eval->add_option("--point", point, "evaluate at (x1,...,xN)");
  elem_eval->add_option("--then", then, "compose with a second map, applied after");
  elem_eval->add_flag("--inverse", inverse, "print the inverse");

  auto* inv = app.add_subcommand("invariants", "rank, parities and flow");
  inv->add_option("file", file, "map record")->required();
  inv->add_option("--k", k, "germ rank")->required();
  inv->add_flag("--matrix", matrix, "print the germ-translation matrix");
  inv->add_flag("--abelian", abelian, "print the abelianization class");

  auto* nf = app.add_subcommand("normal-form", "pei or pet normal form with witness");
  nf->add_option("file", file, "set record")->required();
  nf->add_option("--mode", mode, "pei|pet")->check(CLI::IsMember({"pei", "pet"}));
  nf->add_option("--base", base, "base coordinate B");

  auto* fac = app.add_subcommand("factor", "factor a bijection into named generators");
  fac->add_option("file", file, "map record")->required();

  auto* ids = app.add_subcommand("verify-identities", "evaluate the generator identity suite");

  auto* fh = app.add_subcommand("flag-homology", "homology of the flag complex of a colored graph");
  fh->add_option("file", file, "graph record")->required();
  fh->add_option("--max-simplices", max_simplices, "clique budget");

  auto* fl = app.add_subcommand("fl-bounds", "finiteness length bounds");
  fl->add_option("file", file, "set record")->required();
  fl->add_option("--group", group, "pet|pei")->check(CLI::IsMember({"pet", "pei"}));

  auto* self = app.add_subcommand("selftest", "identities, total flow and homology goldens");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Failure;
  }

  try {
    if (set_eval->parsed()) return cmd_set_eval(out, file, op, with, point);
    if (elem_eval->parsed()) return cmd_elem_eval(out, file, then, point, inverse);
    if (inv->parsed()) return cmd_invariants(out, file, k, matrix, abelian);
    if (nf->parsed()) return cmd_normal_form(out, file, mode, base);
    if (fac->parsed()) return cmd_factor(out, file);
    if (ids->parsed()) return cmd_verify_identities(out);
    if (fh->parsed()) return cmd_flag_homology(out, file, max_simplices);
    if (fl->parsed()) return cmd_fl_bounds(out, file, group);
    if (self->parsed()) return cmd_selftest(out);
  } catch (const Error& e) {
    err << "error category=" << e.category() << " " << e.what() << "\n";
    return Failure;
  } catch (const std::exception& e) {
    err << "error category=internal " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}

}  // namespace orth::cli

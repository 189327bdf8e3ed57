#include "homcat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "fincat/builders.hpp"
#include "fincat/table1.hpp"
#include "fincat/text_io.hpp"
#include "fincat/theorems.hpp"
#include "graphhom/counting.hpp"
#include "homcat/error.hpp"

namespace homcat {

namespace {

using fincat::FiniteCategory;
using graphhom::Graph;

// cat-* inputs accept a file path or a builtin spec:
//   builtin:ab:<depth>  builtin:Z:<depth>  builtin:N:<depth>
//   builtin:negN:<depth>  builtin:groups:<max order>[:name,name,...]
FiniteCategory load_category_input(const std::string& spec) {
  if (spec.rfind("builtin:", 0) != 0) return fincat::load_category(spec);
  std::vector<std::string> parts;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, ':')) parts.push_back(item);
  if (parts.size() < 3) throw ParseError("builtin category spec needs a depth: " + spec);
  int depth = 0;
  try {
    depth = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw ParseError("bad depth in builtin spec: " + spec);
  }
  const std::string& kind = parts[1];
  if (kind == "ab") return fincat::build_ab_category(depth);
  if (kind == "Z") return fincat::build_poset_category(fincat::PosetKind::Z, depth);
  if (kind == "N") return fincat::build_poset_category(fincat::PosetKind::N, depth);
  if (kind == "negN") return fincat::build_poset_category(fincat::PosetKind::NegN, depth);
  if (kind == "groups") {
    FiniteCategory C = fincat::build_group_category(depth);
    if (parts.size() == 3) return C;
    std::vector<int> keep;
    std::istringstream names(parts[3]);
    while (std::getline(names, item, ',')) {
      int id = C.object_id(item);
      if (id < 0) throw ParseError("unknown group `" + item + "` in builtin spec");
      keep.push_back(id);
    }
    return fincat::full_subcategory(C, keep);
  }
  throw ParseError("unknown builtin category kind `" + kind + "`");
}

// graph inputs accept a file path or builtin:K<n>, P<n>, C<n>, E<n>
Graph load_graph_input(const std::string& spec) {
  if (spec.rfind("builtin:", 0) != 0) return graphhom::load_graph(spec);
  std::string body = spec.substr(8);
  if (body.size() < 2) throw ParseError("bad builtin graph spec: " + spec);
  char kind = body[0];
  int n = 0;
  try {
    n = std::stoi(body.substr(1));
  } catch (const std::exception&) {
    throw ParseError("bad builtin graph spec: " + spec);
  }
  if (n < 1 || n > 32) throw ParseError("builtin graph size out of range: " + spec);
  Graph g(n, false);
  switch (kind) {
    case 'K':
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    case 'P':
      for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
      return g;
    case 'C':
      if (n < 3) throw ParseError("cycle needs at least 3 vertices: " + spec);
      for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
      return g;
    case 'E':
      return g;
    default:
      throw ParseError("unknown builtin graph kind in: " + spec);
  }
}

int object_id_or_throw(const FiniteCategory& C, const std::string& name) {
  int id = C.object_id(name);
  if (id < 0) throw ParseError("unknown object `" + name + "`");
  return id;
}

struct Options {
  std::string cat_path, graph_x, graph_y;
  std::string export_path;
  std::string theorem = "weak";
  std::string m_spec = "maximal-epis";
  std::string i_spec = "all-monos";
  std::string method = "all";
  std::string output = "text";
  std::string obj_z, obj_a;
  std::string grp_a, grp_b, grp_c;
  int depth = 4;
  int max_size = 4;
  int max_order = 6;
  int profile = 0;
  std::string series = "2,3,4,5,6";
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad integer `" + item + "` in list");
    }
  }
  return out;
}

int run_cat_validate(const Options& o, std::ostream& out) {
  FiniteCategory C = load_category_input(o.cat_path);
  auto report = fincat::validate(C);
  out << report.to_text(C);
  if (!o.export_path.empty()) {
    std::ofstream f(o.export_path);
    if (!f) throw ParseError("cannot write " + o.export_path);
    f << fincat::format_category(C);
  }
  return report.ok() ? 0 : 1;
}

int run_cat_check(const Options& o, std::ostream& out) {
  FiniteCategory C = load_category_input(o.cat_path);
  fincat::Context ctx = fincat::Context::build(C);
  fincat::ConditionReport report;
  if (o.theorem == "main")
    report = fincat::check_main_conditions(ctx, fincat::MClassSpec::parse(o.m_spec),
                                           fincat::IClassSpec::parse(o.i_spec));
  else if (o.theorem == "weak") report = fincat::check_weak_conditions(ctx);
  else if (o.theorem == "corollary") report = fincat::check_corollary_conditions(ctx);
  else if (o.theorem == "pultr") report = fincat::check_pultr_conditions(ctx);
  else if (o.theorem == "variant") report = fincat::check_variant_condition(ctx);
  else if (o.theorem == "dawar") report = fincat::check_dawar_pushouts(ctx);
  else throw ParseError("unknown theorem `" + o.theorem + "` (want main, weak, corollary, pultr, variant or dawar)");
  out << report.to_text(C);
  return report.overall ? 0 : 1;
}

int run_cat_hom_matrix(const Options& o, std::ostream& out) {
  FiniteCategory C = load_category_input(o.cat_path);
  fincat::Context ctx = fincat::Context::build(C);
  auto m = fincat::hom_matrix(ctx);
  if (o.output == "csv") {
    out << "object";
    for (int r : m.reps) out << ',' << C.objects[r];
    out << '\n';
    for (size_t i = 0; i < m.reps.size(); ++i) {
      out << C.objects[m.reps[i]];
      for (size_t j = 0; j < m.reps.size(); ++j) out << ',' << m.counts[i][j];
      out << '\n';
    }
  } else {
    size_t w = 6;
    for (int r : m.reps) w = std::max(w, C.objects[r].size() + 1);
    out << std::string(w, ' ');
    for (int r : m.reps) out << C.objects[r] << std::string(w - C.objects[r].size(), ' ');
    out << '\n';
    for (size_t i = 0; i < m.reps.size(); ++i) {
      const auto& name = C.objects[m.reps[i]];
      out << name << std::string(w - name.size(), ' ');
      for (size_t j = 0; j < m.reps.size(); ++j) {
        std::string v = std::to_string(m.counts[i][j]);
        out << v << std::string(w - v.size(), ' ');
      }
      out << '\n';
    }
  }
  return 0;
}

int run_cat_combinatorial(const Options& o, std::ostream& out) {
  FiniteCategory C = load_category_input(o.cat_path);
  fincat::Context ctx = fincat::Context::build(C);
  auto report = fincat::is_combinatorial(ctx);
  out << "combinatorial: " << (report.combinatorial ? "yes" : "no") << '\n';
  if (!report.combinatorial)
    out << "equal hom columns at non-isomorphic objects " << C.objects[report.witness_a] << " and "
        << C.objects[report.witness_b] << '\n';
  for (const auto& s : report.sanity) out << "sanity: " << s << '\n';
  return (report.combinatorial && report.sanity.empty()) ? 0 : 1;
}

int run_cat_monocount(const Options& o, std::ostream& out) {
  FiniteCategory C = load_category_input(o.cat_path);
  fincat::Context ctx = fincat::Context::build(C);
  int Z = object_id_or_throw(C, o.obj_z);
  int A = object_id_or_throw(C, o.obj_a);
  auto M = fincat::MClassSpec::parse(o.m_spec);
  auto I = fincat::IClassSpec::parse(o.i_spec);
  if (o.method == "mobius") throw ParseError("method mobius applies to graphs only");
  bool want_direct = o.method == "direct" || o.method == "all";
  bool want_ie = o.method == "inclusion-exclusion" || o.method == "all";
  if (!want_direct && !want_ie) throw ParseError("unknown method `" + o.method + "`");
  long long direct = 0, ie = 0;
  if (want_direct) {
    direct = fincat::mono_count_direct(ctx, Z, A, I);
    out << "direct: " << direct << '\n';
  }
  if (want_ie) {
    ie = fincat::mono_count_inclusion_exclusion(ctx, Z, A, M, I);
    out << "inclusion-exclusion: " << ie << '\n';
  }
  if (o.method == "all" && direct != ie) {
    out << "MISMATCH\n";
    return 1;
  }
  return 0;
}

int run_graph_hom(const Options& o, std::ostream& out) {
  Graph X = load_graph_input(o.graph_x);
  if (o.profile > 0) {
    auto profile = graphhom::hom_profile(X, o.profile);
    out << "key,count\n";
    for (const auto& [key, count] : profile.entries) out << key << ',' << count << '\n';
    return 0;
  }
  if (o.graph_y.empty()) throw ParseError("graph-hom needs a source and a target graph");
  Graph A = load_graph_input(o.graph_y);
  out << "hom: " << graphhom::hom_count(X, A) << '\n';
  return 0;
}

int run_graph_inj(const Options& o, std::ostream& out) {
  Graph X = load_graph_input(o.graph_x);
  Graph A = load_graph_input(o.graph_y);
  bool all = o.method == "all";
  uint64_t direct = 0, ie = 0, mob = 0;
  bool have_direct = false, have_ie = false, have_mob = false;
  if (all || o.method == "direct") {
    direct = graphhom::inj_count_direct(X, A);
    have_direct = true;
    out << "direct: " << direct << '\n';
  }
  if (all || o.method == "inclusion-exclusion") {
    ie = graphhom::inj_via_inclusion_exclusion(X, A);
    have_ie = true;
    out << "inclusion-exclusion: " << ie << '\n';
  }
  if (all || o.method == "mobius") {
    mob = graphhom::inj_via_mobius(X, A);
    have_mob = true;
    out << "mobius: " << mob << '\n';
  }
  if (!have_direct && !have_ie && !have_mob) throw ParseError("unknown method `" + o.method + "`");
  if (all && (direct != ie || direct != mob)) {
    out << "MISMATCH\n";
    return 1;
  }
  return 0;
}

int run_graph_distinguish(const Options& o, std::ostream& out) {
  Graph A = load_graph_input(o.graph_x);
  Graph B = load_graph_input(o.graph_y);
  auto res = graphhom::distinguish(A, B, o.max_size);
  if (res.distinguished) {
    out << "witness: " << res.witness_key << '\n';
    out << "hom(X,A) = " << res.count_a << ", hom(X,B) = " << res.count_b << '\n';
    return 0;
  }
  out << "certified-equal up to size " << o.max_size << '\n';
  return 1;
}

int run_graph_pultr(const Options& o, std::ostream& out) {
  Graph A = load_graph_input(o.graph_x);
  Graph B = load_graph_input(o.graph_y);
  auto report = graphhom::pultr_identity_graphs(A, B);
  for (const auto& t : report.terms)
    out << "T " << t.key << ": extr=" << t.extr << " mono=" << t.mono << " aut=" << t.aut
        << " contribution=" << t.contribution << '\n';
  out << "hom: " << report.hom_total << "\nsum: " << report.sum << '\n';
  out << (report.ok() ? "exact\n" : "MISMATCH\n");
  return report.ok() ? 0 : 1;
}

int run_table1(const Options& o, std::ostream& out) {
  fincat::Table1Options opt;
  opt.depth = o.depth;
  opt.series_depths = parse_int_list(o.series);
  if (opt.series_depths.empty()) throw ParseError("empty series depth list");
  auto rows = fincat::table1_report(opt);
  out << (o.output == "csv" ? fincat::render_table1_csv(rows) : fincat::render_table1_text(rows));
  return 0;
}

int run_demo_cancellation(const Options& o, std::ostream& out) {
  auto report = fincat::cancellation_demo(o.max_order, o.grp_a, o.grp_b, o.grp_c);
  out << "A = " << report.a << ", B = " << report.b << ", C = " << report.c << '\n';
  out << "A*B in catalog: " << report.ab_object << ", A*C in catalog: " << report.ac_object << '\n';
  out << "multiplicativity |Hom(Z,A*B)| = |Hom(Z,A)||Hom(Z,B)|: " << (report.multiplicative ? "exact" : "FAILS")
      << '\n';
  for (const auto& f : report.failures) out << "  " << f << '\n';
  for (const auto& l : report.lines) out << "  " << l << '\n';
  if (report.columns_agree) out << "hom columns of B and C agree\n";
  else out << "hom columns differ at Z = " << report.column_witness << '\n';
  return report.multiplicative ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-category engine and graph homomorphism counting toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("cat-validate", "check the category axioms of a .cat file");
  validate->add_option("category", o.cat_path, "category file or builtin:<spec>")->required();
  validate->add_option("--export", o.export_path, "write the category back out in .cat format");

  auto* check = app.add_subcommand("cat-check", "decide a theorem's hypothesis list");
  check->add_option("category", o.cat_path)->required();
  check->add_option("--theorem", o.theorem, "main|weak|corollary|pultr|variant|dawar");
  check->add_option("--M", o.m_spec, "M-class: all-proper-epis|maximal-epis|none|set:i,j");
  check->add_option("--I", o.i_spec, "I-class: all-monos|all-morphisms|set:i,j");

  auto* matrix = app.add_subcommand("cat-hom-matrix", "hom counts over isomorphism class representatives");
  matrix->add_option("category", o.cat_path)->required();
  matrix->add_option("--output", o.output, "text|csv");

  auto* comb = app.add_subcommand("cat-combinatorial", "do hom counts separate non-isomorphic objects");
  comb->add_option("category", o.cat_path)->required();

  auto* monocount = app.add_subcommand("cat-monocount", "count I-monos Z -> A");
  monocount->add_option("category", o.cat_path)->required();
  monocount->add_option("Z", o.obj_z, "source object")->required();
  monocount->add_option("A", o.obj_a, "target object")->required();
  monocount->add_option("--M", o.m_spec);
  monocount->add_option("--I", o.i_spec);
  monocount->add_option("--method", o.method, "direct|inclusion-exclusion|all");

  auto* ghom = app.add_subcommand("graph-hom", "count homomorphisms between graphs");
  ghom->add_option("source", o.graph_x, "graph file or builtin:K3 etc")->required();
  ghom->add_option("target", o.graph_y);
  ghom->add_option("--profile", o.profile, "emit the hom profile of the source up to this size instead");

  auto* ginj = app.add_subcommand("graph-inj", "count injective homomorphisms");
  ginj->add_option("source", o.graph_x)->required();
  ginj->add_option("target", o.graph_y)->required();
  ginj->add_option("--method", o.method, "direct|inclusion-exclusion|mobius|all");

  auto* gdist = app.add_subcommand("graph-distinguish", "search for a hom-count witness separating two graphs");
  gdist->add_option("a", o.graph_x)->required();
  gdist->add_option("b", o.graph_y)->required();
  gdist->add_option("--max-size", o.max_size, "largest test graph size");

  auto* gpultr = app.add_subcommand("graph-pultr", "verify the hom decomposition over quotient classes");
  gpultr->add_option("a", o.graph_x)->required();
  gpultr->add_option("b", o.graph_y)->required();

  auto* table = app.add_subcommand("table1", "applicability verdicts for all example categories");
  table->add_option("--depth", o.depth, "truncation depth for the verdict row");
  table->add_option("--series", o.series, "comma-separated depths for divergence trends");
  table->add_option("--output", o.output, "text|csv");

  auto* demo = app.add_subcommand("demo-cancellation", "product cancellation on the groups catalog");
  demo->add_option("A", o.grp_a)->required();
  demo->add_option("B", o.grp_b)->required();
  demo->add_option("C", o.grp_c)->required();
  demo->add_option("--max-order", o.max_order);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (validate->parsed()) return run_cat_validate(o, out);
    if (check->parsed()) return run_cat_check(o, out);
    if (matrix->parsed()) return run_cat_hom_matrix(o, out);
    if (comb->parsed()) return run_cat_combinatorial(o, out);
    if (monocount->parsed()) return run_cat_monocount(o, out);
    if (ghom->parsed()) return run_graph_hom(o, out);
    if (ginj->parsed()) return run_graph_inj(o, out);
    if (gdist->parsed()) return run_graph_distinguish(o, out);
    if (gpultr->parsed()) return run_graph_pultr(o, out);
    if (table->parsed()) return run_table1(o, out);
    if (demo->parsed()) return run_demo_cancellation(o, out);
  } catch (const CheckError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace homcat

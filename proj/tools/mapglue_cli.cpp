#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mapglue/bubbles.hpp"
#include "mapglue/counting.hpp"
#include "mapglue/enumeration.hpp"
#include "mapglue/sampler.hpp"
#include "mapglue/series.hpp"
#include "mapglue/suites.hpp"

using namespace mapglue;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct Config {
  std::string catalog_dir;
  int cap = 5;
  bool verbose = false;

  EnumerationConfig enumeration() const
  {
    EnumerationConfig cfg;
    cfg.max_edges = cap;
    return cfg;
  }
  std::filesystem::path dir() const { return catalog_dir.empty() ? default_catalog_dir() : std::filesystem::path(catalog_dir); }
};

RootMode parse_root(const std::string& s)
{
  if (s == "on-tree")
    return RootMode::OnTree;
  if (s == "anywhere")
    return RootMode::Anywhere;
  throw Error(Errc::ParseError, "root must be on-tree or anywhere");
}

// Inline text wins; otherwise the whole file.
std::string read_input(const std::string& inline_text, const std::string& path)
{
  if (!inline_text.empty())
    return inline_text;
  if (path.empty())
    throw Error(Errc::ParseError, "give the input inline or with --input");
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string first_line(const std::string& text)
{
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      return line;
  throw Error(Errc::ParseError, "empty input");
}

struct CountArgs {
  std::string family = "tree";
  int q = 4, faces = 1, m = 1, m1 = 1, m2 = 1, e = 0, n = 0;
  std::string root = "on-tree";
  std::vector<int> sizes;
  bool labeled = false;
  bool printed = false;
};

std::string run_count(const CountArgs& a)
{
  const auto fam = a.family;
  auto rat = [&](const Rational& r) { return r.get_str(); };
  if (fam == "tree")
    return count_tree_decorated(a.q, a.faces, a.m, parse_root(a.root)).get_str();
  if (fam == "spanning")
    return a.printed ? rat(count_spanning_tri_printed(a.faces)) : count_spanning(a.q, a.faces, parse_root(a.root)).get_str();
  if (fam == "boundary")
    return a.printed ? rat(count_boundary_decorated_printed(a.q, a.faces, a.m1, a.m2))
                     : count_boundary_decorated(a.q, a.faces, a.m1, a.m2).get_str();
  if (fam == "forest")
    return a.printed ? rat(count_forest_exact(a.q, a.faces, a.sizes, a.labeled))
                     : count_forest(a.q, a.faces, a.sizes, a.labeled).get_str();
  if (fam == "spanning-forest")
    return a.printed ? rat(count_spanning_forest_printed(a.q, a.faces, a.sizes))
                     : count_spanning_forest(a.q, a.faces, a.sizes).get_str();
  if (fam == "bubble")
    return count_bubble(a.e, a.m).get_str();
  if (fam == "mullin")
    return mullin_count(a.e).get_str();
  if (fam == "catalan")
    return catalan_ext(a.m, a.n).get_str();
  throw Error(Errc::ParseError, "unknown family " + fam);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Glue and unglue tree-decorated planar maps; counts, series, catalogs, sampling."};
  app.require_subcommand(1);
  Config config;
  app.add_flag("--verbose", config.verbose, "Print every verification line");
  app.add_option("--catalog-dir", config.catalog_dir, "Catalog directory (default: MAPGLUE_CATALOG_DIR or ./catalogs)");

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", config.cap, "Largest number of enumerated edges")->check(CLI::PositiveNumber);
  };

  CountArgs count;
  auto* c = app.add_subcommand("count", "Closed-form counts");
  c->add_option("--family", count.family, "tree|spanning|boundary|forest|spanning-forest|bubble|mullin|catalan")
      ->check(CLI::IsMember({"tree", "spanning", "boundary", "forest", "spanning-forest", "bubble", "mullin", "catalan"}));
  c->add_option("--q", count.q, "3 or 4");
  c->add_option("--faces", count.faces, "Number of (internal) faces");
  c->add_option("--tree-edges,--m", count.m, "Tree size; first index of C_{m,n}");
  c->add_option("--m1", count.m1, "Half perimeter left on the boundary");
  c->add_option("--m2", count.m2, "Tree size on the boundary");
  c->add_option("--edges", count.e, "Edges (mullin) or internal edges (bubble)");
  c->add_option("--n", count.n, "Second index of C_{m,n}");
  c->add_option("--root", count.root, "on-tree|anywhere")->check(CLI::IsMember({"on-tree", "anywhere"}));
  c->add_option("--sizes", count.sizes, "Tree sizes of a forest")->delimiter(',');
  c->add_flag("--labeled", count.labeled, "Labeled forests");
  c->add_flag("--printed", count.printed, "Evaluate the printed closed form");

  std::string which = "S";
  int max_x = 5, max_y = 3;
  auto* s = app.add_subcommand("series", "Generating-function coefficients");
  s->add_option("--which", which, "B|B1|S")->check(CLI::IsMember({"B", "B1", "S"}));
  s->add_option("--max-x", max_x, "x order")->check(CLI::NonNegativeNumber);
  s->add_option("--max-y,--max-z", max_y, "Order of the perimeter variable")->check(CLI::NonNegativeNumber);

  CatalogFilter filter;
  auto* en = app.add_subcommand("enumerate", "Build a catalog and store it in the catalog directory");
  en->add_option("--q", filter.q, "0 (general), 3 or 4");
  en->add_option("--faces", filter.faces, "Faces (internal faces with a perimeter)");
  en->add_option("--edges", filter.edges, "Total edges");
  en->add_option("--perimeter", filter.perimeter, "Root-face degree");
  en->add_flag("--simple", filter.simple, "Simple boundary");
  en->add_flag("--bridgeless", filter.bridgeless, "Bridgeless boundary");
  add_cap(en);

  std::string text, input, tree_word;
  bool bridgeless = false, partial = false;
  auto* g = app.add_subcommand("glue", "Glue a boundary map along a tree");
  g->add_option("--map", text, "Boundary map record");
  g->add_option("--input", input, "File holding the boundary map record");
  g->add_option("--tree", tree_word, "Tree contour as U/D word")->required();
  g->add_flag("--bridgeless", bridgeless, "Bridgeless boundary: output a bubble-map");
  g->add_flag("--partial", partial, "Glue the tree on the first 2m boundary edges only");

  auto* u = app.add_subcommand("unglue", "Cut a decorated map open along its tree");
  u->add_option("--decorated", text, "Decorated-map record");
  u->add_option("--input", input, "File holding the record (or bubble text)");
  u->add_flag("--bridgeless", bridgeless, "Input is a bubble-map with its circuit");

  SampleSpec spec;
  std::string format = "record";
  auto* sa = app.add_subcommand("sample", "Uniform tree-decorated q-angulations");
  sa->add_option("--q", spec.q, "3 or 4")->required();
  sa->add_option("--faces", spec.f, "Faces")->required();
  sa->add_option("--tree-edges", spec.m, "Tree size")->required();
  sa->add_option("--seed", spec.seed, "Seed");
  sa->add_option("--count", spec.count, "Number of draws")->check(CLI::NonNegativeNumber);
  sa->add_option("--format", format, "record|plain");
  add_cap(sa);

  std::string suite;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  add_cap(v);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*c) {
      std::cout << run_count(count) << '\n';
    } else if (*s) {
      if (which == "B1") {
        const auto b1 = series_B1(max_x);
        for (int e = 0; e <= max_x; ++e)
          std::cout << "x^" << e << " : " << b1[e].get_str() << '\n';
      } else if (which == "B") {
        std::cout << format_series(series_B(max_x, max_y), 'y');
      } else {
        std::cout << format_series(series_S(max_x, max_y), 'z');
      }
    } else if (*en) {
      const auto cat = filter.perimeter >= 0 || filter.simple || filter.bridgeless
                           ? enumerate_boundary_maps(filter, config.enumeration())
                           : (filter.edges >= 0 && filter.faces < 0 ? enumerate_maps(filter.edges, config.enumeration())
                                                                     : enumerate_q_angulations(filter.q, filter.faces,
                                                                                               config.enumeration()));
      std::filesystem::create_directories(config.dir());
      const auto path = config.dir() / catalog_file_name(cat.filter);
      write_catalog(path, cat);
      std::cout << path.string() << " count=" << cat.size() << '\n';
    } else if (*g) {
      const auto bmap = parse_map(first_line(read_input(text, input)));
      const auto tree = DyckPath::parse(tree_word);
      if (bridgeless) {
        std::cout << to_text(glue_bridgeless(bmap, tree));
      } else if (partial) {
        const auto bd = glue_partial(bmap, tree);
        std::cout << to_text(bd.bmap) << " tree=" << detail::join_ints(bd.tree_edges, 1)
                  << " tree_root=" << bd.tree_root + 1 << '\n';
      } else {
        std::cout << to_text(glue(bmap, tree)) << '\n';
      }
    } else if (*u) {
      const auto in = read_input(text, input);
      Unglued out;
      if (bridgeless) {
        const auto bg = parse_bubble(in);
        out = unglue_bubble(bg.bubble, bg.circuit);
      } else {
        out = unglue(parse_decorated(first_line(in)));
      }
      std::cout << "tree=" << out.tree.word() << '\n' << to_text(out.bmap) << '\n';
    } else if (*sa) {
      const auto cat = sampler_catalog(spec, config.enumeration(), config.dir());
      for (const auto& tdm : sample_tree_decorated(spec, cat))
        std::cout << export_decorated(tdm, format);
    } else if (*v) {
      const auto r = run_suite(suite, config.enumeration());
      for (const auto& line : r.lines)
        if (config.verbose || line.rfind("ok ", 0) != 0)
          std::cout << line << '\n';
      std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
                << r.failures << " failures)\n";
      return r.passed ? 0 : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalMismatch ? kFailed : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return 0;
}

#include "mapglue/sampler.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "mapglue/counting.hpp"

namespace mapglue {

namespace {

void check_spec(const SampleSpec& spec)
{
  auto need = [](bool ok, const char* why) {
    if (!ok)
      throw Error(Errc::Infeasible, why);
  };
  need(spec.q == 3 || spec.q == 4, "q must be 3 or 4");
  need(spec.f >= 1, "f must be positive");
  need(spec.q != 3 || spec.f % 2 == 0, "triangulations have an even number of faces");
  need(spec.m >= 1, "the tree has at least one edge");
  need(spec.m <= q_vertices(spec.q, spec.f) - 1, "the tree has more edges than the map allows");
  need(spec.count >= 0, "count must be non-negative");
}

CatalogFilter sampler_filter(const SampleSpec& spec)
{
  CatalogFilter filter;
  filter.q = spec.q;
  filter.faces = spec.f;
  filter.perimeter = 2 * spec.m;
  filter.simple = true;
  return filter;
}

bool matches(const Catalog& cat, const SampleSpec& spec)
{
  const CatalogFilter& f = cat.filter;
  return f.q == spec.q && f.faces == spec.f && f.perimeter == 2 * spec.m && f.simple;
}

unsigned worker_count(std::size_t jobs)
{
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(1, jobs / 256)));
}

// Fills out[i] = draw(i) over a few threads; draws only depend on i.
template <class F>
void parallel_draws(std::vector<TreeDecoratedMap>& out, F draw)
{
  const unsigned workers = worker_count(out.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = draw(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < out.size(); i += workers)
          out[i] = draw(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace

Catalog sampler_catalog(const SampleSpec& spec, const EnumerationConfig& cfg, const std::filesystem::path& dir)
{
  check_spec(spec);
  const CatalogFilter filter = sampler_filter(spec);
  const auto path = dir / catalog_file_name(filter);
  Catalog cat;
  if (std::filesystem::exists(path)) {
    cat = read_catalog(path);
    if (!matches(cat, spec))
      throw Error(Errc::CatalogMissing, "catalog file " + path.string() + " has another filter");
  } else {
    try {
      cat = enumerate_boundary_maps(filter, cfg);
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded)
        throw;
      throw Error(Errc::CatalogMissing, "no catalog file and the enumeration cap is too small: " + std::string(e.what()));
    }
  }
  if (cat.size() == 0)
    throw Error(Errc::Infeasible, "no simple-boundary map with these sizes");
  return cat;
}

std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const EnumerationConfig& cfg)
{
  return sample_tree_decorated(spec, sampler_catalog(spec, cfg));
}

std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const Catalog& catalog)
{
  check_spec(spec);
  if (!matches(catalog, spec))
    throw Error(Errc::CatalogMissing, "catalog does not match the sample spec");
  if (catalog.size() == 0)
    throw Error(Errc::Infeasible, "empty catalog");
  std::vector<TreeDecoratedMap> out(spec.count);
  parallel_draws(out, [&](std::size_t i) {
    auto gen = SplitMix64::stream(spec.seed, i);
    const auto entry = gen.below(catalog.size());
    const DyckPath tree = sample_tree_uniform(spec.m, gen);
    return glue(catalog.map(entry), tree);
  });
  return out;
}

std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const Catalog& catalog,
                                                    std::span<const DyckPath> trees)
{
  check_spec(spec);
  if (!matches(catalog, spec))
    throw Error(Errc::CatalogMissing, "catalog does not match the sample spec");
  if (catalog.size() == 0)
    throw Error(Errc::Infeasible, "empty catalog");
  if (trees.empty())
    throw Error(Errc::Infeasible, "empty tree subset");
  for (const auto& t : trees)
    if (t.edges() != spec.m)
      throw Error(Errc::SizeMismatch, "tree subset has a tree of the wrong size");
  std::vector<TreeDecoratedMap> out(spec.count);
  parallel_draws(out, [&](std::size_t i) {
    auto gen = SplitMix64::stream(spec.seed, i);
    const auto entry = gen.below(catalog.size());
    const auto pick = gen.below(trees.size());
    return glue(catalog.map(entry), trees[pick]);
  });
  return out;
}

std::vector<TreeDecoratedMap> decorated_support(const SampleSpec& spec, const Catalog& catalog)
{
  check_spec(spec);
  std::vector<TreeDecoratedMap> out;
  const auto trees = enumerate_trees(spec.m);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto bmap = catalog.map(i);
    for (const auto& t : trees)
      out.push_back(glue(bmap, t));
  }
  return out;
}

ChiSquareReport chi_square_uniform(std::span<const long> counts)
{
  ChiSquareReport rep;
  rep.cells = static_cast<int>(counts.size());
  for (long c : counts)
    rep.draws += c;
  rep.dof = std::max(0, rep.cells - 1);
  if (rep.cells <= 1 || rep.draws == 0)
    return rep;
  const double expected = static_cast<double>(rep.draws) / rep.cells;
  for (long c : counts)
    rep.statistic += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(rep.dof);
  rep.p_value = boost::math::cdf(boost::math::complement(dist, rep.statistic));
  return rep;
}

ChiSquareReport tree_marginal_test(const SampleSpec& spec, long draws, const EnumerationConfig& cfg)
{
  SampleSpec s = spec;
  s.count = static_cast<int>(draws);
  const auto trees = enumerate_trees(spec.m);
  std::map<DyckPath, std::size_t> cell;
  for (std::size_t i = 0; i < trees.size(); ++i)
    cell.emplace(trees[i], i);
  std::vector<long> counts(trees.size(), 0);
  for (const auto& tdm : sample_tree_decorated(s, cfg)) {
    auto it = cell.find(tree_to_contour(decoration_tree(tdm)));
    if (it == cell.end())
      throw Error(Errc::InternalMismatch, "sampled decoration has the wrong size");
    ++counts[it->second];
  }
  return chi_square_uniform(counts);
}

ChiSquareReport support_test(const SampleSpec& spec, long draws, const EnumerationConfig& cfg)
{
  SampleSpec s = spec;
  s.count = static_cast<int>(draws);
  const Catalog cat = sampler_catalog(spec, cfg);
  std::map<CanonicalCode, std::size_t> cell;
  for (const auto& tdm : decorated_support(spec, cat))
    if (!cell.emplace(decorated_key(tdm), cell.size()).second)
      throw Error(Errc::InternalMismatch, "two gluings give the same decorated map");
  std::vector<long> counts(cell.size(), 0);
  for (const auto& tdm : sample_tree_decorated(s, cat)) {
    auto it = cell.find(decorated_key(tdm));
    if (it == cell.end())
      throw Error(Errc::InternalMismatch, "sample outside the decorated family");
    ++counts[it->second];
  }
  return chi_square_uniform(counts);
}

namespace {

// The decorated map with darts renamed to canonical labels.
TreeDecoratedMap canonical_decorated(const TreeDecoratedMap& tdm)
{
  const PlanarMap& map = tdm.map;
  std::vector<int> order(map.dart_count());
  canonical_order(map.sigma_table(), map.alpha_table(), map.root(), order);
  std::vector<Dart> sigma(map.dart_count()), alpha(map.dart_count());
  for (Dart d = 0; d < map.dart_count(); ++d) {
    sigma[order[d]] = order[map.sigma(d)];
    alpha[order[d]] = order[map.alpha(d)];
  }
  TreeDecoratedMap out;
  out.map = PlanarMap::build(std::move(sigma), std::move(alpha), order[map.root()]);
  for (int e : tdm.tree_edges)
    out.tree_edges.push_back(out.map.edge_of(order[map.edge_dart(e)]));
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  out.root_mode = tdm.root_mode;
  return out;
}

} // namespace

std::string export_decorated(const TreeDecoratedMap& tdm, std::string_view format)
{
  if (format == "record")
    return to_text(tdm) + '\n';
  if (format != "plain")
    throw Error(Errc::UnknownFormat, "unknown export format '" + std::string(format) + "'");
  const auto c = canonical_decorated(tdm);
  const PlanarMap& map = c.map;
  std::ostringstream out;
  out << "decorated V=" << map.vertex_count() << " E=" << map.edge_count() << " F=" << map.face_count()
      << " root=" << map.root() + 1 << " mode=" << (c.root_mode == RootMode::OnTree ? "on-tree" : "anywhere")
      << '\n';
  const auto verts = map.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    out << "vertex " << v + 1 << ':';
    for (Dart d : verts[v])
      out << ' ' << d + 1;
    out << '\n';
  }
  for (int e = 0; e < map.edge_count(); ++e) {
    const Dart d = map.edge_dart(e);
    out << "edge " << e + 1 << ": " << d + 1 << ' ' << map.alpha(d) + 1 << " vertices " << map.vertex_of(d) + 1
        << ' ' << map.head_vertex(d) + 1 << '\n';
  }
  out << "tree:";
  for (int e : c.tree_edges)
    out << ' ' << e + 1;
  out << '\n';
  return out.str();
}

TreeDecoratedMap parse_plain_export(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [](const std::string& why) -> Error { return Error(Errc::ParseError, why); };
  if (!std::getline(in, line))
    throw fail("empty export");
  const auto head = detail::parse_record(line, "decorated");
  auto field = [&](const char* k) {
    auto it = head.find(k);
    if (it == head.end())
      throw fail(std::string("missing field ") + k);
    return it->second;
  };
  int edges = 0, root = 0;
  try {
    edges = std::stoi(field("E"));
    root = std::stoi(field("root")) - 1;
  } catch (const std::logic_error&) {
    throw fail("bad number in export header");
  }
  const std::string mode = field("mode");
  if (mode != "on-tree" && mode != "anywhere")
    throw fail("bad root mode " + mode);
  if (edges < 0)
    throw fail("negative edge count");
  const int n = 2 * edges;
  std::vector<Dart> sigma(n, -1), alpha(n, -1);
  std::vector<int> tree_ids;
  bool saw_tree = false;
  auto dart = [&](int d1) {
    if (d1 < 1 || d1 > n)
      throw fail("dart out of range");
    return d1 - 1;
  };
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "vertex") {
      std::string id;
      ls >> id;
      std::vector<Dart> rot;
      int d;
      while (ls >> d)
        rot.push_back(dart(d));
      if (rot.empty())
        throw fail("vertex without darts");
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (sigma[rot[k]] != -1)
          throw fail("dart on two vertices");
        sigma[rot[k]] = rot[(k + 1) % rot.size()];
      }
    } else if (kind == "edge") {
      std::string id;
      int a = 0, b = 0;
      if (!(ls >> id >> a >> b))
        throw fail("bad edge line");
      const Dart da = dart(a), db = dart(b);
      if (alpha[da] != -1 || alpha[db] != -1)
        throw fail("dart on two edges");
      alpha[da] = db;
      alpha[db] = da;
    } else if (kind == "tree:") {
      saw_tree = true;
      int e;
      while (ls >> e)
        tree_ids.push_back(e - 1);
    } else {
      throw fail("unknown line '" + line + "'");
    }
  }
  if (!saw_tree)
    throw fail("missing tree line");
  if (std::count(sigma.begin(), sigma.end(), -1) || std::count(alpha.begin(), alpha.end(), -1))
    throw fail("incomplete rotation system");
  auto map = PlanarMap::build(std::move(sigma), std::move(alpha), root);
  for (int e : tree_ids)
    if (e < 0 || e >= map.edge_count())
      throw fail("tree edge out of range");
  return make_decorated(std::move(map), std::move(tree_ids),
                        mode == "on-tree" ? RootMode::OnTree : RootMode::Anywhere);
}

} // namespace mapglue

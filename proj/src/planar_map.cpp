#include "mapglue/planar_map.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace mapglue {

namespace {

// Labels every dart with the id of its cycle under perm; ids follow the
// smallest dart of each cycle. Returns the number of cycles.
int label_cycles(std::span<const Dart> perm, std::vector<int>& out)
{
  out.assign(perm.size(), -1);
  int count = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (out[start] >= 0)
      continue;
    Dart d = static_cast<Dart>(start);
    do {
      out[d] = count;
      d = perm[d];
    } while (d != static_cast<Dart>(start));
    ++count;
  }
  return count;
}

std::vector<Dart> compose(std::span<const Dart> outer, std::span<const Dart> inner)
{
  std::vector<Dart> r(inner.size());
  for (std::size_t d = 0; d < inner.size(); ++d)
    r[d] = outer[inner[d]];
  return r;
}

bool is_permutation_table(std::span<const Dart> perm)
{
  std::vector<char> seen(perm.size(), 0);
  for (Dart d : perm) {
    if (d < 0 || d >= static_cast<Dart>(perm.size()) || seen[d])
      return false;
    seen[d] = 1;
  }
  return true;
}

std::vector<std::vector<Dart>> cycles_of(std::span<const Dart> perm)
{
  std::vector<std::vector<Dart>> result;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start])
      continue;
    auto& cyc = result.emplace_back();
    Dart d = static_cast<Dart>(start);
    do {
      seen[d] = 1;
      cyc.push_back(d);
      d = perm[d];
    } while (d != static_cast<Dart>(start));
  }
  return result;
}

} // namespace

int cycle_count(std::span<const Dart> perm)
{
  std::vector<int> ids;
  return label_cycles(perm, ids);
}

int euler_characteristic(std::span<const Dart> sigma, std::span<const Dart> alpha)
{
  const int v = cycle_count(sigma);
  const int e = static_cast<int>(sigma.size()) / 2;
  const int f = cycle_count(compose(sigma, alpha));
  return v - e + f;
}

PlanarMap PlanarMap::build(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root,
                           Labels labels)
{
  const std::size_t n = sigma.size();
  if (alpha.size() != n || n % 2 != 0 || n == 0)
    throw Error(Errc::NotInvolution, "sigma and alpha must be non-empty tables of equal even length");
  if (!is_permutation_table(sigma))
    throw Error(Errc::NotInvolution, "sigma is not a permutation");
  for (std::size_t d = 0; d < n; ++d) {
    const Dart a = alpha[d];
    if (a < 0 || a >= static_cast<Dart>(n) || a == static_cast<Dart>(d) || alpha[a] != static_cast<Dart>(d))
      throw Error(Errc::NotInvolution, "alpha is not a fixed-point-free involution");
  }
  if (root < 0 || root >= static_cast<Dart>(n))
    throw Error(Errc::InvalidRoot, "root dart out of range");

  std::vector<int> order(n);
  if (!canonical_order(sigma, alpha, root, order))
    throw Error(Errc::Disconnected, "sigma and alpha do not act transitively");
  if (euler_characteristic(sigma, alpha) != 2)
    throw Error(Errc::NonPlanar, "Euler characteristic differs from 2");
  for (const auto& [d, _] : labels)
    if (d < 0 || d >= static_cast<Dart>(n))
      throw Error(Errc::ParseError, "label attached to a missing dart");

  PlanarMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.labels_ = std::move(labels);
  m.sigma_inv_.resize(n);
  for (std::size_t d = 0; d < n; ++d)
    m.sigma_inv_[m.sigma_[d]] = static_cast<Dart>(d);
  m.vertex_count_ = label_cycles(m.sigma_, m.vertex_of_);
  m.face_count_ = label_cycles(compose(m.sigma_, m.alpha_), m.face_of_);
  m.edge_of_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (m.edge_of_[d] >= 0)
      continue;
    const int e = static_cast<int>(m.edge_dart_.size());
    m.edge_dart_.push_back(static_cast<Dart>(d));
    m.edge_of_[d] = e;
    m.edge_of_[m.alpha_[d]] = e;
  }
  return m;
}

std::vector<std::vector<Dart>> PlanarMap::vertices() const { return cycles_of(sigma_); }

std::vector<std::vector<Dart>> PlanarMap::faces() const
{
  return cycles_of(compose(sigma_, alpha_));
}

PlanarMap PlanarMap::rerooted(Dart new_root) const
{
  if (new_root < 0 || new_root >= dart_count())
    throw Error(Errc::InvalidRoot, "root dart out of range");
  PlanarMap m = *this;
  m.root_ = new_root;
  return m;
}

PlanarMap PlanarMap::mirrored() const { return build(sigma_inv_, alpha_, root_, labels_); }

PlanarMap PlanarMap::with_labels(Labels labels) const
{
  return build(sigma_, alpha_, root_, std::move(labels));
}

std::vector<std::vector<Dart>> faces(const PlanarMap& map) { return map.faces(); }

std::vector<Dart> boundary_walk(const BoundaryMap& bmap)
{
  std::vector<Dart> walk;
  Dart d = bmap.root();
  do {
    walk.push_back(d);
    d = bmap.phi(d);
  } while (d != bmap.root());
  return walk;
}

bool is_simple_curve_boundary(const BoundaryMap& bmap)
{
  std::vector<char> seen(bmap.vertex_count(), 0);
  for (Dart d : boundary_walk(bmap)) {
    const int v = bmap.vertex_of(d);
    if (seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

bool is_bridgeless_boundary(const BoundaryMap& bmap)
{
  std::vector<char> seen(bmap.edge_count(), 0);
  for (Dart d : boundary_walk(bmap)) {
    const int e = bmap.edge_of(d);
    if (seen[e])
      return false;
    seen[e] = 1;
  }
  return true;
}

bool is_simple_boundary(const BoundaryMap& bmap)
{
  return is_simple_curve_boundary(bmap) && is_bridgeless_boundary(bmap);
}

bool is_q_angulation(const PlanarMap& map, int q, bool skip_external)
{
  const int root_face = map.face_of(map.root());
  for (const auto& f : map.faces()) {
    if (skip_external && map.face_of(f.front()) == root_face)
      continue;
    if (static_cast<int>(f.size()) != q)
      return false;
  }
  return true;
}

bool canonical_order(std::span<const Dart> sigma, std::span<const Dart> alpha, Dart root,
                     std::span<int> order)
{
  const int n = static_cast<int>(sigma.size());
  std::fill(order.begin(), order.end(), -1);
  // order doubles as the BFS queue through its inverse.
  std::vector<Dart> queue;
  queue.reserve(n);
  order[root] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Dart d = queue[head];
    for (Dart next : {sigma[d], alpha[d]}) {
      if (order[next] < 0) {
        order[next] = static_cast<int>(queue.size());
        queue.push_back(next);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

CanonicalCode canonical_code(std::span<const Dart> sigma, std::span<const Dart> alpha, Dart root)
{
  const int n = static_cast<int>(sigma.size());
  std::vector<int> order(n);
  canonical_order(sigma, alpha, root, order);
  CanonicalCode c;
  c.code.resize(2 * n);
  for (int d = 0; d < n; ++d) {
    c.code[order[d]] = order[sigma[d]];
    c.code[n + order[d]] = order[alpha[d]];
  }
  return c;
}

CanonicalCode canonical_code(const PlanarMap& map)
{
  return canonical_code(map.sigma_table(), map.alpha_table(), map.root());
}

PlanarMap canonical_form(const PlanarMap& map)
{
  const int n = map.dart_count();
  std::vector<int> order(n);
  canonical_order(map.sigma_table(), map.alpha_table(), map.root(), order);
  std::vector<Dart> sigma(n), alpha(n);
  for (int d = 0; d < n; ++d) {
    sigma[order[d]] = order[map.sigma(d)];
    alpha[order[d]] = order[map.alpha(d)];
  }
  Labels labels;
  for (const auto& [d, v] : map.labels())
    labels[order[d]] = v;
  return PlanarMap::build(std::move(sigma), std::move(alpha), 0, std::move(labels));
}

PlanarMap from_code(const CanonicalCode& code)
{
  const std::size_t n = code.code.size() / 2;
  std::vector<Dart> sigma(code.code.begin(), code.code.begin() + n);
  std::vector<Dart> alpha(code.code.begin() + n, code.code.end());
  return PlanarMap::build(std::move(sigma), std::move(alpha), 0);
}

CanonicalCode unrooted_code(const PlanarMap& map)
{
  CanonicalCode best = canonical_code(map.sigma_table(), map.alpha_table(), 0);
  for (Dart r = 1; r < map.dart_count(); ++r) {
    auto c = canonical_code(map.sigma_table(), map.alpha_table(), r);
    if (c < best)
      best = std::move(c);
  }
  return best;
}

int distinct_rootings(const PlanarMap& map)
{
  std::vector<CanonicalCode> codes;
  for (Dart r = 0; r < map.dart_count(); ++r)
    codes.push_back(canonical_code(map.sigma_table(), map.alpha_table(), r));
  std::sort(codes.begin(), codes.end());
  return static_cast<int>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

namespace detail {

std::map<std::string, std::string> parse_record(std::string_view line, std::string_view tag)
{
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(line)};
  std::string token;
  if (!(in >> token) || token != tag)
    throw Error(Errc::ParseError, "expected record tag '" + std::string(tag) + "'");
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ParseError, "malformed field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

std::vector<int> parse_int_list(std::string_view text, char sep)
{
  std::vector<int> values;
  if (text.empty())
    return values;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    const auto piece = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc{} || ptr != piece.data() + piece.size())
      throw Error(Errc::ParseError, "bad integer '" + std::string(piece) + "'");
    values.push_back(v);
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return values;
}

std::string join_ints(std::span<const int> values, int offset, char sep)
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(values[i] + offset);
  }
  return out;
}

} // namespace detail

std::string to_text(const PlanarMap& map)
{
  std::string out = "map E=" + std::to_string(map.edge_count());
  out += " root=" + std::to_string(map.root() + 1);
  out += " sigma=" + detail::join_ints(map.sigma_table(), 1);
  out += " alpha=" + detail::join_ints(map.alpha_table(), 1);
  if (!map.labels().empty()) {
    out += " labels=";
    bool first = true;
    for (const auto& [d, v] : map.labels()) {
      if (!first)
        out += ',';
      first = false;
      out += std::to_string(d + 1) + ':' + v;
    }
  }
  return out;
}

PlanarMap parse_map(std::string_view line)
{
  auto fields = detail::parse_record(line, "map");
  for (const char* key : {"E", "root", "sigma", "alpha"})
    if (!fields.count(key))
      throw Error(Errc::ParseError, std::string("missing field ") + key);
  const int edges = detail::parse_int_list(fields["E"]).at(0);
  auto sigma = detail::parse_int_list(fields["sigma"]);
  auto alpha = detail::parse_int_list(fields["alpha"]);
  if (static_cast<int>(sigma.size()) != 2 * edges || static_cast<int>(alpha.size()) != 2 * edges)
    throw Error(Errc::ParseError, "table length does not match E");
  for (auto& d : sigma)
    --d;
  for (auto& d : alpha)
    --d;
  const int root = detail::parse_int_list(fields["root"]).at(0) - 1;
  Labels labels;
  if (fields.count("labels") && !fields["labels"].empty()) {
    std::string_view text = fields["labels"];
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      auto piece = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
      const auto colon = piece.find(':');
      if (colon == std::string_view::npos)
        throw Error(Errc::ParseError, "label without ':'");
      const int d = detail::parse_int_list(piece.substr(0, colon)).at(0) - 1;
      labels[d] = std::string(piece.substr(colon + 1));
      if (next == std::string_view::npos)
        break;
      pos = next + 1;
    }
  }
  return PlanarMap::build(std::move(sigma), std::move(alpha), root, std::move(labels));
}

} // namespace mapglue

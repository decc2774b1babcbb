#include "schubert/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void link(CartanDatum& d, int i, int j, int a_ij = -1, int a_ji = -1) {
  d.entries[static_cast<std::size_t>(i * d.rank + j)] = a_ij;
  d.entries[static_cast<std::size_t>(j * d.rank + i)] = a_ji;
}

void check_rank(Family family, int rank) {
  const char f = static_cast<char>(family);
  auto fail = [&](const std::string& why) {
    throw ConfigError(std::string("type ") + f + std::to_string(rank) + ": " + why);
  };
  if (rank < 1) fail("rank must be positive");
  if (rank > kMaxRank) fail("rank exceeds the supported maximum of " + std::to_string(kMaxRank));
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("family B/C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) fail("family D requires rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("family E requires rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("family F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("family G requires rank 2");
      break;
  }
}

}  // namespace

std::string CartanDatum::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanDatum make_cartan(Family family, int rank) {
  check_rank(family, rank);
  CartanDatum d{family, rank, std::vector<int>(static_cast<std::size_t>(rank * rank), 0)};
  for (int i = 0; i < rank; ++i) d.entries[static_cast<std::size_t>(i * rank + i)] = 2;

  const int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(d, i, i + 1);
      break;
    case Family::B:
      // alpha_n short
      for (int i = 0; i + 2 < n; ++i) link(d, i, i + 1);
      link(d, n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      // alpha_n long
      for (int i = 0; i + 2 < n; ++i) link(d, i, i + 1);
      link(d, n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      // chain 1..n-1, node n attached to n-2
      for (int i = 0; i + 2 < n; ++i) link(d, i, i + 1);
      link(d, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      link(d, 0, 2);
      link(d, 2, 3);
      link(d, 1, 3);
      for (int i = 3; i + 1 < n; ++i) link(d, i, i + 1);
      break;
    case Family::F:
      // 1-2=>3-4, alpha_3 and alpha_4 short
      link(d, 0, 1);
      link(d, 1, 2, -1, -2);
      link(d, 2, 3);
      break;
    case Family::G:
      // alpha_1 long, alpha_2 short
      link(d, 0, 1, -1, -3);
      break;
  }
  return d;
}

CartanDatum parse_type(std::string_view type) {
  if (type.empty()) throw ParseError("empty type string", 0);
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(type.front())));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    throw ParseError("unknown family '" + std::string(1, type.front()) + "'", 0);
  if (type.size() < 2) throw ParseError("missing rank after family letter", 1);
  int rank = 0;
  for (std::size_t pos = 1; pos < type.size(); ++pos) {
    const char c = type[pos];
    if (c < '0' || c > '9')
      throw ParseError("unexpected character '" + std::string(1, c) + "' in rank", pos);
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw ConfigError("rank exceeds the supported maximum of " + std::to_string(kMaxRank));
  }
  return make_cartan(static_cast<Family>(f), rank);
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

bool Root::is_negative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c < 0; });
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  // alpha_1 before alpha_2, alpha_1 + alpha_2 before alpha_2 + alpha_3, ...
  return b.coords <=> a.coords;
}

int height(const Root& root) { return root.height(); }

std::vector<int> conjugate_partition(std::span<const int> parts) {
  if (parts.empty()) return {};
  const int largest = *std::max_element(parts.begin(), parts.end());
  std::vector<int> out;
  for (int j = 1; j <= largest; ++j) {
    const auto count = std::count_if(parts.begin(), parts.end(), [j](int p) { return p >= j; });
    out.push_back(static_cast<int>(count));
  }
  return out;
}

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem rs;
  rs.datum_ = make_cartan(family, rank);

  // Breadth-first closure of the simple roots under simple reflections,
  // keeping only positive vectors.
  std::vector<Root> found;
  std::vector<Derivation> how;
  std::map<std::vector<int>, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (int i = 0; i < rank; ++i) {
    Root r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    r.coords[static_cast<std::size_t>(i)] = 1;
    seen.emplace(r.coords, found.size());
    queue.push_back(found.size());
    found.push_back(std::move(r));
    how.push_back({i + 1, std::nullopt});
  }
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      Root image = rs.reflect_simple(i, found[at]);
      if (!image.is_positive() || seen.contains(image.coords)) continue;
      seen.emplace(image.coords, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(image));
      how.push_back({i, at});
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> new_index(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_index[order[k]] = k;

  for (std::size_t k = 0; k < order.size(); ++k) {
    rs.roots_.push_back(found[order[k]]);
    Derivation d = how[order[k]];
    if (d.parent) d.parent = new_index[*d.parent];
    rs.derivations_.push_back(d);
  }

  for (const Root& r : rs.roots_) {
    const auto h = static_cast<std::size_t>(r.height());
    if (rs.histogram_.size() < h) rs.histogram_.resize(h, 0);
    ++rs.histogram_[h - 1];
  }
  rs.exponents_ = conjugate_partition(rs.histogram_);
  std::sort(rs.exponents_.begin(), rs.exponents_.end());
  return rs;
}

RootSystem RootSystem::parse(std::string_view type) {
  const CartanDatum d = parse_type(type);
  return build(d.family, d.rank);
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw DomainError("simple root index " + std::to_string(i) + " out of range");
  return roots_[static_cast<std::size_t>(i - 1)];
}

Root RootSystem::reflect_simple(int i, const Root& root) const {
  if (i < 1 || i > rank())
    throw DomainError("simple reflection index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(rank()));
  if (static_cast<int>(root.coords.size()) != rank()) throw DomainError("root has wrong dimension");
  const int s = i - 1;
  int pairing = 0;
  for (int k = 0; k < rank(); ++k) pairing += datum_(s, k) * root.coords[static_cast<std::size_t>(k)];
  Root out = root;
  out.coords[static_cast<std::size_t>(s)] -= pairing;
  return out;
}

std::optional<std::size_t> RootSystem::index_of(const Root& root) const {
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), root);
  if (it == roots_.end() || *it != root) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::string RootSystem::labelling() const {
  const int n = rank();
  // relative squared lengths, propagated along bonds: |a_j|^2 / |a_i|^2 = a(i,j) / a(j,i)
  std::vector<int> len(static_cast<std::size_t>(n), 0);
  len[0] = 6;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || datum_(i, j) == 0 || len[static_cast<std::size_t>(i)] == 0 ||
            len[static_cast<std::size_t>(j)] != 0)
          continue;
        len[static_cast<std::size_t>(j)] = len[static_cast<std::size_t>(i)] * datum_(i, j) / datum_(j, i);
        changed = true;
      }
    }
  }
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int bond = datum_(i, j) * datum_(j, i);
      if (bond == 0) continue;
      out << (first ? "" : ", ") << i + 1 << (bond == 1 ? "-" : bond == 2 ? "=" : "≡") << j + 1;
      first = false;
    }
  }
  const int longest = *std::max_element(len.begin(), len.end());
  std::vector<int> shorts;
  for (int i = 0; i < n; ++i)
    if (len[static_cast<std::size_t>(i)] < longest) shorts.push_back(i + 1);
  if (!shorts.empty()) {
    out << (first ? "" : " ") << "(short:";
    for (int s : shorts) out << ' ' << s;
    out << ')';
  }
  if (first && shorts.empty()) out << "1";
  return out.str();
}

}  // namespace schubert

#include "schubert/weyl.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "schubert/error.hpp"

namespace schubert {

namespace {

constexpr std::size_t at(int row, int col) { return static_cast<std::size_t>(row * kMaxRank + col); }

// Sign of the root stored in column `col`: nonzero entries of a root share a sign.
bool column_negative(const WeylElement::Matrix& m, int rank, int col) {
  for (int r = 0; r < rank; ++r) {
    const int v = m[at(r, col)];
    if (v != 0) return v < 0;
  }
  return false;
}

// m <- m S_i : every column j picks up -a(i, j) times column i.
void right_apply_simple(const CartanDatum& cd, WeylElement::Matrix& m, int s) {
  const int n = cd.rank;
  std::array<int, kMaxRank> col_s{};
  for (int r = 0; r < n; ++r) col_s[static_cast<std::size_t>(r)] = m[at(r, s)];
  for (int j = 0; j < n; ++j) {
    const int a = cd(s, j);
    if (a == 0) continue;
    for (int r = 0; r < n; ++r)
      m[at(r, j)] = static_cast<std::int8_t>(m[at(r, j)] - a * col_s[static_cast<std::size_t>(r)]);
  }
}

// m <- S_i m : only row i changes.
void left_apply_simple(const CartanDatum& cd, WeylElement::Matrix& m, int s) {
  const int n = cd.rank;
  for (int c = 0; c < n; ++c) {
    int pairing = 0;
    for (int k = 0; k < n; ++k) pairing += cd(s, k) * m[at(k, c)];
    m[at(s, c)] = static_cast<std::int8_t>(m[at(s, c)] - pairing);
  }
}

WeylElement::Matrix multiply(const WeylElement::Matrix& x, const WeylElement::Matrix& y, int n) {
  WeylElement::Matrix out{};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int sum = 0;
      for (int k = 0; k < n; ++k) sum += x[at(r, k)] * y[at(k, c)];
      out[at(r, c)] = static_cast<std::int8_t>(sum);
    }
  return out;
}

void check_generator(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw DomainError("generator " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank()));
}

}  // namespace

std::size_t MatrixHash::operator()(const WeylElement::Matrix& m) const noexcept {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(m.data()), m.size()));
}

Word parse_word(std::string_view text, int rank) {
  Word word;
  if (text.empty() || text == "e") return word;
  auto letter = [&](int value, std::size_t pos) {
    if (value < 1 || value > rank)
      throw ParseError("generator " + std::to_string(value) + " at position " + std::to_string(pos) +
                           " out of range 1.." + std::to_string(rank),
                       pos);
    word.push_back(value);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      if (end == start) throw ParseError("empty generator at position " + std::to_string(start), start);
      int value = 0;
      for (std::size_t p = start; p < end; ++p) {
        const char c = text[p];
        if (c < '0' || c > '9')
          throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(p), p);
        value = value * 10 + (c - '0');
        if (value > 1000) throw ParseError("generator out of range at position " + std::to_string(start), start);
      }
      letter(value, start);
      start = end + 1;
    }
    return word;
  }
  for (std::size_t p = 0; p < text.size(); ++p) {
    const char c = text[p];
    if (c < '0' || c > '9')
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(p), p);
    letter(c - '0', p);
  }
  return word;
}

std::string format_word(const Word& word, int rank) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (rank >= 10 && k > 0) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.family_ = rs.family();
  w.rank_ = rs.rank();
  for (int i = 0; i < rs.rank(); ++i) {
    w.action_[at(i, i)] = 1;
    w.inverse_[at(i, i)] = 1;
  }
  return w;
}

Root WeylElement::apply(const Root& root) const {
  Root out{std::vector<int>(static_cast<std::size_t>(rank_), 0)};
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c)
      out.coords[static_cast<std::size_t>(r)] += action_[at(r, c)] * root.coords[static_cast<std::size_t>(c)];
  return out;
}

Root WeylElement::apply_inverse(const Root& root) const {
  Root out{std::vector<int>(static_cast<std::size_t>(rank_), 0)};
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c)
      out.coords[static_cast<std::size_t>(r)] += inverse_[at(r, c)] * root.coords[static_cast<std::size_t>(c)];
  return out;
}

bool WeylElement::has_right_descent(int i) const { return column_negative(action_, rank_, i - 1); }

bool WeylElement::has_left_descent(int i) const { return column_negative(inverse_, rank_, i - 1); }

std::size_t WeylElement::hash() const noexcept { return MatrixHash{}(action_); }

void check_same_group(const RootSystem& rs, const WeylElement& w) {
  if (w.family() != rs.family() || w.rank() != rs.rank())
    throw DomainError("element of W(" + std::string(1, static_cast<char>(w.family())) +
                      std::to_string(w.rank()) + ") used with root system " + rs.name());
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  check_same_group(rs, w);
  int count = 0;
  for (const Root& r : rs.positive_roots())
    if (w.apply(r).is_negative()) ++count;
  return count;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return left_multiply(rs, i, WeylElement::identity(rs));
}

WeylElement left_multiply(const RootSystem& rs, int i, const WeylElement& w) {
  check_generator(rs, i);
  check_same_group(rs, w);
  WeylElement out = w;
  out.length_ += w.has_left_descent(i) ? -1 : 1;
  left_apply_simple(rs.datum(), out.action_, i - 1);
  right_apply_simple(rs.datum(), out.inverse_, i - 1);
  return out;
}

WeylElement right_multiply(const RootSystem& rs, const WeylElement& w, int i) {
  check_generator(rs, i);
  check_same_group(rs, w);
  WeylElement out = w;
  out.length_ += w.has_right_descent(i) ? -1 : 1;
  right_apply_simple(rs.datum(), out.action_, i - 1);
  left_apply_simple(rs.datum(), out.inverse_, i - 1);
  return out;
}

WeylElement compose(const RootSystem& rs, const WeylElement& x, const WeylElement& y) {
  check_same_group(rs, x);
  check_same_group(rs, y);
  WeylElement out = x;
  out.action_ = multiply(x.action_, y.action_, rs.rank());
  out.inverse_ = multiply(y.inverse_, x.inverse_, rs.rank());
  out.length_ = inversion_count(rs, out);
  return out;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out = w;
  std::swap(out.action_, out.inverse_);
  return out;
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs);
  for (int letter : word) w = right_multiply(rs, w, letter);
  return w;
}

WeylElement from_word(const RootSystem& rs, std::string_view text) {
  return from_word(rs, parse_word(text, rs.rank()));
}

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  check_same_group(rs, w);
  Word reversed;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int i = 1;
    while (!cur.has_right_descent(i)) ++i;
    reversed.push_back(i);
    cur = right_multiply(rs, cur, i);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

std::uint64_t group_order(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (int m : rs.exponents()) order *= static_cast<std::uint64_t>(m + 1);
  return order;
}

std::vector<WeylElement> enumerate_up_to_length(const RootSystem& rs, int max_length, std::uint64_t budget) {
  std::vector<WeylElement> out{WeylElement::identity(rs)};
  std::size_t level_begin = 0;
  for (int len = 0; len < max_length; ++len) {
    const std::size_t level_end = out.size();
    std::unordered_set<WeylElement::Matrix, MatrixHash> next;
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int i = 1; i <= rs.rank(); ++i) {
        if (out[k].has_right_descent(i)) continue;
        WeylElement up = right_multiply(rs, out[k], i);
        if (!next.insert(up.action()).second) continue;
        if (out.size() >= budget)
          throw ResourceError("enumeration of W(" + rs.name() + ") (|W| = " + std::to_string(group_order(rs)) +
                              ") exceeds the budget of " + std::to_string(budget) + " elements");
        out.push_back(std::move(up));
      }
    }
    if (out.size() == level_end) break;  // passed the longest element
    level_begin = level_end;
  }
  return out;
}

std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t budget) {
  const std::uint64_t order = group_order(rs);
  if (order > budget)
    throw ResourceError("|W(" + rs.name() + ")| = " + std::to_string(order) + " exceeds the budget of " +
                        std::to_string(budget) + " elements");
  return enumerate_up_to_length(rs, static_cast<int>(rs.positive_roots().size()), budget);
}

WeylElement reflection(const RootSystem& rs, const Root& root) {
  const auto idx = rs.index_of(root);
  if (!idx) throw DomainError("reflection requested for a vector that is not a positive root of " + rs.name());
  const auto& how = rs.derivation(*idx);
  if (!how.parent) return simple_reflection(rs, how.via_simple);
  // r_{s_j(beta)} = s_j r_beta s_j
  const WeylElement inner = reflection(rs, rs.positive_roots()[*how.parent]);
  return left_multiply(rs, how.via_simple, right_multiply(rs, inner, how.via_simple));
}

BruhatLowerSet::BruhatLowerSet(const RootSystem& rs, WeylElement top) : rs_(&rs) {
  check_same_group(rs, top);
  chain_.push_back(std::move(top));
  while (!chain_.back().is_identity()) {
    int s = 1;
    while (!chain_.back().has_left_descent(s)) ++s;
    letters_.push_back(s);
    chain_.push_back(left_multiply(rs, s, chain_.back()));
  }
  memo_.resize(chain_.size());
}

bool BruhatLowerSet::contains(const WeylElement& x) {
  check_same_group(*rs_, x);
  const int top_length = chain_.front().length();
  std::vector<std::pair<std::size_t, WeylElement::Matrix>> path;
  WeylElement cur = x;
  std::size_t depth = 0;
  bool result = false;
  for (;;) {
    if (cur.length() > top_length - static_cast<int>(depth)) {
      result = false;
      break;
    }
    if (depth + 1 == chain_.size()) {
      result = cur.is_identity();
      break;
    }
    if (auto it = memo_[depth].find(cur.action()); it != memo_[depth].end()) {
      result = it->second;
      break;
    }
    path.emplace_back(depth, cur.action());
    const int s = letters_[depth];
    if (cur.has_left_descent(s)) cur = left_multiply(*rs_, s, cur);
    ++depth;
  }
  for (const auto& [d, m] : path) memo_[d].emplace(m, result);
  return result;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& x, const WeylElement& w) {
  check_same_group(rs, x);
  check_same_group(rs, w);
  if (x.length() > w.length()) return false;
  return BruhatLowerSet(rs, w).contains(x);
}

std::vector<WeylElement> lower_interval(const RootSystem& rs, const WeylElement& w, std::uint64_t budget) {
  check_same_group(rs, w);
  std::vector<WeylElement> candidates = enumerate_up_to_length(rs, w.length(), budget);
  BruhatLowerSet below(rs, w);
  std::vector<WeylElement> out;
  for (WeylElement& x : candidates)
    if (below.contains(x)) out.push_back(std::move(x));
  return out;
}

}  // namespace schubert

#include "strata/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace strata {

DynkinDiagram::DynkinDiagram(DynkinKind kind, int rank) : kind_(kind), rank_(rank) {
  switch (kind) {
    case DynkinKind::A:
      if (rank < 1 || rank > 8) throw std::invalid_argument("type A rank must be in 1..8");
      for (int i = 0; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      break;
    case DynkinKind::D:
      if (rank < 4 || rank > 8) throw std::invalid_argument("type D rank must be in 4..8");
      for (int i = 0; i + 2 < rank; ++i) edges_.emplace_back(i, i + 1);
      edges_.emplace_back(rank - 3, rank - 1);
      break;
    case DynkinKind::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E rank must be in 6..8");
      edges_ = {{0, 2}, {1, 3}, {2, 3}};
      for (int i = 3; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges_.begin(), edges_.end());
  cartan_.assign(rank * rank, 0);
  neighbors_.assign(rank, {});
  for (int i = 0; i < rank; ++i) cartan_[i * rank + i] = 2;
  for (auto [a, b] : edges_) {
    cartan_[a * rank + b] = cartan_[b * rank + a] = -1;
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

DynkinDiagram DynkinDiagram::parse(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("bad Dynkin type: " + std::string(name));
  DynkinKind kind;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': kind = DynkinKind::A; break;
    case 'D': kind = DynkinKind::D; break;
    case 'E': kind = DynkinKind::E; break;
    default: throw std::invalid_argument("unsupported Dynkin type: " + std::string(name));
  }
  int rank = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad Dynkin type: " + std::string(name));
    rank = rank * 10 + (c - '0');
    if (rank > 100) break;
  }
  return DynkinDiagram(kind, rank);
}

std::string DynkinDiagram::name() const {
  const char* k = kind_ == DynkinKind::A ? "A" : kind_ == DynkinKind::D ? "D" : "E";
  return k + std::to_string(rank_);
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "e" || trimmed == "id") return out;
  while (i < trimmed.size()) {
    char c = trimmed[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 's' || c == 'S') ++i;
    if (i >= trimmed.size() || !std::isdigit(static_cast<unsigned char>(trimmed[i])))
      throw InvalidWord("cannot parse word: '" + std::string(text) + "'");
    int v = 0;
    while (i < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
      v = v * 10 + (trimmed[i] - '0');
      if (v > 1000) throw InvalidWord("letter out of range in '" + std::string(text) + "'");
      ++i;
    }
    if (v < 1) throw InvalidWord("letters are numbered from 1 in '" + std::string(text) + "'");
    out.push_back(v - 1);
  }
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(word[k] + 1);
  }
  return out;
}

namespace {

std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> out(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; ++j) out[i * n + j] += x * b[k * n + j];
    }
  return out;
}

}  // namespace

WeylGroup::WeylGroup(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.rank();
  for (int i = 0; i < n; ++i) {
    WeylElement s;
    s.n_ = n;
    s.weight_.assign(n * n, 0);
    s.root_.assign(n * n, 0);
    for (int k = 0; k < n; ++k) s.weight_[k * n + k] = s.root_[k * n + k] = 1;
    for (int k = 0; k < n; ++k) s.weight_[k * n + i] -= diagram_.cartan(k, i);
    for (int j = 0; j < n; ++j) s.root_[i * n + j] -= diagram_.cartan(i, j);
    simples_.push_back(std::move(s));
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        auto c = apply_to_root(simples_[i], b);
        if (is_negative(c)) continue;
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha < hb;
  });
}

WeylElement WeylGroup::identity() const {
  const int n = rank();
  WeylElement e;
  e.n_ = n;
  e.weight_.assign(n * n, 0);
  e.root_.assign(n * n, 0);
  for (int k = 0; k < n; ++k) e.weight_[k * n + k] = e.root_[k * n + k] = 1;
  return e;
}

WeylElement WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) throw InvalidWord("simple reflection s" + std::to_string(i + 1) + " out of range");
  return simples_[i];
}

WeylElement WeylGroup::from_word(const Word& word) const {
  WeylElement w = identity();
  for (int a : word) w = mul(w, simple(a));
  return w;
}

WeylElement WeylGroup::mul(const WeylElement& a, const WeylElement& b) const {
  WeylElement out;
  out.n_ = a.n_;
  out.weight_ = matmul(a.weight_, b.weight_, a.n_);
  out.root_ = matmul(a.root_, b.root_, a.n_);
  return out;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  Word letters;
  WeylElement cur = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i < rank(); ++i)
      if (is_right_descent(cur, i)) {
        letters.push_back(i);
        cur = mul(cur, simples_[i]);
        found = true;
        break;
      }
  }
  return from_word(letters);
}

WeylElement WeylGroup::longest() const {
  std::vector<int> all(rank());
  for (int i = 0; i < rank(); ++i) all[i] = i;
  return longest_parabolic(all);
}

WeylElement WeylGroup::longest_parabolic(const std::vector<int>& K) const {
  WeylElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : K)
      if (!is_left_descent(w, i)) {
        w = mul(simple(i), w);
        grew = true;
      }
  }
  return w;
}

std::vector<int> WeylGroup::apply_to_root(const WeylElement& w, const std::vector<int>& beta) const {
  const int n = rank();
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w.root_[i * n + j] * beta[j];
  return out;
}

std::vector<int> WeylGroup::apply_to_fundamental(const WeylElement& w, int i) const {
  const int n = rank();
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = w.weight_[k * n + i];
  return out;
}

bool WeylGroup::is_negative(const std::vector<int>& beta) const {
  bool any = false;
  for (int x : beta) {
    if (x > 0) return false;
    if (x < 0) any = true;
  }
  return any;
}

int WeylGroup::length(const WeylElement& w) const {
  int l = 0;
  for (const auto& b : positive_roots_)
    if (is_negative(apply_to_root(w, b))) ++l;
  return l;
}

bool WeylGroup::is_left_descent(const WeylElement& w, int i) const {
  // <w(rho), alpha_i^vee> < 0
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += w.weight(i, j);
  return s < 0;
}

bool WeylGroup::is_right_descent(const WeylElement& w, int i) const {
  const int n = rank();
  bool any = false;
  for (int k = 0; k < n; ++k) {
    int x = w.root_[k * n + i];
    if (x > 0) return false;
    if (x < 0) any = true;
  }
  return any;
}

Word WeylGroup::reduced_word(const WeylElement& w) const {
  Word out;
  WeylElement cur = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i < rank(); ++i)
      if (is_left_descent(cur, i)) {
        out.push_back(i);
        cur = mul(simples_[i], cur);
        found = true;
        break;
      }
  }
  return out;
}

bool WeylGroup::is_reduced(const Word& word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

std::vector<Word> WeylGroup::all_reduced_words(const WeylElement& w) const {
  std::vector<Word> out;
  if (length(w) == 0) return {Word{}};
  for (int i = 0; i < rank(); ++i) {
    if (!is_left_descent(w, i)) continue;
    for (auto& tail : all_reduced_words(mul(simples_[i], w))) {
      Word word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  // Lifting property: for a left descent s of w, v <= w iff min(v, sv) <= sw.
  WeylElement cur = v;
  for (int s : reduced_word(w))
    if (is_left_descent(cur, s)) cur = mul(simples_[s], cur);
  return cur == identity();
}

std::vector<WeylElement> WeylGroup::v_sequence(const WeylElement& v, const Word& word_of_w) const {
  if (!is_reduced(word_of_w)) throw InvalidWord("word is not reduced: " + format_word(word_of_w));
  const int r = static_cast<int>(word_of_w.size());
  std::vector<WeylElement> seq{identity()};
  for (int k = 1; k <= r; ++k) {
    int i = word_of_w[r - k];
    const WeylElement& prev = seq.back();
    WeylElement u = mul(v, inverse(prev));
    if (is_right_descent(u, i))
      seq.push_back(mul(simples_[i], prev));
    else
      seq.push_back(prev);
  }
  if (seq.back() != v)
    throw std::invalid_argument("v is not below w in the Bruhat order");
  return seq;
}

std::vector<int> WeylGroup::j_set(const WeylElement& v, const Word& word_of_w) const {
  auto seq = v_sequence(v, word_of_w);
  std::vector<int> out;
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k] == seq[k - 1]) out.push_back(static_cast<int>(k));
  return out;
}

bool WeylGroup::property_p(const WeylElement& v, const WeylElement& w) const {
  return length(mul(w, inverse(v))) + length(v) == length(w);
}

std::vector<std::vector<int>> WeylGroup::delta_set(const WeylElement& v, const WeylElement& w) const {
  std::vector<std::vector<int>> out;
  for (const auto& b : positive_roots_)
    if (is_negative(apply_to_root(w, b)) && !is_negative(apply_to_root(v, b))) out.push_back(b);
  return out;
}

bool WeylGroup::is_minimal_left_coset_rep(const WeylElement& v, const std::vector<int>& K) const {
  for (int i : K)
    if (is_left_descent(v, i)) return false;
  return true;
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out{identity()};
  std::set<WeylElement> seen{identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rank(); ++i) {
      if (is_left_descent(out[head], i)) continue;
      WeylElement x = mul(simples_[i], out[head]);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  return out;
}

std::vector<int> WeylGroup::to_permutation(const WeylElement& w) const {
  if (diagram_.kind() != DynkinKind::A) throw std::invalid_argument("permutations only exist in type A");
  std::vector<int> perm(rank() + 1);
  for (int k = 0; k <= rank(); ++k) perm[k] = k + 1;
  for (int a : reduced_word(w)) std::swap(perm[a], perm[a + 1]);
  return perm;
}

WeylElement WeylGroup::from_permutation(const std::vector<int>& perm) const {
  if (diagram_.kind() != DynkinKind::A) throw std::invalid_argument("permutations only exist in type A");
  const int m = rank() + 1;
  if (static_cast<int>(perm.size()) != m) throw InvalidWord("permutation has wrong size");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < m; ++k)
    if (sorted[k] != k + 1) throw InvalidWord("not a permutation of 1..n+1");
  std::vector<int> cur = perm;
  Word collected;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i + 1 < m; ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        collected.push_back(i);
        found = true;
        break;
      }
  }
  std::reverse(collected.begin(), collected.end());
  return from_word(collected);
}

}  // namespace strata

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strata {

enum class DynkinKind { A, D, E };

// Simply-laced Dynkin diagram with Bourbaki numbering. Vertices are 0-based
// internally and 1-based in every printed form.
class DynkinDiagram {
 public:
  DynkinDiagram(DynkinKind kind, int rank);
  static DynkinDiagram parse(std::string_view name);

  DynkinKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  // Edges as (i, j) with i < j, in lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const DynkinDiagram& o) const { return kind_ == o.kind_ && rank_ == o.rank_; }

 private:
  DynkinKind kind_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::pair<int, int>> edges_;
};

class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters in printed order: {a, b, c} means s_a s_b s_c.
using Word = std::vector<int>;

Word parse_word(std::string_view text);
std::string format_word(const Word& word);

// A Weyl group element stored as its matrices on the fundamental weight basis
// and on the simple root basis.
class WeylElement {
 public:
  WeylElement() = default;
  int rank() const { return n_; }
  int weight(int i, int j) const { return weight_[i * n_ + j]; }
  int root(int i, int j) const { return root_[i * n_ + j]; }

  bool operator==(const WeylElement& o) const { return weight_ == o.weight_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return weight_ < o.weight_; }

 private:
  friend class WeylGroup;
  int n_ = 0;
  std::vector<int> weight_;
  std::vector<int> root_;
};

class WeylGroup {
 public:
  explicit WeylGroup(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }

  WeylElement identity() const;
  WeylElement simple(int i) const;
  WeylElement from_word(const Word& word) const;
  WeylElement parse(std::string_view text) const { return from_word(parse_word(text)); }
  WeylElement longest() const;
  // Longest element of the parabolic subgroup generated by K.
  WeylElement longest_parabolic(const std::vector<int>& K) const;

  WeylElement mul(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;

  // Positive roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  std::vector<int> apply_to_root(const WeylElement& w, const std::vector<int>& beta) const;
  // w(varpi_i) in fundamental weight coordinates.
  std::vector<int> apply_to_fundamental(const WeylElement& w, int i) const;

  int length(const WeylElement& w) const;
  bool is_left_descent(const WeylElement& w, int i) const;   // l(s_i w) < l(w)
  bool is_right_descent(const WeylElement& w, int i) const;  // l(w s_i) < l(w)

  // Reduced word obtained by peeling the smallest left descent at each step.
  Word reduced_word(const WeylElement& w) const;
  bool is_reduced(const Word& word) const;
  std::vector<Word> all_reduced_words(const WeylElement& w) const;
  template <class Rng>
  Word random_reduced_word(const WeylElement& w, Rng& rng) const;

  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;

  // v_(0) = e, ..., v_(r) = v for the word i of w (printed order).
  std::vector<WeylElement> v_sequence(const WeylElement& v, const Word& word_of_w) const;
  // Indices k in 1..r with v_(k) = v_(k-1).
  std::vector<int> j_set(const WeylElement& v, const Word& word_of_w) const;
  bool property_p(const WeylElement& v, const WeylElement& w) const;
  // Positive roots beta with w(beta) < 0 and v(beta) > 0.
  std::vector<std::vector<int>> delta_set(const WeylElement& v, const WeylElement& w) const;
  // v in W^K: minimal length in its coset W_K v.
  bool is_minimal_left_coset_rep(const WeylElement& v, const std::vector<int>& K) const;

  // All elements, breadth first by length. Intended for small groups.
  std::vector<WeylElement> elements() const;

  // Type A only: one-line notation of the permutation of {1..n+1}.
  std::vector<int> to_permutation(const WeylElement& w) const;
  WeylElement from_permutation(const std::vector<int>& perm) const;

  std::string format(const WeylElement& w) const { return format_word(reduced_word(w)); }

 private:
  bool is_negative(const std::vector<int>& beta) const;

  DynkinDiagram diagram_;
  std::vector<WeylElement> simples_;
  std::vector<std::vector<int>> positive_roots_;
};

template <class Rng>
Word WeylGroup::random_reduced_word(const WeylElement& w, Rng& rng) const {
  Word out;
  WeylElement cur = w;
  while (length(cur) > 0) {
    std::vector<int> desc;
    for (int i = 0; i < rank(); ++i)
      if (is_left_descent(cur, i)) desc.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
    int i = desc[pick(rng)];
    out.push_back(i);
    cur = mul(simples_[i], cur);
  }
  return out;
}

}  // namespace strata

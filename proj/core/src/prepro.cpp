#include <map>
#include <stdexcept>

#include "strata/prepro.hpp"

namespace strata {

DoubleQuiver::DoubleQuiver(const DynkinDiagram& diagram) : diagram_(diagram) {
  const int n = diagram.rank();
  out_.assign(n, {});
  in_.assign(n, {});
  int e = 0;
  for (auto [i, j] : diagram.edges()) {
    int a = static_cast<int>(arrows_.size());
    arrows_.push_back({i, j, e, false, +1, a + 1});
    arrows_.push_back({j, i, e, true, -1, a});
    ++e;
  }
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }
}

long long DoubleQuiver::bilinear(const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) const {
  long long s = 0;
  for (int i = 0; i < vertex_count(); ++i) s += 2LL * d[i] * e[i];
  for (auto [i, j] : diagram_.edges()) s -= static_cast<long long>(d[i] * e[j] + d[j] * e[i]);
  return s;
}

Module::Module(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (static_cast<int>(dims_.size()) != quiver_->vertex_count())
    throw std::invalid_argument("module dimension vector has wrong length");
  if (maps_.size() != quiver_->arrows().size()) throw std::invalid_argument("module needs one matrix per arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = quiver_->arrows()[a];
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw std::invalid_argument("arrow matrix has wrong shape");
  }
}

Module Module::zero(QuiverPtr quiver) {
  std::vector<std::size_t> dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps(quiver->arrows().size());
  return Module(std::move(quiver), std::move(dims), std::move(maps));
}

Module Module::simple(QuiverPtr quiver, int i) {
  std::vector<std::size_t> dims(quiver->vertex_count(), 0);
  dims.at(i) = 1;
  std::vector<Matrix> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return Module(std::move(quiver), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

bool Module::satisfies_relations() const {
  for (int i = 0; i < vertex_count(); ++i) {
    Matrix acc(dims_[i], dims_[i]);
    for (int a : quiver_->arrows_to(i)) {
      const Arrow& ar = quiver_->arrows()[a];
      Matrix p = maps_[a] * maps_[ar.reverse];
      acc += ar.sign > 0 ? p : p * Rational(-1);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string Module::dims_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
  return s + ")";
}

namespace {

struct Element {
  int vertex;
  int degree;
};

// Lambda e_i as a left module: Lambda_{l+1} = (A (x) Lambda_l) / rho Lambda_{l-1}.
Module build_projective(const QuiverPtr& q, int i) {
  const auto& arrows = q->arrows();
  std::vector<Element> elems{{i, 0}};
  // action[(a, b)] = coordinates of a * b over the global element list
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> action;
  std::vector<int> prev_layer, layer{0};
  for (int deg = 0;; ++deg) {
    std::vector<std::pair<int, int>> cand;
    std::map<std::pair<int, int>, int> cand_index;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
      for (int b : layer)
        if (elems[b].vertex == arrows[a].source) {
          cand_index[{a, b}] = static_cast<int>(cand.size());
          cand.emplace_back(a, b);
        }
    if (cand.empty()) break;
    Matrix rel(prev_layer.size(), cand.size());
    for (std::size_t r = 0; r < prev_layer.size(); ++r) {
      int c0 = prev_layer[r];
      int k = elems[c0].vertex;
      for (int a : q->arrows_to(k)) {
        int astar = arrows[a].reverse;
        auto it = action.find({astar, c0});
        if (it == action.end()) continue;
        for (const auto& [b, coeff] : it->second) {
          auto ci = cand_index.find({a, b});
          if (ci != cand_index.end()) rel(r, ci->second) += coeff * arrows[a].sign;
        }
      }
    }
    Echelon e = rref(rel);
    std::vector<bool> is_pivot(cand.size(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<int> new_index(cand.size(), -1);
    std::vector<int> next_layer;
    for (std::size_t c = 0; c < cand.size(); ++c)
      if (!is_pivot[c]) {
        new_index[c] = static_cast<int>(elems.size());
        next_layer.push_back(static_cast<int>(elems.size()));
        elems.push_back({arrows[cand[c].first].target, deg + 1});
      }
    std::vector<int> pivot_row(cand.size(), -1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
    for (std::size_t c = 0; c < cand.size(); ++c) {
      std::vector<std::pair<int, Rational>> expr;
      if (!is_pivot[c]) {
        expr.emplace_back(new_index[c], Rational(1));
      } else {
        int r = pivot_row[c];
        for (std::size_t q2 = 0; q2 < cand.size(); ++q2)
          if (!is_pivot[q2] && sgn(e.reduced(r, q2)) != 0) expr.emplace_back(new_index[q2], -e.reduced(r, q2));
      }
      action[cand[c]] = std::move(expr);
    }
    if (next_layer.empty()) break;
    prev_layer = std::move(layer);
    layer = std::move(next_layer);
  }

  const int n = q->vertex_count();
  std::vector<std::size_t> dims(n, 0);
  std::vector<int> local(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) local[k] = static_cast<int>(dims[elems[k].vertex]++);
  std::vector<Matrix> maps;
  for (const auto& a : arrows) maps.emplace_back(dims[a.target], dims[a.source]);
  for (const auto& [key, expr] : action) {
    auto [a, b] = key;
    for (const auto& [t, coeff] : expr) maps[a](local[t], local[b]) += coeff;
  }
  return Module(q, std::move(dims), std::move(maps));
}

}  // namespace

Module dual(const Module& m) {
  const auto& arrows = m.quiver()->arrows();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) maps.push_back(m.map(arrows[a].reverse).transpose());
  return Module(m.quiver(), m.dims(), std::move(maps));
}

Preprojective::Preprojective(const DynkinDiagram& diagram) : quiver_(std::make_shared<DoubleQuiver>(diagram)) {
  for (int i = 0; i < diagram.rank(); ++i) {
    projectives_.push_back(build_projective(quiver_, i));
    injectives_.push_back(dual(projectives_.back()));
  }
}

Module Preprojective::injective_sum() const { return direct_sum(injectives_, quiver_); }

std::size_t Preprojective::dimension() const {
  std::size_t s = 0;
  for (const auto& p : projectives_) s += p.total_dim();
  return s;
}

}  // namespace strata

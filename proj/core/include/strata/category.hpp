#pragma once

#include <memory>
#include <string>
#include <vector>

#include "strata/prepro.hpp"
#include "strata/weyl.hpp"

namespace strata {

using IntMatrix = std::vector<std::vector<int>>;

class NotBelow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The category C_{v,w} attached to a pair v <= w and a reduced word of w.
class Stratum {
 public:
  Stratum(std::shared_ptr<const Preprojective> algebra, const WeylElement& v, const WeylElement& w, Word word);
  // Convenience: parse type and words; an empty word_text means the canonical word of w.
  static Stratum make(const std::string& type, const std::string& v_text, const std::string& w_text,
                      const std::string& word_text = "");

  const Preprojective& algebra() const { return *algebra_; }
  const std::shared_ptr<const Preprojective>& algebra_ptr() const { return algebra_; }
  const QuiverPtr& quiver() const { return algebra_->quiver(); }
  const WeylGroup& group() const { return group_; }
  const WeylElement& v() const { return v_; }
  const WeylElement& w() const { return w_; }
  const Word& word() const { return word_; }
  int r() const { return static_cast<int>(word_.size()); }
  // i_k for k = 1..r, where w = s_{i_r} ... s_{i_1}.
  int letter(int k) const { return word_[r() - k]; }
  const std::vector<WeylElement>& v_sequence() const { return vseq_; }
  std::vector<int> j_set() const;

  // I_{i,w} = E_u(Q_i), u = w^{-1} w_0, and their sum I_w (generator of C_w).
  const std::vector<Module>& generators_w() const { return iw_; }
  const Module& generator_w() const { return iw_sum_; }
  // J_v = E^dagger_{v^{-1}}(sum Q_i), cogenerator of C^v.
  const Module& cogenerator_v() const { return jv_; }
  // I_v, the generator of C_v, used for the torsion submodule t_v.
  const Module& generator_v() const { return iv_sum_; }

  Submodule t_v(const Module& x) const { return trace_submodule(iv_sum_, x); }
  Module quotient_by_t_v(const Module& x) const { return quotient(x, t_v(x)).module; }

  // Q_{i,v,w} = E^dagger_{v^{-1}} E_u(Q_i); possibly zero.
  std::vector<Module> projective_injectives() const;
  // Same modules computed as I_{i,w} / t_v(I_{i,w}).
  std::vector<Module> projective_injectives_via_torsion() const;

  // V_k = Soc_(i_k, ..., i_1)(Q_{i_k}) as a submodule of Q_{i_k}, k = 1..r.
  Submodule v_submodule(int k) const;
  Module v_module(int k) const;
  // Expected dimension vector of V_k: varpi_{i_k} - s_{i_1} ... s_{i_k}(varpi_{i_k}) in root coordinates.
  std::vector<int> gamma(int k) const;
  // U_k = E^dagger_{v_(k)^{-1}} V_k, and the torsion description V_k / t_v(V_k).
  Module u_module(int k) const;
  Module u_module_via_torsion(int k) const;
  // M_k = V_k / V_{k^-}, with V_0 = 0.
  Module layer_module(int k) const;

  bool in_cw(const Module& x) const;
  bool in_cv_up(const Module& x) const;
  bool contains(const Module& x) const { return in_cw(x) && in_cv_up(x); }

 private:
  std::shared_ptr<const Preprojective> algebra_;
  WeylGroup group_;
  WeylElement v_, w_;
  Word word_;
  std::vector<WeylElement> vseq_;
  std::vector<Module> iw_;
  Module iw_sum_, jv_, iv_sum_;
};

struct TiltingSummand {
  int label;  // index j of U_j
  Module module;
  bool frozen;
};

struct ClusterTilting {
  std::vector<TiltingSummand> summands;
  IntMatrix quiver;  // quiver[a][b] = number of arrows a -> b
  IntMatrix lambda;  // hom(T_a, T_b) - hom(T_b, T_a)
  std::vector<std::string> log;  // how each U_j entered (or did not)
  bool rigid = false;
  std::vector<Module> modules() const;
};

// Arrows a -> b = dim rad(T_a, T_b) / rad^2(T_a, T_b).
IntMatrix gabriel_quiver(const std::vector<Module>& summands);
IntMatrix poisson_matrix(const std::vector<Module>& summands);
bool is_rigid_collection(const std::vector<Module>& summands);

ClusterTilting initial_tilting(const Stratum& s);

struct ExchangeData {
  Module old_module;
  Module new_module;
  std::vector<int> middle_out;  // multiplicity of each summand in B (sequence M' -> B -> M)
  std::vector<int> middle_in;   // multiplicity in B' (sequence M -> B' -> M')
  bool approximation_minimal = false;
  bool second_sequence_ok = false;
  long long ext1_exchange = -1;  // dim Ext^1(M, M')
  bool quiver_matches_fz = false;  // compared on arrows touching a mutable vertex
};

// Replaces summand `index` by the kernel of its minimal right
// add(T/T_index)-approximation. Recomputes quiver and lambda.
ClusterTilting categorical_mutation(const ClusterTilting& t, std::size_t index, ExchangeData* data = nullptr);

// FZ mutation of a quiver (adjacency counts) at vertex k.
IntMatrix mutate_quiver(const IntMatrix& q, std::size_t k);

}  // namespace strata

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "alcove/rootdata.hpp"

namespace alcove {

// An alcove A = c(A0+) with c in W'_aff = W_f x| Z Phi^vee.  The same ExtAff
// type also represents elements of the right-acting group W^ext_aff through
// the base-alcove identification x -> xi_x with A0+ . x = xi_x(A0+); the
// right action is then composition on the right.
struct Alcove {
  ExtAff c;
  friend bool operator==(const Alcove& a, const Alcove& b) { return a.c == b.c; }
  friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
};

struct AffKey {
  int w;
  IVec tau;
  friend bool operator<(const AffKey& a, const AffKey& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.tau < b.tau;
  }
  friend bool operator==(const AffKey& a, const AffKey& b) { return a.w == b.w && a.tau == b.tau; }
};
inline AffKey key_of(const ExtAff& x) { return AffKey{x.w, x.tau}; }
inline AffKey key_of(const Alcove& a) { return key_of(a.c); }

class Alcoves {
public:
  explicit Alcoves(const RootDatum& d) : d_(d) {}
  const RootDatum& datum() const { return d_; }

  Alcove base() const { return Alcove{d_.ext_identity()}; }
  QVec anchor(const Alcove& a) const { return d_.ext_apply(a.c, d_.base_anchor()); }

  // alcove containing the (interior) point p
  Alcove from_point(const QVec& p) const;

  // floors: k_alpha(A) with k < <alpha, a> < k+1 on A, per positive root
  std::vector<long long> floors(const Alcove& a) const;
  long long length(const Alcove& a) const;
  bool is_dominant(const Alcove& a) const;

  // right action by the wall reflection of type s (0..num_simple_aff-1)
  Alcove right_act(const Alcove& a, int s) const;
  Alcove right_act(const Alcove& a, const ExtAff& x) const {
    return Alcove{d_.ext_mul(a.c, x)};
  }
  // left action by g in W_f x| X^vee (re-coordinatized into W'_aff)
  Alcove left_act(const ExtAff& g, const Alcove& a) const;

  Alcove up(int pos_root_idx, const Alcove& a) const;
  Alcove down(int pos_root_idx, const Alcove& a) const;

  Alcove translate(const Alcove& a, const IVec& lam) const;
  Alcove a_plus(const IVec& lam) const;
  Alcove a_minus(const IVec& lam) const;

  // periodic order
  bool leq(const Alcove& a, const Alcove& b) const;
  std::vector<Alcove> interval(const Alcove& a, const Alcove& b) const;

  // ---- the right-acting group ----------------------------------------------
  // sigma_s: the geometric reflection across wall s of A0+
  ExtAff sigma(int s) const;
  int num_simple() const { return d_.num_simple_aff(); }

  // Coxeter length of x in W^ext_aff (xi-coordinates)
  long long length_ext(const ExtAff& x) const;
  bool right_descent(const ExtAff& x, int s) const {
    return length_ext(d_.ext_mul(x, sigma(s))) < length_ext(x);
  }
  std::vector<int> reduced_word(const ExtAff& x) const;  // of the W_aff part
  ExtAff from_word(const std::vector<int>& w) const;

  // Omega-part and W_aff-part of an extended element: x = waff * omega
  ExtAff omega_part(const ExtAff& x) const;
  ExtAff waff_part(const ExtAff& x) const;
  bool in_waff(const ExtAff& x) const { return omega_part(x) == d_.ext_identity(); }

  // omega corresponding to lambda mod Z Phi^vee
  ExtAff omega_of(const IVec& lam) const;

  // isomorphisms  w -> w^A  (left group to right group) and inverse
  ExtAff to_waff(const ExtAff& w, const Alcove& base) const;
  ExtAff from_waff(const ExtAff& x, const Alcove& base) const;

  // translation element t_lambda^0 of W^ext_aff (base-alcove identification)
  ExtAff t0(const IVec& lam) const { return ExtAff{0, lam}; }

  // Bruhat order on W_aff / W^ext_aff
  bool bruhat_leq(const ExtAff& x, const ExtAff& y) const;

  // all W_aff elements of Coxeter length <= L
  std::vector<ExtAff> waff_ball(long long L) const;

  // parabolic subgroup data for cosets W_{aff,lam} \ W_aff
  std::vector<int> parabolic_simples(const IVec& lam) const;  // S_aff,lam as wall indices
  std::vector<ExtAff> parabolic_elements(const IVec& lam) const;
  ExtAff min_coset_rep(const ExtAff& x, const std::vector<int>& par_simples) const;
  bool is_min_rep(const ExtAff& x, const std::vector<int>& par_simples) const;

  std::string print(const Alcove& a) const;        // "t[..]*w" form
  std::string print_floors(const Alcove& a) const; // integer tuple of floors
  std::string print_elt(const ExtAff& x) const;    // word / omega form

private:
  const RootDatum& d_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<AffKey, AffKey>, bool> leq_cache_;
};

}  // namespace alcove

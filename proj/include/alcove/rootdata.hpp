#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/numbers.hpp"

namespace alcove {

// Square integer matrix acting on coordinate column vectors, row-major.
struct IMat {
  int n = 0;
  IVec a;  // n*n entries

  static IMat identity(int n) {
    IMat m;
    m.n = n;
    m.a.assign(size_t(n) * n, 0);
    for (int i = 0; i < n; i++) m.a[size_t(i) * n + i] = 1;
    return m;
  }
  long long at(int i, int j) const { return a[size_t(i) * n + j]; }
  long long& at(int i, int j) { return a[size_t(i) * n + j]; }

  IVec apply(const IVec& v) const {
    IVec r(n, 0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) r[i] += at(i, j) * v[j];
    return r;
  }
  QVec apply(const QVec& v) const {
    QVec r(n, Rat(0));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }
  friend IMat operator*(const IMat& x, const IMat& y) {
    IMat r;
    r.n = x.n;
    r.a.assign(size_t(x.n) * x.n, 0);
    for (int i = 0; i < x.n; i++)
      for (int k = 0; k < x.n; k++) {
        long long xv = x.at(i, k);
        if (!xv) continue;
        for (int j = 0; j < x.n; j++) r.at(i, j) += xv * y.at(k, j);
      }
    return r;
  }
  friend bool operator==(const IMat& x, const IMat& y) { return x.n == y.n && x.a == y.a; }
};

// Finite Weyl group, fully enumerated.  Element 0 is the identity.
struct FiniteWeyl {
  int rank = 0;
  std::vector<IMat> cowt_action;  // action on X^vee coordinates
  std::vector<IMat> wt_action;    // action on X coordinates
  std::vector<int> length;
  std::vector<int> inverse;
  std::vector<std::vector<int>> mult;       // mult[x][y] = index of xy
  std::vector<std::vector<int>> word;       // one reduced word per element
  std::vector<int> simple;                  // indices of the simple reflections
  int longest = 0;

  int size() const { return int(cowt_action.size()); }
  int find(const IMat& m) const {
    for (int i = 0; i < size(); i++)
      if (cowt_action[i] == m) return i;
    return -1;
  }
};

struct AffWt {   // element of X_aff = (X tensor Q) + Q + Q
  QVec v;
  Rat a, b;
  friend bool operator==(const AffWt& x, const AffWt& y) { return x.v == y.v && x.a == y.a && x.b == y.b; }
};
struct AffCwt {  // element of X^vee_aff
  QVec v;
  Rat a, b;
  friend bool operator==(const AffCwt& x, const AffCwt& y) { return x.v == y.v && x.a == y.a && x.b == y.b; }
};

struct AffRoot {  // the pair (alpha, n), embedded as (alpha, n, 0)
  IVec root;
  long long n = 0;
  friend bool operator==(const AffRoot& x, const AffRoot& y) { return x.root == y.root && x.n == y.n; }
};

class RootDatum;

// Element of W_f x| X^vee acting on X^vee (tensor Q) by v -> w(v) + tau.
struct ExtAff {
  int w = 0;   // index into FiniteWeyl
  IVec tau;    // translation part, in X^vee coordinates

  friend bool operator==(const ExtAff& x, const ExtAff& y) { return x.w == y.w && x.tau == y.tau; }
  friend bool operator!=(const ExtAff& x, const ExtAff& y) { return !(x == y); }
};

class RootDatum {
public:
  // Supported labels: "A1", "A2", "B2", "G2", and products "A1xA1", "A1xA1xA1", ...
  static const RootDatum& get(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const FiniteWeyl& wf() const { return wf_; }

  const std::vector<IVec>& simple_roots() const { return simple_roots_; }
  const std::vector<IVec>& simple_coroots() const { return simple_coroots_; }
  const std::vector<IVec>& pos_roots() const { return pos_roots_; }
  const std::vector<IVec>& pos_coroots() const { return pos_coroots_; }
  const QVec& rho() const { return rho_; }
  const IVec& rho_check() const { return rho_check_; }

  // <., .> : X x X^vee -> Z is the dot product in all supported realizations.
  static long long pair(const IVec& x, const IVec& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); i++) s += x[i] * y[i];
    return s;
  }
  static Rat pair(const IVec& x, const QVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); i++) s += Rat(x[i]) * y[i];
    return s;
  }
  static Rat pair(const QVec& x, const QVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); i++) s += x[i] * y[i];
    return s;
  }

  // W_f-invariant symmetric form on X^vee tensor Q, normalized so short
  // coroots have square length 2.
  Rat form(const QVec& x, const QVec& y) const;
  Rat form(const IVec& x, const IVec& y) const { return form(to_q(x), to_q(y)); }
  const std::vector<QVec>& form_matrix() const { return form_; }

  int coroot_index(const IVec& root) const;  // index into pos_roots (sign-insensitive), -1 if none
  const IVec& coroot_of(const IVec& root) const;

  // Walls of the fundamental alcove: hyperplanes <root, v> + level = 0.
  struct Wall {
    IVec root;
    long long level;
  };
  const std::vector<Wall>& walls() const { return walls_; }
  int num_simple_aff() const { return int(walls_.size()); }

  // --- extended affine group machinery -------------------------------------
  ExtAff ext_identity() const { return ExtAff{0, IVec(rank_, 0)}; }
  ExtAff ext_mul(const ExtAff& x, const ExtAff& y) const;
  ExtAff ext_inv(const ExtAff& x) const;
  QVec ext_apply(const ExtAff& x, const QVec& v) const;
  IVec ext_apply(const ExtAff& x, const IVec& v) const;

  // geometric reflection across <root,v> + n = 0, as an ExtAff
  ExtAff reflection(const IVec& root, long long n) const;
  // decompose x as a reflection (root positive, level) if it is one
  std::optional<std::pair<IVec, long long>> as_reflection(const ExtAff& x) const;

  // actions of W_f x| X^vee on the affine (co)weight spaces
  AffWt act(const ExtAff& g, const AffWt& x) const;
  AffCwt act(const ExtAff& g, const AffCwt& x) const;

  AffWt aff_wt(const AffRoot& r) const {
    return AffWt{to_q(r.root), Rat(r.n), Rat(0)};
  }
  AffCwt affine_coroot(const AffRoot& r) const;

  static Rat ext_pair(const AffWt& x, const AffCwt& y) {
    Rat s = pair(x.v, y.v);
    s += x.a * y.b + x.b * y.a;
    return s;
  }

  // membership of a rational vector in the nonnegative span of simple coroots
  bool in_pos_coroot_cone(const QVec& v) const;
  // coordinates in the simple-coroot basis (if v lies in Q-span, which it always does here)
  QVec coroot_coords(const QVec& v) const;

  static QVec to_q(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = Rat(v[i]);
    return r;
  }

  // interior point of the fundamental alcove (exact rational)
  const QVec& base_anchor() const { return anchor_; }

private:
  RootDatum() = default;
  static RootDatum build(const std::string& label);
  void finish();  // derived data: W_f, positives, rho, walls, anchor

  std::string label_;
  int rank_ = 0;
  std::vector<IVec> simple_roots_, simple_coroots_;
  std::vector<IVec> pos_roots_, pos_coroots_;
  QVec rho_;
  IVec rho_check_;
  std::vector<QVec> form_;
  std::vector<int> comp_of_simple_;
  std::vector<IVec> highest_roots_;
  std::vector<Wall> walls_;
  FiniteWeyl wf_;
  QVec anchor_;
  std::vector<QVec> coroot_basis_inv_;  // inverse of simple-coroot matrix
};

}  // namespace alcove

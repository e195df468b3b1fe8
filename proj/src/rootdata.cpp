#include "alcove/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace alcove {

namespace {

IMat simple_reflection_matrix(int rank, const IVec& root, const IVec& coroot, bool on_cowt) {
  // on X^vee: v -> v - <root, v> coroot ; on X: x -> x - <x, coroot> root
  IMat m = IMat::identity(rank);
  for (int j = 0; j < rank; j++) {
    for (int i = 0; i < rank; i++) {
      if (on_cowt)
        m.at(i, j) -= root[j] * coroot[i];
      else
        m.at(i, j) -= coroot[j] * root[i];
    }
  }
  return m;
}

}  // namespace

void RootDatum::finish() {
  int r = rank_;
  int ns = int(simple_roots_.size());

  // enumerate W_f by closure under right multiplication by simple reflections
  std::vector<IMat> cow, wt;
  cow.push_back(IMat::identity(r));
  wt.push_back(IMat::identity(r));
  std::vector<int> len{0};
  std::vector<std::vector<int>> word{{}};
  std::vector<IMat> s_cow(ns), s_wt(ns);
  for (int i = 0; i < ns; i++) {
    s_cow[i] = simple_reflection_matrix(r, simple_roots_[i], simple_coroots_[i], true);
    s_wt[i] = simple_reflection_matrix(r, simple_roots_[i], simple_coroots_[i], false);
  }
  for (size_t head = 0; head < cow.size(); head++) {
    for (int i = 0; i < ns; i++) {
      IMat m = cow[head] * s_cow[i];
      bool found = false;
      for (auto& e : cow)
        if (e == m) { found = true; break; }
      if (!found) {
        cow.push_back(m);
        wt.push_back(wt[head] * s_wt[i]);
        len.push_back(len[head] + 1);
        auto w = word[head];
        w.push_back(i);
        word.push_back(w);
      }
    }
  }
  int n = int(cow.size());
  wf_.rank = r;
  wf_.cowt_action = cow;
  wf_.wt_action = wt;
  wf_.length = len;
  wf_.word = word;
  wf_.mult.assign(n, std::vector<int>(n, -1));
  wf_.inverse.assign(n, -1);
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      IMat m = cow[x] * cow[y];
      int idx = wf_.find(m);
      wf_.mult[x][y] = idx;
      if (idx == 0) wf_.inverse[x] = y;
    }
  wf_.simple.clear();
  for (int i = 0; i < ns; i++) wf_.simple.push_back(wf_.find(s_cow[i]));
  wf_.longest = int(std::max_element(len.begin(), len.end()) - len.begin());

  // positive roots: orbit of simple roots intersected with the positive cone
  std::set<IVec> pos;
  for (auto& a : simple_roots_) pos.insert(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> cur(pos.begin(), pos.end());
    for (auto& a : cur)
      for (int w = 0; w < n; w++) {
        IVec b = wf_.wt_action[w].apply(a);
        // positive = nonneg combination of simple roots; test by expanding
        IVec neg(b.size());
        for (size_t i = 0; i < b.size(); i++) neg[i] = -b[i];
        auto is_pos = [&](const IVec& x) {
          // solve x = sum c_i alpha_i over Q, check c_i >= 0. simple roots
          // are a basis of span in all supported types (semisimple).
          QVec q = to_q(x);
          // Gaussian solve against simple-root matrix columns
          int m2 = int(simple_roots_.size());
          std::vector<QVec> cols(m2);
          for (int i = 0; i < m2; i++) cols[i] = to_q(simple_roots_[i]);
          // build augmented system
          std::vector<QVec> rows(r, QVec(m2 + 1, Rat(0)));
          for (int i = 0; i < r; i++) {
            for (int j = 0; j < m2; j++) rows[i][j] = cols[j][size_t(i)];
            rows[i][m2] = q[size_t(i)];
          }
          int rr = 0;
          std::vector<int> pivcol;
          for (int c = 0; c < m2 && rr < r; c++) {
            int p = -1;
            for (int i = rr; i < r; i++)
              if (rows[i][c] != 0) { p = i; break; }
            if (p < 0) continue;
            std::swap(rows[p], rows[rr]);
            Rat pv = rows[rr][c];
            for (int j = 0; j <= m2; j++) rows[rr][j] /= pv;
            for (int i = 0; i < r; i++) {
              if (i == rr) continue;
              Rat f = rows[i][c];
              if (f == 0) continue;
              for (int j = 0; j <= m2; j++) rows[i][j] -= f * rows[rr][j];
            }
            pivcol.push_back(c);
            rr++;
          }
          QVec sol(m2, Rat(0));
          for (int i = 0; i < int(pivcol.size()); i++) sol[pivcol[i]] = rows[i][m2];
          for (int i = int(pivcol.size()); i < r; i++)
            if (rows[i][m2] != 0) return false;  // not in span
          for (auto& c : sol)
            if (c < 0) return false;
          return true;
        };
        if (is_pos(b) && !pos.count(b)) {
          pos.insert(b);
          grew = true;
        }
      }
  }
  pos_roots_.assign(pos.begin(), pos.end());

  // coroots: beta^vee = sum over expansion using w(alpha_i)^vee = w(alpha_i^vee)
  pos_coroots_.clear();
  for (auto& b : pos_roots_) {
    // find w, i with b = w(alpha_i)
    IVec cr;
    for (int w = 0; w < n && cr.empty(); w++)
      for (int i = 0; i < ns; i++) {
        if (wf_.wt_action[w].apply(simple_roots_[i]) == b) {
          cr = wf_.cowt_action[w].apply(simple_coroots_[i]);
          break;
        }
      }
    if (cr.empty()) throw std::logic_error("coroot enumeration failed");
    pos_coroots_.push_back(cr);
  }

  rho_.assign(r, Rat(0));
  for (auto& a : pos_roots_)
    for (int i = 0; i < r; i++) rho_[i] += Rat(a[i], 2);
  QVec rc(r, Rat(0));
  for (auto& a : pos_coroots_)
    for (int i = 0; i < r; i++) rc[i] += Rat(a[i], 2);
  rho_check_.assign(r, 0);
  for (int i = 0; i < r; i++) {
    if (denominator(rc[i]) != 1) throw std::logic_error("rho_check not integral");
    rho_check_[i] = rc[i].convert_to<long long>();
  }

  // highest root per component: the positive root maximal in the component's span
  highest_roots_.clear();
  int ncomp = comp_of_simple_.empty() ? 1 : (*std::max_element(comp_of_simple_.begin(), comp_of_simple_.end()) + 1);
  for (int c = 0; c < ncomp; c++) {
    IVec best;
    long long best_ht = -1;
    for (auto& b : pos_roots_) {
      // component test: support of expansion in simple roots
      bool in_comp = true;
      long long ht = 0;
      // expand b in simple roots (integer coefficients)
      // use repeated subtraction via pairing heights: simple here since
      // supported ranks are small; solve exactly.
      QVec q = to_q(b);
      int m2 = ns;
      std::vector<QVec> rows(r, QVec(m2 + 1, Rat(0)));
      for (int i = 0; i < r; i++) {
        for (int j = 0; j < m2; j++) rows[i][j] = Rat(simple_roots_[j][i]);
        rows[i][m2] = q[i];
      }
      int rr = 0;
      std::vector<int> pivcol;
      for (int cc = 0; cc < m2 && rr < r; cc++) {
        int p = -1;
        for (int i = rr; i < r; i++)
          if (rows[i][cc] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[rr]);
        Rat pv = rows[rr][cc];
        for (int j = 0; j <= m2; j++) rows[rr][j] /= pv;
        for (int i = 0; i < r; i++) {
          if (i == rr) continue;
          Rat f = rows[i][cc];
          if (f == 0) continue;
          for (int j = 0; j <= m2; j++) rows[i][j] -= f * rows[rr][j];
        }
        pivcol.push_back(cc);
        rr++;
      }
      QVec coef(m2, Rat(0));
      for (int i = 0; i < int(pivcol.size()); i++) coef[pivcol[i]] = rows[i][m2];
      for (int j = 0; j < m2; j++) {
        if (coef[j] != 0 && comp_of_simple_[j] != c) in_comp = false;
        ht += coef[j].convert_to<long long>();
      }
      if (in_comp && ht > best_ht) {
        best_ht = ht;
        best = b;
      }
    }
    highest_roots_.push_back(best);
  }

  // walls of the fundamental alcove
  walls_.clear();
  for (int i = 0; i < ns; i++) walls_.push_back(Wall{simple_roots_[i], 0});
  for (auto& th : highest_roots_) walls_.push_back(Wall{th, -1});

  // anchor: rho_check / (max height + 1)
  long long h = 1;
  for (auto& a : pos_roots_) h = std::max(h, pair(a, rho_check_));
  anchor_.assign(r, Rat(0));
  for (int i = 0; i < r; i++) anchor_[i] = Rat(rho_check_[i], h + 1);

  // inverse of the simple-coroot matrix (columns = simple coroots)
  {
    int m2 = int(simple_coroots_.size());
    std::vector<QVec> rows(r, QVec(m2 + r, Rat(0)));
    for (int i = 0; i < r; i++) {
      for (int j = 0; j < m2; j++) rows[i][j] = Rat(simple_coroots_[j][i]);
      rows[i][m2 + i] = 1;
    }
    for (int c = 0; c < m2; c++) {
      int p = -1;
      for (int i = c; i < r; i++)
        if (rows[i][c] != 0) { p = i; break; }
      if (p < 0) throw std::logic_error("simple coroots not a basis");
      std::swap(rows[p], rows[c]);
      Rat pv = rows[c][c];
      for (int j = 0; j < m2 + r; j++) rows[c][j] /= pv;
      for (int i = 0; i < r; i++) {
        if (i == c) continue;
        Rat f = rows[i][c];
        if (f == 0) continue;
        for (int j = 0; j < m2 + r; j++) rows[i][j] -= f * rows[c][j];
      }
    }
    coroot_basis_inv_.assign(r, QVec(r, Rat(0)));
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) coroot_basis_inv_[i][j] = rows[i][m2 + j];
  }
}

RootDatum RootDatum::build(const std::string& label) {
  RootDatum d;
  d.label_ = label;

  auto set_form = [&](std::vector<std::vector<long long>> num, long long den) {
    int r = d.rank_;
    d.form_.assign(r, QVec(r, Rat(0)));
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) d.form_[i][j] = Rat(num[i][j], den);
  };

  if (label == "A1") {
    d.rank_ = 1;
    d.simple_roots_ = {{1}};
    d.simple_coroots_ = {{2}};
    d.comp_of_simple_ = {0};
    set_form({{1}}, 2);  // (2)^2/2 = 2
  } else if (label == "A2") {
    d.rank_ = 2;
    d.simple_roots_ = {{1, 0}, {0, 1}};
    d.simple_coroots_ = {{2, -1}, {-1, 2}};
    d.comp_of_simple_ = {0, 0};
    // Gram of coroots [[2,-1],[-1,2]] in std coords: inverse Cartan/3
    set_form({{2, 1}, {1, 2}}, 3);
  } else if (label == "B2") {
    d.rank_ = 2;
    d.simple_roots_ = {{1, -1}, {0, 1}};
    d.simple_coroots_ = {{1, -1}, {0, 2}};
    d.comp_of_simple_ = {0, 0};
    set_form({{1, 0}, {0, 1}}, 1);
  } else if (label == "G2") {
    d.rank_ = 2;
    d.simple_roots_ = {{1, 0}, {0, 1}};        // alpha1 short, alpha2 long
    d.simple_coroots_ = {{2, -3}, {-1, 2}};
    d.comp_of_simple_ = {0, 0};
    set_form({{6, 3}, {3, 2}}, 1);
  } else {
    // products of A1 factors: "A1xA1", "A1xA1xA1", ...
    size_t pos = 0;
    int k = 0;
    std::string rest = label;
    while (!rest.empty()) {
      if (rest.rfind("A1", 0) != 0) throw std::invalid_argument("unsupported type: " + label);
      k++;
      rest = rest.substr(2);
      if (!rest.empty()) {
        if (rest.rfind("x", 0) != 0) throw std::invalid_argument("unsupported type: " + label);
        rest = rest.substr(1);
      }
    }
    (void)pos;
    if (k < 2) throw std::invalid_argument("unsupported type: " + label);
    d.rank_ = k;
    for (int i = 0; i < k; i++) {
      IVec a(k, 0), c(k, 0);
      a[i] = 1;
      c[i] = 2;
      d.simple_roots_.push_back(a);
      d.simple_coroots_.push_back(c);
      d.comp_of_simple_.push_back(i);
    }
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; i++) m[i][i] = 1;
    set_form(m, 2);
  }
  d.finish();
  return d;
}

const RootDatum& RootDatum::get(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, RootDatum*> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, new RootDatum(build(label))).first;
  return *it->second;
}

Rat RootDatum::form(const QVec& x, const QVec& y) const {
  Rat s = 0;
  for (int i = 0; i < rank_; i++)
    for (int j = 0; j < rank_; j++) s += x[i] * form_[i][j] * y[j];
  return s;
}

int RootDatum::coroot_index(const IVec& root) const {
  IVec neg(root.size());
  for (size_t i = 0; i < root.size(); i++) neg[i] = -root[i];
  for (int i = 0; i < int(pos_roots_.size()); i++)
    if (pos_roots_[i] == root || pos_roots_[i] == neg) return i;
  return -1;
}

const IVec& RootDatum::coroot_of(const IVec& root) const {
  int i = coroot_index(root);
  if (i < 0) throw std::invalid_argument("not a root");
  return pos_coroots_[i];
}

ExtAff RootDatum::ext_mul(const ExtAff& x, const ExtAff& y) const {
  ExtAff r;
  r.w = wf_.mult[x.w][y.w];
  IVec wy = wf_.cowt_action[x.w].apply(y.tau);
  r.tau.resize(rank_);
  for (int i = 0; i < rank_; i++) r.tau[i] = x.tau[i] + wy[i];
  return r;
}

ExtAff RootDatum::ext_inv(const ExtAff& x) const {
  ExtAff r;
  r.w = wf_.inverse[x.w];
  IVec t = wf_.cowt_action[r.w].apply(x.tau);
  r.tau.resize(rank_);
  for (int i = 0; i < rank_; i++) r.tau[i] = -t[i];
  return r;
}

QVec RootDatum::ext_apply(const ExtAff& x, const QVec& v) const {
  QVec r = wf_.cowt_action[x.w].apply(v);
  for (int i = 0; i < rank_; i++) r[i] += Rat(x.tau[i]);
  return r;
}

IVec RootDatum::ext_apply(const ExtAff& x, const IVec& v) const {
  IVec r = wf_.cowt_action[x.w].apply(v);
  for (int i = 0; i < rank_; i++) r[i] += x.tau[i];
  return r;
}

ExtAff RootDatum::reflection(const IVec& root, long long n) const {
  // s_{(a,n)} = t_{-n a^vee} s_a
  int i = coroot_index(root);
  if (i < 0) throw std::invalid_argument("reflection: not a root");
  IMat m = simple_reflection_matrix(rank_, pos_roots_[i], pos_coroots_[i], true);
  ExtAff r;
  r.w = wf_.find(m);
  r.tau.assign(rank_, 0);
  for (int j = 0; j < rank_; j++) r.tau[j] = -n * pos_coroots_[i][j];
  return r;
}

std::optional<std::pair<IVec, long long>> RootDatum::as_reflection(const ExtAff& x) const {
  for (int i = 0; i < int(pos_roots_.size()); i++) {
    IMat m = simple_reflection_matrix(rank_, pos_roots_[i], pos_coroots_[i], true);
    if (!(wf_.cowt_action[x.w] == m)) continue;
    // tau must be -n * coroot
    const IVec& cv = pos_coroots_[i];
    long long n = 0;
    bool ok = true, set = false;
    for (int j = 0; j < rank_; j++) {
      if (cv[j] == 0) {
        if (x.tau[j] != 0) ok = false;
      } else if (!set) {
        if (x.tau[j] % cv[j] != 0) { ok = false; break; }
        n = -x.tau[j] / cv[j];
        set = true;
      } else if (x.tau[j] != -n * cv[j]) {
        ok = false;
      }
    }
    if (ok) return std::make_pair(pos_roots_[i], n);
  }
  return std::nullopt;
}

AffWt RootDatum::act(const ExtAff& g, const AffWt& x) const {
  // g = w t_lambda with lambda = w^{-1} tau
  int wi = wf_.inverse[g.w];
  IVec lam = wf_.cowt_action[wi].apply(g.tau);
  QVec lamq = to_q(lam);
  // lambda' in X tensor Q: <lambda', mu> = (lambda, mu) for all mu
  QVec lamp(rank_, Rat(0));
  for (int i = 0; i < rank_; i++)
    for (int j = 0; j < rank_; j++) lamp[i] += form_[i][j] * lamq[j];
  Rat ll2 = form(lamq, lamq) / 2;

  QVec nv(rank_);
  for (int i = 0; i < rank_; i++) nv[i] = x.v[i] + x.b * lamp[i];
  nv = wf_.wt_action[g.w].apply(nv);
  Rat na = x.a - (pair(x.v, lamq) + ll2 * x.b);
  return AffWt{nv, na, x.b};
}

AffCwt RootDatum::act(const ExtAff& g, const AffCwt& x) const {
  int wi = wf_.inverse[g.w];
  IVec lam = wf_.cowt_action[wi].apply(g.tau);
  QVec lamq = to_q(lam);
  Rat ll2 = form(lamq, lamq) / 2;

  QVec nv(rank_);
  for (int i = 0; i < rank_; i++) nv[i] = x.v[i] + x.a * lamq[i];
  nv = wf_.cowt_action[g.w].apply(nv);
  Rat nb = x.b - (form(x.v, lamq) + ll2 * x.a);
  return AffCwt{nv, x.a, nb};
}

AffCwt RootDatum::affine_coroot(const AffRoot& r) const {
  const IVec& cv = coroot_of(r.root);
  QVec cvq = to_q(cv);
  Rat c = form(cvq, cvq) / 2;
  return AffCwt{cvq, Rat(0), Rat(r.n) * c};
}

QVec RootDatum::coroot_coords(const QVec& v) const {
  QVec r(rank_, Rat(0));
  for (int i = 0; i < rank_; i++)
    for (int j = 0; j < rank_; j++) r[i] += coroot_basis_inv_[i][j] * v[j];
  return r;
}

bool RootDatum::in_pos_coroot_cone(const QVec& v) const {
  QVec c = coroot_coords(v);
  for (auto& x : c)
    if (x < 0) return false;
  return true;
}

}  // namespace alcove

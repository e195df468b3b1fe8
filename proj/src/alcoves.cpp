#include "alcove/alcoves.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcove {

Alcove Alcoves::from_point(const QVec& p) const {
  // reduce p into the base alcove, tracking the group element
  ExtAff g = d_.ext_identity();  // q = g(p)
  QVec q = p;
  int guard = 0;
  for (;;) {
    if (++guard > 100000) throw std::runtime_error("from_point: no convergence (point on a wall?)");
    bool moved = false;
    for (auto& w : d_.walls()) {
      Rat v = RootDatum::pair(w.root, q) + Rat(w.level);
      if (v == 0) throw std::invalid_argument("from_point: point lies on a wall");
      if (v < 0) {
        ExtAff s = d_.reflection(w.root, w.level);
        q = d_.ext_apply(s, q);
        g = d_.ext_mul(s, g);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // now q = g(p) is in A0+ (all wall forms positive); A = g^{-1}(A0+)
  return Alcove{d_.ext_inv(g)};
}

std::vector<long long> Alcoves::floors(const Alcove& a) const {
  QVec p = anchor(a);
  std::vector<long long> r;
  r.reserve(d_.pos_roots().size());
  for (auto& al : d_.pos_roots()) {
    Rat v = RootDatum::pair(al, p);
    Int num = numerator(v), den = denominator(v);
    Int q = num / den;
    if (q * den > num) q -= 1;  // floor for negatives
    if (q * den == num) throw std::logic_error("floors: anchor on a wall");
    r.push_back(q.convert_to<long long>());
  }
  return r;
}

long long Alcoves::length(const Alcove& a) const {
  long long s = 0;
  for (auto k : floors(a)) s += k;
  return s;
}

bool Alcoves::is_dominant(const Alcove& a) const {
  QVec p = anchor(a);
  for (auto& al : d_.simple_roots())
    if (RootDatum::pair(al, p) < 0) return false;
  return true;
}

ExtAff Alcoves::sigma(int s) const {
  auto& w = d_.walls().at(s);
  return d_.reflection(w.root, w.level);
}

Alcove Alcoves::right_act(const Alcove& a, int s) const {
  return Alcove{d_.ext_mul(a.c, sigma(s))};
}

Alcove Alcoves::left_act(const ExtAff& g, const Alcove& a) const {
  ExtAff c = d_.ext_mul(g, a.c);
  // c may have tau outside Z Phi^vee; re-coordinatize through the anchor
  return from_point(d_.ext_apply(c, d_.base_anchor()));
}

Alcove Alcoves::up(int idx, const Alcove& a) const {
  const IVec& al = d_.pos_roots().at(idx);
  QVec p = anchor(a);
  Rat v = RootDatum::pair(al, p);
  // n with -1 < v + n < 0
  Int num = numerator(v), den = denominator(v);
  Int q = num / den;
  if (q * den > num) q -= 1;
  long long n = -(q.convert_to<long long>() + 1);
  ExtAff s = d_.reflection(al, n);
  return Alcove{d_.ext_mul(s, a.c)};
}

Alcove Alcoves::down(int idx, const Alcove& a) const {
  const IVec& al = d_.pos_roots().at(idx);
  QVec p = anchor(a);
  Rat v = RootDatum::pair(al, p);
  Int num = numerator(v), den = denominator(v);
  Int q = num / den;
  if (q * den > num) q -= 1;
  long long n = -q.convert_to<long long>();  // -1 < v + (n-1) ... reflection below
  ExtAff s = d_.reflection(al, n);
  return Alcove{d_.ext_mul(s, a.c)};
}

Alcove Alcoves::translate(const Alcove& a, const IVec& lam) const {
  QVec p = anchor(a);
  for (int i = 0; i < d_.rank(); i++) p[i] += Rat(lam[i]);
  return from_point(p);
}

Alcove Alcoves::a_plus(const IVec& lam) const {
  long long m = 1;
  for (auto& al : d_.pos_roots())
    m = std::max(m, std::abs(RootDatum::pair(al, lam)) + RootDatum::pair(al, d_.rho_check()));
  QVec p(d_.rank());
  for (int i = 0; i < d_.rank(); i++) p[i] = Rat(lam[i]) + Rat(d_.rho_check()[i], 2 * m);
  return from_point(p);
}

Alcove Alcoves::a_minus(const IVec& lam) const {
  long long m = 1;
  for (auto& al : d_.pos_roots())
    m = std::max(m, std::abs(RootDatum::pair(al, lam)) + RootDatum::pair(al, d_.rho_check()));
  QVec p(d_.rank());
  for (int i = 0; i < d_.rank(); i++) p[i] = Rat(lam[i]) - Rat(d_.rho_check()[i], 2 * m);
  return from_point(p);
}

namespace {
QVec qsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}
}  // namespace

bool Alcoves::leq(const Alcove& a, const Alcove& b) const {
  if (a == b) return true;
  auto ck = std::make_pair(key_of(a), key_of(b));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = leq_cache_.find(ck);
    if (it != leq_cache_.end()) return it->second;
  }
  bool res = false;
  if (d_.in_pos_coroot_cone(qsub(anchor(b), anchor(a))) && length(a) < length(b)) {
    // BFS over up-moves, pruned to the cone below b
    std::set<AffKey> seen{key_of(a)};
    std::deque<Alcove> queue{a};
    QVec pb = anchor(b);
    while (!queue.empty() && !res) {
      Alcove c = queue.front();
      queue.pop_front();
      for (int i = 0; i < int(d_.pos_roots().size()); i++) {
        Alcove u = up(i, c);
        if (u == b) { res = true; break; }
        if (!d_.in_pos_coroot_cone(qsub(pb, anchor(u)))) continue;
        if (length(u) >= length(b)) continue;
        auto k = key_of(u);
        if (seen.insert(k).second) queue.push_back(u);
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  leq_cache_[ck] = res;
  return res;
}

std::vector<Alcove> Alcoves::interval(const Alcove& a, const Alcove& b) const {
  // forward closure from a inside the cone below b, then keep alcoves that
  // reach b by up-moves
  std::map<AffKey, Alcove> nodes;
  std::map<AffKey, std::vector<AffKey>> up_edges;  // c -> up(c)
  QVec pb = anchor(b);
  if (!(a == b) && !(d_.in_pos_coroot_cone(qsub(pb, anchor(a))))) return {};
  std::deque<Alcove> queue{a};
  nodes[key_of(a)] = a;
  while (!queue.empty()) {
    Alcove c = queue.front();
    queue.pop_front();
    for (int i = 0; i < int(d_.pos_roots().size()); i++) {
      Alcove u = up(i, c);
      if (!d_.in_pos_coroot_cone(qsub(pb, anchor(u)))) continue;
      up_edges[key_of(c)].push_back(key_of(u));
      if (!nodes.count(key_of(u))) {
        nodes[key_of(u)] = u;
        queue.push_back(u);
      }
    }
  }
  if (!nodes.count(key_of(b))) return {};
  // backward reachability from b
  std::map<AffKey, std::vector<AffKey>> down_edges;
  for (auto& [k, ups] : up_edges)
    for (auto& u : ups) down_edges[u].push_back(k);
  std::set<AffKey> good{key_of(b)};
  std::deque<AffKey> q2{key_of(b)};
  while (!q2.empty()) {
    AffKey k = q2.front();
    q2.pop_front();
    for (auto& p : down_edges[k])
      if (good.insert(p).second) q2.push_back(p);
  }
  std::vector<Alcove> out;
  for (auto& k : good) out.push_back(nodes.at(k));
  std::sort(out.begin(), out.end(), [&](const Alcove& x, const Alcove& y) {
    auto lx = length(x), ly = length(y);
    if (lx != ly) return lx < ly;
    return key_of(x) < key_of(y);
  });
  return out;
}

long long Alcoves::length_ext(const ExtAff& x) const {
  // l(t_mu w) with x: v -> w(v) + mu
  long long s = 0;
  const auto& wf = d_.wf();
  int wi = wf.inverse[x.w];
  for (auto& al : d_.pos_roots()) {
    IVec wa = wf.wt_action[wi].apply(al);
    long long pairing = RootDatum::pair(al, x.tau);
    bool wa_pos = RootDatum::pair(wa, d_.rho_check()) > 0;
    s += wa_pos ? std::abs(pairing) : std::abs(pairing - 1);
  }
  return s;
}

std::vector<int> Alcoves::reduced_word(const ExtAff& x) const {
  ExtAff y = waff_part(x);
  std::vector<int> w;
  long long l = length_ext(y);
  int guard = 0;
  while (l > 0) {
    if (++guard > 100000) throw std::runtime_error("reduced_word: stuck");
    bool found = false;
    for (int s = 0; s < num_simple(); s++) {
      ExtAff ys = d_.ext_mul(y, sigma(s));
      long long ls = length_ext(ys);
      if (ls == l - 1) {
        w.push_back(s);
        y = ys;
        l = ls;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent");
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ExtAff Alcoves::from_word(const std::vector<int>& w) const {
  ExtAff x = d_.ext_identity();
  for (int s : w) x = d_.ext_mul(x, sigma(s));
  return x;
}

ExtAff Alcoves::omega_part(const ExtAff& x) const {
  Alcove ax = from_point(d_.ext_apply(x, d_.base_anchor()));
  return d_.ext_mul(d_.ext_inv(ax.c), x);
}

ExtAff Alcoves::waff_part(const ExtAff& x) const {
  Alcove ax = from_point(d_.ext_apply(x, d_.base_anchor()));
  return ax.c;
}

ExtAff Alcoves::omega_of(const IVec& lam) const { return omega_part(ExtAff{0, lam}); }

ExtAff Alcoves::to_waff(const ExtAff& w, const Alcove& base) const {
  return d_.ext_mul(d_.ext_mul(d_.ext_inv(base.c), w), base.c);
}

ExtAff Alcoves::from_waff(const ExtAff& x, const Alcove& base) const {
  return d_.ext_mul(d_.ext_mul(base.c, x), d_.ext_inv(base.c));
}

bool Alcoves::bruhat_leq(const ExtAff& x0, const ExtAff& y0) const {
  ExtAff ox = omega_part(x0), oy = omega_part(y0);
  if (!(ox == oy)) return false;
  ExtAff x = waff_part(x0), y = waff_part(y0);
  // standard recursion on right descents of y
  std::function<bool(const ExtAff&, const ExtAff&, long long, long long)> rec =
      [&](const ExtAff& u, const ExtAff& v, long long lu, long long lv) -> bool {
    if (lu > lv) return false;
    if (u == v) return true;
    if (lv == 0) return false;
    for (int s = 0; s < num_simple(); s++) {
      ExtAff vs = d_.ext_mul(v, sigma(s));
      long long lvs = length_ext(vs);
      if (lvs != lv - 1) continue;
      ExtAff us = d_.ext_mul(u, sigma(s));
      long long lus = length_ext(us);
      if (lus < lu) return rec(us, vs, lus, lvs);
      return rec(u, vs, lu, lvs);
    }
    return false;
  };
  return rec(x, y, length_ext(x), length_ext(y));
}

std::vector<ExtAff> Alcoves::waff_ball(long long L) const {
  std::vector<ExtAff> out{d_.ext_identity()};
  std::set<AffKey> seen{key_of(out[0])};
  size_t head = 0;
  while (head < out.size()) {
    ExtAff x = out[head++];
    long long lx = length_ext(x);
    if (lx >= L) continue;
    for (int s = 0; s < num_simple(); s++) {
      ExtAff xs = d_.ext_mul(x, sigma(s));
      if (length_ext(xs) == lx + 1 && seen.insert(key_of(xs)).second) out.push_back(xs);
    }
  }
  std::sort(out.begin(), out.end(), [&](const ExtAff& a, const ExtAff& b) {
    long long la = length_ext(a), lb = length_ext(b);
    if (la != lb) return la < lb;
    return key_of(a) < key_of(b);
  });
  return out;
}

std::vector<int> Alcoves::parabolic_simples(const IVec& lam) const {
  // s in S_aff,lam iff the wall hyperplane of some facet of type s passes
  // through lam; equivalently sigma_s conjugated by c_{A_lam^+} fixes lam.
  std::vector<int> out;
  Alcove al = a_plus(lam);
  for (int s = 0; s < num_simple(); s++) {
    // the type-s wall of the alcove A_lam^+ : does its hyperplane contain lam?
    Alcove as = right_act(al, s);
    // reflection r with r(A_lam^+) = as: r = c_as c_al^{-1}
    ExtAff r = d_.ext_mul(as.c, d_.ext_inv(al.c));
    QVec img = d_.ext_apply(r, RootDatum::to_q(lam));
    if (img == RootDatum::to_q(lam)) out.push_back(s);
  }
  return out;
}

std::vector<ExtAff> Alcoves::parabolic_elements(const IVec& lam) const {
  auto gens = parabolic_simples(lam);
  std::vector<ExtAff> out{d_.ext_identity()};
  std::set<AffKey> seen{key_of(out[0])};
  size_t head = 0;
  while (head < out.size()) {
    ExtAff x = out[head++];
    for (int s : gens) {
      ExtAff xs = d_.ext_mul(x, sigma(s));
      if (seen.insert(key_of(xs)).second) out.push_back(xs);
    }
  }
  return out;
}

bool Alcoves::is_min_rep(const ExtAff& x, const std::vector<int>& par) const {
  long long lx = length_ext(x);
  for (int s : par)
    if (length_ext(d_.ext_mul(sigma(s), x)) < lx) return false;
  return true;
}

ExtAff Alcoves::min_coset_rep(const ExtAff& x, const std::vector<int>& par) const {
  ExtAff y = x;
  long long ly = length_ext(y);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : par) {
      ExtAff sy = d_.ext_mul(sigma(s), y);
      long long lsy = length_ext(sy);
      if (lsy < ly) {
        y = sy;
        ly = lsy;
        moved = true;
        break;
      }
    }
  }
  return y;
}

std::string Alcoves::print(const Alcove& a) const {
  std::ostringstream os;
  os << "t[";
  for (size_t i = 0; i < a.c.tau.size(); i++) {
    if (i) os << ",";
    os << a.c.tau[i];
  }
  os << "]*w" << a.c.w;
  return os.str();
}

std::string Alcoves::print_floors(const Alcove& a) const {
  std::ostringstream os;
  os << "(";
  auto f = floors(a);
  for (size_t i = 0; i < f.size(); i++) {
    if (i) os << ",";
    os << f[i];
  }
  os << ")";
  return os.str();
}

std::string Alcoves::print_elt(const ExtAff& x) const {
  ExtAff om = omega_part(x);
  auto word = reduced_word(x);
  std::ostringstream os;
  if (word.empty())
    os << "e";
  else
    for (size_t i = 0; i < word.size(); i++) {
      if (i) os << ".";
      os << "s" << word[i];
    }
  if (!(om == d_.ext_identity())) {
    os << "*om[";
    for (size_t i = 0; i < om.tau.size(); i++) {
      if (i) os << ",";
      os << om.tau[i];
    }
    os << ";w" << om.w << "]";
  }
  return os.str();
}

}  // namespace alcove

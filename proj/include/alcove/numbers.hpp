#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace alcove {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<long long>;
using QVec = std::vector<Rat>;

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// Laurent polynomial in v with Int coefficients.  No zero coefficients are
// stored; the map is ordered by exponent, which fixes the printing order.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(Int c) {
    if (c != 0) coeffs_[0] = std::move(c);
  }
  Laurent(Int c, int exp) {
    if (c != 0) coeffs_[exp] = std::move(c);
  }

  static Laurent v(int exp = 1) { return Laurent(Int(1), exp); }
  static Laurent one() { return Laurent(Int(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeff(0) == 1; }

  Int coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }
  const std::map<int, Int>& terms() const { return coeffs_; }

  int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  void add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, ca] : a.coeffs_)
      for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // v -> v^{-1}
  Laurent bar() const {
    Laurent r;
    for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  // shift law: grk(M(n)) = v^n grk(M)
  Laurent shifted(int n) const {
    Laurent r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + n] = c;
    return r;
  }

  // true if every coefficient of `o` is <= the matching one here
  bool dominates(const Laurent& o) const {
    for (auto& [e, c] : o.coeffs_)
      if (coeff(e) < c) return false;
    return true;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (auto& [e, c] : coeffs_) s += c;
    return s;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || e == 0) os << a.str();
      if (e != 0) {
        if (a != 1) os << "*";
        os << "v";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

private:
  std::map<int, Int> coeffs_;
};

inline std::string qstr(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace alcove

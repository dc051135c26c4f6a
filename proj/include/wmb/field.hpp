#pragma once

// Exact scalar fields. Everything in this library is computed over one of
// these two fields; there is no floating point and no tolerance anywhere.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wmb {

using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x == 1; }
inline std::string scalar_str(const Rational& x) { return x.str(); }

// Prime field element with a runtime modulus. An element with p == 0 is an
// integer literal not yet attached to a modulus (the identity matrix, say);
// it picks up the modulus of the first attached operand it meets. Raw/raw
// division is only defined for unit denominators.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long n) : v_(n), p_(0) {}
  Fp(long long n, std::uint32_t p) : v_(n), p_(p) { normalize(); }

  std::uint32_t modulus() const { return p_; }
  long long raw() const { return v_; }

  bool attached() const { return p_ != 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return p ? Fp(x + y, p) : Fp(x + y);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return p ? Fp(x - y, p) : Fp(x - y);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return p ? Fp(x * y, p) : Fp(x * y);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(-v_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return x == y;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (!p_) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("Fp: inverse of unattached non-unit literal");
    }
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid
    long long t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::domain_error("Fp: modulus not prime to element");
    return Fp(t, p_);
  }

 private:
  void normalize() {
    if (p_) {
      v_ %= static_cast<long long>(p_);
      if (v_ < 0) v_ += p_;
    }
  }
  static std::tuple<long long, long long, std::uint32_t> unify(const Fp& a,
                                                               const Fp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw std::logic_error("Fp: mixed moduli");
    auto red = [p](long long x) {
      if (!p) return x;
      x %= static_cast<long long>(p);
      if (x < 0) x += p;
      return x;
    };
    return {red(a.v_), red(b.v_), p};
  }

  long long v_;
  std::uint32_t p_;
};

inline bool is_zero(const Fp& x) {
  return x.attached() ? x.raw() == 0 : x.raw() == 0;
}
inline bool is_one(const Fp& x) { return x == Fp(1); }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.raw()); }

// Field descriptor shared by io and the CLI: ℚ or F_p.
struct FieldDesc {
  bool rational = true;
  std::uint32_t p = 0;
  std::string str() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

template <class K>
K make_scalar(long long num, long long den, const FieldDesc& fd);

template <>
inline Rational make_scalar<Rational>(long long num, long long den,
                                      const FieldDesc&) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num) / den;
}

template <>
inline Fp make_scalar<Fp>(long long num, long long den, const FieldDesc& fd) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Fp(num, fd.p) / Fp(den, fd.p);
}

}  // namespace wmb

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "quiverstrat/errors.hpp"

namespace quiverstrat {

// Every computation in this library is exact.  A field is a small value type
// that owns its parameters (nothing for Q, the modulus for F_p) and exposes
// arithmetic on an associated element type.  Matrices and multiplication
// tables store a copy of the field object, so code that is generic over the
// field never needs a global.

// The rational numbers, with arbitrary-precision numerator and denominator.
struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;

  static constexpr bool is_finite = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem inv(const Elem& a) const {
    internal_check(a != 0, "inverse of zero");
    return Elem(1) / a;
  }

  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Accepts an optionally signed integer or a fraction "p/q".
  Elem parse(const std::string& text) const {
    try {
      Elem v(text);
      return v;
    } catch (const std::exception&) {
      fail(errc::parse, "cannot parse rational coefficient '" + text + "'");
    }
  }

  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "Q"; }
  std::uint64_t order() const { return 0; }  // 0 means infinite

  bool operator==(const RationalField&) const = default;
};

// The prime field F_p for a machine-word prime p.  Elements are canonical
// representatives in [0, p).
struct PrimeField {
  using Elem = std::uint64_t;

  static constexpr bool is_finite = true;

  std::uint64_t p = 2;

  PrimeField() = default;

  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!probably_prime(p)) {
      fail(errc::parse, "field characteristic " + std::to_string(p) +
                            " is not a prime");
    }
    if (p >= (std::uint64_t(1) << 31)) {
      fail(errc::parse, "prime modulus too large (must fit in 31 bits)");
    }
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }

  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }

  Elem inv(Elem a) const {
    internal_check(a % p != 0, "inverse of zero");
    return pow(a, p - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem base, std::uint64_t e) const {
    Elem acc = one();
    base %= p;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  bool is_zero(Elem a) const { return a % p == 0; }
  bool eq(Elem a, Elem b) const { return a % p == b % p; }

  // Accepts an optionally signed integer or a fraction "a/b" with b
  // invertible mod p.
  Elem parse(const std::string& text) const {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      Elem num = parse(text.substr(0, slash));
      Elem den = parse(text.substr(slash + 1));
      if (is_zero(den)) {
        fail(errc::parse, "coefficient '" + text + "' has denominator 0 mod " +
                              std::to_string(p));
      }
      return div(num, den);
    }
    try {
      size_t used = 0;
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return from_int(v);
    } catch (const std::exception&) {
      fail(errc::parse, "cannot parse coefficient '" + text + "' over F_" +
                            std::to_string(p));
    }
  }

  std::string str(Elem a) const { return std::to_string(a % p); }
  std::string name() const { return "F_" + std::to_string(p); }
  std::uint64_t order() const { return p; }

  bool operator==(const PrimeField&) const = default;

  static bool probably_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }
};

}  // namespace quiverstrat

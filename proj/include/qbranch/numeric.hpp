#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qbranch {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

using Int = std::int64_t;
using IVec = std::vector<Int>;

// Exact rational on int64, for small lattice arithmetic (Cartan inverses,
// Freudenthal scalars). Values stay far below overflow at the ranks handled
// here; every constructor normalizes.
struct Frac {
    Int num = 0;
    Int den = 1;

    Frac() = default;
    Frac(Int n) : num(n), den(1) {}
    Frac(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num == 0) throw std::domain_error("Frac: division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return a.num * b.den < b.num * a.den;
    }
};

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in lattice arithmetic");
    return r;
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in lattice arithmetic");
    return r;
}

// Floor division (round toward -inf), used by the multiplicity formulas
// where [x] denotes the integer part of a non-negative quantity.
inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int mod2(Int a) { return ((a % 2) + 2) % 2; }

}  // namespace qbranch

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hwp {

// Canonical representative of a residue class in [0, n).
inline int mod_norm(long long x, int n) {
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

// Signed representative in (-n/2, n/2], matching the usual +/-x notation.
inline int mod_signed(long long x, int n) {
    int r = mod_norm(x, n);
    return (2 * r > n) ? r - n : r;
}

// Multiplicative order of x in the additive group Z_n: n / gcd(x, n).
inline int additive_order(long long x, int n) {
    int r = mod_norm(x, n);
    return n / std::gcd(r, n);
}

// Inverse of x modulo odd n (used to halve matrix entries).
inline int mod_inverse(int x, int n) {
    int a = mod_norm(x, n), b = n;
    int u = 1, v = 0;
    while (b != 0) {
        int q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_norm(u, n);
}

// A residue x mod n with value-semantics arithmetic.
struct Residue {
    int value = 0;
    int modulus = 1;

    Residue() = default;
    Residue(long long v, int n) : value(mod_norm(v, n)), modulus(n) {
        if (n <= 0) throw std::invalid_argument("Residue: modulus must be positive");
    }

    Residue operator+(const Residue& o) const { return {value + (long long)o.value, check(o)}; }
    Residue operator-(const Residue& o) const { return {value - (long long)o.value, check(o)}; }
    Residue operator-() const { return {-(long long)value, modulus}; }
    Residue times(long long k) const { return {value * k, modulus}; }
    int order() const { return additive_order(value, modulus); }
    int signed_rep() const { return mod_signed(value, modulus); }
    bool operator==(const Residue& o) const = default;

private:
    int check(const Residue& o) const {
        if (o.modulus != modulus) throw std::invalid_argument("Residue: modulus mismatch");
        return modulus;
    }
};

}  // namespace hwp

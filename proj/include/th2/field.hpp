#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace th2 {

// Exact scalars. Three kinds are used throughout: arbitrary-precision
// rationals, prime fields with runtime modulus, and dual numbers k[t]/(t^2)
// over either. Generic code never default-constructs a scalar out of thin
// air; it derives zero/one from an exemplar so that the modulus travels
// along (see zero_like / one_like).

using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s)
{
    Rat r(s);
    r.canonicalize();
    return r;
}

// F_p element carrying its modulus. Moduli are small (desk scale), values
// are kept reduced in [0,p).
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;  // p == 0 marks an unset exemplar; arithmetic requires p > 0

    Fp() = default;
    Fp(std::int64_t value, std::uint64_t prime) : p(prime)
    {
        if (prime < 2)
            throw std::invalid_argument("Fp: modulus must be >= 2");
        std::int64_t m = value % static_cast<std::int64_t>(prime);
        if (m < 0)
            m += static_cast<std::int64_t>(prime);
        v = static_cast<std::uint64_t>(m);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline Fp operator+(const Fp& a, const Fp& b)
{
    Fp r;
    r.p = a.p ? a.p : b.p;
    r.v = (a.v + b.v) % r.p;
    return r;
}
inline Fp operator-(const Fp& a, const Fp& b)
{
    Fp r;
    r.p = a.p ? a.p : b.p;
    r.v = (a.v + r.p - b.v % r.p) % r.p;
    return r;
}
inline Fp operator-(const Fp& a)
{
    Fp r;
    r.p = a.p;
    r.v = a.v == 0 ? 0 : a.p - a.v;
    return r;
}
inline Fp operator*(const Fp& a, const Fp& b)
{
    Fp r;
    r.p = a.p ? a.p : b.p;
    r.v = (static_cast<unsigned __int128>(a.v) * b.v) % r.p;
    return r;
}

inline std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p)
{
    // extended Euclid; a must be nonzero mod p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw std::domain_error("fp_inverse: not invertible");
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

inline Fp operator/(const Fp& a, const Fp& b)
{
    if (b.v == 0)
        throw std::domain_error("Fp: division by zero");
    Fp r;
    r.p = a.p ? a.p : b.p;
    r.v = (static_cast<unsigned __int128>(a.v) * fp_inverse(b.v, r.p)) % r.p;
    return r;
}

// Dual numbers a + b*t with t^2 = 0 over a base scalar.
template <class K>
struct Dual {
    K a{};
    K b{};

    Dual() = default;
    Dual(K a_, K b_) : a(std::move(a_)), b(std::move(b_)) {}

    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

template <class K>
Dual<K> operator+(const Dual<K>& x, const Dual<K>& y)
{
    return {x.a + y.a, x.b + y.b};
}
template <class K>
Dual<K> operator-(const Dual<K>& x, const Dual<K>& y)
{
    return {x.a - y.a, x.b - y.b};
}
template <class K>
Dual<K> operator-(const Dual<K>& x)
{
    return {-x.a, -x.b};
}
template <class K>
Dual<K> operator*(const Dual<K>& x, const Dual<K>& y)
{
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}
template <class K>
Dual<K> operator/(const Dual<K>& x, const Dual<K>& y)
{
    // (a+bt)/(c+dt) = a/c + (b/c - a d/c^2) t; needs c invertible
    K inv_c = x.a / y.a;  // placeholder to force the same division path for exceptions
    (void)inv_c;
    K q = x.a / y.a;
    return {q, (x.b - q * y.b) / y.a};
}

// --- exemplar-based constants -------------------------------------------

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.v == 0; }
template <class K>
bool is_zero(const Dual<K>& x)
{
    return is_zero(x.a) && is_zero(x.b);
}

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int(const Rat&, long v) { return Rat(v); }

inline Fp zero_like(const Fp& x) { return Fp(0, x.p); }
inline Fp one_like(const Fp& x) { return Fp(1, x.p); }
inline Fp from_int(const Fp& x, long v) { return Fp(v, x.p); }

template <class K>
Dual<K> zero_like(const Dual<K>& x)
{
    return {zero_like(x.a), zero_like(x.a)};
}
template <class K>
Dual<K> one_like(const Dual<K>& x)
{
    return {one_like(x.a), zero_like(x.a)};
}
template <class K>
Dual<K> from_int(const Dual<K>& x, long v)
{
    return {from_int(x.a, v), zero_like(x.a)};
}

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.v); }
template <class K>
std::string to_string(const Dual<K>& x)
{
    return to_string(x.a) + "+" + to_string(x.b) + "t";
}

}  // namespace th2

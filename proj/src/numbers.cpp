#include "numbers.hpp"

#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace modchar {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
    // extended euclid on signed 128-bit to dodge overflow
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("inv_mod: not invertible");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::map<uint64_t, int> factorize(uint64_t n) {
    std::map<uint64_t, int> f;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (auto& [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

uint64_t coprime_part(uint64_t n, uint64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

uint64_t p_part(uint64_t n, uint64_t p) { return n / coprime_part(n, p); }

uint64_t mult_order(uint64_t a, uint64_t n) {
    if (n == 1) return 1;
    if (gcd_u64(a % n, n) != 1) throw DomainError("mult_order: arguments not coprime");
    uint64_t order = euler_phi(n);
    for (auto& [q, e] : factorize(order)) {
        (void)e;
        while (order % q == 0 && pow_mod(a, order / q, n) == 1) order /= q;
    }
    return order;
}

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

uint64_t crt(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
    // x = r1 + m1 * k with k = (r2 - r1)/m1 mod m2
    uint64_t m1inv = inv_mod(m1 % m2, m2);
    uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;
    uint64_t k = mul_mod(diff, m1inv, m2);
    return r1 + m1 * k;
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw InputError("malformed rational: " + s);
    }
}

std::string format_rational(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace modchar

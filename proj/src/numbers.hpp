#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modchar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);

bool is_prime_u64(uint64_t n);

// prime -> multiplicity
std::map<uint64_t, int> factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);

// largest divisor of n prime to p, and the complementary p-power part
uint64_t coprime_part(uint64_t n, uint64_t p);
uint64_t p_part(uint64_t n, uint64_t p);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t m);  // m prime or gcd(a,m)=1

// multiplicative order of a modulo n, gcd(a,n)=1
uint64_t mult_order(uint64_t a, uint64_t n);

uint64_t isqrt_u64(uint64_t n);

// x = r1 mod m1, x = r2 mod m2 for coprime moduli; result reduced mod m1*m2
uint64_t crt(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2);

// "num/den" or "num"; den > 0 after normalization
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& r);

}  // namespace modchar

#ifndef UKOSZUL_FP_HPP
#define UKOSZUL_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ukoszul {

// Residues mod a prime p are stored as uint16_t in [0, p). Every container
// (Matrix, Subspace, ...) carries its modulus; these helpers do the arithmetic.
namespace fp {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Primes up to 2^16 only; residues must fit uint16_t.
inline void require_prime(std::uint32_t p) {
    if (p >= (1u << 16))
        throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^16 guard");
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

inline std::uint16_t add(std::uint32_t p, std::uint16_t a, std::uint16_t b) {
    std::uint32_t s = std::uint32_t(a) + b;
    if (s >= p) s -= p;
    return static_cast<std::uint16_t>(s);
}

inline std::uint16_t sub(std::uint32_t p, std::uint16_t a, std::uint16_t b) {
    return static_cast<std::uint16_t>(a >= b ? a - b : a + p - b);
}

inline std::uint16_t neg(std::uint32_t p, std::uint16_t a) {
    return a == 0 ? 0 : static_cast<std::uint16_t>(p - a);
}

inline std::uint16_t mul(std::uint32_t p, std::uint16_t a, std::uint16_t b) {
    return static_cast<std::uint16_t>((std::uint32_t(a) * b) % p);
}

inline std::uint16_t pow(std::uint32_t p, std::uint16_t a, std::uint32_t e) {
    std::uint16_t r = static_cast<std::uint16_t>(1 % p);
    std::uint16_t base = a;
    while (e) {
        if (e & 1) r = mul(p, r, base);
        base = mul(p, base, base);
        e >>= 1;
    }
    return r;
}

inline std::uint16_t inv(std::uint32_t p, std::uint16_t a) {
    if (a == 0) throw std::domain_error("inverse of 0 mod " + std::to_string(p));
    return pow(p, a, p - 2);
}

// Reduce an arbitrary integer into [0, p).
inline std::uint16_t reduce(std::uint32_t p, long long v) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint16_t>(r);
}

} // namespace fp

// Thrown when an enumeration or model build would exceed a configured budget.
// The message names the budget that would be required.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_(required) {}
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

} // namespace ukoszul

#endif

#pragma once
#include <cstdint>
#include <string>

#include "dlim/errors.hpp"

namespace dlim {

// Coefficient ring: Z, or Z/p for a prime p.  Composite moduli are rejected
// so that the mod-p path is always a field (Gaussian elimination stays valid).
struct Ring {
    enum class Kind { Integers, PrimeField } kind = Kind::Integers;
    uint32_t p = 0;  // modulus when PrimeField

    static Ring Z() { return Ring{Kind::Integers, 0}; }
    static Ring Fp(uint32_t p);

    bool is_field() const { return kind == Kind::PrimeField; }
    bool operator==(const Ring&) const = default;

    std::string str() const {
        return is_field() ? "Z/" + std::to_string(p) : "Z";
    }

    static Ring parse(const std::string& s);
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Primes are capped below 2^25 so the SIMD row kernels (exact double-based
// mod-p arithmetic) never lose integrality.
inline constexpr uint32_t kMaxPrime = (1u << 25) - 1;

inline Ring Ring::Fp(uint32_t p) {
    require(is_prime_u32(p), "modulus " + std::to_string(p) + " is not prime");
    require(p <= kMaxPrime, "modulus exceeds supported bound 2^25");
    return Ring{Kind::PrimeField, p};
}

inline Ring Ring::parse(const std::string& s) {
    if (s == "Z") return Z();
    if (s.rfind("Z/", 0) == 0) {
        try {
            unsigned long v = std::stoul(s.substr(2));
            return Fp(static_cast<uint32_t>(v));
        } catch (const ValidationError&) {
            throw;
        } catch (...) {
            throw ValidationError("cannot parse coefficient ring '" + s + "'");
        }
    }
    throw ValidationError("cannot parse coefficient ring '" + s + "' (expected Z or Z/p)");
}

}  // namespace dlim

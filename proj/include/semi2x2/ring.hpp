#ifndef SEMI2X2_RING_HPP
#define SEMI2X2_RING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace semi2x2 {

// Exact coefficient domains. PrimeField elements are canonical residues in
// [0, p); p may be any prime below 2^61 so products fit in a 128-bit
// intermediate. No floating point anywhere.
enum class RingKind { Integers, Rationals, PrimeField };

bool is_prime_u64(std::uint64_t n);

struct Ring {
    RingKind kind = RingKind::Integers;
    std::uint64_t p = 0;  // modulus, PrimeField only

    static Ring integers() { return Ring{RingKind::Integers, 0}; }
    static Ring rationals() { return Ring{RingKind::Rationals, 0}; }
    static Ring prime_field(std::uint64_t p);

    bool is_field() const { return kind != RingKind::Integers; }
    std::uint64_t characteristic() const { return kind == RingKind::PrimeField ? p : 0; }

    bool operator==(const Ring&) const = default;
    std::string str() const;
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

// One exact number tied to a Ring. Arithmetic between scalars of different
// rings throws std::invalid_argument.
class Scalar {
public:
    Scalar() : ring_(Ring::integers()), v_(mpz_class(0)) {}
    explicit Scalar(const Ring& ring);                  // zero of the ring
    Scalar(const Ring& ring, long value);
    Scalar(const Ring& ring, const mpz_class& value);
    Scalar(const Ring& ring, const mpq_class& value);   // must be integral unless ring is Rationals

    static Scalar zero(const Ring& r) { return Scalar(r); }
    static Scalar one(const Ring& r) { return Scalar(r, 1); }

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // fields only; throws on zero or over Integers
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact decimal form: integers as-is, rationals as "a/b", residues in [0,p).
    std::string str() const;

    // Image under the natural map into `target` (Z -> Q, Z -> F_p, Q -> F_p
    // when the denominator is a unit mod p). Throws when no such map exists.
    Scalar convert_to(const Ring& target) const;

    // Residue mod p of an Integers/Rationals scalar (or the value itself over F_p).
    std::uint64_t residue(std::uint64_t p) const;

    const mpz_class& as_mpz() const { return std::get<mpz_class>(v_); }
    const mpq_class& as_mpq() const { return std::get<mpq_class>(v_); }
    std::uint64_t as_residue() const { return std::get<std::uint64_t>(v_); }

private:
    Ring ring_;
    std::variant<mpz_class, mpq_class, std::uint64_t> v_;

    void check_same_ring(const Scalar& o) const;
};

}  // namespace semi2x2

#endif

#include "semi2x2/ring.hpp"

namespace semi2x2 {

/******** modular arithmetic ********/

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^61, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::invalid_argument("mod_inv: zero is not invertible");
    // extended Euclid on (a, p); p prime so gcd = 1
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t qt = r / newr;
        std::int64_t tmp = t - qt * newt;
        t = newt; newt = tmp;
        tmp = r - qt * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin bases for n < 3.3 * 10^24
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/******** Ring ********/

Ring Ring::prime_field(std::uint64_t p) {
    if (p >= (1ull << 61)) throw std::invalid_argument("prime_field: modulus must be below 2^61");
    if (!is_prime_u64(p)) throw std::invalid_argument("prime_field: modulus " + std::to_string(p) + " is not prime");
    return Ring{RingKind::PrimeField, p};
}

std::string Ring::str() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
}

/******** Scalar ********/

Scalar::Scalar(const Ring& ring) : ring_(ring) {
    switch (ring.kind) {
        case RingKind::Integers: v_ = mpz_class(0); break;
        case RingKind::Rationals: v_ = mpq_class(0); break;
        case RingKind::PrimeField: v_ = std::uint64_t{0}; break;
    }
}

Scalar::Scalar(const Ring& ring, long value) : ring_(ring) {
    switch (ring.kind) {
        case RingKind::Integers: v_ = mpz_class(value); break;
        case RingKind::Rationals: v_ = mpq_class(value); break;
        case RingKind::PrimeField: {
            long r = value % static_cast<long>(ring.p);
            if (r < 0) r += static_cast<long>(ring.p);
            v_ = static_cast<std::uint64_t>(r);
            break;
        }
    }
}

Scalar::Scalar(const Ring& ring, const mpz_class& value) : ring_(ring) {
    switch (ring.kind) {
        case RingKind::Integers: v_ = value; break;
        case RingKind::Rationals: v_ = mpq_class(value); break;
        case RingKind::PrimeField: v_ = mpz_fdiv_ui(value.get_mpz_t(), ring.p); break;
    }
}

Scalar::Scalar(const Ring& ring, const mpq_class& value) : ring_(ring) {
    switch (ring.kind) {
        case RingKind::Rationals: v_ = value; break;
        case RingKind::Integers: {
            if (value.get_den() != 1) throw std::invalid_argument("Scalar: non-integral value over Z");
            v_ = value.get_num();
            break;
        }
        case RingKind::PrimeField: {
            std::uint64_t num = mpz_fdiv_ui(value.get_num().get_mpz_t(), ring.p);
            std::uint64_t den = mpz_fdiv_ui(value.get_den().get_mpz_t(), ring.p);
            if (den == 0) throw std::invalid_argument("Scalar: denominator divisible by p");
            v_ = mod_mul(num, mod_inv(den, ring.p), ring.p);
            break;
        }
    }
}

void Scalar::check_same_ring(const Scalar& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("Scalar: ring mismatch (" + ring_.str() + " vs " + o.ring_.str() + ")");
}

bool Scalar::is_zero() const {
    switch (ring_.kind) {
        case RingKind::Integers: return as_mpz() == 0;
        case RingKind::Rationals: return as_mpq() == 0;
        case RingKind::PrimeField: return as_residue() == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_.kind) {
        case RingKind::Integers: return as_mpz() == 1;
        case RingKind::Rationals: return as_mpq() == 1;
        case RingKind::PrimeField: return as_residue() == 1;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_ring(o);
    Scalar out(ring_);
    switch (ring_.kind) {
        case RingKind::Integers: out.v_ = mpz_class(as_mpz() + o.as_mpz()); break;
        case RingKind::Rationals: out.v_ = mpq_class(as_mpq() + o.as_mpq()); break;
        case RingKind::PrimeField: out.v_ = mod_add(as_residue(), o.as_residue(), ring_.p); break;
    }
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_ring(o);
    Scalar out(ring_);
    switch (ring_.kind) {
        case RingKind::Integers: out.v_ = mpz_class(as_mpz() - o.as_mpz()); break;
        case RingKind::Rationals: out.v_ = mpq_class(as_mpq() - o.as_mpq()); break;
        case RingKind::PrimeField: out.v_ = mod_sub(as_residue(), o.as_residue(), ring_.p); break;
    }
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_ring(o);
    Scalar out(ring_);
    switch (ring_.kind) {
        case RingKind::Integers: out.v_ = mpz_class(as_mpz() * o.as_mpz()); break;
        case RingKind::Rationals: out.v_ = mpq_class(as_mpq() * o.as_mpq()); break;
        case RingKind::PrimeField: out.v_ = mod_mul(as_residue(), o.as_residue(), ring_.p); break;
    }
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out(ring_);
    switch (ring_.kind) {
        case RingKind::Integers: out.v_ = mpz_class(-as_mpz()); break;
        case RingKind::Rationals: out.v_ = mpq_class(-as_mpq()); break;
        case RingKind::PrimeField: out.v_ = as_residue() == 0 ? 0 : ring_.p - as_residue(); break;
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: zero has no inverse");
    Scalar out(ring_);
    switch (ring_.kind) {
        case RingKind::Integers: throw std::invalid_argument("Scalar: Z is not a field");
        case RingKind::Rationals: out.v_ = mpq_class(1 / as_mpq()); break;
        case RingKind::PrimeField: out.v_ = mod_inv(as_residue(), ring_.p); break;
    }
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(ring_ == o.ring_)) return false;
    switch (ring_.kind) {
        case RingKind::Integers: return as_mpz() == o.as_mpz();
        case RingKind::Rationals: return as_mpq() == o.as_mpq();
        case RingKind::PrimeField: return as_residue() == o.as_residue();
    }
    return false;
}

std::string Scalar::str() const {
    switch (ring_.kind) {
        case RingKind::Integers: return as_mpz().get_str();
        case RingKind::Rationals: return as_mpq().get_str();
        case RingKind::PrimeField: return std::to_string(as_residue());
    }
    return "?";
}

Scalar Scalar::convert_to(const Ring& target) const {
    if (target == ring_) return *this;
    switch (ring_.kind) {
        case RingKind::Integers: return Scalar(target, as_mpz());
        case RingKind::Rationals: {
            if (target.kind == RingKind::Integers || target.kind == RingKind::PrimeField)
                return Scalar(target, as_mpq());
            break;
        }
        case RingKind::PrimeField: {
            if (target.kind == RingKind::PrimeField && target.p == ring_.p) return *this;
            break;
        }
    }
    throw std::invalid_argument("Scalar: no natural map " + ring_.str() + " -> " + target.str());
}

std::uint64_t Scalar::residue(std::uint64_t p) const {
    switch (ring_.kind) {
        case RingKind::Integers: return mpz_fdiv_ui(as_mpz().get_mpz_t(), p);
        case RingKind::Rationals: {
            std::uint64_t num = mpz_fdiv_ui(as_mpq().get_num().get_mpz_t(), p);
            std::uint64_t den = mpz_fdiv_ui(as_mpq().get_den().get_mpz_t(), p);
            if (den == 0) throw std::invalid_argument("Scalar::residue: denominator divisible by p");
            return mod_mul(num, mod_inv(den, p), p);
        }
        case RingKind::PrimeField:
            if (ring_.p != p) throw std::invalid_argument("Scalar::residue: modulus mismatch");
            return as_residue();
    }
    return 0;
}

}  // namespace semi2x2

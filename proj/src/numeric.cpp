#include "tropjac/numeric.hpp"

#include <ostream>

namespace tropjac {

Int::Int(const std::string& s) {
    if (mpz_set_str(v_.get_mpz_t(), s.c_str(), 10) != 0)
        fail("InvalidInput", "not an integer: '" + s + "'");
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.raw(); }

Int abs(const Int& x) { return Int(mpz_class(::abs(x.raw()))); }

Int gcd(const Int& a, const Int& b) { return Int(mpz_class(::gcd(a.raw(), b.raw()))); }

Int lcm(const Int& a, const Int& b) { return Int(mpz_class(::lcm(a.raw(), b.raw()))); }

Int fdiv(const Int& a, const Int& b) {
    require(!b.is_zero(), "InternalError", "division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(q);
}

Int divexact(const Int& a, const Int& b) {
    require(!b.is_zero(), "InternalError", "division by zero");
    require(mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()) != 0,
            "InternalError", "inexact integer division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(q);
}

Int isqrt(const Int& x) {
    require(x.sign() >= 0, "InternalError", "isqrt of negative");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.raw().get_mpz_t());
    return Int(r);
}

unsigned long remove_factor(Int& x, const Int& p) {
    mpz_class out;
    unsigned long k =
        mpz_remove(out.get_mpz_t(), x.raw().get_mpz_t(), p.raw().get_mpz_t());
    x = Int(out);
    return k;
}

bool is_probable_prime(const Int& p) {
    return mpz_probab_prime_p(p.raw().get_mpz_t(), 30) != 0;
}

Rat::Rat(const Int& num, const Int& den) {
    require(!den.is_zero(), "InvalidInput", "zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        fail("InvalidInput", "not a rational: '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Int Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Int(q);
}

Rat& Rat::operator/=(const Rat& o) {
    require(!o.is_zero(), "InternalError", "division by zero");
    v_ /= o.v_;
    return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
    require(!b.is_zero(), "InternalError", "division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.raw(); }

Rat abs(const Rat& x) { return Rat(mpq_class(::abs(x.raw()))); }

Int floor_sqrt(const Rat& x) {
    require(x.sign() >= 0, "InternalError", "floor_sqrt of negative");
    // k = isqrt(floor(x)) is within 1 of the answer; fix up exactly.
    Int k = isqrt(x.floor());
    while (Rat((k + 1) * (k + 1)) <= x) k += 1;
    while (Rat(k * k) > x) k -= 1;
    return k;
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.infinite || b.infinite) return ExtRat::inf();
    return ExtRat(a.value + b.value);
}

} // namespace tropjac

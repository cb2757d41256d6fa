#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "tropjac/errors.hpp"

namespace tropjac {

// Arbitrary-precision integer. Thin value wrapper around mpz_class with plain
// (non-expression-template) operators so it can serve as an Eigen scalar.
class Int {
public:
    Int() : v_(0) {}
    Int(int n) : v_(n) {}
    Int(long n) : v_(n) {}
    explicit Int(const mpz_class& z) : v_(z) {}
    explicit Int(const std::string& s);

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

    std::string str() const { return v_.get_str(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    Int operator-() const { return Int(mpz_class(-v_)); }
    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.v_ + b.v_)); }
    friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.v_ - b.v_)); }
    friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.v_ * b.v_)); }
    // Truncated division, matching mpz semantics.
    friend Int operator/(const Int& a, const Int& b) { return Int(mpz_class(a.v_ / b.v_)); }
    friend Int operator%(const Int& a, const Int& b) { return Int(mpz_class(a.v_ % b.v_)); }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
    friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Int& x);

private:
    mpz_class v_;
};

Int abs(const Int& x);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Floor division a/b with b != 0.
Int fdiv(const Int& a, const Int& b);
// Exact division; throws InternalError when b does not divide a.
Int divexact(const Int& a, const Int& b);
// Largest k >= 0 with k*k <= x; x must be >= 0.
Int isqrt(const Int& x);
// Exponent of p in x (x != 0, p >= 2).
unsigned long remove_factor(Int& x, const Int& p);
bool is_probable_prime(const Int& p);

// Exact rational, always reduced, denominator > 0. Wrapper around mpq_class.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n.raw()) {}
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "n" with optional sign.
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    std::string str() const { return v_.get_str(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Int floor() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x);

private:
    mpq_class v_;
};

Rat abs(const Rat& x);
// Largest integer k with k*k <= x (x >= 0), as an Int.
Int floor_sqrt(const Rat& x);

// Rational extended with +infinity; the value set of a valuation.
struct ExtRat {
    bool infinite = false;
    Rat value;

    ExtRat() = default;
    ExtRat(const Rat& v) : infinite(false), value(v) {}
    static ExtRat inf() { ExtRat e; e.infinite = true; return e; }

    bool is_inf() const { return infinite; }
    const Rat& finite() const {
        require(!infinite, "InternalError", "infinite valuation where finite expected");
        return value;
    }
    std::string str() const { return infinite ? std::string("inf") : value.str(); }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite || b.infinite) return a.infinite && b.infinite;
        return a.value == b.value;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
};

ExtRat min(const ExtRat& a, const ExtRat& b);
ExtRat operator+(const ExtRat& a, const ExtRat& b);

} // namespace tropjac

namespace Eigen {

template <>
struct NumTraits<tropjac::Int> : GenericNumTraits<tropjac::Int> {
    typedef tropjac::Int Real;
    typedef tropjac::Rat NonInteger;
    typedef tropjac::Int Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60,
    };
};

template <>
struct NumTraits<tropjac::Rat> : GenericNumTraits<tropjac::Rat> {
    typedef tropjac::Rat Real;
    typedef tropjac::Rat NonInteger;
    typedef tropjac::Rat Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

} // namespace Eigen

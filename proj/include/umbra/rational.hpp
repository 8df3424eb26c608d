#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace umbra {

/// Exact rational number, the universal scalar of the engine.
///
/// Invariants (maintained by GMP canonicalization): gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q" (base 10).
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    static Rational factorial(int n) {
        if (n < 0)
            throw std::domain_error("factorial of negative integer");
        mpz_class z;
        mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
        return Rational(mpq_class(z));
    }

    /// Exact binomial coefficient for integer arguments, 0 for k < 0.
    static Rational binom(long n, long k) {
        if (k < 0)
            return Rational(0);
        if (n >= 0 && k > n)
            return Rational(0);
        return binom(Rational(n), static_cast<int>(k));
    }

    static Rational binom(int n, int k) {
        return binom(static_cast<long>(n), static_cast<long>(k));
    }

    /// Generalized binomial binom(z, k) = (z)_k / k! for rational z, k >= 0.
    static Rational binom(const Rational& z, int k) {
        if (k < 0)
            return Rational(0);
        return falling(z, k) / factorial(k);
    }

    /// Falling factorial (z)_k = z(z-1)...(z-k+1), empty product for k = 0.
    static Rational falling(const Rational& z, int k) {
        if (k < 0)
            throw std::domain_error("falling factorial with negative length");
        Rational r(1);
        for (int i = 0; i < k; ++i)
            r *= z - Rational(i);
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not a machine integer: " + str());
        return v_.get_num().get_si();
    }

    Rational pow(int e) const {
        if (e < 0) {
            if (is_zero())
                throw std::domain_error("Rational: 0 to negative power");
            return Rational(1) / pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(num) / mpq_class(den));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// Wire format: "p" for integers, "p/q" otherwise (q > 0, reduced).
    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    int sign() const { return sgn(v_); }

  private:
    mpq_class v_;
};

}  // namespace umbra

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace segchi {

// Exact arbitrary-precision fraction, the sole coordinate scalar.
// Canonical form (denominator > 0, gcd(|num|, den) = 1) holds after every
// constructor and operation; gmp keeps arithmetic canonical as long as the
// operands are.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }

    // Canonical spelling "num/den" in lowest terms with positive
    // denominator: "3/8", "-1/2", "0/1".
    std::string str() const;

    // Strict inverse of str(); rejects every other spelling ("2/4", "1/-3",
    // bare "3", whitespace). Throws ValueError.
    static Rational parse_canonical(const std::string& s);

    // Lenient form for command-line input: "n", "n/d", optional sign on
    // either part. Throws ValueError on zero denominators or junk.
    static Rational parse(const std::string& s);

    // Display-only approximation (SVG output); never re-ingested.
    double to_double() const { return v_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

} // namespace segchi

#include "segchi/rational.hpp"

#include "segchi/errors.hpp"

#include <ostream>

namespace segchi {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw ValueError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Rational::Rational(long num, long den) : v_(make_canonical(num, den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : v_(make_canonical(num, den)) {}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0)
        throw ValueError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse_canonical(const std::string& s) {
    Rational r = parse(s);
    if (r.str() != s)
        throw ValueError("non-canonical rational '" + s + "' (expected '" + r.str() + "')");
    return r;
}

Rational Rational::parse(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ValueError("cannot parse rational '" + s + "'");
    // mpz_set_str does not take a leading '+'
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    return Rational(mpz_class(num), mpz_class(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace segchi

#include "trieig/rational.hpp"

namespace trieig {

Rational Rational::parse(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) {
        mpz_class n;
        if (n.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
        return Rational(n);
    }
    mpz_class num, den;
    if (num.set_str(s.substr(0, pos), 10) != 0 || den.set_str(s.substr(pos + 1), 10) != 0)
        throw std::invalid_argument("Rational::parse: bad fraction '" + s + "'");
    if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

bool is_power_of_two(const mpz_class& q, unsigned long& t) {
    if (q <= 0) return false;
    if (mpz_popcount(q.get_mpz_t()) != 1) return false;
    t = mpz_scan1(q.get_mpz_t(), 0);
    return true;
}

}  // namespace trieig

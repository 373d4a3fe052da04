#include "mcst/rational.hpp"

#include <stdexcept>

namespace mcst {

namespace {

// explicit base 10: the default GMP string constructor would read a
// leading zero as octal
Integer integer_from_string(const std::string& text) {
    Integer value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed integer literal: " + text);
    return value;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num = integer_from_string(text.substr(0, slash));
        Integer den = integer_from_string(text.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r{integer_from_string(text)};
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("malformed decimal: " + text);
    Integer num = integer_from_string(digits);
    Integer den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational sqrt_upper_bound(unsigned long k) {
    Integer target = Integer(k) << 60;
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), target.get_mpz_t());
    if (rem != 0) root += 1;
    return make_rational(root, Integer(1) << 30);
}

bool le_coeff_sqrt(const Rational& lhs, const Rational& coeff, unsigned long k) {
    if (lhs <= 0) return true;
    Rational lhs_sq = lhs * lhs;
    Rational rhs_sq = coeff * coeff * Rational(static_cast<long>(k));
    return lhs_sq <= rhs_sq;
}

}  // namespace mcst

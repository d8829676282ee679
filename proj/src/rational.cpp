#include "liecohom/rational.hpp"

#include <stdexcept>

namespace liecohom {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

}  // namespace liecohom

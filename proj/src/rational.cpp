#include "hopfkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfkit {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num)) throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(parse_integer(num));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
        mpz_class d = parse_integer(den);
        if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
        v = mpq_class(parse_integer(num), d);
        v.canonicalize();
    }
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& b, const Rational& c) {
    // mpq has no fused multiply-add; one temporary is unavoidable.
    mpq_class t;
    mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hopfkit

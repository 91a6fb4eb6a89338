#include "nakarep/rational.hpp"

#include "nakarep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nakarep {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    s = trim(s);
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const auto body = digits.empty() || digits.front() != '-' ? std::string_view(digits) : std::string_view(digits).substr(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::string Rational::decimal(int digits) const {
    digits = std::max(digits, 0);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class a = abs(num()) * scale * 2 + den();
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), a.get_mpz_t(), mpz_class(den() * 2).get_mpz_t());
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && scaled != 0) s.insert(0, "-");
    return s;
}

const Rational& ExtendedBound::value() const {
    if (kind_ != Kind::Finite) throw DomainError("infinite bound has no rational value");
    return value_;
}

ExtendedBound ExtendedBound::parse(std::string_view text) {
    text = trim(text);
    if (text == "+inf" || text == "inf" || text == "+infinity" || text == "infinity") return pos_inf();
    if (text == "-inf" || text == "-infinity") return neg_inf();
    return ExtendedBound(Rational::parse(text));
}

std::string ExtendedBound::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        case Kind::Finite: break;
    }
    return value_.str();
}

}  // namespace nakarep

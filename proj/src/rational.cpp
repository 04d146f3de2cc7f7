#include "mixedfair/rational.hpp"

#include <cctype>

namespace mixedfair {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    // leading/trailing whitespace is not meaningful in our file formats
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;

    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) return std::nullopt;

    mpq_class q;
    if (q.set_str(std::string(num) + "/" + std::string(den), 10) != 0) return std::nullopt;
    if (sgn(q.get_den()) == 0) return std::nullopt;  // "p/0"
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

mpz_class Rational::floor_div(const Rational& a, const Rational& b) {
    mpq_class q = a.v_ / b.v_;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

mpz_class Rational::ceil_div(const Rational& a, const Rational& b) {
    mpq_class q = a.v_ / b.v_;
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace mixedfair

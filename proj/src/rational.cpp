#include "jkres/rational.hpp"

#include <cctype>
#include <ostream>

namespace jkres {

Rational Rational::from_string(const std::string& s) {
    auto bad = [&](const std::string& why) {
        return validation_error("rational", "invalid rational '" + s + "': " + why);
    };
    if (s.empty()) throw bad("empty");
    auto slash = s.find('/');
    // mpz_class rejects a leading '+', so validate and strip it here.
    auto check_int = [&](std::string& part) {
        if (part.empty()) throw bad("empty integer part");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad("sign without digits");
        for (std::size_t j = i; j < part.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(part[j]))) throw bad("not an integer");
        if (part[0] == '+') part.erase(0, 1);
    };
    if (slash == std::string::npos) {
        std::string whole = s;
        check_int(whole);
        return Rational(mpz_class(whole));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw bad("zero denominator");
    return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
    std::string out = num().get_str();
    if (den() != 1) out += "/" + den().get_str();
    return out;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? e : -e;
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(pn, pd);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational dot(const std::vector<Rational>& a, const std::vector<long>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

} // namespace jkres

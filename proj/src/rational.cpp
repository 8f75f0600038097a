#include "shadowcf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace shadowcf {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

Rat parse_rat(std::string_view text) {
    // Trim surrounding whitespace; GMP's string constructor accepts "p/q" but
    // does not canonicalize and is lax about garbage, so validate here.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) {
        throw std::invalid_argument("parse_rat: empty string");
    }
    auto is_int = [](const std::string& t) {
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) {
            throw std::invalid_argument("parse_rat: malformed integer '" + s + "'");
        }
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        throw std::invalid_argument("parse_rat: malformed fraction '" + s + "'");
    }
    Int d(den);
    if (d == 0) {
        throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    }
    return make_rat(Int(num), d);
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

std::string int_str(const Int& n) {
    return n.get_str();
}

std::string rat_decimal(const Rat& r, int digits) {
    if (digits < 0) {
        throw std::invalid_argument("rat_decimal: negative digit count");
    }
    const bool negative = r < 0;
    Rat a = rat_abs(r);
    // Scale to an integer in units of 10^-digits, then round half to even.
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = a * Rat(scale);
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    Int twice = rem * 2;
    const Int& den = scaled.get_den();
    if (twice > den || (twice == den && mpz_odd_p(quo.get_mpz_t()))) {
        quo += 1;
    }
    std::string units = quo.get_str();
    std::string out = negative && quo != 0 ? "-" : "";
    if (digits == 0) {
        return out + units;
    }
    if (units.size() <= static_cast<std::size_t>(digits)) {
        units.insert(0, static_cast<std::size_t>(digits) + 1 - units.size(), '0');
    }
    units.insert(units.size() - static_cast<std::size_t>(digits), ".");
    // Catch the -0.000... case: drop the sign only if every digit is zero.
    if (negative && quo == 0) {
        // all digits zero; keep unsigned form
    }
    return out + units;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat rat_abs(const Rat& r) {
    return r < 0 ? Rat(-r) : r;
}

}  // namespace shadowcf

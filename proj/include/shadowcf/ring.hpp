#pragma once

#include "shadowcf/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace shadowcf {

/// One element of the rank-2 Grassmann algebra over the rationals:
///
///     x = body + soul*XE + xi*X + eta*E
///
/// where X, E are the two odd generators with X*X = E*E = 0 and X*E = -E*X,
/// and XE denotes the even product X*E.  All four coefficients are exact
/// rationals.  Multiplication is associative but not commutative (odd parts
/// anticommute), so the order of factors matters everywhere.
struct RingElem {
    Rat body;  // coefficient of 1
    Rat soul;  // coefficient of X*E
    Rat xi;    // coefficient of X
    Rat eta;   // coefficient of E

    RingElem() = default;
    RingElem(Rat b, Rat s, Rat x, Rat e)
        : body(std::move(b)), soul(std::move(s)), xi(std::move(x)), eta(std::move(e)) {}

    static RingElem from_int(long v) { return RingElem(make_rat(v), Rat(0), Rat(0), Rat(0)); }
    static RingElem from_rat(const Rat& v) { return RingElem(v, Rat(0), Rat(0), Rat(0)); }
    static RingElem zero() { return from_int(0); }
    static RingElem one() { return from_int(1); }
    /// The odd generator X.
    static RingElem gen_xi() { return RingElem(Rat(0), Rat(0), Rat(1), Rat(0)); }
    /// The odd generator E.
    static RingElem gen_eta() { return RingElem(Rat(0), Rat(0), Rat(0), Rat(1)); }
    /// The even nilpotent X*E.
    static RingElem gen_xi_eta() { return RingElem(Rat(0), Rat(1), Rat(0), Rat(0)); }

    bool is_zero() const { return body == 0 && soul == 0 && xi == 0 && eta == 0; }
    /// True when the odd part vanishes (element lies in the even subring).
    bool is_even() const { return xi == 0 && eta == 0; }
    /// True when both even coefficients vanish.
    bool is_odd() const { return body == 0 && soul == 0; }
    /// Nilpotent part: everything except the body.
    bool is_nilpotent() const { return body == 0; }

    friend bool operator==(const RingElem&, const RingElem&) = default;
};

RingElem operator+(const RingElem& x, const RingElem& y);
RingElem operator-(const RingElem& x, const RingElem& y);
RingElem operator-(const RingElem& x);
RingElem operator*(const RingElem& x, const RingElem& y);
RingElem operator*(const Rat& c, const RingElem& x);
RingElem operator*(const RingElem& x, const Rat& c);

/// Element of the even subring, body + soul*XE.  Conversion from a general
/// RingElem is checked: a nonzero odd part throws std::domain_error.
struct EvenElem {
    Rat body;
    Rat soul;

    EvenElem() = default;
    EvenElem(Rat b, Rat s) : body(std::move(b)), soul(std::move(s)) {}
    explicit EvenElem(const RingElem& x);

    RingElem lift() const { return RingElem(body, soul, Rat(0), Rat(0)); }
    friend bool operator==(const EvenElem&, const EvenElem&) = default;
};

/// Element of the odd part, xi*X + eta*E.  Conversion from a general
/// RingElem is checked: a nonzero even part throws std::domain_error.
struct OddElem {
    Rat xi;
    Rat eta;

    OddElem() = default;
    OddElem(Rat x, Rat e) : xi(std::move(x)), eta(std::move(e)) {}
    explicit OddElem(const RingElem& x);

    RingElem lift() const { return RingElem(Rat(0), Rat(0), xi, eta); }
    friend bool operator==(const OddElem&, const OddElem&) = default;
};

EvenElem operator+(const EvenElem& x, const EvenElem& y);
EvenElem operator-(const EvenElem& x, const EvenElem& y);
EvenElem operator*(const EvenElem& x, const EvenElem& y);
/// Product of two odd elements is even with zero body:
/// (a*X + b*E)(c*X + d*E) = (a*d - b*c) * XE.
EvenElem operator*(const OddElem& x, const OddElem& y);
OddElem operator*(const EvenElem& x, const OddElem& y);
OddElem operator*(const OddElem& x, const EvenElem& y);

/// Exact division in the even subring.  The divisor must have nonzero body;
/// otherwise std::domain_error.  (b + s*XE)^-1 = 1/b - (s/b^2)*XE.
EvenElem even_div(const EvenElem& num, const EvenElem& den);
RingElem even_div(const RingElem& num, const RingElem& den);

/// Multiplicative inverse of a ring element with nonzero body
/// (throws std::domain_error otherwise).
RingElem ring_inverse(const RingElem& x);

/// Rendering styles for ring elements.
///  - Unicode: compact form like "2+ξη", "ξ-η", "3/4ξη";
///    unit coefficients on generator terms are omitted.
///  - Ascii: generators spelled xe, x, e with explicit coefficients:
///    "2+1*xe", "-1*x+1*e".
enum class TextStyle { Unicode, Ascii };

std::string render(const RingElem& v, TextStyle style = TextStyle::Unicode);

/// Parses either rendering style (mixed input is accepted); whitespace is
/// ignored.  Throws std::invalid_argument on malformed input.
RingElem parse_ring_elem(std::string_view text);

std::ostream& operator<<(std::ostream& os, const RingElem& v);

}  // namespace shadowcf

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input rejected by a contract check (shape, membership, precondition).
/// Maps to CLI exit status 2.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A self-check on a constructed object failed. Maps to CLI exit status 3.
class verification_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Oracle refused a spec larger than its configured ambient-size guard.
class scale_guard_error : public validation_error {
  public:
    using validation_error::validation_error;
};

inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw validation_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational &r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational &r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline Integer abs_of(const Integer &z) { return z < 0 ? Integer(-z) : z; }
inline Rational abs_of(const Rational &r) { return r < 0 ? Rational(-r) : r; }

inline Integer gcd_of(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm_of(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Least nonnegative residue of a modulo q (q > 0).
inline Integer mod_of(const Integer &a, const Integer &q) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
}

inline Integer pow_of(const Integer &base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline bool fits_int64(const Integer &z) {
    static const Integer lo("-9223372036854775808");
    static const Integer hi("9223372036854775807");
    return z >= lo && z <= hi;
}

inline std::int64_t to_int64(const Integer &z) {
    if (!fits_int64(z))
        throw validation_error("integer out of 64-bit range: " + z.get_str());
    // mpz_get_si is long; long is 64-bit on the supported targets.
    static_assert(sizeof(long) == 8);
    return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

/// "p" for integers, "p/q" otherwise (always reduced).
inline std::string to_string(const Rational &r) { return r.get_str(); }

/// Parses "p" or "p/q". The fraction must already be in lowest terms with
/// a positive denominator.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char *why) {
        throw validation_error("bad rational \"" + std::string(text) + "\": " + why);
    };
    if (text.empty())
        fail("empty");
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t k = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            k = 1;
        if (k == s.size())
            return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                return false;
        return true;
    };
    auto num_str = [](std::string_view s) {
        return std::string(s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text, true))
            fail("not an integer");
        return Rational(Integer(num_str(text)));
    }
    auto ns = text.substr(0, slash);
    auto ds = text.substr(slash + 1);
    if (!valid_int(ns, true) || !valid_int(ds, false))
        fail("expected p/q");
    Integer num(num_str(ns)), den{std::string(ds)};
    if (den == 0)
        fail("zero denominator");
    if (gcd_of(num, den) != 1)
        fail("not in lowest terms");
    return Rational(num, den);
}

} // namespace gtpoly

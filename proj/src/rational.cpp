#include "klab/rational.hpp"

#include "klab/errors.hpp"

#include <limits>

namespace klab {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw InvalidInput("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Rational power(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw InvalidParameter("zero raised to a negative power");
        return Rational(1) / power(base, -exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

BigInt to_integer(const Rational& q) {
    if (q.get_den() != 1) throw Inconsistency("expected an integer, got " + to_string(q));
    return q.get_num();
}

bool fits_int64(const BigInt& z) {
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

} // namespace klab

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chaincount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized num/den rational. mpq_class does not reduce on
/// construction, so all ratio building goes through here.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational ratio(std::int64_t num, std::int64_t den) {
    return ratio(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline std::string decimal(const Integer& value) {
    return value.get_str(10);
}

} // namespace chaincount

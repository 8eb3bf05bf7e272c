// SPDX-License-Identifier: Apache-2.0
#include "isog3/rational.hpp"

#include <stdexcept>

#include "isog3/errors.hpp"

namespace isog3 {

Q Q::parse(const std::string& s) {
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "not a rational number: '" + s + "'");
    if (v.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: '" + s + "'");
    v.canonicalize();
    return Q(v);
}

Q pow(const Q& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    Q r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string to_string(const Q& a) { return a.value().get_str(); }

}  // namespace isog3

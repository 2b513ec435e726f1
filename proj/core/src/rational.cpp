#include "doflab/rational.hpp"

#include <stdexcept>

namespace doflab {

std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace doflab

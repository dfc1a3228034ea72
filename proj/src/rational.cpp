#include "pmskit/rational.hpp"

#include <stdexcept>

namespace pmskit {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("bad character in rational literal: '" + std::string(1, c) + "'");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

double to_double(const Rational& r) {
    return r.get_d();
}

} // namespace pmskit

#ifndef NILBOX_RATIONAL_HPP
#define NILBOX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nilbox {

/// Exact rational scalar used throughout the symbolic pipeline.
using Rat = boost::multiprecision::cpp_rational;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat rat_parse(const std::string& text) {
    try {
        Rat r(text);
        return r;
    } catch (const std::exception&) {
        throw input_error("invalid rational literal: '" + text + "'");
    }
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nilbox

#endif

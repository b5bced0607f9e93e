#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace matchstick {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& r);

}  // namespace matchstick

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lucas {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace lucas

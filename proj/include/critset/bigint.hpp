#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace critset {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace critset

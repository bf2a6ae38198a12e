#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sdc {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sdc

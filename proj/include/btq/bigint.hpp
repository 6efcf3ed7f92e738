#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace btq {

// Matrix entries and walk counts grow like p^(d*t); keep them exact.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace btq

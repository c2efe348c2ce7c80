#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wordeco {

// Every count in the library is exact; totals such as sum k*(m)_k leave the
// 64-bit range for moderate m.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

} // namespace wordeco

#pragma once

#include <gmpxx.h>

#include <string>

namespace deutsch {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s, 10); }

} // namespace deutsch

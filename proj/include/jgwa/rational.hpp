#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jgwa {

using Rat = mpq_class;
using Int = mpz_class;

// "p" or "p/q"
std::string to_string(const Rat& q);
Rat parse_rat(std::string_view s);

Rat rat_pow(const Rat& q, long e);

}  // namespace jgwa

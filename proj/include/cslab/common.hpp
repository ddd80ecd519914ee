#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cslab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt binomial(long n, long k);

/// Comma-separated integer list, e.g. "2,4,7,1". Whitespace tolerated.
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::string join_ints(const std::vector<int>& values, const char* sep = ",");

}  // namespace cslab

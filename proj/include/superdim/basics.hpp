#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdim {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Weight in the raw eps/delta coefficient basis: entries 0..m-1 hold the
// eps_i coefficients, entries m..m+n-1 the delta_j coefficients.  The
// display notation (c_1..c_m | d_1..d_n) stands for sum c_i eps_i - sum
// d_j delta_j, so the raw delta entries are the negated d's.
using Wvec = std::vector<std::int64_t>;

struct NotDominantError : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedShapeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DimensionMismatchError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexOutOfRangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct BoundExceededError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotInCosetError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ShellNotCleanError : std::runtime_error { using std::runtime_error::runtime_error; };
struct HookViolationError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };

// Broken internal invariant (non-integral result, zero denominator, ...).
struct InternalError : std::logic_error { using std::logic_error::logic_error; };

BigInt factorial(int k);

}  // namespace superdim

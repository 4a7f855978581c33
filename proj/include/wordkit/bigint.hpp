#ifndef WORDKIT_BIGINT_HPP
#define WORDKIT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace wordkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace wordkit

#endif

#ifndef CONFAULT_BIGINT_HPP
#define CONFAULT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace confault {

// Exact arithmetic types. Determinants and path counts grow factorially in
// the vertex count, so fixed-width integers are never used for verdicts.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace confault

#endif

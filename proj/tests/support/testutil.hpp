#ifndef FINHILB_TEST_TESTUTIL_HPP
#define FINHILB_TEST_TESTUTIL_HPP

#include <cmath>

// absolute-tolerance comparison; doctest prints both operands of the <= on
// failure, which keeps diagnostics readable without Approx's scale rules
#define CHECK_ABS(a, b, tol) CHECK(std::fabs((a) - (b)) <= (tol))
#define REQUIRE_ABS(a, b, tol) REQUIRE(std::fabs((a) - (b)) <= (tol))

#endif

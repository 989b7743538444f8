#include <doctest.h>

TEST_SUITE_BEGIN("hypothesis");

TEST_SUITE_END();

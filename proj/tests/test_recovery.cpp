#include <doctest.h>

TEST_SUITE_BEGIN("recovery");

TEST_SUITE_END();

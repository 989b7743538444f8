#include <doctest.h>

TEST_SUITE_BEGIN("inverse");

TEST_SUITE_END();

#include <doctest.h>

#include "golden.hpp"

TEST_SUITE("cli") {

TEST_CASE("golden cases") {
  int count = 0;
  const auto failures = kvedom::testing::run_golden(KVEDOM_EXE, KVEDOM_DATA, &count);
  CHECK(count > 20);
  for (const auto& f : failures) FAIL_CHECK(f.name << ": " << f.detail);
}

}

#include "catch_amalgamated.hpp"

#include <algorithm>

#include "tacs/verify.hpp"

using namespace tacs;

TEST_CASE("full sweep to J = 41/2 passes") {
  const auto results = verify_range(HalfInt::from_twice(41));
  std::size_t failed = 0;
  for (const auto &r : results)
    if (!r.passed) {
      ++failed;
      UNSCOPED_INFO(r.name << " J=" << r.J.str() << " value=" << r.value << " " << r.detail);
    }
  CHECK(failed == 0);
  // Results come back in J order.
  CHECK(std::is_sorted(results.begin(), results.end(),
                       [](const CheckResult &a, const CheckResult &b) { return a.J < b.J; }));
}

TEST_CASE("J = 1/2 is a trivial pass") {
  const auto results = verify_j(HalfInt::from_twice(1));
  CHECK_FALSE(results.empty());
  for (const auto &r : results)
    CHECK(r.passed);
}

TEST_CASE("a corrupted coefficient is named") {
  VerifyOptions opt;
  opt.inject_corruption = true;
  const auto results = verify_j(HalfInt::from_twice(7), opt);
  auto failed = [&](const std::string &name) {
    return std::any_of(results.begin(), results.end(),
                       [&](const CheckResult &r) { return r.name == name && !r.passed; });
  };
  CHECK(failed("recurrence-residual"));
  CHECK(failed("energy-routes"));
  CHECK_FALSE(failed("oracle-equivalence"));
}

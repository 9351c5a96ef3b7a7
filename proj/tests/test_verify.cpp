#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordbell/verify.hpp"

using namespace ordbell;

namespace {

bool sorted_by_name(const std::vector<CheckResult>& checks) {
  return std::is_sorted(checks.begin(), checks.end(),
                        [](const CheckResult& a, const CheckResult& b) {
                          return a.name < b.name;
                        });
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::size_t with_prefix(const std::vector<CheckResult>& checks, const std::string& prefix) {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) {
        return c.name.rfind(prefix, 0) == 0;
      }));
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (Suite suite : {Suite::oracle, Suite::matrix, Suite::periodicity, Suite::lemma,
                      Suite::all}) {
    CHECK(parse_suite(suite_name(suite)) == suite);
  }
  CHECK(suite_name(Suite::oracle) == "oracle");
  CHECK(suite_name(Suite::all) == "all");
  CHECK_THROWS_AS(parse_suite("bogus"), std::domain_error);
  CHECK_THROWS_AS(parse_suite(""), std::domain_error);
}

TEST_CASE("single suite runs clean under a tight limit") {
  const auto checks = run_suite(Suite::oracle, 4);
  CHECK(!checks.empty());
  CHECK(sorted_by_name(checks));
  CHECK(with_prefix(checks, "oracle/") == checks.size());
  for (const auto& check : checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
    // a passing check reports how much work it did
    CHECK(check.detail.find(" comparisons") != std::string::npos);
  }
}

TEST_CASE("combined suite covers all four groups") {
  const auto checks = run_suite(Suite::all, 4);
  CHECK(sorted_by_name(checks));
  CHECK(all_passed(checks));
  CHECK(with_prefix(checks, "oracle/") > 0);
  CHECK(with_prefix(checks, "matrix/") > 0);
  CHECK(with_prefix(checks, "periodicity/") > 0);
  CHECK(with_prefix(checks, "lemma/") > 0);
  CHECK(with_prefix(checks, "oracle/") + with_prefix(checks, "matrix/") +
            with_prefix(checks, "periodicity/") + with_prefix(checks, "lemma/") ==
        checks.size());
}

TEST_CASE("limit only tightens") {
  // the limit caps input sizes, never the roster: same checks either way
  const auto tight = run_suite(Suite::lemma, 2);
  const auto loose = run_suite(Suite::lemma, 5);
  REQUIRE(tight.size() == loose.size());
  for (std::size_t i = 0; i < tight.size(); ++i) CHECK(tight[i].name == loose[i].name);
  CHECK(all_passed(tight));
  CHECK(all_passed(loose));
}

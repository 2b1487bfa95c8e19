#include <padic_lattes/suites.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace padic_lattes;

namespace {
Json normalized(const Report& r) {
  Json j = r.to_json();
  j["summary"]["wall_ms"] = 0;
  return j;
}
}  // namespace

TEST_CASE("suite reports are deterministic") {
  suites::SuiteConfig cfg;
  const Report a = suites::run_suites({"identities"}, cfg);
  const Report b = suites::run_suites({"identities"}, cfg);
  CHECK(normalized(a).dump(2) == normalized(b).dump(2));
  CHECK(a.failures() == 0);
}

TEST_CASE("records are ordered by family, check, inputs") {
  suites::SuiteConfig cfg;
  cfg.certificate_samples = 10;
  const Report r = suites::run_suites({"certificates", "identities"}, cfg);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const auto& x = r.records[i - 1];
    const auto& y = r.records[i];
    const auto kx = std::make_tuple(x.family, x.check, x.inputs.dump());
    const auto ky = std::make_tuple(y.family, y.check, y.inputs.dump());
    CHECK(kx <= ky);
  }
}

TEST_CASE("csv flattening has one line per record plus a header") {
  suites::SuiteConfig cfg;
  const Report r = suites::run_suites({"identities"}, cfg);
  const std::string csv = r.to_csv();
  const long lines = static_cast<long>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(lines == static_cast<long>(r.records.size()) + 1);
  CHECK(csv.rfind("family,check,inputs,expected,actual,pass\n", 0) == 0);
}

TEST_CASE("failures count drives the exit-code contract") {
  Report r;
  CHECK(r.failures() == 0);
  CheckRecord bad;
  bad.pass = false;
  r.records.push_back(bad);
  CHECK(r.failures() == 1);
}

TEST_CASE("family filter restricts the records") {
  suites::SuiteConfig cfg;
  cfg.families = {"legendre"};
  const Report r = suites::run_suites({"identities"}, cfg);
  CHECK(!r.records.empty());
  for (const auto& rec : r.records) CHECK(rec.family == "legendre");
}

TEST_CASE("unknown suite names are rejected") {
  suites::SuiteConfig cfg;
  CHECK_THROWS_AS(suites::run_suites({"nope"}, cfg), std::domain_error);
}

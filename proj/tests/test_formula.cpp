#include <doctest.h>

#include <algorithm>
#include <random>

#include "brute_force.hpp"
#include "ptk/formula.hpp"

using namespace ptk;

namespace {

ThicknessResult theta(std::string_view spec) {
  return point_thickness(parse_profile(spec));
}

}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(0, 0) == 0);
  CHECK(sigma(2, 2) == 2);
  CHECK(sigma(1, 0) == 1);
  CHECK(sigma(3, 3) == 0);
  CHECK(sigma(2, 5) == 2);
  CHECK(sigma(0, 2) == 1);
  CHECK(sigma(2, 1) == 1);
  CHECK_THROWS_AS(sigma(-1, 0), DomainError);
  CHECK_THROWS_AS(sigma(0, -3), DomainError);
}

TEST_CASE("N") {
  CHECK(n_value(0, 0) == 0);
  CHECK(n_value(9, 0) == 3);
  // Frozen from the test-side brute force on [1,1,2,2] and [1,1,1,2,2,2].
  CHECK(n_value(2, 2) == 2);
  CHECK(n_value(3, 3) == 2);
  CHECK(n_value(0, 2) == 1);
  CHECK_THROWS_AS(n_value(-1, 0), DomainError);
  CHECK_THROWS_AS(n_value(0, -1), DomainError);
  // Large arguments stay in range.
  CHECK(n_value(kMaxTotal, 0) == kMaxTotal / 4);
  CHECK(n_value(0, kMaxTotal) > 0);
}

TEST_CASE("N equals the point-thickness of K_{1^a, 2^b}") {
  for (Count a = 0; a <= 12; ++a) {
    for (Count b = 0; a + 2 * b <= 14; ++b) {
      std::vector<Count> parts(static_cast<std::size_t>(a), 1);
      parts.insert(parts.end(), static_cast<std::size_t>(b), 2);
      CHECK_MESSAGE(n_value(a, b) ==
                        testing::brute_force_thickness(PartProfile(parts)),
                    "a=" << a << " b=" << b);
    }
  }
}

TEST_CASE("case (a)") {
  auto a = case_a_value(decompose(parse_profile("4,4")));
  CHECK(a.t == 0);
  CHECK(a.value == 2);
  a = case_a_value(decompose(parse_profile("2,4,4")));
  CHECK(a.t == 0);
  CHECK(a.value == 2);
  a = case_a_value(decompose(parse_profile("1,1,4")));
  CHECK(a.t == 0);
  CHECK(a.value == 1);
  a = case_a_value(decompose(parse_profile("4^5")));
  CHECK(a.t == 1);
  CHECK(a.value == 4);
  a = case_a_value(decompose(parse_profile("4^7")));
  CHECK(a.t == 2);  // 8 <= 10 but 12 > 8
  CHECK(a.value == 5);

  CHECK_THROWS_AS(case_a_value(decompose(parse_profile("3,3,4"))), CaseError);
  CHECK_THROWS_AS(case_a_value(decompose(PartProfile{})), CaseError);
}

TEST_CASE("case (b)") {
  auto r = case_b_value(decompose(parse_profile("1^9")));
  CHECK(r.value == 3);
  CHECK(r.trace.branch == Branch::CaseBPart1);
  CHECK(r.trace.n_args == std::pair<Count, Count>{9, 0});
  CHECK_FALSE(r.trace.sigma_used.has_value());

  r = case_b_value(decompose(parse_profile("3,3,4")));
  CHECK(r.value == 2);
  CHECK(r.trace.branch == Branch::CaseBPart1);
  CHECK(r.trace.n_args == std::pair<Count, Count>{0, 2});
  CHECK(r.trace.sigma_used == 1);

  r = case_b_value(decompose(parse_profile("2,2,2,4")));
  CHECK(r.value == 2);
  CHECK(r.trace.branch == Branch::CaseBPart2);
  CHECK(r.trace.epsilon == 0);
  CHECK(r.trace.n_args == std::pair<Count, Count>{0, 2});

  r = case_b_value(decompose(parse_profile("1,2,2,4")));
  CHECK(r.trace.branch == Branch::CaseBPart2);
  CHECK(r.trace.epsilon == 1);

  CHECK_THROWS_AS(case_b_value(decompose(parse_profile("4,4"))), CaseError);
}

TEST_CASE("point_thickness dispatch") {
  CHECK(theta("1,1,1,1").value == 1);
  CHECK(theta("1^5").value == 2);
  const auto empty = point_thickness(PartProfile{});
  CHECK(empty.value == 0);
  CHECK(empty.trace.branch == Branch::EmptyGraph);
  CHECK(theta("4,4").trace.branch == Branch::CaseA);
  CHECK(theta("4,4,4,4,4").value == 4);
  CHECK(to_string(theta("1^9").trace.branch) == "CaseB-I");
  CHECK(to_string(theta("2,2,2,4").trace.branch) == "CaseB-II");
}

TEST_CASE("decomposition overload matches the profile path") {
  for (Count total = 0; total <= 14; ++total) {
    for (const auto& p : profiles_with_total(total)) {
      CHECK(point_thickness(decompose(p)).value == point_thickness(p).value);
      CHECK(point_thickness(decompose(p)).trace == point_thickness(p).trace);
    }
  }
}

TEST_CASE("formula matches the brute force up to 12 vertices") {
  for (Count total = 1; total <= 12; ++total) {
    for (const auto& p : profiles_with_total(total)) {
      const auto r = point_thickness(p);
      CHECK_MESSAGE(r.value == testing::brute_force_thickness(p), to_string(p));
      CHECK(r.value >= 1);
    }
  }
}

TEST_CASE("trace invariants") {
  for (Count total = 0; total <= 16; ++total) {
    for (const auto& p : profiles_with_total(total)) {
      const auto d = decompose(p);
      const auto r = point_thickness(p);
      CHECK((r.trace.branch == Branch::CaseA) ==
            (!p.empty() && d.p0 <= 2 * d.n()));
      CHECK((r.value == 0) == p.empty());
      CHECK((r.trace.epsilon == 0 || r.trace.epsilon == 1));
      if (r.trace.sigma_used) {
        CHECK(*r.trace.sigma_used >= 0);
        CHECK(*r.trace.sigma_used <= 2);
      }
    }
  }
}

TEST_CASE("complete graphs") {
  for (Count n = 1; n <= 200; ++n) {
    const PartProfile kn(std::vector<Count>(static_cast<std::size_t>(n), 1));
    CHECK(point_thickness(kn).value == (n + 3) / 4);
  }
}

TEST_CASE("value depends only on the multiset of parts") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Count> size(1, 30);
  for (int i = 0; i < 300; ++i) {
    std::vector<Count> parts(static_cast<std::size_t>(1 + i % 9));
    for (auto& p : parts) p = size(rng);
    const auto sorted_value = point_thickness(PartProfile(parts)).value;
    std::shuffle(parts.begin(), parts.end(), rng);
    std::string spec;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      spec += (j ? "," : "") + std::to_string(parts[j]);
    }
    CHECK(point_thickness(parse_profile(spec)).value == sorted_value);
  }
}

TEST_CASE("monotone under adding parts and vertices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Count> size(1, 12);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Count> parts(static_cast<std::size_t>(1 + i % 10));
    for (auto& p : parts) p = size(rng);
    const PartProfile p(parts);
    const Count base = point_thickness(p).value;
    auto appended = parts;
    appended.push_back(size(rng));
    CHECK(point_thickness(PartProfile(appended)).value >= base);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto grown = parts;
      ++grown[j];
      CHECK_MESSAGE(point_thickness(PartProfile(grown)).value >= base,
                    to_string(p));
    }
  }
}

TEST_CASE("big parts do not matter once p0 > 2n") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Count> small(1, 3);
  std::uniform_int_distribution<Count> big(4, 1'000'000);
  int checked = 0;
  while (checked < 500) {
    std::vector<Count> parts;
    const int n = static_cast<int>(rng() % 4) + 1;
    const int smalls = static_cast<int>(rng() % 8) + 1;
    for (int i = 0; i < smalls; ++i) parts.push_back(small(rng));
    for (int i = 0; i < n; ++i) parts.push_back(big(rng));
    const auto d = decompose(PartProfile(parts));
    if (d.p0 <= 2 * d.n()) continue;
    ++checked;
    std::vector<Count> all_fours(parts.begin(), parts.end() - n);
    all_fours.insert(all_fours.end(), static_cast<std::size_t>(n), 4);
    CHECK(point_thickness(PartProfile(parts)).value ==
          point_thickness(PartProfile(all_fours)).value);
  }
}

TEST_CASE("boundary p0 = 2n uses case (a) and matches the brute force") {
  int seen = 0;
  for (Count total = 1; total <= 14; ++total) {
    for (const auto& p : profiles_with_total(total)) {
      const auto d = decompose(p);
      if (d.p0 != 2 * d.n()) continue;
      ++seen;
      const auto r = point_thickness(p);
      CHECK(r.trace.branch == Branch::CaseA);
      CHECK(r.value == testing::brute_force_thickness(p));
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("subcase classification") {
  CHECK(classify_subcase(decompose(PartProfile{})) == Subcase::Empty);
  CHECK(classify_subcase(decompose(parse_profile("4,4"))) == Subcase::Distribute);
  CHECK(classify_subcase(decompose(parse_profile("1^4"))) ==
        Subcase::SinglesExact);
  CHECK(classify_subcase(decompose(parse_profile("1^9"))) ==
        Subcase::SinglesRemainder);
  CHECK(classify_subcase(decompose(parse_profile("1,1,2,2"))) ==
        Subcase::MixedSplit);
  CHECK(classify_subcase(decompose(parse_profile("2^3"))) == Subcase::MixedExact);
  CHECK(classify_subcase(decompose(parse_profile("3,3,4"))) ==
        Subcase::MixedRemainder);
  CHECK(classify_subcase(decompose(parse_profile("2,2,2,4"))) ==
        Subcase::PairsRemainder);
  CHECK(classify_subcase(decompose(parse_profile("2^4,4"))) == Subcase::PairsExact);
}

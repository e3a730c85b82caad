#include <doctest.h>

#include <random>

#include "ptk/core.hpp"
#include "ptk/json.hpp"

using namespace ptk;

namespace {

std::vector<Count> parts_of(const PartProfile& p) {
  return {p.parts().begin(), p.parts().end()};
}

PartProfile random_small_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<Count> size(1, 9);
  std::vector<Count> parts(static_cast<std::size_t>(count(rng)));
  for (auto& p : parts) p = size(rng);
  return PartProfile(std::move(parts));
}

}  // namespace

TEST_CASE("parse_profile expands multiplicities and sorts") {
  CHECK(parts_of(parse_profile("1^3,2^2,5,7")) ==
        std::vector<Count>{1, 1, 1, 2, 2, 5, 7});
  CHECK(parse_profile("").empty());
  CHECK(parse_profile("   ").empty());
  CHECK(parts_of(parse_profile("4,1,4")) == std::vector<Count>{1, 4, 4});
  CHECK(parts_of(parse_profile(" 3 ^ 2 , 1 ")) == std::vector<Count>{1, 3, 3});
  CHECK(parse_profile("1^3,2^2,5,7").total() == 19);
}

TEST_CASE("parse_profile rejects bad terms with their position") {
  const auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_profile(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for '" << text << "'");
    return 0;
  };
  CHECK(position_of("0") == 0);
  CHECK(position_of("1,0") == 2);
  CHECK(position_of("2^0") == 0);
  CHECK(position_of("3,-1") == 2);
  CHECK(position_of("1,,2") == 2);
  CHECK(position_of("1,") == 1);
  CHECK(position_of("a") == 0);
  CHECK(position_of("1 2") == 2);
  CHECK(position_of("1^") == 2);
  CHECK_THROWS_AS(parse_profile("99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_profile("4611686018427387904,1"), ParseError);
  CHECK_THROWS_AS(parse_profile("1^100000000"), ParseError);

  try {
    parse_profile("4,x5");
  } catch (const ParseError& e) {
    CHECK(e.token() == "x5");
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("to_string uses the compressed form") {
  CHECK(to_string(parse_profile("7,5,2,1,2,1,1")) == "1^3,2^2,5,7");
  CHECK(to_string(PartProfile{}).empty());
  CHECK(to_string(parse_profile("4")) == "4");
}

TEST_CASE("decompose counts small parts") {
  auto d = decompose(parse_profile("1,1,1,2,2,5,7"));
  CHECK(d.k1 == 3);
  CHECK(d.k2 == 2);
  CHECK(d.k3 == 0);
  CHECK(d.big == std::vector<Count>{5, 7});
  CHECK(d.p0 == 7);

  d = decompose(PartProfile{});
  CHECK(d.k1 == 0);
  CHECK(d.k2 == 0);
  CHECK(d.k3 == 0);
  CHECK(d.big.empty());
  CHECK(d.p0 == 0);

  d = decompose(parse_profile("3,3,4"));
  CHECK(d.k3 == 2);
  CHECK(d.big == std::vector<Count>{4});
  CHECK(d.p0 == 6);
}

TEST_CASE("induced_profile keeps the nonzero counts") {
  const auto p = parse_profile("2,4,4");
  CHECK(parts_of(induced_profile(p, ClassComposition({2, 4, 0}))) ==
        std::vector<Count>{2, 4});
  CHECK(parts_of(induced_profile(parse_profile("1,1,4"),
                                 ClassComposition({1, 1, 0}))) ==
        std::vector<Count>{1, 1});
  CHECK(parts_of(induced_profile(parse_profile("4"), ClassComposition({3}))) ==
        std::vector<Count>{3});

  CHECK_THROWS_AS(induced_profile(p, ClassComposition({1, 1})),
                  CompositionError);
  CHECK_THROWS_AS(induced_profile(p, ClassComposition({3, 0, 0})),
                  CompositionError);
  CHECK_THROWS_AS(ClassComposition({0, 0}), CompositionError);
  CHECK_THROWS_AS(ClassComposition({-1, 2}), CompositionError);
}

TEST_CASE("exact cover") {
  const auto p = parse_profile("1,1");
  CHECK(Partition{{ClassComposition({1, 1})}}.is_exact_cover(p));
  CHECK_FALSE(Partition{{ClassComposition({1, 0})}}.is_exact_cover(p));
  CHECK_FALSE(Partition{{ClassComposition({1, 1}), ClassComposition({1, 0})}}
                  .is_exact_cover(p));
  CHECK(Partition{}.is_exact_cover(PartProfile{}));
}

TEST_CASE("profile enumeration matches the partition numbers") {
  const std::vector<std::size_t> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (std::size_t n = 0; n < p_of_n.size(); ++n) {
    const auto profiles = profiles_with_total(static_cast<Count>(n));
    CHECK(profiles.size() == p_of_n[n]);
    for (const auto& q : profiles) CHECK(q.total() == static_cast<Count>(n));
    CHECK(std::is_sorted(profiles.begin(), profiles.end()));
  }
  CHECK(profiles_up_to(12).size() == 271);
}

TEST_CASE("round trips hold for random profiles") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const PartProfile p = random_small_profile(rng);
    CHECK(parse_profile(to_string(p)) == p);
    CHECK(decompose(p).reassemble() == p);
    const nlohmann::json j = p;
    CHECK(j.get<PartProfile>() == p);
  }
}

TEST_CASE("json field names") {
  const auto p = parse_profile("2,4,4");
  const nlohmann::json jp = p;
  CHECK(jp.dump() == R"({"parts":[2,4,4]})");
  const nlohmann::json jc = ClassComposition({2, 4, 0});
  CHECK(jc.dump() == R"({"taken":[2,4,0]})");
  const Partition w{{ClassComposition({2, 4, 0}), ClassComposition({0, 0, 4})}};
  const nlohmann::json jw = w;
  CHECK(jw.dump() == R"({"classes":[[2,4,0],[0,0,4]]})");
  CHECK(partition_from_json(jw) == w);
}

TEST_CASE("profile rejects non-positive parts") {
  CHECK_THROWS_AS(PartProfile({1, 0}), DomainError);
  CHECK_THROWS_AS(PartProfile({kMaxTotal, 1}), DomainError);
}

#include "doctest.h"
#include "hh/io.hpp"
#include "oracles.hpp"

using namespace hh;

namespace {

int error_line(std::string_view text) {
  try {
    parse_digraph(text);
  } catch (ParseError const& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("adjacency matrix format") {
  CHECK(parse_digraph("3\n010\n001\n100\n") == make_cycle(3));
  CHECK(parse_digraph("3\r\n010\r\n001\r\n100\r\n") == make_cycle(3));
  CHECK(parse_digraph("1\n1\n") == make_loop_vertex());
  CHECK(parse_digraph("0\n") == Digraph{});
  CHECK(parse_digraph("2\n01\n10\n\n\n") == make_complete(2));
  CHECK(write_digraph(make_cycle(3)) == "3\n010\n001\n100\n");
}

TEST_CASE("edge list format") {
  CHECK(parse_digraph("n=2\n0 1\n1 0\n") == make_complete(2));
  CHECK(parse_digraph("n=3\n0 1\n\n1 2\n2 0") == make_cycle(3));
  CHECK(parse_digraph("n=4\n") == Digraph(4));
  CHECK(write_digraph(parse_digraph("n=2\n0 1\n1 0\n")) == "2\n01\n10\n");
}

TEST_CASE("malformed input reports the offending line") {
  CHECK(error_line("2\n01\n0\n") == 3);
  CHECK(error_line("") == 1);
  CHECK(error_line("x\n") == 1);
  CHECK(error_line("-1\n") == 1);
  CHECK(error_line("65\n") == 1);
  CHECK(error_line("2\n01\n") == 3);
  CHECK(error_line("2\n02\n10\n") == 2);
  CHECK(error_line("2\n01\n10\n11\n") == 4);
  CHECK(error_line("n=2\n0 1\n0 1\n") == 3);
  CHECK(error_line("n=2\n0 2\n") == 2);
  CHECK(error_line("n=2\n0\n") == 2);
  CHECK(error_line("n=2\n0 1 1\n") == 2);
  CHECK(error_line("n=x\n") == 1);
}

TEST_CASE("write then parse is the identity") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    Digraph const d = oracle::random_digraph(rng, trial % 9, 0.4, true);
    std::string const text = write_digraph(d);
    CHECK(parse_digraph(text) == d);
    CHECK(write_digraph(parse_digraph(text)) == text);
  }
}

TEST_CASE("streams of records") {
  std::vector<Digraph> const ds = {make_cycle(3), make_trivial(), make_complete(2)};
  std::string const text = write_digraph_stream(ds);
  CHECK(text == "3\n010\n001\n100\n\n1\n0\n\n2\n01\n10\n");
  CHECK(parse_digraph_stream(text) == ds);
  CHECK(parse_digraph_stream("\n\n2\n00\n00\n\n\nn=1\n") == std::vector<Digraph>{Digraph(2), Digraph(1)});
  try {
    parse_digraph_stream("2\n00\n00\n\n2\n0\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("json renderings") {
  PartialHom h(3);
  h.assign(0, 2);
  Witness const w{h, 1};
  CHECK(to_json(w).dump() == R"({"blocked_vertex":1,"domain":[0],"map":{"0":2}})");
  CHECK(to_json(Witness{h, std::nullopt}).dump() ==
        R"({"blocked_vertex":null,"domain":[0],"map":{"0":2}})");
  CHECK(to_json(Verdict::yes()).dump() == R"({"hh":true})");
  CHECK(to_json(Verdict::no(w)).dump() ==
        R"({"hh":false,"witness":{"blocked_vertex":1,"domain":[0],"map":{"0":2}}})");
  CHECK(to_json(Family::clique_copies(2, 3)).dump() == R"({"family":"kKn","k":2,"n":3})");
  CHECK(to_json(Family::triangle_copies(1)).dump() == R"({"family":"kC3","k":1})");
  CHECK(to_json(Family::no_family()).dump() == R"({"family":"none"})");
}

TEST_CASE("census report rendering") {
  CensusReport const report = verify_corollary(3);
  auto const j = to_json(report);
  CHECK(j["hh_checked"] == true);
  CHECK(j["disagreement_count"] == 0);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["total"] == 16);
  CHECK(j["rows"][2]["by_kind"]["improper"] == 6);
  CHECK(j["rows"][2]["hh_checker"] == 3);
  CHECK(j["rows"][2]["hh_families"].size() == 3);
  CHECK(j["rows"][2]["disagreements"].empty());

  std::string const table = summary_table(report);
  CHECK(table.find("total") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 4);

  auto const kinds = to_json(census_by_kind(2));
  CHECK_FALSE(kinds["rows"][0].contains("hh_checker"));
}

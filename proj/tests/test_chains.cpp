#include <anick/chains.hpp>
#include <anick/errors.hpp>
#include <anick/weyl.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace anick;

namespace {

std::set<std::string> chain_words(const Presentation& pres, int degree) {
  std::set<std::string> out;
  for (const AnickChain& c : enumerate_chains(pres, degree))
    out.insert(pres.format_word(c.word()));
  return out;
}

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("degree zero chains are the generators") {
  Presentation pres = weyl::w1_presentation();
  std::vector<AnickChain> v0 = enumerate_chains(pres, 0);
  REQUIRE(v0.size() == 3);
  CHECK(format_chain(v0[0], pres) == "[e]");
  CHECK(format_chain(v0[1], pres) == "[p]");
  CHECK(format_chain(v0[2], pres) == "[q]");
}

TEST_CASE("degree one chains are the obstructions, canonically ordered") {
  Presentation pres = weyl::w1_presentation();
  std::vector<AnickChain> v1 = enumerate_chains(pres, 1);
  std::vector<std::string> got;
  for (const AnickChain& c : v1) got.push_back(format_chain(c, pres));
  CHECK(got == std::vector<std::string>{"[e|e]", "[e|p]", "[e|q]", "[p|e]", "[q|e]", "[q|p]"});
  CHECK(std::is_sorted(v1.begin(), v1.end(), AnickChainLess{}));
}

TEST_CASE("chain counts for the Weyl presentation") {
  Presentation pres = weyl::w1_presentation();
  CHECK(enumerate_chains(pres, 0).size() == 3);
  CHECK(enumerate_chains(pres, 1).size() == 6);
  CHECK(enumerate_chains(pres, 2).size() == 13);
  CHECK(enumerate_chains(pres, 3).size() == 28);
}

TEST_CASE("computed chain sets contain the reference lists") {
  Presentation pres = weyl::w1_presentation();
  for (int d = 1; d <= 3; ++d) {
    std::set<std::string> got = chain_words(pres, d);
    for (const std::string& w : weyl::reference_chain_words(d)) CHECK(got.count(w) == 1);
  }
  CHECK(chain_words(pres, 1).size() == weyl::reference_chain_words(1).size());
  CHECK(chain_words(pres, 2).size() == weyl::reference_chain_words(2).size());

  // degree 3 carries two chains beyond the reference list
  std::set<std::string> v3 = chain_words(pres, 3);
  std::set<std::string> ref3(weyl::reference_chain_words(3).begin(),
                             weyl::reference_chain_words(3).end());
  std::vector<std::string> extra;
  std::set_difference(v3.begin(), v3.end(), ref3.begin(), ref3.end(), std::back_inserter(extra));
  CHECK(extra == std::vector<std::string>{"peqp", "qeqp"});
}

TEST_CASE("enveloping algebra chain counts collapse like the exterior algebra") {
  Presentation pres = weyl::heisenberg_presentation();
  CHECK(enumerate_chains(pres, 0).size() == 3);
  CHECK(enumerate_chains(pres, 1).size() == 3);
  CHECK(enumerate_chains(pres, 2).size() == 1);
  CHECK(enumerate_chains(pres, 3).empty());
  CHECK(format_chain(enumerate_chains(pres, 2)[0], pres) == "[x|y|z]");
}

TEST_CASE("one chain per degree for the dual numbers") {
  Presentation pres = testutil::load_pres("dual.json");
  for (int d = 0; d <= 6; ++d) {
    std::vector<AnickChain> v = enumerate_chains(pres, d);
    REQUIRE(v.size() == 1);
    CHECK(v[0].entries.size() == static_cast<size_t>(d) + 1);
    for (const Word& w : v[0].entries) CHECK(pres.format_word(w) == "x");
  }
}

TEST_CASE("truncated polynomial chains alternate the two divisors") {
  Presentation pres = testutil::load_pres("x3.json");
  CHECK(format_chain(enumerate_chains(pres, 0)[0], pres) == "[x]");
  CHECK(format_chain(enumerate_chains(pres, 1)[0], pres) == "[x|xx]");
  CHECK(format_chain(enumerate_chains(pres, 2)[0], pres) == "[x|xx|x]");
  CHECK(format_chain(enumerate_chains(pres, 3)[0], pres) == "[x|xx|x|xx]");
  for (int d = 0; d <= 4; ++d) CHECK(enumerate_chains(pres, d).size() == 1);
}

TEST_CASE("fully obstructed presentations have all words as chains") {
  Presentation pres = testutil::load_pres("triangular.json");
  size_t expected = 3;
  for (int d = 0; d <= 3; ++d) {
    expected *= (d == 0) ? 1 : 3;
    CHECK(enumerate_chains(pres, d).size() == expected);
  }
}

TEST_CASE("membership predicate") {
  Presentation pres = weyl::w1_presentation();
  int degree = -1;
  CHECK(is_chain(parse_chain("[q|p]", pres).entries, pres, &degree));
  CHECK(degree == 1);
  CHECK(is_chain(parse_chain("[e|e|q]", pres).entries, pres, &degree));
  CHECK(degree == 2);
  CHECK(!is_chain(parse_chain("[p|q]", pres).entries, pres));
  CHECK(!is_chain(parse_chain("[q|q]", pres).entries, pres));
  CHECK(!is_chain(parse_chain("[qp]", pres).entries, pres));
  CHECK(!is_chain({}, pres));
}

TEST_CASE("chain text round trip") {
  Presentation pres = weyl::w1_presentation();
  for (int d = 0; d <= 2; ++d)
    for (const AnickChain& c : enumerate_chains(pres, d))
      CHECK(parse_chain(format_chain(c, pres), pres) == c);
  CHECK(parse_chain("[]", pres).entries.empty());
  CHECK_THROWS_AS(parse_chain("q|p", pres), InputError);
  CHECK_THROWS_AS(parse_chain("[q|b]", pres), InputError);
}

TEST_CASE("cached enumeration returns a stable reference") {
  Presentation pres = weyl::w1_presentation();
  const std::vector<AnickChain>& a = enumerate_chains_cached(pres, 2);
  const std::vector<AnickChain>& b = enumerate_chains_cached(pres, 2);
  CHECK(&a == &b);
  CHECK(a == enumerate_chains(pres, 2));
}

TEST_CASE("underlying word of a chain concatenates its entries") {
  Presentation pres = weyl::w1_presentation();
  AnickChain c = parse_chain("[q|e|q|p]", pres);
  CHECK(pres.format_word(c.word()) == "qeqp");
  CHECK(c.degree() == 3);
}

}  // TEST_SUITE

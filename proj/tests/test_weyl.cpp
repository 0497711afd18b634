#include <anick/errors.hpp>
#include <anick/hochschild.hpp>
#include <anick/weyl.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace anick;
using weyl::Unitality;

TEST_SUITE("weyl") {

TEST_CASE("presentations and idempotent wiring") {
  Presentation w1 = weyl::w1_presentation();
  CHECK(w1.names() == std::vector<std::string>{"q", "p", "e"});
  REQUIRE(w1.idempotent().has_value());
  CHECK(w1.name(*w1.idempotent()) == "e");
  CHECK(w1.rules().size() == 6);
  CHECK(w1.verify_gsb().pass());

  Presentation h = weyl::heisenberg_presentation();
  CHECK(h.names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(!h.idempotent().has_value());
  CHECK(h.rules().size() == 3);
}

TEST_CASE("reference tables parse against the computed bases") {
  Presentation pres = weyl::w1_presentation();
  CHECK(weyl::reference_chain_words(1).size() == 6);
  CHECK(weyl::reference_chain_words(2).size() == 13);
  CHECK(weyl::reference_chain_words(3).size() == 26);
  CHECK(weyl::reference_delta3_rows().size() == 13);
  CHECK(weyl::reference_delta4_rows().size() == 26);
  CHECK_THROWS_AS(weyl::reference_chain_words(4), InputError);
}

TEST_CASE("row parser understands the bracket notation") {
  Presentation pres = weyl::w1_presentation();
  FreeBimoduleElement parsed = weyl::parse_reference_row("q[ep]-[qe]p", pres);
  FreeBimoduleElement expected = testutil::term(pres, 1, "q", "[e|p]", "");
  expected += testutil::term(pres, -1, "", "[q|e]", "p");
  CHECK(parsed == expected);

  FreeBimoduleElement withCoef = weyl::parse_reference_row("2q[p]-[e]", pres);
  FreeBimoduleElement expected2 = testutil::term(pres, 2, "q", "[p]", "");
  expected2 += testutil::term(pres, -1, "", "[e]", "");
  CHECK(withCoef == expected2);
}

TEST_CASE("differential diff against the reference tables") {
  weyl::DifferentialReport report = weyl::differential_report();
  Presentation pres = weyl::w1_presentation();

  CHECK(report.chains1.equal());
  CHECK(report.chains2.equal());
  CHECK(report.chains1.computed_count == 6);
  CHECK(report.chains2.computed_count == 13);

  // degree 3 computes two chains beyond the reference list and misses none
  CHECK(report.chains3.reference_count == 26);
  CHECK(report.chains3.computed_count == 28);
  CHECK(report.chains3.reference_only.empty());
  REQUIRE(report.chains3.computed_only.size() == 2);
  CHECK(pres.format_word(report.chains3.computed_only[0]) == "peqp");
  CHECK(pres.format_word(report.chains3.computed_only[1]) == "qeqp");

  // the two table discrepancies sit in the delta_3 rows for [e|e|p] and [e|p|e]
  CHECK(report.delta3.size() == 13);
  CHECK(report.mismatches(3) == 2);
  std::vector<std::string> disc;
  for (const auto& row : report.delta3)
    if (row.status == weyl::RowStatus::Discrepancy) {
      disc.push_back(format_chain(row.chain, pres));
      CHECK(row.printed_breaks_complex);
      CHECK(!row.printed_text.empty());
      CHECK(row.printed != row.computed);
    }
  CHECK(disc == std::vector<std::string>{"[e|e|p]", "[e|p|e]"});

  // every delta_4 row in the table matches; the two extra chains are unlisted
  CHECK(report.delta4.size() == 28);
  CHECK(report.mismatches(4) == 2);
  for (const auto& row : report.delta4) {
    if (row.status == weyl::RowStatus::MissingFromTable) {
      std::string w = pres.format_word(row.chain.word());
      CHECK((w == "peqp" || w == "qeqp"));
    } else {
      CHECK(row.status == weyl::RowStatus::Match);
      CHECK(row.printed == row.computed);
    }
  }
}

TEST_CASE("matching rows really equal the printed tables") {
  weyl::DifferentialReport report = weyl::differential_report();
  Presentation pres = weyl::w1_presentation();
  size_t matches = 0;
  for (const auto& row : report.delta3)
    if (row.status == weyl::RowStatus::Match) {
      CHECK(row.printed == row.computed);
      ++matches;
    }
  CHECK(matches == 11);
}

TEST_CASE("enveloping algebra cross-check") {
  weyl::HeisenbergReport report = weyl::heisenberg_fixture();
  CHECK(report.delta3_matches_reference);
  CHECK(report.chain_counts == std::vector<size_t>{3, 3, 1, 0});
  REQUIRE(report.ce.size() == 3);
  for (const auto& c : report.ce) CHECK(c.equal);
  CHECK(report.all_ok());
}

TEST_CASE("six-term differential for the top enveloping chain") {
  Presentation pres = weyl::heisenberg_presentation();
  MorseEngine engine(pres);
  FreeBimoduleElement d = engine.anick_differential(parse_chain("[x|y|z]", pres));
  CHECK(d == weyl::parse_reference_row(weyl::kReferenceDelta3XYZ, pres));
}

TEST_CASE("generic cocycle solver frees the published symbols") {
  struct Row {
    Unitality type;
    std::vector<std::string> free;
  };
  const Row rows[] = {
      {Unitality::Both, {"eep", "eeq", "pee", "qee"}},
      {Unitality::LeftOnly, {"eee", "eep", "eeq", "qpe"}},
      {Unitality::RightOnly, {"eee", "epe", "eqe", "eqp"}},
      {Unitality::Neither, {"epe", "eqe", "eqp"}},
  };
  for (const Row& r : rows) {
    weyl::SolvedSystem solved = weyl::generic_cocycle_relations(r.type);
    std::vector<std::string> free = solved.free_symbol_words(weyl::w1_presentation());
    std::sort(free.begin(), free.end());
    CHECK(free == r.free);
    CHECK(solved.symbols.size() == 13);
    CHECK(solved.relation_chains.size() == 28);
    CHECK(solved.raw_relations.size() == 28);
    CHECK(solved.free_symbols().size() == r.free.size());
  }
}

TEST_CASE("solved values satisfy every relation") {
  Presentation pres = weyl::w1_presentation();
  for (Unitality t : {Unitality::Both, Unitality::LeftOnly, Unitality::RightOnly,
                      Unitality::Neither}) {
    weyl::SolvedSystem solved = weyl::generic_cocycle_relations(t);
    std::vector<std::string> names;
    for (const AnickChain& c : solved.symbols) names.push_back(pres.format_word(c.word()));
    weyl::FormalModule mod(t, names);

    std::vector<std::optional<weyl::FormalElement>> values(solved.symbols.size());
    for (size_t i = 0; i < solved.symbols.size(); ++i) {
      if (solved.is_free[i]) {
        CHECK(solved.value[i] == mod.symbol(i));
      } else {
        values[i] = solved.value[i];
      }
    }
    for (const weyl::FormalElement& relation : solved.raw_relations)
      CHECK(mod.substitute(relation, values).is_zero());
  }
}

TEST_CASE("fully unital cocycles kill the constant symbol") {
  Presentation pres = weyl::w1_presentation();
  auto value_of = [&](const weyl::SolvedSystem& s, const std::string& word) {
    for (size_t i = 0; i < s.symbols.size(); ++i)
      if (pres.format_word(s.symbols[i].word()) == word) return s.value[i];
    throw std::runtime_error("symbol not found: " + word);
  };
  CHECK(value_of(weyl::generic_cocycle_relations(Unitality::Both), "eee").is_zero());
  CHECK(value_of(weyl::generic_cocycle_relations(Unitality::Neither), "eee").is_zero());
}

TEST_CASE("formal module absorption by unitality type") {
  Presentation pres = weyl::w1_presentation();
  weyl::FormalModule both(Unitality::Both, {"s"});
  weyl::FormalModule none(Unitality::Neither, {"s"});
  Word e = pres.parse_word("e");
  // e acts as the unit when the side is unital, and annihilates otherwise
  CHECK(both.act_left(e, both.symbol(0)) == both.symbol(0));
  CHECK(both.act_right(both.symbol(0), e) == both.symbol(0));
  CHECK(none.act_left(e, none.symbol(0)).is_zero());
  CHECK(none.act_right(none.symbol(0), e).is_zero());
  Word q = pres.parse_word("q");
  CHECK(!both.act_left(q, both.symbol(0)).is_zero());
}

TEST_CASE("coboundary witnesses certify every type") {
  for (Unitality t : {Unitality::Both, Unitality::LeftOnly, Unitality::RightOnly,
                      Unitality::Neither}) {
    weyl::WitnessCertificate cert = weyl::coboundary_witness(t);
    CHECK(cert.type == t);
    CHECK(cert.psi.size() == 6);
    CHECK(cert.residues.size() == 13);
    for (const auto& [chain, residue] : cert.residues) CHECK(residue.is_zero());
  }
}

TEST_CASE("witness values per unitality type") {
  Presentation pres = weyl::w1_presentation();
  std::vector<std::string> names;
  for (const AnickChain& c : enumerate_chains(pres, 2)) names.push_back(pres.format_word(c.word()));

  auto psi_line = [&](Unitality t, const std::string& chain) {
    weyl::FormalModule mod(t, names);
    weyl::WitnessCertificate cert = weyl::coboundary_witness(t);
    for (const auto& [c, el] : cert.psi)
      if (format_chain(c, pres) == chain) return mod.format(el);
    throw std::runtime_error("chain not found: " + chain);
  };

  CHECK(psi_line(Unitality::Both, "[e|e]") == "0");
  CHECK(psi_line(Unitality::Both, "[e|p]") == "phi[eep]");
  CHECK(psi_line(Unitality::Both, "[e|q]") == "phi[eeq]");
  CHECK(psi_line(Unitality::Both, "[p|e]") == "-phi[pee]");
  CHECK(psi_line(Unitality::Both, "[q|e]") == "-phi[qee]");
  CHECK(psi_line(Unitality::Both, "[q|p]") == "0");

  CHECK(psi_line(Unitality::LeftOnly, "[e|e]") == "phi[eee]");
  CHECK(psi_line(Unitality::LeftOnly, "[p|e]") == "p*phi[eee]");
  CHECK(psi_line(Unitality::LeftOnly, "[q|e]") == "q*phi[eee]");
  CHECK(psi_line(Unitality::LeftOnly, "[q|p]") == "phi[qpe]");

  CHECK(psi_line(Unitality::RightOnly, "[e|e]") == "-phi[eee]");
  CHECK(psi_line(Unitality::RightOnly, "[e|p]") == "0");
  CHECK(psi_line(Unitality::RightOnly, "[q|e]") == "-phi[eqe]");

  CHECK(psi_line(Unitality::Neither, "[e|e]") == "phi[eqp]");
  CHECK(psi_line(Unitality::Neither, "[e|p]") == "phi[epe]");
  CHECK(psi_line(Unitality::Neither, "[q|p]") == "0");
}

TEST_CASE("trivial bimodule cohomology vanishes in degree three") {
  Presentation pres = weyl::w1_presentation();
  for (const char* name : {"w1_triv1.json", "w1_triv2.json", "w1_triv3.json"}) {
    FiniteBimodule M = testutil::load_mod(name, pres);
    std::vector<size_t> dims = cohomology_dims(pres, M, 3);
    CHECK(dims[3] == 0);
  }
}

TEST_CASE("unitality helpers") {
  CHECK(weyl::left_unital(Unitality::Both));
  CHECK(weyl::right_unital(Unitality::Both));
  CHECK(weyl::left_unital(Unitality::LeftOnly));
  CHECK(!weyl::right_unital(Unitality::LeftOnly));
  CHECK(!weyl::left_unital(Unitality::RightOnly));
  CHECK(weyl::right_unital(Unitality::RightOnly));
  CHECK(!weyl::left_unital(Unitality::Neither));
  CHECK(std::string(weyl::unitality_name(Unitality::Both)) == "(1,1)");
  CHECK(std::string(weyl::unitality_name(Unitality::LeftOnly)) == "(1,0)");
  CHECK(std::string(weyl::unitality_name(Unitality::RightOnly)) == "(0,1)");
  CHECK(std::string(weyl::unitality_name(Unitality::Neither)) == "(0,0)");
}

}  // TEST_SUITE

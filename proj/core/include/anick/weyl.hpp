#pragma once

#include <anick/resolution.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace anick::weyl {

// q > p > e with qp -> pq + e and e absorbing on both sides.
Presentation w1_presentation();

// x > y > z with xy -> yx + z, xz -> zx, yz -> zy.
Presentation heisenberg_presentation();

// ---------------------------------------------------------------------------
// Reference tables bundled as verbatim text (including their two suspect
// rows), plus a mini-parser for the bracket notation.

const std::vector<std::pair<std::string, std::string>>& reference_delta3_rows();
const std::vector<std::pair<std::string, std::string>>& reference_delta4_rows();
const std::vector<std::string>& reference_chain_words(int degree);  // degree 1..3
extern const char* const kReferenceDelta3XYZ;  // six-term formula for [x|y|z]

// "q[pe]-p[qe]-[ee]+[qp]-[qp]e" -> element; bracket contents split on '|',
// else one entry per letter.
FreeBimoduleElement parse_reference_row(const std::string& text, const Presentation& pres);

// ---------------------------------------------------------------------------
// Structured diff of the computed differentials against the reference tables.

enum class RowStatus { Match, Discrepancy, MissingFromTable };

struct TableRow {
  AnickChain chain;
  RowStatus status = RowStatus::Match;
  std::string printed_text;             // verbatim reference row; empty if missing
  FreeBimoduleElement printed;          // parsed reference row
  FreeBimoduleElement computed;
  bool printed_breaks_complex = false;  // substituting the reference row breaks dd = 0
};

struct ChainSetDiff {
  int degree = 0;
  size_t reference_count = 0;
  size_t computed_count = 0;
  std::vector<Word> reference_only;
  std::vector<Word> computed_only;
  bool equal() const { return reference_only.empty() && computed_only.empty(); }
};

struct DifferentialReport {
  ChainSetDiff chains1, chains2, chains3;
  std::vector<TableRow> delta3;  // one per computed V^(2) chain, canonical order
  std::vector<TableRow> delta4;  // one per computed V^(3) chain
  size_t mismatches(int which) const;  // 3 or 4: rows with status != Match
};

DifferentialReport differential_report();

// ---------------------------------------------------------------------------
// The e-unital formal bimodule: free on finitely many symbols over the
// unital closure of W1 (e identified with 1), with one-sided absorption
// per Peirce type.

enum class Unitality { Both, LeftOnly, RightOnly, Neither };

bool left_unital(Unitality t);
bool right_unital(Unitality t);
const char* unitality_name(Unitality t);  // "(1,1)" etc.

struct FormalKey {
  Word left;      // basis word of the unital closure: p^a q^b; empty = 1
  size_t symbol = 0;
  Word right;
  bool operator==(const FormalKey&) const = default;
};

struct FormalKeyLess {
  bool operator()(const FormalKey& a, const FormalKey& b) const;
};

class FormalElement {
 public:
  using TermMap = std::map<FormalKey, Rational, FormalKeyLess>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FormalElement&) const = default;

  void add(FormalKey key, const Rational& c);
  FormalElement& operator+=(const FormalElement& o);
  FormalElement& operator-=(const FormalElement& o);
  FormalElement& operator*=(const Rational& c);

 private:
  TermMap terms_;
};

class FormalModule {
 public:
  FormalModule(Unitality type, std::vector<std::string> symbolNames);

  Unitality type() const { return type_; }
  size_t symbol_count() const { return names_.size(); }
  const std::string& symbol_name(size_t s) const { return names_[s]; }

  FormalElement symbol(size_t s) const;

  // Action of a monomial of the unital hull of W1 (empty word = external 1).
  FormalElement act_left(const Word& m, const FormalElement& x) const;
  FormalElement act_right(const FormalElement& x, const Word& m) const;

  // Replace each solved symbol by its stored value; free entries are nullopt.
  FormalElement substitute(const FormalElement& x,
                           const std::vector<std::optional<FormalElement>>& values) const;

  std::string format(const FormalElement& x, const std::string& prefix = "phi") const;

 private:
  Presentation w1_;
  Unitality type_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Generic 3-cocycle solver and the coboundary witness.

struct SolvedSystem {
  Unitality type = Unitality::Both;
  std::vector<AnickChain> symbols;           // V^(2), canonical order
  std::vector<AnickChain> relation_chains;   // V^(3), canonical order
  std::vector<FormalElement> raw_relations;  // phi applied to each row, pre-solve
  std::vector<bool> is_free;                 // per symbol
  std::vector<FormalElement> value;          // in free symbols; bare symbol when free

  std::vector<size_t> free_symbols() const;
  std::vector<std::string> free_symbol_words(const Presentation& pres) const;
};

// Applies a formal functional to every degree-4 differential row and solves
// the linear system by substitution. Throws InconsistentSystem if a nonzero
// relation survives with no solvable symbol.
SolvedSystem generic_cocycle_relations(Unitality type);

struct WitnessCertificate {
  Unitality type = Unitality::Both;
  std::vector<std::pair<AnickChain, FormalElement>> psi;       // on V^(1)
  std::vector<std::pair<AnickChain, FormalElement>> residues;  // per V^(2) chain; all zero
};

// Builds the degree-2 cochain psi from the per-type recipe and certifies
// psi(delta3) - phi = 0 identically. Throws WitnessFailed on any residue.
WitnessCertificate coboundary_witness(Unitality type);

// ---------------------------------------------------------------------------
// Enveloping-algebra fixture with the exterior-algebra cross-check.

struct CeComparison {
  int degree = 0;  // wedge size
  bool equal = false;
};

struct HeisenbergReport {
  bool delta3_matches_reference = false;  // the printed six-term formula
  std::vector<size_t> chain_counts;       // |V^(0)| .. |V^(3)|
  std::vector<CeComparison> ce;           // degrees 1..3
  bool all_ok() const;
};

HeisenbergReport heisenberg_fixture();

}  // namespace anick::weyl

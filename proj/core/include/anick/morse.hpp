#pragma once

#include <anick/chains.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace anick {

// Basis element of Lambda (x) A^(x)n (x) Lambda. Entries are nonempty normal
// words; the empty entry list stands for the Lambda (x) Lambda slot at the
// bottom of the resolution.
struct BarVertex {
  std::vector<Word> entries;

  BarVertex() = default;
  explicit BarVertex(std::vector<Word> es) : entries(std::move(es)) {}
  explicit BarVertex(const AnickChain& c) : entries(c.entries) {}
  int dimension() const { return static_cast<int>(entries.size()); }
  AnickChain as_chain() const { return AnickChain{entries}; }
  bool operator==(const BarVertex&) const = default;
};

int compare_vertices(const BarVertex& a, const BarVertex& b);

struct BarVertexLess {
  bool operator()(const BarVertex& a, const BarVertex& b) const {
    return compare_vertices(a, b) < 0;
  }
};

struct BimoduleKey {
  Word left;   // Lambda monomial; empty = 1
  BarVertex vertex;
  Word right;
  bool operator==(const BimoduleKey&) const = default;
};

struct BimoduleKeyLess {
  bool operator()(const BimoduleKey& a, const BimoduleKey& b) const;
};

// Finite sum of coef * left [vertex] right, canonically ordered and merged.
class FreeBimoduleElement {
 public:
  using TermMap = std::map<BimoduleKey, Rational, BimoduleKeyLess>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FreeBimoduleElement&) const = default;

  void add(BimoduleKey key, const Rational& c);
  FreeBimoduleElement& operator+=(const FreeBimoduleElement& o);
  FreeBimoduleElement& operator-=(const FreeBimoduleElement& o);
  FreeBimoduleElement& operator*=(const Rational& c);

  Rational coefficient(const BimoduleKey& key) const;

  // left/right multiplication by a Lambda monomial, renormalizing coefficients
  FreeBimoduleElement left_mul(const Word& m, const Presentation& pres) const;
  FreeBimoduleElement right_mul(const Word& m, const Presentation& pres) const;

 private:
  TermMap terms_;
};

enum class MatchKind { Critical, Merge, Split };

struct MatchStatus {
  MatchKind kind = MatchKind::Critical;
  BarVertex partner;      // Merge: dimension-1; Split: dimension+1
  Rational matched_coef;  // bar coefficient of the matched edge, always +-1
  int chain_prefix = 0;   // longest prefix of entries that is a chain division
};

struct MatchingReport {
  size_t vertices_visited = 0;
  size_t critical = 0;
  size_t merge = 0;
  size_t split = 0;
  int max_degree = 0;
};

// Morse matching on the two-sided bar resolution graph plus weighted
// path-tracking. All public methods are safe for concurrent use.
class MorseEngine {
 public:
  explicit MorseEngine(Presentation pres);

  const Presentation& pres() const { return pres_; }

  // The alternating-sum differential; inner products expanded to normal form.
  FreeBimoduleElement bar_differential(const BarVertex& v) const;

  MatchStatus match(const BarVertex& v) const;

  // Weighted sum over all matched-graph paths from v to critical cells.
  FreeBimoduleElement value(const BarVertex& v) const;

  // delta_(degree+1) on a degree-n chain, landing on V^(n-1).
  FreeBimoduleElement anick_differential(const AnickChain& c) const;

  // Involution, invertible matched weights, acyclic path-tracking over the
  // support reachable from V^(<=maxDegree). Throws InvalidMatching/CycleDetected.
  MatchingReport validate_matching(int maxDegree) const;

  void set_memo_enabled(bool on);

  std::string format_element(const FreeBimoduleElement& e) const;

 private:
  struct State;
  FreeBimoduleElement value_inner(const BarVertex& v, std::vector<BarVertex>& stack) const;

  Presentation pres_;
  std::shared_ptr<State> state_;
};

}  // namespace anick

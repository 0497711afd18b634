#pragma once

#include <anick/freealg.hpp>

#include <string>
#include <vector>

namespace anick {

// A word with a marked division certifying the chain property.
struct AnickChain {
  std::vector<Word> entries;

  int degree() const { return static_cast<int>(entries.size()) - 1; }
  Word word() const;
  bool operator==(const AnickChain&) const = default;
};

// Canonical order: deg-lex on the underlying word, then by division
// (lexicographic on cumulative entry boundaries).
bool chain_less(const AnickChain& a, const AnickChain& b);

struct AnickChainLess {
  bool operator()(const AnickChain& a, const AnickChain& b) const { return chain_less(a, b); }
};

// Membership predicate for V^(n); on success *degree is entries-1.
bool is_chain(const std::vector<Word>& entries, const Presentation& pres, int* degree = nullptr);

// Complete V^(degree), canonically ordered. Requires a verified presentation.
std::vector<AnickChain> enumerate_chains(const Presentation& pres, int degree);

// Memoized per (presentation hash, degree); synchronized, reference stays valid.
const std::vector<AnickChain>& enumerate_chains_cached(const Presentation& pres, int degree);

std::string format_chain(const AnickChain& c, const Presentation& pres);  // "[a|b|c]"
AnickChain parse_chain(const std::string& text, const Presentation& pres);

}  // namespace anick

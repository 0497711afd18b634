#pragma once

#include <anick/errors.hpp>
#include <anick/rational.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace anick {

// Index into Presentation::names(). Index 0 is the greatest generator.
using Letter = int;

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  static Word unit() { return Word{}; }
  static Word single(Letter x) { return Word{{x}}; }

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  Letter operator[](size_t i) const { return letters[i]; }
  bool operator==(const Word&) const = default;

  Word operator+(const Word& o) const {
    Word r(*this);
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }
  Word subword(size_t pos, size_t len) const {
    return Word(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + len));
  }
};

// Deg-lex order: shorter word first; on equal length compare letterwise,
// where a smaller index means a greater generator. Returns -1, 0, 1.
int compare_deglex(const Word& a, const Word& b);

struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const { return compare_deglex(a, b) < 0; }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (Letter x : w.letters) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class FreePoly {
 public:
  using TermMap = std::map<Word, Rational, DegLexLess>;

  FreePoly() = default;
  static FreePoly monomial(Word w, Rational c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  bool operator==(const FreePoly&) const = default;

  void add(const Word& w, const Rational& c);
  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Rational& c);
  FreePoly operator*(const FreePoly& o) const;  // free (concatenation) product
  FreePoly operator-() const;

 private:
  TermMap terms_;
};

inline FreePoly operator*(const Rational& c, FreePoly f) {
  f *= c;
  return f;
}

struct RewriteRule {
  Word lhs;       // the obstruction (principal part)
  FreePoly rhs;   // strictly smaller monomials, no constant term
};

struct Ambiguity {
  Word word;          // the ambiguous word
  size_t rule_a = 0;  // applied at position 0
  size_t rule_b = 0;  // applied at the overlap position
  FreePoly nf_a;
  FreePoly nf_b;
  bool resolved() const { return nf_a == nf_b; }
};

struct GsbReport {
  std::vector<Ambiguity> ambiguities;
  bool pass() const;
  const Ambiguity* first_failure() const;
};

class Presentation {
 public:
  // names: greatest generator first (rank descending).
  Presentation(std::vector<std::string> names, std::vector<RewriteRule> rules,
               std::optional<std::string> idempotent = std::nullopt);

  const std::vector<std::string>& names() const { return names_; }
  size_t arity() const { return names_.size(); }
  Letter letter(const std::string& name) const;
  const std::string& name(Letter x) const { return names_.at(static_cast<size_t>(x)); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::optional<Letter> idempotent() const { return idempotent_; }

  // Leftmost occurrence of an obstruction: (position, rule index).
  std::optional<std::pair<size_t, size_t>> find_obstruction(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_obstruction(w).has_value(); }

  FreePoly normal_form(const Word& w) const;
  FreePoly normal_form(const FreePoly& f) const;

  GsbReport verify_gsb() const;
  void require_gsb() const;  // throws NotAGSB; verdict cached

  // All normal words of length 1..maxLen, deg-lex sorted.
  std::vector<Word> normal_words_up_to(size_t maxLen) const;

  // Greedy longest-name match; throws InputError on an unparsable tail.
  Word parse_word(const std::string& text) const;
  // Concatenated names; the unit prints as "1".
  std::string format_word(const Word& w) const;

  std::string canonical_text() const;
  std::string hash() const;  // FNV-1a of canonical_text, 16 hex digits

  bool operator==(const Presentation& o) const {
    return names_ == o.names_ && rules_eq(o) && idempotent_ == o.idempotent_;
  }

 private:
  struct Cache;
  bool rules_eq(const Presentation& o) const;
  FreePoly nf_word(const Word& w) const;

  std::vector<std::string> names_;
  std::map<std::string, Letter> byName_;
  std::vector<RewriteRule> rules_;
  std::optional<Letter> idempotent_;
  std::shared_ptr<Cache> cache_;  // shared across copies; guarded internally
};

}  // namespace anick

#include <anick/freealg.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace anick {

int compare_deglex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller index = greater generator
  }
  return 0;
}

FreePoly FreePoly::monomial(Word w, Rational c) {
  FreePoly f;
  f.add(w, c);
  return f;
}

void FreePoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, cc] : terms_) cc *= c;
  return *this;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
  FreePoly r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add(wa + wb, ca * cb);
  return r;
}

FreePoly FreePoly::operator-() const {
  FreePoly r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

bool GsbReport::pass() const {
  return std::all_of(ambiguities.begin(), ambiguities.end(),
                     [](const Ambiguity& a) { return a.resolved(); });
}

const Ambiguity* GsbReport::first_failure() const {
  for (const auto& a : ambiguities)
    if (!a.resolved()) return &a;
  return nullptr;
}

struct Presentation::Cache {
  std::mutex mu;
  std::unordered_map<Word, FreePoly, WordHash> nf;
  std::optional<bool> gsbVerdict;
  std::string gsbMessage;
};

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

bool is_subword(const Word& needle, const Word& hay) {
  if (needle.size() > hay.size()) return false;
  for (size_t p = 0; p + needle.size() <= hay.size(); ++p) {
    bool hit = true;
    for (size_t i = 0; i < needle.size(); ++i)
      if (hay[p + i] != needle[i]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<RewriteRule> rules,
                           std::optional<std::string> idempotent)
    : names_(std::move(names)), rules_(std::move(rules)), cache_(std::make_shared<Cache>()) {
  if (names_.empty()) throw InputError("presentation needs at least one generator");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw InputError("bad generator name: '" + names_[i] + "'");
    if (!byName_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw InputError("duplicate generator name: '" + names_[i] + "'");
  }
  auto checkLetters = [&](const Word& w) {
    for (Letter x : w.letters)
      if (x < 0 || static_cast<size_t>(x) >= names_.size())
        throw InputError("word uses an undeclared generator index");
  };
  for (const auto& r : rules_) {
    checkLetters(r.lhs);
    if (r.lhs.size() < 2) throw InputError("rule lhs must have length >= 2");
    for (const auto& [w, c] : r.rhs.terms()) {
      checkLetters(w);
      if (w.empty())
        throw InputError("constant term in rule rhs (augmentation requires none)");
      if (compare_deglex(w, r.lhs) >= 0)
        throw InputError("rule rhs monomial not smaller than lhs");
    }
  }
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = 0; j < rules_.size(); ++j) {
      if (i == j) continue;
      if (is_subword(rules_[i].lhs, rules_[j].lhs))
        throw InputError("rule set not reduced: one lhs is a subword of another");
    }
  if (idempotent) {
    idempotent_ = letter(*idempotent);
  }
  // store rhs in normal form relative to the full rule set
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& r : rules_) {
      FreePoly reduced = normal_form(r.rhs);
      if (!(reduced == r.rhs)) {
        r.rhs = std::move(reduced);
        changed = true;
        cache_->nf.clear();
      }
    }
  }
}

bool Presentation::rules_eq(const Presentation& o) const {
  if (rules_.size() != o.rules_.size()) return false;
  for (size_t i = 0; i < rules_.size(); ++i)
    if (!(rules_[i].lhs == o.rules_[i].lhs) || !(rules_[i].rhs == o.rules_[i].rhs))
      return false;
  return true;
}

Letter Presentation::letter(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) throw InputError("unknown generator: '" + name + "'");
  return it->second;
}

std::optional<std::pair<size_t, size_t>> Presentation::find_obstruction(const Word& w) const {
  // Leftmost start position; a reduced rule set has at most one lhs per start.
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
      const Word& lhs = rules_[ri].lhs;
      if (pos + lhs.size() > w.size()) continue;
      bool hit = true;
      for (size_t i = 0; i < lhs.size(); ++i)
        if (w[pos + i] != lhs[i]) {
          hit = false;
          break;
        }
      if (hit) return std::make_pair(pos, ri);
    }
  }
  return std::nullopt;
}

FreePoly Presentation::nf_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->nf.find(w);
    if (it != cache_->nf.end()) return it->second;
  }
  FreePoly result;
  auto hit = find_obstruction(w);
  if (!hit) {
    result = FreePoly::monomial(w);
  } else {
    auto [pos, ri] = *hit;
    const RewriteRule& rule = rules_[ri];
    Word left = w.subword(0, pos);
    Word right = w.subword(pos + rule.lhs.size(), w.size() - pos - rule.lhs.size());
    for (const auto& [m, c] : rule.rhs.terms()) {
      FreePoly sub = nf_word(left + m + right);  // strictly smaller in deg-lex
      sub *= c;
      result += sub;
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->nf.emplace(w, result);
  }
  return result;
}

FreePoly Presentation::normal_form(const Word& w) const { return nf_word(w); }

FreePoly Presentation::normal_form(const FreePoly& f) const {
  FreePoly r;
  for (const auto& [w, c] : f.terms()) {
    FreePoly nf = nf_word(w);
    nf *= c;
    r += nf;
  }
  return r;
}

GsbReport Presentation::verify_gsb() const {
  GsbReport report;
  for (size_t i = 0; i < rules_.size(); ++i) {
    const Word& a = rules_[i].lhs;
    for (size_t j = 0; j < rules_.size(); ++j) {
      const Word& b = rules_[j].lhs;
      // overlap: proper suffix of a = proper prefix of b
      size_t maxT = std::min(a.size(), b.size()) - 1;
      for (size_t t = 1; t <= maxT; ++t) {
        bool match = true;
        for (size_t k = 0; k < t; ++k)
          if (a[a.size() - t + k] != b[k]) {
            match = false;
            break;
          }
        if (!match) continue;
        Ambiguity amb;
        amb.word = a + b.subword(t, b.size() - t);
        amb.rule_a = i;
        amb.rule_b = j;
        Word tail = b.subword(t, b.size() - t);
        Word head = a.subword(0, a.size() - t);
        amb.nf_a = normal_form(rules_[i].rhs * FreePoly::monomial(tail));
        amb.nf_b = normal_form(FreePoly::monomial(head) * rules_[j].rhs);
        report.ambiguities.push_back(std::move(amb));
      }
    }
  }
  return report;
}

void Presentation::require_gsb() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gsbVerdict.has_value()) {
      if (*cache_->gsbVerdict) return;
      throw NotAGSB(cache_->gsbMessage);
    }
  }
  GsbReport report = verify_gsb();
  std::string message;
  if (const Ambiguity* bad = report.first_failure()) {
    std::ostringstream os;
    os << "not a Groebner-Shirshov basis: ambiguity '" << format_word(bad->word)
       << "' (rules " << bad->rule_a << ", " << bad->rule_b << ") has distinct normal forms";
    message = os.str();
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->gsbVerdict = message.empty();
    cache_->gsbMessage = message;
  }
  if (!message.empty()) throw NotAGSB(message);
}

std::vector<Word> Presentation::normal_words_up_to(size_t maxLen) const {
  std::vector<Word> out;
  std::vector<Word> level;
  for (size_t x = 0; x < names_.size(); ++x) level.push_back(Word::single(static_cast<Letter>(x)));
  for (size_t len = 1; len <= maxLen && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Word> next;
    for (const Word& w : level)
      for (size_t x = 0; x < names_.size(); ++x) {
        Word e = w + Word::single(static_cast<Letter>(x));
        if (is_normal(e)) next.push_back(std::move(e));
      }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

Word Presentation::parse_word(const std::string& text) const {
  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t bestLen = 0;
    Letter bestLetter = -1;
    for (size_t x = 0; x < names_.size(); ++x) {
      const std::string& nm = names_[x];
      if (nm.size() > bestLen && text.compare(pos, nm.size(), nm) == 0) {
        bestLen = nm.size();
        bestLetter = static_cast<Letter>(x);
      }
    }
    if (bestLen == 0)
      throw InputError("cannot parse word '" + text + "' at position " + std::to_string(pos));
    w.letters.push_back(bestLetter);
    pos += bestLen;
  }
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (Letter x : w.letters) s += name(x);
  return s;
}

std::string Presentation::canonical_text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : names_) os << ' ' << n;
  os << ";rules:";
  for (const auto& r : rules_) {
    os << ' ' << format_word(r.lhs) << "->";
    bool first = true;
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!first) os << '+';
      first = false;
      os << '(' << to_string(c) << ')' << format_word(w);
    }
    os << ';';
  }
  if (idempotent_) os << "idempotent:" << name(*idempotent_) << ';';
  return os.str();
}

std::string Presentation::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (char ch : canonical_text()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return s;
}

}  // namespace anick

#include <anick/chains.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace anick {

Word AnickChain::word() const {
  Word w;
  for (const Word& e : entries) w = w + e;
  return w;
}

bool chain_less(const AnickChain& a, const AnickChain& b) {
  Word wa = a.word(), wb = b.word();
  int c = compare_deglex(wa, wb);
  if (c != 0) return c < 0;
  std::vector<size_t> ba, bb;
  size_t acc = 0;
  for (const Word& e : a.entries) ba.push_back(acc += e.size());
  acc = 0;
  for (const Word& e : b.entries) bb.push_back(acc += e.size());
  return ba < bb;
}

namespace {

// Tails that would complete an obstruction whose start lies inside the last
// entry; together with the word they determine the next hooking step.
// Each candidate: (tail, start offset). Tails have pairwise distinct lengths
// for a reduced rule set.
std::vector<Word> candidate_tails(const Word& w, size_t winLo, size_t winHi,
                                  const Presentation& pres) {
  std::vector<Word> tails;
  for (size_t s = winLo; s < winHi; ++s) {
    size_t prefixLen = w.size() - s;  // portion of the obstruction already present
    for (const RewriteRule& r : pres.rules()) {
      if (r.lhs.size() <= prefixLen) continue;  // tail must be nonempty
      bool match = true;
      for (size_t i = 0; i < prefixLen; ++i)
        if (w[s + i] != r.lhs[i]) {
          match = false;
          break;
        }
      if (match) tails.push_back(r.lhs.subword(prefixLen, r.lhs.size() - prefixLen));
    }
  }
  std::sort(tails.begin(), tails.end(),
            [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return tails;
}

bool is_prefix(const Word& pre, const Word& w) {
  if (pre.size() >= w.size()) return false;
  for (size_t i = 0; i < pre.size(); ++i)
    if (pre[i] != w[i]) return false;
  return true;
}

// Minimality: a tail is admissible unless a shorter candidate from the same
// window is a prefix of it (that occurrence would complete earlier).
std::vector<Word> admissible_tails(std::vector<Word> tails) {
  std::vector<Word> out;
  for (size_t i = 0; i < tails.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < i; ++j)
      if (is_prefix(tails[j], tails[i])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(tails[i]);
  }
  return out;
}

}  // namespace

bool is_chain(const std::vector<Word>& entries, const Presentation& pres, int* degree) {
  if (entries.empty()) return false;
  for (const Word& e : entries)
    if (e.empty()) return false;
  if (entries[0].size() != 1) return false;
  Word w = entries[0];
  size_t prevBoundary = 0;  // b_{j-2}
  size_t lastBoundary = 1;  // b_{j-1}
  for (size_t j = 1; j < entries.size(); ++j) {
    auto tails = admissible_tails(candidate_tails(w, prevBoundary, lastBoundary, pres));
    if (std::find(tails.begin(), tails.end(), entries[j]) == tails.end()) return false;
    w = w + entries[j];
    prevBoundary = lastBoundary;
    lastBoundary = w.size();
  }
  if (degree) *degree = static_cast<int>(entries.size()) - 1;
  return true;
}

namespace {

void extend(std::vector<Word>& entries, Word& w, size_t prevBoundary, size_t lastBoundary,
            int remaining, const Presentation& pres, std::vector<AnickChain>& out) {
  if (remaining == 0) {
    out.push_back(AnickChain{entries});
    return;
  }
  auto tails = admissible_tails(candidate_tails(w, prevBoundary, lastBoundary, pres));
  for (const Word& t : tails) {
    entries.push_back(t);
    Word saved = w;
    w = w + t;
    extend(entries, w, lastBoundary, w.size(), remaining - 1, pres, out);
    w = std::move(saved);
    entries.pop_back();
  }
}

}  // namespace

std::vector<AnickChain> enumerate_chains(const Presentation& pres, int degree) {
  pres.require_gsb();
  std::vector<AnickChain> out;
  if (degree < 0) return out;
  for (size_t x = 0; x < pres.arity(); ++x) {
    std::vector<Word> entries{Word::single(static_cast<Letter>(x))};
    Word w = entries[0];
    extend(entries, w, 0, 1, degree, pres, out);
  }
  std::sort(out.begin(), out.end(), AnickChainLess{});
  return out;
}

const std::vector<AnickChain>& enumerate_chains_cached(const Presentation& pres, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<std::vector<AnickChain>>> memo;
  std::pair<std::string, int> key{pres.hash(), degree};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto computed = std::make_unique<std::vector<AnickChain>>(enumerate_chains(pres, degree));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(computed));
  return *it->second;
}

std::string format_chain(const AnickChain& c, const Presentation& pres) {
  std::string s = "[";
  for (size_t i = 0; i < c.entries.size(); ++i) {
    if (i) s += '|';
    s += pres.format_word(c.entries[i]);
  }
  s += ']';
  return s;
}

AnickChain parse_chain(const std::string& text, const Presentation& pres) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InputError("chain must look like [a|b|c]: '" + text + "'");
  AnickChain c;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return c;  // the A0 slot "[]"
  size_t start = 0;
  while (true) {
    size_t bar = body.find('|', start);
    std::string piece = body.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    c.entries.push_back(pres.parse_word(piece));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return c;
}

}  // namespace anick

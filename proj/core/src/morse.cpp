#include <anick/morse.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace anick {

int compare_vertices(const BarVertex& a, const BarVertex& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension() ? -1 : 1;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    int c = compare_deglex(a.entries[i], b.entries[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool BimoduleKeyLess::operator()(const BimoduleKey& a, const BimoduleKey& b) const {
  int c = compare_vertices(a.vertex, b.vertex);
  if (c != 0) return c < 0;
  c = compare_deglex(a.left, b.left);
  if (c != 0) return c < 0;
  return compare_deglex(a.right, b.right) < 0;
}

void FreeBimoduleElement::add(BimoduleKey key, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FreeBimoduleElement& FreeBimoduleElement::operator+=(const FreeBimoduleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

FreeBimoduleElement& FreeBimoduleElement::operator-=(const FreeBimoduleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

FreeBimoduleElement& FreeBimoduleElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, cc] : terms_) cc *= c;
  return *this;
}

Rational FreeBimoduleElement::coefficient(const BimoduleKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreeBimoduleElement FreeBimoduleElement::left_mul(const Word& m, const Presentation& pres) const {
  FreeBimoduleElement out;
  for (const auto& [k, c] : terms_) {
    FreePoly prod = pres.normal_form(m + k.left);
    for (const auto& [w, pc] : prod.terms()) out.add(BimoduleKey{w, k.vertex, k.right}, c * pc);
  }
  return out;
}

FreeBimoduleElement FreeBimoduleElement::right_mul(const Word& m, const Presentation& pres) const {
  FreeBimoduleElement out;
  for (const auto& [k, c] : terms_) {
    FreePoly prod = pres.normal_form(k.right + m);
    for (const auto& [w, pc] : prod.terms()) out.add(BimoduleKey{k.left, k.vertex, w}, c * pc);
  }
  return out;
}

struct MorseEngine::State {
  std::mutex mu;
  std::map<BarVertex, FreeBimoduleElement, BarVertexLess> memo;
  bool memoEnabled = true;
};

MorseEngine::MorseEngine(Presentation pres)
    : pres_(std::move(pres)), state_(std::make_shared<State>()) {
  pres_.require_gsb();
}

void MorseEngine::set_memo_enabled(bool on) {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->memoEnabled = on;
  state_->memo.clear();
}

FreeBimoduleElement MorseEngine::bar_differential(const BarVertex& v) const {
  const int n = v.dimension();
  if (n == 0) return {};
  FreeBimoduleElement out;
  if (n == 1) {
    // d1 [a] = a (x) 1 - 1 (x) a
    out.add(BimoduleKey{v.entries[0], BarVertex{}, Word::unit()}, 1);
    out.add(BimoduleKey{Word::unit(), BarVertex{}, v.entries[0]}, -1);
    return out;
  }
  out.add(BimoduleKey{v.entries[0],
                      BarVertex(std::vector<Word>(v.entries.begin() + 1, v.entries.end())),
                      Word::unit()},
          1);
  Rational sign = 1;
  for (int i = 1; i < n; ++i) {
    sign = -sign;  // (-1)^i
    FreePoly prod = pres_.normal_form(v.entries[static_cast<size_t>(i - 1)] +
                                      v.entries[static_cast<size_t>(i)]);
    for (const auto& [m, c] : prod.terms()) {
      std::vector<Word> es;
      es.reserve(static_cast<size_t>(n) - 1);
      es.insert(es.end(), v.entries.begin(), v.entries.begin() + (i - 1));
      es.push_back(m);
      es.insert(es.end(), v.entries.begin() + (i + 1), v.entries.end());
      out.add(BimoduleKey{Word::unit(), BarVertex(std::move(es)), Word::unit()}, sign * c);
    }
  }
  Rational outerSign = (n % 2 == 0) ? Rational(1) : Rational(-1);  // (-1)^(n) on [a1|..|a_{n-1}] a_n
  out.add(BimoduleKey{Word::unit(),
                      BarVertex(std::vector<Word>(v.entries.begin(), v.entries.end() - 1)),
                      v.entries.back()},
          outerSign);
  return out;
}

MatchStatus MorseEngine::match(const BarVertex& v) const {
  MatchStatus st;
  const int n = v.dimension();
  // longest prefix of the division that is an Anick chain
  int k = 0;
  for (int len = 1; len <= n; ++len) {
    std::vector<Word> prefix(v.entries.begin(), v.entries.begin() + len);
    if (!is_chain(prefix, pres_)) break;
    k = len;
  }
  st.chain_prefix = k;
  if (k == n) {
    st.kind = MatchKind::Critical;
    return st;
  }
  const Word& w = v.entries[static_cast<size_t>(k)];
  // shortest proper prefix of w extending the chain prefix by one hooking step
  for (size_t cut = 1; cut < w.size(); ++cut) {
    std::vector<Word> trial(v.entries.begin(), v.entries.begin() + k);
    trial.push_back(w.subword(0, cut));
    if (!is_chain(trial, pres_)) continue;
    std::vector<Word> es(v.entries.begin(), v.entries.begin() + k);
    es.push_back(w.subword(0, cut));
    es.push_back(w.subword(cut, w.size() - cut));
    es.insert(es.end(), v.entries.begin() + k + 1, v.entries.end());
    st.kind = MatchKind::Split;
    st.partner = BarVertex(std::move(es));
    st.matched_coef = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(k+1)
    return st;
  }
  // no split: merge entry k into entry k-1 (k >= 1 because a lone first entry
  // of length >= 2 always splits at its first letter)
  std::vector<Word> es(v.entries.begin(), v.entries.begin() + (k - 1));
  Word merged = v.entries[static_cast<size_t>(k - 1)] + w;
  if (!pres_.is_normal(merged))
    throw InvalidMatching("merge produced a reducible entry: " + pres_.format_word(merged));
  es.push_back(std::move(merged));
  es.insert(es.end(), v.entries.begin() + k + 1, v.entries.end());
  st.kind = MatchKind::Merge;
  st.partner = BarVertex(std::move(es));
  st.matched_coef = (k % 2 == 0) ? Rational(1) : Rational(-1);  // (-1)^k
  return st;
}

FreeBimoduleElement MorseEngine::value(const BarVertex& v) const {
  std::vector<BarVertex> stack;
  return value_inner(v, stack);
}

FreeBimoduleElement MorseEngine::value_inner(const BarVertex& v,
                                             std::vector<BarVertex>& stack) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->memoEnabled) {
      auto it = state_->memo.find(v);
      if (it != state_->memo.end()) return it->second;
    }
  }
  if (std::find(stack.begin(), stack.end(), v) != stack.end())
    throw CycleDetected("path-tracking revisited an in-progress vertex");
  MatchStatus st = match(v);
  FreeBimoduleElement result;
  switch (st.kind) {
    case MatchKind::Critical:
      result.add(BimoduleKey{Word::unit(), v, Word::unit()}, 1);
      break;
    case MatchKind::Merge:
      break;  // matched downward: no path continues through v
    case MatchKind::Split: {
      FreeBimoduleElement d = bar_differential(st.partner);
      BimoduleKey matchedKey{Word::unit(), v, Word::unit()};
      if (d.coefficient(matchedKey) != st.matched_coef)
        throw InvalidMatching("matched edge weight is not the expected sign");
      stack.push_back(v);
      Rational factor = -Rational(1) / st.matched_coef;
      for (const auto& [key, c] : d.terms()) {
        if (key == matchedKey) continue;
        FreeBimoduleElement sub = value_inner(key.vertex, stack);
        if (sub.is_zero()) continue;
        if (!key.left.empty()) sub = sub.left_mul(key.left, pres_);
        if (!key.right.empty()) sub = sub.right_mul(key.right, pres_);
        sub *= factor * c;
        result += sub;
      }
      stack.pop_back();
      break;
    }
  }
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->memoEnabled) state_->memo.emplace(v, result);
  }
  return result;
}

FreeBimoduleElement MorseEngine::anick_differential(const AnickChain& c) const {
  int deg = 0;
  if (!is_chain(c.entries, pres_, &deg))
    throw InputError("anick_differential: division is not a chain");
  FreeBimoduleElement d = bar_differential(BarVertex(c));
  FreeBimoduleElement out;
  for (const auto& [key, coef] : d.terms()) {
    FreeBimoduleElement sub = value(key.vertex);
    if (sub.is_zero()) continue;
    if (!key.left.empty()) sub = sub.left_mul(key.left, pres_);
    if (!key.right.empty()) sub = sub.right_mul(key.right, pres_);
    sub *= coef;
    out += sub;
  }
  return out;
}

MatchingReport MorseEngine::validate_matching(int maxDegree) const {
  MatchingReport report;
  report.max_degree = maxDegree;
  std::set<BarVertex, BarVertexLess> done;    // fully explored
  std::set<BarVertex, BarVertexLess> inPath;  // on the current DFS path

  // explicit DFS over the path-tracking recursion edges
  auto classify = [&](const BarVertex& v) -> MatchStatus {
    MatchStatus st = match(v);
    switch (st.kind) {
      case MatchKind::Critical: {
        // dimension 0 is the augmentation slot, critical by definition
        if (v.dimension() > 0 && !is_chain(v.entries, pres_))
          throw InvalidMatching("critical vertex is not a chain");
        break;
      }
      case MatchKind::Merge: {
        MatchStatus back = match(st.partner);
        if (back.kind != MatchKind::Split || !(back.partner == v))
          throw InvalidMatching("pairing is not an involution (merge side)");
        break;
      }
      case MatchKind::Split: {
        MatchStatus back = match(st.partner);
        if (back.kind != MatchKind::Merge || !(back.partner == v))
          throw InvalidMatching("pairing is not an involution (split side)");
        if (st.matched_coef != 1 && st.matched_coef != -1)
          throw InvalidMatching("matched edge weight is not invertible");
        FreeBimoduleElement d = bar_differential(st.partner);
        if (d.coefficient(BimoduleKey{Word::unit(), v, Word::unit()}) != st.matched_coef)
          throw InvalidMatching("matched edge weight disagrees with the bar differential");
        break;
      }
    }
    return st;
  };

  std::function<void(const BarVertex&)> visit = [&](const BarVertex& v) {
    if (done.count(v)) return;
    if (inPath.count(v))
      throw CycleDetected("inverted-edge graph has a cycle through a matched vertex");
    MatchStatus st = classify(v);
    ++report.vertices_visited;
    switch (st.kind) {
      case MatchKind::Critical:
        ++report.critical;
        break;
      case MatchKind::Merge:
        ++report.merge;
        break;
      case MatchKind::Split: {
        ++report.split;
        inPath.insert(v);
        FreeBimoduleElement d = bar_differential(st.partner);
        BimoduleKey matchedKey{Word::unit(), v, Word::unit()};
        for (const auto& [key, c] : d.terms()) {
          if (key == matchedKey) continue;
          visit(key.vertex);
        }
        inPath.erase(v);
        break;
      }
    }
    done.insert(v);
  };

  for (int deg = 0; deg <= maxDegree; ++deg) {
    for (const AnickChain& c : enumerate_chains_cached(pres_, deg)) {
      FreeBimoduleElement d = bar_differential(BarVertex(c));
      for (const auto& [key, coef] : d.terms()) visit(key.vertex);
    }
  }
  return report;
}

std::string MorseEngine::format_element(const FreeBimoduleElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : e.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    if (a != 1) os << to_string(a) << '*';
    if (!key.left.empty()) os << pres_.format_word(key.left);
    os << '[';
    for (size_t i = 0; i < key.vertex.entries.size(); ++i) {
      if (i) os << '|';
      os << pres_.format_word(key.vertex.entries[i]);
    }
    os << ']';
    if (!key.right.empty()) os << pres_.format_word(key.right);
  }
  return os.str();
}

}  // namespace anick

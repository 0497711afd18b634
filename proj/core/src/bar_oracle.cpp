#include <anick/bar_oracle.hpp>

#include <anick/errors.hpp>

#include <algorithm>
#include <map>

namespace anick {

namespace {

using Sparse = std::vector<std::pair<size_t, Rational>>;

Sparse expand(const FreePoly& p, const std::map<Word, size_t, DegLexLess>& index) {
  Sparse out;
  for (const auto& [w, c] : p.terms()) {
    auto it = index.find(w);
    if (it == index.end())
      throw MathError("product escaped the enumerated basis");
    out.emplace_back(it->second, c);
  }
  return out;
}

}  // namespace

FiniteAlgebra finite_basis(const Presentation& pres, size_t basisCap) {
  pres.require_gsb();
  FiniteAlgebra alg;
  std::vector<Word> level;
  for (Letter g = 0; g < static_cast<Letter>(pres.arity()); ++g) {
    Word w = Word::single(g);
    if (pres.is_normal(w)) level.push_back(w);
  }
  while (!level.empty()) {
    for (const Word& w : level) {
      alg.basis.push_back(w);
      if (alg.basis.size() > basisCap)
        throw InfiniteDimensional("normal-word count passed the cap without stabilizing");
    }
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter g = 0; g < static_cast<Letter>(pres.arity()); ++g) {
        Word e = w + Word::single(g);
        if (pres.is_normal(e)) next.push_back(e);
      }
    level = std::move(next);
  }
  std::sort(alg.basis.begin(), alg.basis.end(), DegLexLess{});

  std::map<Word, size_t, DegLexLess> index;
  for (size_t i = 0; i < alg.basis.size(); ++i) index.emplace(alg.basis[i], i);
  const size_t d = alg.basis.size();
  alg.mult.assign(d, std::vector<Sparse>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      alg.mult[i][j] = expand(pres.normal_form(alg.basis[i] + alg.basis[j]), index);

  auto times = [&](const Sparse& v, size_t k) {
    std::map<size_t, Rational> acc;
    for (const auto& [b, c] : v)
      for (const auto& [t, tc] : alg.mult[b][k]) acc[t] += c * tc;
    Sparse out;
    for (const auto& [t, c] : acc)
      if (c != 0) out.emplace_back(t, c);
    return out;
  };
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Sparse left = alg.mult[i][j];
      for (size_t k = 0; k < d; ++k) {
        Sparse lhs = times(left, k);
        std::map<size_t, Rational> acc;
        for (const auto& [b, c] : alg.mult[j][k])
          for (const auto& [t, tc] : alg.mult[i][b]) acc[t] += c * tc;
        Sparse rhs;
        for (const auto& [t, c] : acc)
          if (c != 0) rhs.emplace_back(t, c);
        if (lhs != rhs) throw MathError("structure constants are not associative");
      }
    }
  return alg;
}

RatMatrix bar_coboundary_matrix(const FiniteAlgebra& A, const FiniteBimodule& M, int n,
                                size_t rowCap) {
  if (n < 0) throw InputError("bar_coboundary_matrix requires degree >= 0");
  const size_t dA = A.dim();
  const size_t dM = M.dim;

  size_t domainTuples = 1, codomainTuples = 1;
  for (int i = 0; i < n; ++i) {
    domainTuples *= dA;
    if (domainTuples * dM > rowCap) throw ResourceLimit("bar complex exceeds the row cap");
  }
  codomainTuples = domainTuples * dA;
  if (codomainTuples * dM > rowCap) throw ResourceLimit("bar complex exceeds the row cap");

  RatMatrix out(codomainTuples * dM, domainTuples * dM);

  std::vector<size_t> tuple(static_cast<size_t>(n) + 1);
  for (size_t row = 0; row < codomainTuples; ++row) {
    size_t rem = row;
    for (int i = n; i >= 0; --i) {
      tuple[static_cast<size_t>(i)] = rem % dA;
      rem /= dA;
    }
    auto addBlock = [&](size_t colTuple, const RatMatrix& block, const Rational& coef) {
      for (size_t bi = 0; bi < dM; ++bi)
        for (size_t bj = 0; bj < dM; ++bj) {
          if (block.at(bi, bj) == 0) continue;
          out.at(row * dM + bi, colTuple * dM + bj) += coef * block.at(bi, bj);
        }
    };
    auto tupleIndex = [&](const std::vector<size_t>& t) {
      size_t idx = 0;
      for (size_t v : t) idx = idx * dA + v;
      return idx;
    };

    // a1 . phi(a2..a_{n+1})
    {
      std::vector<size_t> rest(tuple.begin() + 1, tuple.end());
      addBlock(tupleIndex(rest), M.left_word(A.basis[tuple[0]]), 1);
    }
    // inner contractions
    Rational sign = 1;
    for (int i = 1; i <= n; ++i) {
      sign = -sign;
      for (const auto& [b, c] : A.mult[tuple[static_cast<size_t>(i - 1)]]
                                      [tuple[static_cast<size_t>(i)]]) {
        std::vector<size_t> contracted;
        contracted.reserve(static_cast<size_t>(n));
        contracted.insert(contracted.end(), tuple.begin(), tuple.begin() + (i - 1));
        contracted.push_back(b);
        contracted.insert(contracted.end(), tuple.begin() + (i + 1), tuple.end());
        RatMatrix id = RatMatrix::identity(dM);
        addBlock(tupleIndex(contracted), id, sign * c);
      }
    }
    // phi(a1..a_n) . a_{n+1}
    {
      std::vector<size_t> rest(tuple.begin(), tuple.end() - 1);
      Rational outerSign = (n % 2 == 0) ? Rational(-1) : Rational(1);
      addBlock(tupleIndex(rest), M.right_word(A.basis[tuple.back()]), outerSign);
    }
  }
  return out;
}

std::vector<size_t> bar_cohomology(const FiniteAlgebra& A, const FiniteBimodule& M,
                                   int maxDegree, size_t rowCap) {
  if (maxDegree < 0) throw InputError("bar_cohomology requires max degree >= 0");
  const size_t dA = A.dim();
  const size_t dM = M.dim;

  std::vector<size_t> ranks(static_cast<size_t>(maxDegree) + 1);
  std::vector<size_t> cochainDims(static_cast<size_t>(maxDegree) + 1);
  size_t tuples = 1;
  for (int n = 0; n <= maxDegree; ++n) {
    cochainDims[static_cast<size_t>(n)] = tuples * dM;
    ranks[static_cast<size_t>(n)] = rank_bareiss(bar_coboundary_matrix(A, M, n, rowCap));
    tuples *= dA;
  }
  std::vector<size_t> dims(static_cast<size_t>(maxDegree) + 1);
  for (int n = 0; n <= maxDegree; ++n) {
    size_t kernel = cochainDims[static_cast<size_t>(n)] - ranks[static_cast<size_t>(n)];
    size_t imageBelow = n == 0 ? 0 : ranks[static_cast<size_t>(n - 1)];
    dims[static_cast<size_t>(n)] = kernel - imageBelow;
  }
  return dims;
}

}  // namespace anick

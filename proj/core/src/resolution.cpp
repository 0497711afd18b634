#include <anick/resolution.hpp>

#include <anick/errors.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace anick {

const FreeBimoduleElement* ResolutionSlice::find(const AnickChain& c) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), c, AnickChainLess{});
  if (it == basis.end() || !(*it == c)) return nullptr;
  return &differential[static_cast<size_t>(it - basis.begin())];
}

bool ResidueReport::all_zero() const {
  return std::all_of(residues.begin(), residues.end(),
                     [](const FreeBimoduleElement& e) { return e.is_zero(); });
}

Resolution::Resolution(Presentation pres, int maxDegree, std::vector<ResolutionSlice> slices)
    : pres_(std::move(pres)),
      maxDegree_(maxDegree),
      slices_(std::move(slices)),
      hash_(pres_.hash()) {
  if (static_cast<int>(slices_.size()) != maxDegree_)
    throw InputError("resolution slice count disagrees with max degree");
}

const ResolutionSlice& Resolution::slice(int degree) const {
  if (degree < 1 || degree > maxDegree_)
    throw InputError("resolution slice degree out of range");
  return slices_[static_cast<size_t>(degree - 1)];
}

std::vector<FreePoly> augmentation_residues(const ResolutionSlice& first,
                                            const Presentation& pres) {
  std::vector<FreePoly> out(first.basis.size());
  for (size_t i = 0; i < first.basis.size(); ++i) {
    FreePoly acc;
    for (const auto& [key, c] : first.differential[i].terms()) {
      if (key.vertex.dimension() != 0)
        throw InputError("augmentation_residues expects a degree-1 slice");
      FreePoly prod = pres.normal_form(key.left + key.right);
      prod *= c;
      acc += prod;
    }
    out[i] = std::move(acc);
  }
  return out;
}

ResidueReport check_composition(const ResolutionSlice& upper, const ResolutionSlice& lower,
                                const Presentation& pres) {
  if (upper.degree != lower.degree + 1)
    throw InputError("check_composition expects consecutive slices");
  ResidueReport report;
  report.upper_degree = upper.degree;
  report.chains = upper.basis;
  report.residues.resize(upper.basis.size());
  detail::parallel_for(upper.basis.size(), [&](size_t i) {
    FreeBimoduleElement acc;
    for (const auto& [key, c] : upper.differential[i].terms()) {
      const FreeBimoduleElement* inner = lower.find(key.vertex.as_chain());
      if (!inner)
        throw InputError("composition target chain missing from the lower slice");
      FreeBimoduleElement sub = *inner;
      if (!key.left.empty()) sub = sub.left_mul(key.left, pres);
      if (!key.right.empty()) sub = sub.right_mul(key.right, pres);
      sub *= c;
      acc += sub;
    }
    report.residues[i] = std::move(acc);
  });
  return report;
}

Resolution build_resolution(const Presentation& pres, int maxDegree) {
  if (maxDegree < 1) throw InputError("build_resolution requires max degree >= 1");
  MorseEngine engine(pres);
  engine.validate_matching(maxDegree - 1);

  std::vector<ResolutionSlice> slices;
  slices.reserve(static_cast<size_t>(maxDegree));
  for (int n = 1; n <= maxDegree; ++n) {
    ResolutionSlice slice;
    slice.degree = n;
    slice.basis = enumerate_chains_cached(pres, n - 1);
    slice.differential.resize(slice.basis.size());
    detail::parallel_for(slice.basis.size(), [&](size_t i) {
      slice.differential[i] = engine.anick_differential(slice.basis[i]);
    });
    slices.push_back(std::move(slice));
  }

  std::vector<FreePoly> eps = augmentation_residues(slices[0], pres);
  for (size_t j = 0; j < eps.size(); ++j)
    if (!eps[j].is_zero())
      throw CompositionNonzero("augmentation residue nonzero on " +
                               format_chain(slices[0].basis[j], pres));
  for (int n = 1; n < maxDegree; ++n) {
    ResidueReport report = check_composition(slices[static_cast<size_t>(n)],
                                             slices[static_cast<size_t>(n - 1)], pres);
    for (size_t j = 0; j < report.residues.size(); ++j)
      if (!report.residues[j].is_zero())
        throw CompositionNonzero(
            "residue nonzero on " + format_chain(report.chains[j], pres) + ": " +
            engine.format_element(report.residues[j]));
  }

  Resolution res(pres, maxDegree, std::move(slices));
  res.mark_composition_checked();
  return res;
}

const Resolution& build_resolution_cached(const Presentation& pres, int maxDegree) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<Resolution>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(pres.hash(), maxDegree);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto built = std::make_unique<Resolution>(build_resolution(pres, maxDegree));
    it = cache.emplace(std::move(key), std::move(built)).first;
  }
  return *it->second;
}

}  // namespace anick

#include <anick/cli.hpp>

#include <anick/bar_oracle.hpp>
#include <anick/chains.hpp>
#include <anick/conformal.hpp>
#include <anick/errors.hpp>
#include <anick/hochschild.hpp>
#include <anick/json_io.hpp>
#include <anick/morse.hpp>
#include <anick/resolution.hpp>
#include <anick/weyl.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

namespace anick::cli {

namespace {

int cmd_chains(const std::string& presPath, int degree, std::ostream& out) {
  Presentation pres = json_io::load_presentation(presPath);
  pres.require_gsb();
  for (const AnickChain& c : enumerate_chains(pres, degree))
    out << format_chain(c, pres) << "\n";
  return 0;
}

int cmd_diff(const std::string& presPath, int degree, std::ostream& out) {
  Presentation pres = json_io::load_presentation(presPath);
  pres.require_gsb();
  const Resolution& res = build_resolution_cached(pres, degree);
  MorseEngine engine(pres);
  const ResolutionSlice& s = res.slice(degree);
  for (size_t i = 0; i < s.basis.size(); ++i)
    out << "d" << format_chain(s.basis[i], pres) << " = "
        << engine.format_element(s.differential[i]) << "\n";
  return 0;
}

int cmd_check_resolution(const std::string& presPath, int maxDegree,
                         const std::string& exportPath, bool quiet, std::ostream& out) {
  Presentation pres = json_io::load_presentation(presPath);
  pres.require_gsb();
  if (!quiet) out << "note: building resolution to degree " << maxDegree << "\n";
  const Resolution& res = build_resolution_cached(pres, maxDegree);
  out << "presentation " << res.presentation_hash() << "\n";
  for (const ResolutionSlice& s : res.slices())
    out << "slice " << s.degree << ": " << s.basis.size() << " chains\n";
  out << "mu . delta_1 = 0 on all " << res.slice(1).basis.size() << " chains\n";
  for (int n = 1; n < maxDegree; ++n)
    out << "delta_" << n << " . delta_" << (n + 1) << " = 0 on all "
        << res.slice(n + 1).basis.size() << " chains\n";
  out << "resolution OK through degree " << maxDegree << "\n";
  if (!exportPath.empty()) {
    json_io::export_resolution(res, exportPath);
    out << "exported " << exportPath << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& presPath, const std::string& bimodulePath,
                   int maxDegree, bool quiet, std::ostream& out) {
  Presentation pres = json_io::load_presentation(presPath);
  pres.require_gsb();
  FiniteBimodule M = json_io::load_bimodule(bimodulePath, pres);
  if (!quiet) out << "note: transporting along the resolution to degree " << maxDegree + 1 << "\n";
  std::vector<size_t> dims = cohomology_dims(pres, M, maxDegree);
  for (int n = 0; n <= maxDegree; ++n) out << "H^" << n << " = " << dims[n] << "\n";
  return 0;
}

int cmd_oracle_compare(const std::string& presPath, const std::string& bimodulePath,
                       int maxDegree, size_t basisCap, size_t rowCap, bool quiet,
                       std::ostream& out, std::ostream& err) {
  Presentation pres = json_io::load_presentation(presPath);
  pres.require_gsb();
  FiniteBimodule M = json_io::load_bimodule(bimodulePath, pres);
  if (!quiet) out << "note: comparing chain complex dims against the direct cochain model\n";
  std::vector<size_t> lean = cohomology_dims(pres, M, maxDegree);
  FiniteAlgebra A = finite_basis(pres, basisCap);
  std::vector<size_t> naive = bar_cohomology(A, M, maxDegree, rowCap);
  out << "  n  chain  direct  verdict\n";
  bool ok = true;
  for (int n = 0; n <= maxDegree; ++n) {
    bool match = lean[n] == naive[n];
    ok = ok && match;
    out << std::setw(3) << n << std::setw(7) << lean[n] << std::setw(8) << naive[n] << "  "
        << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  if (!ok) {
    err << "check failed: cohomology dimensions disagree between the two models\n";
    return 1;
  }
  out << "oracle comparison OK\n";
  return 0;
}

const char* row_status_name(weyl::RowStatus s) {
  switch (s) {
    case weyl::RowStatus::Match: return "MATCH";
    case weyl::RowStatus::Discrepancy: return "DISCREPANCY";
    default: return "UNLISTED";
  }
}

void print_table(const std::vector<weyl::TableRow>& rows, int which, const Presentation& pres,
                 const MorseEngine& engine, std::ostream& out) {
  size_t match = 0, disc = 0, unlisted = 0;
  for (const auto& r : rows) {
    if (r.status == weyl::RowStatus::Match) ++match;
    else if (r.status == weyl::RowStatus::Discrepancy) ++disc;
    else ++unlisted;
  }
  out << "delta_" << which << ": " << match << " MATCH, " << disc << " DISCREPANCY, "
      << unlisted << " UNLISTED\n";
  for (const auto& r : rows) {
    if (r.status == weyl::RowStatus::Match) continue;
    out << row_status_name(r.status) << " " << format_chain(r.chain, pres) << "\n";
    if (r.status == weyl::RowStatus::Discrepancy) {
      out << "  printed : " << r.printed_text << "\n";
      out << "  computed: " << engine.format_element(r.computed) << "\n";
      if (!r.printed_breaks_complex)
        throw MathError("discrepancy at " + format_chain(r.chain, pres) +
                        " is not justified by the d.d = 0 certificate");
      out << "  certificate: printed row breaks d.d = 0, computed row passes\n";
    } else {
      out << "  computed: " << engine.format_element(r.computed) << "\n";
      out << "  certificate: computed row passes d.d = 0\n";
    }
  }
}

void print_chain_set(const weyl::ChainSetDiff& d, const Presentation& pres, std::ostream& out) {
  out << "V^(" << d.degree << "): computed " << d.computed_count << ", reference "
      << d.reference_count << "\n";
  if (!d.reference_only.empty()) {
    out << "  absent from the computed set:";
    for (const Word& w : d.reference_only) out << " " << pres.format_word(w);
    out << "\n";
    throw MathError("reference chain missing from the computed basis at degree " +
                    std::to_string(d.degree));
  }
  if (!d.computed_only.empty()) {
    out << "  absent from the reference list:";
    for (const Word& w : d.computed_only) out << " " << pres.format_word(w);
    out << "\n";
  }
}

int cmd_weyl_demo(bool quiet, std::ostream& out) {
  Presentation pres = weyl::w1_presentation();
  MorseEngine engine(pres);
  if (!quiet) out << "note: computing the degree-4 resolution and reference diff\n";
  weyl::DifferentialReport report = weyl::differential_report();

  out << "== chain sets ==\n";
  print_chain_set(report.chains1, pres, out);
  print_chain_set(report.chains2, pres, out);
  print_chain_set(report.chains3, pres, out);

  out << "== differential tables ==\n";
  print_table(report.delta3, 3, pres, engine, out);
  print_table(report.delta4, 4, pres, engine, out);

  out << "== composition ==\n";
  const Resolution& res = build_resolution_cached(pres, 4);
  for (int n = 2; n <= 3; ++n) {
    ResidueReport rr = check_composition(res.slice(n + 1), res.slice(n), pres);
    if (!rr.all_zero()) throw MathError("nonzero composition residue in the demo");
    out << "delta_" << n << " . delta_" << (n + 1) << " = 0 on all " << rr.chains.size()
        << " chains\n";
  }

  out << "== coboundary certificates ==\n";
  const weyl::Unitality types[] = {weyl::Unitality::Both, weyl::Unitality::LeftOnly,
                                   weyl::Unitality::RightOnly, weyl::Unitality::Neither};
  int certs = 0;
  for (weyl::Unitality t : types) {
    weyl::SolvedSystem solved = weyl::generic_cocycle_relations(t);
    out << "type " << weyl::unitality_name(t) << ": free symbols";
    for (const std::string& w : solved.free_symbol_words(pres)) out << " phi[" << w << "]";
    out << "\n";

    std::vector<std::string> names;
    for (const AnickChain& c : solved.symbols) names.push_back(pres.format_word(c.word()));
    weyl::FormalModule mod(t, names);

    weyl::WitnessCertificate cert = weyl::coboundary_witness(t);
    for (const auto& [chain, el] : cert.psi)
      out << "  psi" << format_chain(chain, pres) << " = " << mod.format(el, "phi") << "\n";
    out << "  psi.delta_3 - phi = 0 on all " << cert.residues.size() << " chains\n";
    ++certs;
  }
  out << certs << "/4 coboundary certificates OK\n";
  return 0;
}

int cmd_conformal_check(int window, size_t rank, bool quiet, std::ostream& out) {
  using namespace anick::conformal;
  if (!quiet) out << "note: exact bivariate matrix arithmetic, no truncation\n";

  CoeffElement t1 = coeff_monomial(1, 0, 0, 0, 1);
  CoeffElement x0 = coeff_monomial(1, 0, 0, 1, 0);
  CoeffElement tx = coeff_product(t1, x0);
  CoeffElement expected(1);
  expected.add({0, 0, 1, 1}, 1);
  expected.add({0, 0, 0, 0}, 1);
  out << "1(1)*x(0) = " << tx.to_text() << "\n";
  if (!(tx == expected)) throw MathError("t x != x t + 1 in the coefficient algebra");
  out << "product identity t*x = x*t + 1 reproduced\n";

  size_t triples = associativity_sweep(5);
  out << "associativity OK on " << triples << " monomial triples of total degree <= 5\n";

  IsoCertificate cert = weyl_iso_check(window, rank);
  out << "iso check: window " << cert.window << ", rank " << cert.rank << ", "
      << cert.pairs_checked << " pairs OK\n";
  out << "conformal checks OK\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anick resolution and Hochschild cohomology toolkit"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress progress notes (results always print)");

  int chainsDegree = 0;
  std::string chainsPres;
  CLI::App* cChains = app.add_subcommand("chains", "list the chain basis at a degree");
  cChains->add_option("--degree", chainsDegree, "chain degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cChains->add_option("presentation", chainsPres, "presentation JSON file")->required();

  int diffDegree = 1;
  std::string diffPres;
  CLI::App* cDiff = app.add_subcommand("diff", "print the differential at a degree");
  cDiff->add_option("--degree", diffDegree, "differential degree (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cDiff->add_option("presentation", diffPres, "presentation JSON file")->required();

  int resDegree = 1;
  std::string resPres, resExport;
  CLI::App* cRes = app.add_subcommand("check-resolution",
                                      "build a resolution and verify the complex property");
  cRes->add_option("--max-degree", resDegree, "top degree (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cRes->add_option("--export", resExport, "write the slices to a JSON artifact");
  cRes->add_option("presentation", resPres, "presentation JSON file")->required();

  int cohDegree = 0;
  std::string cohPres, cohBimodule;
  CLI::App* cCoh = app.add_subcommand("cohomology", "cohomology dims against a bimodule");
  cCoh->add_option("--bimodule", cohBimodule, "bimodule JSON file")->required();
  cCoh->add_option("--max-degree", cohDegree, "top cohomological degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cCoh->add_option("presentation", cohPres, "presentation JSON file")->required();

  int cmpDegree = 4;
  size_t basisCap = 4096, rowCap = 1000000;
  std::string cmpPres, cmpBimodule;
  CLI::App* cCmp = app.add_subcommand(
      "oracle-compare", "compare chain complex dims against the direct cochain model");
  cCmp->add_option("--bimodule", cmpBimodule, "bimodule JSON file")->required();
  cCmp->add_option("--max-degree", cmpDegree, "top cohomological degree (default 4)")
      ->check(CLI::NonNegativeNumber);
  cCmp->add_option("--basis-cap", basisCap, "max algebra dimension (default 4096)")
      ->check(CLI::PositiveNumber);
  cCmp->add_option("--row-cap", rowCap, "max cochain matrix rows (default 1000000)")
      ->check(CLI::PositiveNumber);
  cCmp->add_option("presentation", cmpPres, "presentation JSON file")->required();

  CLI::App* cDemo = app.add_subcommand(
      "weyl-demo", "differential tables, reference diff, and coboundary certificates");

  int confWindow = 6;
  size_t confRank = 1;
  CLI::App* cConf = app.add_subcommand("conformal-check",
                                       "coefficient algebra identities and the iso check");
  cConf->add_option("--window", confWindow, "monomial degree window (default 6)")
      ->check(CLI::NonNegativeNumber);
  cConf->add_option("--rank", confRank, "matrix rank (default 1)")->check(CLI::PositiveNumber);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("anick");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cChains) return cmd_chains(chainsPres, chainsDegree, out);
    if (*cDiff) return cmd_diff(diffPres, diffDegree, out);
    if (*cRes) return cmd_check_resolution(resPres, resDegree, resExport, quiet, out);
    if (*cCoh) return cmd_cohomology(cohPres, cohBimodule, cohDegree, quiet, out);
    if (*cCmp)
      return cmd_oracle_compare(cmpPres, cmpBimodule, cmpDegree, basisCap, rowCap, quiet, out,
                                err);
    if (*cDemo) return cmd_weyl_demo(quiet, out);
    if (*cConf) return cmd_conformal_check(confWindow, confRank, quiet, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  err << "input error: no subcommand\n";
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace anick::cli

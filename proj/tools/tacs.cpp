// tacs: spectra, checks, bands and states of the two-axis countertwisting
// Hamiltonian from the command line.
//
// Exit status: 0 success, 1 computational failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tacs/tacs.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tacs::HalfInt parse_j(const std::string &text, const char *flag) {
  tacs::HalfInt j;
  try {
    j = tacs::HalfInt::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (j.twice() < 0)
    throw UsageError(std::string(flag) + " must be non-negative");
  return j;
}

/// Writes to --out when given, stdout otherwise.
class Output {
public:
  explicit Output(const std::string &path) {
    if (path.empty())
      return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_)
      throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

struct SpectrumArgs {
  std::string j, format = "json", out, root = "primary";
  double chi = 1.0;
};

int run_spectrum(const SpectrumArgs &a) {
  const auto J = parse_j(a.j, "--J");
  const auto root = a.root == "alternate" ? tacs::CouplingRoot::Alternate : tacs::CouplingRoot::Primary;
  Output out(a.out);
  const auto s = tacs::solve_spectrum(J, root);
  if (a.format == "table") {
    tacs::write_table(out.stream(), s, a.chi);
    return kOk;
  }
  const auto rec = tacs::make_record(s);
  if (a.format == "csv")
    tacs::write_spectrum_csv(out.stream(), rec);
  else
    out.stream() << tacs::serialize(rec) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string j_max;
  double tol = 1e-8;
  bool verbose = false;
  bool inject_corruption = false;
};

int run_verify(const VerifyArgs &a) {
  const auto j_max = parse_j(a.j_max, "--J-max");
  tacs::VerifyOptions opt;
  opt.tol = a.tol;
  opt.inject_corruption = a.inject_corruption;
  const auto results = tacs::verify_range(j_max, opt);

  std::map<int, std::vector<const tacs::CheckResult *>> by_j;
  for (const auto &r : results)
    by_j[r.J.twice()].push_back(&r);
  bool all_passed = true;
  for (const auto &[twice, checks] : by_j) {
    int failed = 0;
    for (const auto *c : checks)
      failed += !c->passed;
    all_passed = all_passed && failed == 0;
    const auto J = tacs::HalfInt::from_twice(twice);
    std::printf("J=%s %s (%zu checks)\n", J.str().c_str(), failed ? "FAIL" : "PASS", checks.size());
    for (const auto *c : checks) {
      if (c->passed && !a.verbose)
        continue;
      std::printf("  %s %s value=%.3g threshold=%.3g%s%s\n", c->passed ? "ok  " : "FAIL",
                  c->name.c_str(), c->value, c->threshold, c->detail.empty() ? "" : " ",
                  c->detail.c_str());
    }
  }
  std::printf("%s\n", all_passed ? "all checks passed" : "some checks failed");
  return all_passed ? kOk : kFailure;
}

struct BandsArgs {
  std::string j_max, parity = "half", out;
  std::vector<int> zeta{1};
  bool fit_only = false;
};

int run_bands(const BandsArgs &a) {
  const auto j_max = parse_j(a.j_max, "--J-max");
  if (j_max.twice() < 1)
    throw UsageError("--J-max must be at least 1/2");
  for (int z : a.zeta)
    if (z < 1)
      throw UsageError("--zeta entries must be positive");
  const auto parity = a.parity == "integer" ? tacs::JParity::Integer : tacs::JParity::Half;
  const auto all = tacs::extract_bands(j_max, parity);

  std::vector<tacs::Band> selected;
  std::vector<std::string> summary;
  for (int z : a.zeta) {
    tacs::Band band{z, {}};
    if (z <= static_cast<int>(all.size()))
      band = all[z - 1];
    if (band.points.size() < 3) {
      std::fprintf(stderr, "tacs bands: insufficient points for zeta=%d: %zu point(s) up to J=%s, need 3\n",
                   z, band.points.size(), j_max.str().c_str());
      return kFailure;
    }
    summary.push_back(tacs::fit_summary(z, tacs::quadratic_fit(band)));
    selected.push_back(std::move(band));
  }

  Output out(a.out);
  if (!a.fit_only)
    tacs::write_bands_csv(out.stream(), selected);
  for (const auto &line : summary)
    std::cout << line << '\n';
  return kOk;
}

struct StateArgs {
  std::string j, sector, format = "table", out;
  int zeta = 1;
};

int run_state(const StateArgs &a) {
  const auto J = parse_j(a.j, "--J");
  const auto sectors = tacs::enumerate_sectors(J);
  const std::size_t idx = a.sector == "a" ? 0 : 1;
  if (idx >= sectors.size())
    throw UsageError("J=" + J.str() + " has no sector b");
  const auto s = tacs::solve_spectrum(J);
  const auto levels = s.sector(sectors[idx]);
  if (a.zeta < 1 || a.zeta > static_cast<int>(levels.size()))
    throw UsageError("--zeta must lie in 1.." + std::to_string(levels.size()) + " for sector " +
                     sectors[idx].str());
  const tacs::Level &level = *levels[a.zeta - 1];
  const auto v = tacs::state_amplitudes(level);
  const double residual = tacs::verify_state(
      v, tacs::build_hamiltonian(J, tacs::HamiltonianForm::RotatedTA), level.energy_over_chi);

  Output out(a.out);
  if (a.format == "json") {
    auto j = tacs::to_json(v, level.energy_over_chi);
    j["residual"] = residual;
    out.stream() << j.dump(2) << '\n';
  } else {
    tacs::write_state_table(out.stream(), v, level.energy_over_chi);
    out.stream() << "residual " << tacs::format_number(residual, 3) << '\n';
  }
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact spectra of the two-axis countertwisting Hamiltonian"};
  app.require_subcommand(1);

  SpectrumArgs sp;
  auto *spectrum = app.add_subcommand("spectrum", "All 2J+1 levels with polynomials and zeros");
  spectrum->add_option("--J", sp.j, "total angular momentum, e.g. 21/2 or 10.5")->required();
  spectrum->add_option("--format", sp.format)->check(CLI::IsMember({"json", "csv", "table"}));
  spectrum->add_option("--out", sp.out, "output file");
  spectrum->add_option("--chi", sp.chi, "energy unit for table display");
  spectrum->add_option("--root", sp.root, "coupling root")
      ->check(CLI::IsMember({"primary", "alternate"}));

  VerifyArgs vf;
  auto *verify = app.add_subcommand("verify", "Run every consistency check for J <= J-max");
  verify->add_option("--J-max", vf.j_max)->required();
  verify->add_option("--tol", vf.tol, "relative energy and state tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--verbose", vf.verbose, "list passing checks too");
  verify->add_flag("--inject-corruption", vf.inject_corruption)->group("");

  BandsArgs bd;
  auto *bands = app.add_subcommand("bands", "Band energies of the lower branch and quadratic fits");
  bands->add_option("--J-max", bd.j_max)->required();
  bands->add_option("--zeta", bd.zeta, "band indices, e.g. 1,2")->delimiter(',');
  bands->add_flag("--fit", bd.fit_only, "print only the fit summary");
  bands->add_option("--parity", bd.parity)->check(CLI::IsMember({"half", "integer"}));
  bands->add_option("--out", bd.out, "CSV output file");

  StateArgs st;
  auto *state = app.add_subcommand("state", "Eigenstate amplitudes in the |J M> basis");
  state->add_option("--J", st.j)->required();
  state->add_option("--zeta", st.zeta)->required();
  state->add_option("--sector", st.sector)->required()->check(CLI::IsMember({"a", "b"}));
  state->add_option("--format", st.format)->check(CLI::IsMember({"json", "table"}));
  state->add_option("--out", st.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum)
      return run_spectrum(sp);
    if (*verify)
      return run_verify(vf);
    if (*bands)
      return run_bands(bd);
    return run_state(st);
  } catch (const UsageError &e) {
    std::fprintf(stderr, "tacs: %s\n", e.what());
    return kUsage;
  } catch (const tacs::InvariantViolation &e) {
    std::fprintf(stderr, "tacs: invariant %s violated: %s\n", e.invariant().c_str(), e.what());
    return kFailure;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "tacs: %s\n", e.what());
    return kFailure;
  }
}

#pragma once
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "madelung/elements.hpp"
#include "madelung/fisheye.hpp"
#include "madelung/pairing.hpp"
#include "madelung/report.hpp"
#include "madelung/swscan.hpp"
#include "madelung/verify.hpp"

namespace madelung::cli {

//! A validated batch invocation. Unknown parameter keys are errors.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string output_format = "json"; // json|csv
  std::string dataset_path;           // empty = resolve env / bundled default
};

struct RunResult {
  int exit_code = 0;   // 0 ok, 1 domain error, 2 solver error
  std::string output;  // serialized report (stdout)
  std::string error;   // human-readable message (stderr)
};

namespace detail {

class Params {
public:
  explicit Params(const std::map<std::string, std::string> &kv) : m_kv(kv) {}

  std::optional<std::string> get(const std::string &key) {
    m_touched.insert(key);
    auto it = m_kv.find(key);
    if (it == m_kv.end())
      return std::nullopt;
    return it->second;
  }

  std::string require(const std::string &key) {
    auto v = get(key);
    if (!v)
      throw DomainError("missing required parameter --" + key);
    return *v;
  }

  //! Every supplied key must have been consumed by the command.
  void reject_unknown() const {
    for (const auto &[key, value] : m_kv)
      if (!m_touched.count(key))
        throw DomainError("unknown parameter --" + key);
  }

private:
  const std::map<std::string, std::string> &m_kv;
  std::set<std::string> m_touched;
};

inline long long parse_int(const std::string &text, const std::string &key) {
  long long value = 0;
  const auto *begin = text.data();
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("parameter --" + key + ": '" + text + "' is not an integer");
  return value;
}

inline double parse_real(const std::string &text, const std::string &key) {
  double value = 0.0;
  const auto *begin = text.data();
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("parameter --" + key + ": '" + text + "' is not a number");
  return value;
}

inline std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

inline Cell orbital_cell(const shells::Orbital &o) { return o.symbol(); }

inline void append_diff_table(Report &report,
                              const std::vector<shells::OrbitalDiff> &diff) {
  Table t;
  t.name = "diff";
  t.columns = {"orbital", "predicted", "experimental"};
  for (const auto &d : diff)
    t.rows.push_back({orbital_cell(d.orbital),
                      static_cast<long long>(d.predicted),
                      static_cast<long long>(d.experimental)});
  report.tables.push_back(std::move(t));
}

} // namespace detail

//! Dataset resolution order: explicit path, MADELUNG_DATASET, bundled file.
//! The sentinel "none" (or an empty env value) means "no dataset".
inline std::optional<std::string> resolve_dataset(const std::string &explicit_path) {
  if (!explicit_path.empty())
    return explicit_path == "none" ? std::nullopt
                                   : std::optional<std::string>(explicit_path);
  if (const char *env = std::getenv("MADELUNG_DATASET")) {
    const std::string value(env);
    return (value.empty() || value == "none") ? std::nullopt
                                              : std::optional<std::string>(value);
  }
#ifdef MADELUNG_BUNDLED_DATASET
  return std::string(MADELUNG_BUNDLED_DATASET);
#else
  return std::nullopt;
#endif
}

// ---------------------------------------------------------------------------
// commands

inline Report cmd_aufbau(shells::FillingRule rule, int z, bool with_classify,
                         const std::string &core_mode,
                         const std::optional<std::string> &dataset_path) {
  using namespace shells;
  Report report;
  report.command = "aufbau";
  report.inputs = {{"rule", rule_name(rule)},
                   {"z", static_cast<long long>(z)},
                   {"classify", with_classify}};

  const auto predicted = fill(rule, z);
  std::optional<std::string> core;
  if (core_mode == "auto")
    core = best_core(predicted);
  else if (core_mode != "none")
    core = core_mode;
  if (core && !predicted.contains(noble_gas_core(*core)))
    throw DomainError("core [" + *core + "] is not a subset of the prediction");
  if (core && predicted.electrons() == noble_gas_z(*core).value_or(0))
    core.reset(); // the prediction is exactly a noble gas

  report.scalars.push_back({"z", static_cast<long long>(z)});
  report.scalars.push_back({"predicted", format_configuration(predicted, core)});
  report.scalars.push_back({"predicted_full", format_configuration(predicted)});

  if (with_classify) {
    if (!dataset_path)
      throw DomainError("classification requires an element dataset");
    const auto dataset = load_dataset(*dataset_path);
    const auto cls = classify(z, dataset);
    const auto &rec = find_record(dataset, z);
    report.scalars.push_back({"symbol", rec.symbol});
    report.scalars.push_back({"status", status_name(cls.status)});
    report.scalars.push_back(
        {"experimental",
         format_configuration(rec.experimental, best_core(rec.experimental))});
    detail::append_diff_table(report, cls.diff);
  }
  return report;
}

inline Report cmd_classify(int z, const std::optional<std::string> &dataset_path) {
  using namespace shells;
  Report report;
  report.command = "classify";
  report.inputs = {{"z", static_cast<long long>(z)}};
  if (!dataset_path)
    throw DomainError("classification requires an element dataset");
  const auto dataset = load_dataset(*dataset_path);
  const auto cls = classify(z, dataset);
  const auto &rec = find_record(dataset, z);
  const auto predicted = fill(FillingRule::Madelung, z);
  report.scalars.push_back({"z", static_cast<long long>(z)});
  report.scalars.push_back({"symbol", rec.symbol});
  report.scalars.push_back({"status", status_name(cls.status)});
  report.scalars.push_back(
      {"predicted", format_configuration(predicted, best_core(predicted))});
  report.scalars.push_back(
      {"experimental",
       format_configuration(rec.experimental, best_core(rec.experimental))});
  detail::append_diff_table(report, cls.diff);
  return report;
}

inline Report cmd_spectrum(const std::string &kind, int z, int nr_max, int l_max) {
  using namespace spectra;
  if (kind != "hydrogen" && kind != "madelung")
    throw DomainError("spectrum kind must be hydrogen or madelung");
  if (nr_max < 0 || l_max < 0)
    throw DomainError("nr-max and l-max must be >= 0");
  Report report;
  report.command = "spectrum";
  report.inputs = {{"kind", kind},
                   {"z", static_cast<long long>(z)},
                   {"nr_max", static_cast<long long>(nr_max)},
                   {"l_max", static_cast<long long>(l_max)}};
  Table t;
  t.name = "levels";
  t.columns = {"n_r", "l", kind == "hydrogen" ? "n_tilde" : "n_tilde_plus_l",
               "energy_hartree"};
  for (int n_r = 0; n_r <= nr_max; ++n_r)
    for (int l = 0; l <= l_max; ++l) {
      const auto e = kind == "hydrogen" ? hydrogen_energy(z, n_r, l)
                                        : madelung_energy(z, n_r, l);
      const long long key = kind == "hydrogen" ? n_r + l + 1 : n_r + 2 * l + 1;
      t.rows.push_back({static_cast<long long>(n_r), static_cast<long long>(l),
                        key, e.value});
    }
  report.tables.push_back(std::move(t));
  return report;
}

inline Report cmd_dirac(int z, int n_r, int kappa, double alpha) {
  using namespace spectra;
  Report report;
  report.command = "dirac";
  report.inputs = {{"z", static_cast<long long>(z)},
                   {"nr", static_cast<long long>(n_r)},
                   {"kappa", static_cast<long long>(kappa)},
                   {"alpha", alpha}};
  const RelativisticLevel level(n_r, kappa, z, alpha);
  const auto decoded = kappa_decode(kappa);
  const double gk = gamma_kappa(level);
  const double exact = dirac_energy(level).value;
  const double bisected = dirac_energy_bisection(level);
  report.scalars.push_back({"l", static_cast<long long>(decoded.l)});
  report.scalars.push_back({"j", decoded.j()});
  report.scalars.push_back({"gamma_kappa", gk});
  report.scalars.push_back({"effective_l", effective_l(gk)});
  report.scalars.push_back({"n_tilde_effective", dirac_n_tilde(level)});
  report.scalars.push_back({"e_over_mc2", exact});
  report.scalars.push_back({"e_over_mc2_bisection", bisected});
  report.scalars.push_back({"bisection_abs_diff", std::abs(exact - bisected)});
  const int n_tilde = n_r + decoded.l + 1;
  report.scalars.push_back(
      {"fine_structure_e_over_mc2",
       fine_structure_expansion(z, n_tilde, decoded.j(), alpha).value});
  if (alpha > 0) {
    report.scalars.push_back({"binding_hartree",
                              dirac_binding_hartree(level).value});
    report.scalars.push_back(
        {"hydrogen_hartree", hydrogen_energy(z, n_r, decoded.l).value});
  } else {
    report.warnings.push_back("alpha = 0: hartree conversion undefined");
  }
  return report;
}

inline Report cmd_richardson(const std::vector<double> &level_energies,
                             const std::vector<int> &degeneracies, double g,
                             int n_pairs) {
  using namespace pairing;
  if (level_energies.empty())
    throw DomainError("at least one level is required");
  if (level_energies.size() != degeneracies.size())
    throw DomainError("levels and degeneracies must have equal length");
  std::vector<Level> levels;
  for (std::size_t i = 0; i < level_energies.size(); ++i)
    levels.push_back({level_energies[i], degeneracies[i]});
  const PairingModel model(levels, g);

  Report report;
  report.command = "richardson";
  std::string eps_text, omega_text;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    eps_text += (i ? "," : "") + format_number(levels[i].epsilon);
    omega_text += (i ? "," : "") + std::to_string(levels[i].omega);
  }
  report.inputs = {{"levels", eps_text},
                   {"degeneracies", omega_text},
                   {"g", g},
                   {"pairs", static_cast<long long>(n_pairs)}};

  const auto solution = richardson_solve(model, n_pairs);
  const auto oracle = fock::exact_ground_state(model, n_pairs);
  report.scalars.push_back({"total_energy", solution.total_energy});
  report.scalars.push_back({"residual", solution.residual});
  report.scalars.push_back({"imag_defect", solution.imag_defect});
  report.scalars.push_back({"oracle_energy", oracle.energy});
  report.scalars.push_back(
      {"oracle_abs_diff", std::abs(solution.total_energy - oracle.energy)});
  report.scalars.push_back(
      {"sector_dimension", static_cast<long long>(oracle.sector_dimension)});
  Table t;
  t.name = "pair_energies";
  t.columns = {"index", "re", "im"};
  for (std::size_t i = 0; i < solution.pair_energies.size(); ++i)
    t.rows.push_back({static_cast<long long>(i),
                      solution.pair_energies[i].real(),
                      solution.pair_energies[i].imag()});
  report.tables.push_back(std::move(t));
  return report;
}

inline Report cmd_bdg(double epsilon, double delta) {
  using namespace pairing;
  Report report;
  report.command = "bdg";
  report.inputs = {{"epsilon", epsilon}, {"delta", delta}};
  const auto eig = bdg_eigen({epsilon, delta});
  report.scalars.push_back({"e_plus", eig.e_plus});
  report.scalars.push_back({"e_minus", eig.e_minus});
  report.scalars.push_back({"u", eig.u});
  report.scalars.push_back({"v", eig.v});
  report.scalars.push_back({"quasiparticle", bcs_quasiparticle(epsilon, delta)});
  return report;
}

inline Report cmd_swscan(int n_r, int l, int kappa, int z_max, double alpha) {
  using namespace spectra;
  Report report;
  report.command = "swscan";
  report.inputs = {{"nr", static_cast<long long>(n_r)},
                   {"l", static_cast<long long>(l)},
                   {"kappa", static_cast<long long>(kappa)},
                   {"zmax", static_cast<long long>(z_max)},
                   {"alpha", alpha}};
  const auto entries = sw_discreteness_scan(n_r, l, kappa, z_max, alpha);
  const auto changes = sign_changes(entries);
  std::string change_text;
  for (std::size_t i = 0; i < changes.size(); ++i)
    change_text += (i ? "," : "") + std::to_string(changes[i]);
  report.scalars.push_back(
      {"sign_change_count", static_cast<long long>(changes.size())});
  report.scalars.push_back({"sign_changes", change_text});
  Table t;
  t.name = "margins";
  t.columns = {"z", "margin", "defined"};
  for (const auto &e : entries)
    t.rows.push_back({static_cast<long long>(e.z),
                      e.defined ? Cell(e.margin) : Cell(std::string("undefined")),
                      e.defined});
  report.tables.push_back(std::move(t));
  return report;
}

namespace detail {

//! Sample reports used by the CLI's own determinism checks; must not need
//! a dataset and must be cheap.
inline std::vector<Report> sample_reports() {
  std::vector<Report> out;
  out.push_back(cmd_bdg(3.0, 4.0));
  out.push_back(cmd_dirac(1, 0, -1, spectra::kFineStructure));
  out.push_back(cmd_richardson({0.0, 1.0}, {1, 1}, 0.5, 1));
  out.push_back(cmd_aufbau(shells::FillingRule::Madelung, 42, false, "auto",
                           std::nullopt));
  return out;
}

inline void verify_cli(std::vector<verify::PropertyResult> &out) {
  { // identical inputs serialize byte-identically
    int violations = 0;
    const auto first = sample_reports();
    const auto second = sample_reports();
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (to_json(first[i]) != to_json(second[i]))
        ++violations;
      if (to_csv(first[i]) != to_csv(second[i]))
        ++violations;
    }
    out.push_back(verify::detail::make("cli", "report-byte-determinism",
                                       violations, 0));
  }
  { // JSON and CSV print every numeric field with the same token
    int violations = 0;
    for (const auto &report : sample_reports()) {
      const auto json = to_json(report);
      const auto csv = to_csv(report);
      const auto check = [&](const Cell &cell) {
        if (!std::holds_alternative<double>(cell))
          return;
        const auto token = format_number(std::get<double>(cell));
        if (json.find(token) == std::string::npos ||
            csv.find(token) == std::string::npos)
          ++violations;
      };
      for (const auto &[k, v] : report.scalars)
        check(v);
      for (const auto &t : report.tables)
        for (const auto &row : t.rows)
          for (const auto &cell : row)
            check(cell);
    }
    out.push_back(verify::detail::make("cli", "json-csv-numeric-agreement",
                                       violations, 0));
  }
}

} // namespace detail

inline Report cmd_verify(const std::optional<std::string> &dataset_path) {
  Report report;
  report.command = "verify";
  report.inputs = {{"dataset", dataset_path ? *dataset_path : ""}};
  auto properties = verify::verify_all(dataset_path ? *dataset_path : "");
  detail::verify_cli(properties);

  long long passed = 0, failed = 0, skipped = 0;
  Table t;
  t.name = "properties";
  t.columns = {"module", "property", "status", "measured", "tolerance", "detail"};
  for (const auto &p : properties) {
    std::string status;
    switch (p.outcome) {
    case verify::Outcome::Pass:
      status = "PASS";
      ++passed;
      break;
    case verify::Outcome::Fail:
      status = "FAIL";
      ++failed;
      break;
    case verify::Outcome::Skip:
      status = "SKIP";
      ++skipped;
      break;
    }
    t.rows.push_back({p.module, p.name, status, p.measured, p.tolerance,
                      p.detail});
  }
  report.scalars.push_back({"passed", passed});
  report.scalars.push_back({"failed", failed});
  report.scalars.push_back({"skipped", skipped});
  report.tables.push_back(std::move(t));
  if (!dataset_path)
    report.warnings.push_back("dataset checks skipped: no dataset provided");
  return report;
}

// ---------------------------------------------------------------------------
// dispatch

inline RunResult run(const RunConfig &config) {
  RunResult result;
  try {
    if (config.output_format != "json" && config.output_format != "csv")
      throw DomainError("output format must be json or csv");
    detail::Params params(config.parameters);
    const auto dataset = resolve_dataset(config.dataset_path);

    Report report;
    if (config.command == "aufbau") {
      const auto rule =
          shells::rule_from_name(params.get("rule").value_or("madelung"));
      const int z = static_cast<int>(detail::parse_int(params.require("z"), "z"));
      const bool with_classify = params.get("classify").value_or("false") == "true";
      const std::string core = params.get("core").value_or("auto");
      params.reject_unknown();
      report = cmd_aufbau(rule, z, with_classify, core, dataset);
    } else if (config.command == "classify") {
      const int z = static_cast<int>(detail::parse_int(params.require("z"), "z"));
      params.reject_unknown();
      report = cmd_classify(z, dataset);
    } else if (config.command == "spectrum") {
      const std::string kind = params.get("kind").value_or("hydrogen");
      const int z = static_cast<int>(
          detail::parse_int(params.get("z").value_or("1"), "z"));
      const int nr_max = static_cast<int>(
          detail::parse_int(params.get("nr-max").value_or("3"), "nr-max"));
      const int l_max = static_cast<int>(
          detail::parse_int(params.get("l-max").value_or("3"), "l-max"));
      params.reject_unknown();
      report = cmd_spectrum(kind, z, nr_max, l_max);
    } else if (config.command == "dirac") {
      const int z = static_cast<int>(detail::parse_int(params.require("z"), "z"));
      const int n_r = static_cast<int>(detail::parse_int(params.require("nr"), "nr"));
      const int kappa =
          static_cast<int>(detail::parse_int(params.require("kappa"), "kappa"));
      const double alpha = detail::parse_real(
          params.get("alpha").value_or(format_number(spectra::kFineStructure)),
          "alpha");
      params.reject_unknown();
      report = cmd_dirac(z, n_r, kappa, alpha);
    } else if (config.command == "richardson") {
      std::vector<double> levels;
      for (const auto &tok : detail::split(params.require("levels"), ','))
        levels.push_back(detail::parse_real(tok, "levels"));
      std::vector<int> omegas(levels.size(), 1);
      if (const auto d = params.get("degeneracies")) {
        omegas.clear();
        for (const auto &tok : detail::split(*d, ','))
          omegas.push_back(
              static_cast<int>(detail::parse_int(tok, "degeneracies")));
      }
      const double g = detail::parse_real(params.require("g"), "g");
      const int pairs =
          static_cast<int>(detail::parse_int(params.require("pairs"), "pairs"));
      params.reject_unknown();
      report = cmd_richardson(levels, omegas, g, pairs);
    } else if (config.command == "bdg") {
      const double eps = detail::parse_real(params.require("epsilon"), "epsilon");
      const double delta = detail::parse_real(params.require("delta"), "delta");
      params.reject_unknown();
      report = cmd_bdg(eps, delta);
    } else if (config.command == "swscan") {
      const int n_r = static_cast<int>(detail::parse_int(params.require("nr"), "nr"));
      const int l = static_cast<int>(detail::parse_int(params.require("l"), "l"));
      const int kappa =
          static_cast<int>(detail::parse_int(params.require("kappa"), "kappa"));
      const int z_max =
          static_cast<int>(detail::parse_int(params.require("zmax"), "zmax"));
      const double alpha = detail::parse_real(
          params.get("alpha").value_or(format_number(spectra::kFineStructure)),
          "alpha");
      params.reject_unknown();
      report = cmd_swscan(n_r, l, kappa, z_max, alpha);
    } else if (config.command == "verify") {
      params.reject_unknown();
      report = cmd_verify(dataset);
      for (const auto &[key, value] : report.scalars)
        if (key == "failed" && std::get<long long>(value) > 0)
          result.exit_code = 1;
    } else {
      throw DomainError("unknown command: " + config.command);
    }

    result.output =
        config.output_format == "json" ? to_json(report) : to_csv(report);
  } catch (const DomainError &e) {
    result.exit_code = 1;
    result.error = e.what();
  } catch (const SolverError &e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::exception &e) {
    result.exit_code = 2;
    result.error = e.what();
  }
  return result;
}

} // namespace madelung::cli

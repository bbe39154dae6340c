#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsteady/ergotropy.hpp"
#include "qsteady/redfield.hpp"
#include "qsteady/steady_analytic.hpp"

namespace qsteady {

enum class SweepParam { Temperature, Mu, DeltaT, DeltaMu, Detuning };
enum class SweepMethod { Analytic, Redfield, Both };
enum class SweepOrdering { Physical, PaperLiteral, Both };
/// How a swept temperature/chemical-potential difference is anchored:
/// Base keeps reservoir 1 fixed (x2 = x1 + dx); Mean keeps the average
/// fixed (x1 = xbar - dx/2, x2 = xbar + dx/2).
enum class Anchor { Base, Mean };
enum class FamilyParam { None, Lambda, T1, Mu1 };
enum class OutputFormat { Csv, Json };

struct SweepAxis {
  SweepParam param = SweepParam::Temperature;
  double min = 0;
  double max = 1;
  int steps = 2;  ///< number of grid points, endpoints included
};

/// One sweep description: fixed parameters, one or two swept axes, an
/// optional family parameter (one block of rows per family value) and the
/// evaluation method. Every value can come from an INI config file, a CLI
/// flag, or a figure preset.
struct SweepConfig {
  Statistics kind = Statistics::Boson;
  double omega1 = 10, omega2 = 10;
  double lambda = 1;
  double t1 = 1, t2 = 1;
  double mu1 = 0, mu2 = 0;
  double j1 = 1, j2 = 1;
  std::vector<SweepAxis> axes;  ///< 1 or 2
  Anchor anchor = Anchor::Base;
  FamilyParam family = FamilyParam::None;
  std::vector<double> family_values;
  SweepMethod method = SweepMethod::Analytic;
  SweepOrdering ordering = SweepOrdering::Physical;
  bool secular = false;
  double tolerance = 1e-8;
  OutputFormat format = OutputFormat::Csv;

  void validate() const;  // structural checks; throws std::invalid_argument
};

/// One evaluated grid point. `error` is nonempty when the point violated a
/// parameter constraint; its observable fields are then NaN and the row is
/// still emitted.
struct SweepRow {
  Statistics kind = Statistics::Boson;
  std::string ordering;  ///< "physical", "paper-literal" or "-" (redfield)
  std::string method;    ///< "analytic" or "redfield"
  double omega1 = 0, omega2 = 0, lambda = 0, j = 0;
  double t1 = 0, t2 = 0, mu1 = 0, mu2 = 0;
  std::array<double, 4> populations{};
  double re_rho23 = 0, im_rho23 = 0;
  double purity = 0;
  double internal_energy = 0;
  double ergotropy = 0;
  double trace_error = 0;
  double residual = 0;     ///< stationarity residual; NaN for analytic rows
  double discrepancy = 0;  ///< max |drho| vs the other method; NaN unless Both
  double min_eigenvalue = 0;
  std::string error;
};

/// Evaluates the grid in deterministic row-major order: family outer, then
/// axis 1, then axis 2; per point, analytic rows (one per requested
/// ordering) precede the redfield row.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Named parameter sets matching the published trend plots. Axis ranges
/// that the source only shows graphically are documented choices; see
/// preset_help().
SweepConfig figure_preset(const std::string& name);
std::vector<std::string> figure_preset_names();
std::string preset_help();

/// Analytic (physical mode) versus null-space solver comparison.
struct CompareReport {
  struct Row {
    double omega1, omega2, lambda, j, t1, t2, mu1, mu2;
    double max_abs_drho;        ///< physical-mode analytic vs null space
    double ergotropy_analytic;
    double ergotropy_redfield;
    double literal_max_abs_drho;  ///< NaN unless paper-literal was requested
    bool breach;
  };
  std::vector<Row> rows;
  double max_discrepancy = 0;
  double mean_discrepancy = 0;
  int breaches = 0;           ///< rows with physical-mode discrepancy > tolerance
  double tolerance = 1e-8;
  bool literal_compared = false;
};

CompareReport compare_analytic_numeric(const SweepConfig& config);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);
std::string to_json(const CompareReport& report);

/// Fixed 12-significant-digit, locale-independent float formatting used
/// for all emitted numbers.
std::string format_g12(double value);

std::string to_string(Statistics kind);
std::string to_string(SweepMethod method);
std::string to_string(SweepOrdering ordering);
std::string to_string(SweepParam param);

}  // namespace qsteady

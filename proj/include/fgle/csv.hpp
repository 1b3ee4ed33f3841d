#pragma once

// Deterministic, locale-independent CSV output. Floats carry 17 significant
// digits so every value round-trips exactly.

#include <string>
#include <vector>

#include "fgle/experiments.hpp"
#include "fgle/stepper.hpp"

namespace fgle {

/// 17 significant digits, '.' decimal point.
std::string format_real(double v);
/// Shortest representation that round-trips; used in file names.
std::string format_short(double v);
/// Locale-independent parse of a full string; throws std::invalid_argument.
double parse_real(const std::string& s);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// tau,h,err_l2,err_linf,order1,order2
void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);
/// t,norm_sq
void write_norms_csv(const std::string& path, const std::vector<double>& t, const std::vector<double>& norm_sq);
/// x,re,im,abs
void write_snapshot_csv(const std::string& path, const GridSpec& g, const Field& u);
/// n,iterations,increment,identity_residual
void write_diagnostics_csv(const std::string& path, const std::vector<StepDiagnostics>& d);

/// "snapshot_t<time>.csv"
std::string snapshot_filename(double t);

}  // namespace fgle

#include "fgle/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fgle {

std::string format_real(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, r.ptr};
}

std::string format_short(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

double parse_real(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty number");
  const char* first = s.data() + b;
  const char* last = s.data() + e + 1;
  if (*first == '+') ++first;
  double v = 0;
  const auto r = std::from_chars(first, last, v);
  if (r.ec != std::errc() || r.ptr != last) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path + ": " + std::strerror(errno));
}

void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  for (const auto& r : rows)
    cells.push_back({format_real(r.tau), format_real(r.h), format_real(r.err_l2), format_real(r.err_linf),
                     opt(r.order1), opt(r.order2)});
  write_csv(path, {"tau", "h", "err_l2", "err_linf", "order1", "order2"}, cells);
}

void write_norms_csv(const std::string& path, const std::vector<double>& t, const std::vector<double>& norm_sq) {
  if (t.size() != norm_sq.size()) throw std::invalid_argument("write_norms_csv: series lengths differ");
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < t.size(); ++i) cells.push_back({format_real(t[i]), format_real(norm_sq[i])});
  write_csv(path, {"t", "norm_sq"}, cells);
}

void write_snapshot_csv(const std::string& path, const GridSpec& g, const Field& u) {
  if (u.size() != g.interior_size()) throw std::invalid_argument("write_snapshot_csv: field does not match grid");
  std::vector<std::vector<std::string>> cells;
  for (long j = 1; j < g.M; ++j) {
    const Complex v = u.values(j - 1);
    cells.push_back({format_real(g.node(j)), format_real(v.real()), format_real(v.imag()), format_real(std::abs(v))});
  }
  write_csv(path, {"x", "re", "im", "abs"}, cells);
}

void write_diagnostics_csv(const std::string& path, const std::vector<StepDiagnostics>& d) {
  std::vector<std::vector<std::string>> cells;
  for (std::size_t n = 0; n < d.size(); ++n)
    cells.push_back({std::to_string(n), std::to_string(d[n].iterations), format_real(d[n].final_increment),
                     format_real(d[n].energy_identity_residual)});
  write_csv(path, {"n", "iterations", "increment", "identity_residual"}, cells);
}

std::string snapshot_filename(double t) { return "snapshot_t" + format_short(t) + ".csv"; }

}  // namespace fgle

#include "pathlab/sample.hpp"

#include <cstdio>

#include "pathlab/errors.hpp"

namespace pathlab {

std::vector<SampleRow> sample(const catalog::CatalogEntry& entry, double from, double to,
                              std::size_t points, bool with_derivative,
                              numdiff::StepPolicy policy) {
  if (points < 2) throw PreconditionError("sample needs at least 2 points");
  if (!(from <= to)) throw PreconditionError("sample needs from <= to");
  if (!entry.domain.contains(from) || !entry.domain.contains(to))
    throw DomainError("[" + format_double(from) + ", " + format_double(to) + "] is outside the domain " +
                      entry.domain.to_string() + " of " + entry.id);
  std::vector<SampleRow> rows;
  rows.reserve(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? to : from + (to - from) * static_cast<double>(i) / last;
    SampleRow row{x, entry(x), std::nullopt};
    if (with_derivative) row.f_prime = numdiff::slope(entry, x, policy);
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SampleRow>& rows, bool with_derivative) {
  out << (with_derivative ? "x,f,f_prime\n" : "x,f\n");
  for (const auto& row : rows) {
    out << format_double(row.x) << ',' << format_double(row.f);
    if (with_derivative) out << ',' << format_double(row.f_prime.value_or(0.0));
    out << '\n';
  }
}

void write_reparam_csv(std::ostream& out, const curves::ReparamTable& table) {
  out << "t,s,phi_prime,residual\n";
  for (const auto& row : table.rows) {
    out << format_double(row.t) << ',' << format_double(row.s) << ',' << format_double(row.phi_prime)
        << ',' << format_double(row.residual) << '\n';
  }
}

}  // namespace pathlab

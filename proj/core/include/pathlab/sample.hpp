#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pathlab/catalog.hpp"
#include "pathlab/curves.hpp"
#include "pathlab/numdiff.hpp"

namespace pathlab {

struct SampleRow {
  double x = 0.0;
  double f = 0.0;
  std::optional<double> f_prime;
};

/// `points` equally spaced rows on [from, to], both ends included exactly.
/// Throws DomainError if [from, to] leaves the entry's domain.
std::vector<SampleRow> sample(const catalog::CatalogEntry& entry, double from, double to,
                              std::size_t points, bool with_derivative,
                              numdiff::StepPolicy policy = {});

/// %.17g, enough digits to round-trip a double.
std::string format_double(double v);

/// Header x,f[,f_prime]; LF line endings, no quoting.
void write_csv(std::ostream& out, const std::vector<SampleRow>& rows, bool with_derivative);

/// Header t,s,phi_prime,residual.
void write_reparam_csv(std::ostream& out, const curves::ReparamTable& table);

}  // namespace pathlab

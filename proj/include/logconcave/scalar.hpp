#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logconcave {

/// Exact rational number. All polygon coordinates, areas and the closed-form
/// inequality quantities are carried in this type.
using Scalar = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-1.25" into an exact
/// rational. Throws Error(Parse) on anything else or on a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" form; the denominator is omitted when it is 1.
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

/// Exact value of a finite double.
Scalar from_double(double value);

int sign(const Scalar& value);

Scalar abs(const Scalar& value);

/// n / d in lowest terms.
Scalar ratio(long n, long d);

}  // namespace logconcave

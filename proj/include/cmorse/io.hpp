#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmorse/atlas.hpp"

namespace cmorse::io {

/// 17 significant digits, locale-independent ('.' decimal point always).
std::string format_double(double v);

/// Empty string for missing or non-finite values.
std::string format_optional(const std::optional<double>& v);

/// CSV dataset for a sweep. Header is exactly
/// m_i,a_i,beta3,alpha1,beta1,ppd,E_r,E_i,region,matter
std::string sweep_csv(const std::vector<atlas::SweepRow>& rows);

/// Write via a temporary file in the same directory, then rename.
/// Throws std::runtime_error on I/O failure.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace cmorse::io

#include "cmorse/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <system_error>

namespace cmorse::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return {};
  return format_double(*v);
}

std::string sweep_csv(const std::vector<atlas::SweepRow>& rows) {
  std::string out = "m_i,a_i,beta3,alpha1,beta1,ppd,E_r,E_i,region,matter\n";
  for (const auto& r : rows) {
    out += format_double(r.m_i);
    out += ',';
    out += format_double(r.a_i);
    out += ',';
    out += format_optional(r.beta3);
    out += ',';
    out += format_optional(r.alpha1);
    out += ',';
    out += format_optional(r.beta1);
    out += ',';
    out += format_optional(r.ppd);
    out += ',';
    out += format_optional(r.E_r);
    out += ',';
    out += format_optional(r.E_i);
    out += ',';
    out += atlas::to_string(r.region);
    out += ',';
    out += atlas::to_string(r.matter);
    out += '\n';
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
  const bool ok =
      std::fwrite(content.data(), 1, content.size(), f) == content.size();
  const bool closed = std::fclose(f) == 0;
  if (!ok || !closed) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed: " + path + ": " + ec.message());
  }
}

}  // namespace cmorse::io

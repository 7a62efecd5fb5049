#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s) noexcept;

/// Outcome of one identity check at one prime and parameter set. Scalar
/// sides are canonical representatives in [0, modulus); ring-element sides
/// are the bracketed coefficient list.
struct VerificationReport {
  std::string identity;
  std::uint64_t prime = 0;
  std::string params;
  std::uint64_t modulus = 0;
  std::string lhs;
  std::string rhs;
  Status status = Status::Fail;
  std::string note;
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return status == Status::Pass; }
};

VerificationReport compare(std::string identity, std::string params, const Residue& lhs,
                           const Residue& rhs);

VerificationReport skipped(std::string identity, std::uint64_t prime, std::string params,
                           std::string reason);

/// Runs `fn` (returning a report) and stamps the wall-clock time on it.
template <class Fn>
VerificationReport timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = fn();
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string to_json_line(const VerificationReport& r, bool include_timing = true);
std::string csv_header();
std::string to_csv_line(const VerificationReport& r, bool include_timing = true);

}  // namespace supercong

#include "supercong/report.hpp"

#include <json.hpp>
#include <sstream>

namespace supercong {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "fail";
}

VerificationReport compare(std::string identity, std::string params, const Residue& lhs,
                           const Residue& rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.prime = lhs.modulus().prime();
  r.modulus = lhs.modulus().value();
  r.lhs = std::to_string(lhs.value());
  r.rhs = std::to_string(rhs.value());
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  return r;
}

VerificationReport skipped(std::string identity, std::uint64_t prime, std::string params,
                           std::string reason) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.prime = prime;
  r.params = std::move(params);
  r.status = Status::Skip;
  r.note = std::move(reason);
  return r;
}

std::string to_json_line(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["prime"] = r.prime;
  j["params"] = r.params;
  j["modulus"] = r.modulus;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["status"] = std::string(to_string(r.status));
  j["note"] = r.note;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string csv_header() { return "identity,prime,params,modulus,lhs,rhs,status,note,elapsed_ms"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv_line(const VerificationReport& r, bool include_timing) {
  std::ostringstream os;
  os << csv_field(r.identity) << ',' << r.prime << ',' << csv_field(r.params) << ',' << r.modulus
     << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << to_string(r.status) << ','
     << csv_field(r.note) << ',';
  if (include_timing) os << r.elapsed_ms;
  return os.str();
}

}  // namespace supercong

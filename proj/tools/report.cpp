#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace pcw::cli {

Json to_json(const BigInt& v) { return v.get_str(); }

Json to_json(const InvariantList& inv) {
  Json a = Json::array();
  for (const auto& d : inv.divisors()) a.push_back(d.get_str());
  return a;
}

Json to_json(const BogomolovReport& r) {
  Json j;
  j["name"] = r.name;
  j["order"] = to_json(r.order);
  j["abelianization"] = to_json(r.abelianization);
  j["derived_order"] = to_json(r.derived_order);
  j["multiplier"] = to_json(r.multiplier);
  j["m0"] = {{"order", to_json(r.m0_order)},
             {"index", to_json(r.m0_index)},
             {"generators", std::to_string(r.m0_generators)}};
  j["bogomolov"] = to_json(r.bogomolov);
  j["exterior_square_order"] = to_json(r.exterior_square_order);
  j["curly_wedge_order"] = to_json(r.curly_wedge_order);
  j["method"] = to_string(r.method);
  return j;
}

namespace {

Json checks_json(const std::vector<NamedCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks)
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

}  // namespace

Json to_json(const FiveTermReport& r) {
  Json j;
  j["name"] = r.group;
  j["terms"] = {
      {"bogomolov_g", to_json(r.bogomolov_g)},
      {"bogomolov_quotient", to_json(r.bogomolov_q)},
      {"n_mod_kn_order", to_json(r.third_term_order)},
      {"abelianization_g", to_json(r.abelianization_g)},
      {"abelianization_quotient", to_json(r.abelianization_q)},
  };
  j["n_order"] = to_json(r.order_n);
  j["quotient_order"] = to_json(r.order_quotient);
  j["kn_order"] = to_json(r.kn_order);
  j["image_rho"] = to_json(r.image_rho);
  j["image_sigma"] = to_json(r.image_sigma);
  j["kernel_pi"] = to_json(r.kernel_pi);
  j["partial"] = r.partial;
  j["checks"] = checks_json(r.checks);
  j["passed"] = r.passed();
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["name"] = r.group;
  j["checks"] = checks_json(r.checks);
  j["passed"] = r.passed();
  return j;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace pcw::cli

#pragma once

#include <string>

#include "json.hpp"
#include "pcw/bogomolov.hpp"
#include "pcw/verify.hpp"

namespace pcw::cli {

using Json = nlohmann::ordered_json;

// Every integer goes out as a decimal string.
Json to_json(const BigInt& v);
Json to_json(const InvariantList& inv);

Json to_json(const BogomolovReport& r);
Json to_json(const FiveTermReport& r);
Json to_json(const VerifyReport& r);

std::string sha256_hex(const std::string& data);

}  // namespace pcw::cli

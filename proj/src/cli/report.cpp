#include "tgh/cli/report.hpp"

#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "tgh/errors.hpp"

namespace tgh::cli {

std::string canonical_dump(const nlohmann::json & value)
{
  return value.dump();
}

std::string sha256_hex(const std::string & bytes)
{
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw Error("InternalError", "SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

nlohmann::json Report::to_json() const
{
  nlohmann::json out;
  out["command"] = command;
  out["input_digest"] = sha256_hex(canonical_dump(input));
  out["result"] = result;
  nlohmann::json res = nlohmann::json::object();
  nlohmann::json nonfinite = nlohmann::json::array();
  for (const auto & [name, value] : residuals) {
    if (std::isfinite(value)) {
      res[name] = value;
    } else {
      nonfinite.push_back(name);
    }
  }
  if (!nonfinite.empty()) out["result"]["nonfinite_residuals"] = nonfinite;
  out["residuals"] = res;
  out["tolerances_used"] = tolerances.as_map();
  if (case_tag) out["case_tag"] = *case_tag;
  return out;
}

} // namespace tgh::cli

#include <openssl/evp.h>

#include <charconv>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "effint/cli.hpp"
#include "effint/poly_parser.hpp"

namespace effint::cli {

namespace {

using nlohmann::json;

std::string field_string(const json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw FieldError(key, std::nullopt, "missing required field");
    return {};
  }
  if (!doc[key].is_string()) throw FieldError(key, std::nullopt, "expected a string");
  return doc[key].get<std::string>();
}

void check_poly(const std::string& field, const std::string& text) {
  try {
    parse_poly(text, 2);
  } catch (const SyntaxError& e) {
    throw FieldError(field, e.offset(), e.what());
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    throw InputError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

FoliationFile parse_foliation_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("input must be a JSON object");

  FoliationFile file;
  if (doc.contains("name")) file.name = field_string(doc, "name", true);
  file.P = field_string(doc, "P", true);
  file.Q = field_string(doc, "Q", true);
  check_poly("P", file.P);
  check_poly("Q", file.Q);
  if (parse_poly(file.P).is_zero() && parse_poly(file.Q).is_zero())
    throw InputError("P and Q are both zero");
  if (doc.contains("candidates")) {
    if (!doc["candidates"].is_array())
      throw FieldError("candidates", std::nullopt, "expected an array of strings");
    for (std::size_t i = 0; i < doc["candidates"].size(); ++i) {
      const std::string field = "candidates[" + std::to_string(i) + "]";
      const auto& c = doc["candidates"][i];
      if (!c.is_string()) throw FieldError(field, std::nullopt, "expected a string");
      file.candidates.push_back(c.get<std::string>());
      check_poly(field, file.candidates.back());
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "P" && key != "Q" && key != "candidates")
      throw FieldError(key, std::nullopt, "unknown field");
  }
  return file;
}

std::pair<OrbifoldData, KodairaOneProfile> parse_orbifold_tokens(
    const std::vector<std::string>& tokens) {
  OrbifoldData data;
  KodairaOneProfile profile = KodairaOneProfile::Riccati;
  if (tokens.empty()) throw InputError("kmin needs orbifold tokens such as g=0 b=2,3,7");
  for (const auto& token : tokens) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "g") {
      data.genus = parse_int(value, "g");
    } else if (key == "b") {
      data.b_orders = parse_int_list(value, "b");
    } else if (key == "c") {
      data.c_count = parse_int(value, "c");
    } else if (key == "d") {
      data.d_mults = parse_int_list(value, "d");
    } else if (key == "e") {
      data.e_mults = parse_int_list(value, "e");
    } else if (key == "profile") {
      const auto p = parse_kodaira_profile(value);
      if (!p) throw InputError("unknown profile '" + std::string(value) + "'");
      profile = *p;
    } else {
      throw InputError("unknown key '" + key + "'");
    }
  }
  try {
    validate(data);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  return {data, profile};
}

std::pair<int, int> parse_m_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int m = parse_int(text, "--m");
    return {m, m};
  }
  const int lo = parse_int(text.substr(0, dots), "--m");
  const int hi = parse_int(text.substr(dots + 2), "--m");
  if (lo > hi) throw InputError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

}  // namespace effint::cli

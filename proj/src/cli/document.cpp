#include "entorder/cli/document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "entorder/errors.hpp"

namespace entorder::cli {

namespace {

using nlohmann::json;

CMat4 parse_matrix(const json& rows) {
  if (!rows.is_array() || rows.size() != 4) {
    throw ParseError("\"rho\" must be an array of 4 rows");
  }
  CMat4 m;
  for (int r = 0; r < 4; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError("each \"rho\" row must hold 4 entries");
    }
    for (int c = 0; c < 4; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError("each \"rho\" entry must be a [re, im] number pair");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

}  // namespace

DensityMatrix parse_state_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("state document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "format" && key != "rho" && key != "family" && key != "params") {
      throw ParseError("unknown state-document key \"" + key + "\"");
    }
  }
  if (!doc.contains("format") || !doc["format"].is_number_integer() ||
      doc["format"].get<int>() != 1) {
    throw ParseError("state document must declare \"format\": 1");
  }
  const bool has_rho = doc.contains("rho");
  const bool has_family = doc.contains("family");
  if (has_rho == has_family) {
    throw ParseError(
        "state document needs exactly one of \"rho\" or \"family\"");
  }
  if (has_rho) {
    if (doc.contains("params")) {
      throw ParseError("\"params\" is only valid with \"family\"");
    }
    return DensityMatrix(parse_matrix(doc["rho"]));
  }

  if (!doc["family"].is_string()) {
    throw ParseError("\"family\" must be a string");
  }
  FamilySpec spec{family_from_name(doc["family"].get<std::string>()), {}};
  if (doc.contains("params")) {
    const json& params = doc["params"];
    if (!params.is_object()) {
      throw ParseError("\"params\" must be an object of name: value pairs");
    }
    for (const auto& [name, value] : params.items()) {
      if (!value.is_number()) {
        throw ParseError("parameter \"" + name + "\" must be a number");
      }
      spec.params[name] = value.get<double>();
    }
  }
  return make_state(spec);
}

DensityMatrix load_state_file(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read state document: " + path);
    text << file.rdbuf();
  }
  return parse_state_document(text.str());
}

}  // namespace entorder::cli

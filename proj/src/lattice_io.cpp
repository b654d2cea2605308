// Copyright 2026 The latdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latdet/lattice_io.hpp"

#include <cctype>
#include <sstream>

namespace latdet {

namespace {

Integer parse_integer(std::string_view token) {
  std::string s(token);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::Parse, "empty integer");
  for (std::size_t p = i; p < s.size(); ++p)
    if (!std::isdigit(static_cast<unsigned char>(s[p]))) throw Error(ErrorCode::Parse, "bad integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer json_integer(const nlohmann::json& x) {
  if (x.is_string()) return parse_integer(x.get<std::string>());
  if (x.is_number_integer()) {
    if (x.is_number_unsigned()) return Integer(std::to_string(x.get<std::uint64_t>()), 10);
    return Integer(std::to_string(x.get<std::int64_t>()), 10);
  }
  throw Error(ErrorCode::Parse, "coordinates must be integers or decimal strings");
}

std::vector<IntVector> rows_from_json(const nlohmann::json& j) {
  const nlohmann::json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("basis")) throw Error(ErrorCode::Parse, "missing \"basis\"");
    rows = &j.at("basis");
  }
  if (!rows->is_array()) throw Error(ErrorCode::Parse, "\"basis\" must be an array of rows");
  std::vector<IntVector> out;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "each row must be an array");
    IntVector v;
    for (const auto& x : row) v.push_back(json_integer(x));
    out.push_back(std::move(v));
  }
  if (j.is_object()) {
    if (j.contains("n") && j.at("n").get<std::size_t>() != out.size())
      throw Error(ErrorCode::Parse, "\"n\" does not match the number of rows");
    if (j.contains("m"))
      for (const auto& v : out)
        if (v.size() != j.at("m").get<std::size_t>())
          throw Error(ErrorCode::Parse, "\"m\" does not match the row length");
  }
  return out;
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

}  // namespace

nlohmann::json lattice_to_json(const Basis& basis) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : basis.vectors()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", basis.size()}, {"m", basis.dim()}, {"basis", std::move(rows)}};
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string write_lattice(const Basis& basis, LatticeFormat format) {
  if (format == LatticeFormat::Json) return lattice_to_json(basis).dump() + "\n";
  std::ostringstream os;
  for (const auto& v : basis.vectors()) {
    for (std::size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << v[c].get_str();
    os << '\n';
  }
  return os.str();
}

std::vector<IntVector> parse_vectors(std::string_view text) {
  if (looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    try {
      return rows_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
  }
  std::vector<IntVector> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    IntVector v;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      v.push_back(parse_integer(tok));
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  if (out.empty()) throw Error(ErrorCode::EmptyInput, "no vectors found");
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    Integer den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty() || frac[0] == '-' || frac[0] == '+') throw Error(ErrorCode::Parse, "bad decimal '" + s + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer num = parse_integer(whole + frac);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (neg && num > 0) num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s));
}

Basis parse_lattice(std::string_view text) { return Basis(parse_vectors(text)); }

Basis lattice_from_json(const nlohmann::json& j) {
  try {
    return Basis(rows_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace latdet

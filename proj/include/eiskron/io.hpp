#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "eiskron/level.hpp"
#include "eiskron/qexp.hpp"

namespace eiskron::io {

using Json = nlohmann::ordered_json;

/// Reads a level-N function table: one "a b value" record per line with
/// 0 <= a, b < N and value an integer or num/den; '#' starts a comment;
/// pairs that are not listed are 0. Throws ParameterError with the line
/// number on malformed input.
level::LevelFunction<mpq_class> parse_phi(std::istream& in, int N);
level::LevelFunction<mpq_class> read_phi_file(const std::string& path, int N);

/// Writes every nonzero entry as "a b num/den" (lowest terms).
void write_phi(std::ostream& out, const level::LevelFunction<mpq_class>& phi);

/// "a,b;c,d" -> GL2ModN; throws ParameterError on bad syntax or determinant.
level::GL2ModN parse_gl2(const std::string& text, int N);

std::string to_string(const mpq_class& q);

/// Power-basis coefficients as exact base-10 strings.
Json to_json(const arith::CycRat& a);
Json to_json(const arith::PadicCyc& a);

template <class R>
Json series_to_json(const qexp::QExpansion<R>& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
  return arr;
}

/// CSV rendering of a command document: a "# key=value,..." line from
/// "meta", then one row per q-power ("coeffs": n,c0,...), per slot and
/// q-power ("slots": slot,n,c0,...), or per record ("rows"; string arrays
/// are spread over key0, key1, ... and nested records are embedded as JSON).
void write_csv(std::ostream& out, const Json& doc);

}  // namespace eiskron::io

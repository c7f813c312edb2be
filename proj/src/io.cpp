#include "eiskron/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eiskron::io {

namespace {

mpq_class parse_rational(const std::string& tok, int line_no) {
  mpq_class q;
  if (q.set_str(tok, 10) != 0 || tok.empty() || tok.find('/') == 0)
    throw ParameterError("phi file line " + std::to_string(line_no) + ": bad rational '" + tok +
                         "'");
  if (q.get_den() == 0)
    throw ParameterError("phi file line " + std::to_string(line_no) + ": zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

level::LevelFunction<mpq_class> parse_phi(std::istream& in, int N) {
  if (N < 1) throw ParameterError("level must be positive");
  level::LevelFunction<mpq_class> phi(N, {});
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    std::string value, extra;
    if (!(ls >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParameterError("phi file line " + std::to_string(line_no) + ": expected 'a b value'");
    }
    if (!(ls >> b >> value) || (ls >> extra))
      throw ParameterError("phi file line " + std::to_string(line_no) + ": expected 'a b value'");
    if (a < 0 || a >= N || b < 0 || b >= N)
      throw ParameterError("phi file line " + std::to_string(line_no) + ": index outside [0, N)");
    phi(a, b) = parse_rational(value, line_no);
  }
  return phi;
}

level::LevelFunction<mpq_class> read_phi_file(const std::string& path, int N) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read phi file '" + path + "'");
  return parse_phi(in, N);
}

void write_phi(std::ostream& out, const level::LevelFunction<mpq_class>& phi) {
  for (long long a = 0; a < phi.level(); ++a)
    for (long long b = 0; b < phi.level(); ++b)
      if (phi(a, b) != 0) out << a << ' ' << b << ' ' << to_string(phi(a, b)) << '\n';
}

level::GL2ModN parse_gl2(const std::string& text, int N) {
  long long e[4];
  char s1, s2, s3;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> e[0] >> s1 >> e[1] >> s2 >> e[2] >> s3 >> e[3]) || s1 != ',' || s2 != ';' ||
      s3 != ',' || (in >> rest))
    throw ParameterError("matrix must be given as \"a,b;c,d\", got '" + text + "'");
  return level::GL2ModN::make(N, e[0], e[1], e[2], e[3]);
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

Json to_json(const arith::CycRat& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const arith::PadicCyc& a) {
  Json arr = Json::array();
  for (auto c : a.coeffs()) arr.push_back(std::to_string(c));
  return arr;
}

namespace {

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_null()) return s;
  s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

bool is_string_array(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); });
}

void coeff_rows(std::ostream& out, const Json& coeffs, const std::string& prefix) {
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out << prefix << n;
    for (const auto& c : coeffs[n]) out << ',' << c.get<std::string>();
    out << '\n';
  }
}

std::string coeff_header(const Json& coeffs) {
  std::string h;
  const std::size_t width = coeffs.empty() ? 0 : coeffs[0].size();
  for (std::size_t i = 0; i < width; ++i) h += ",c" + std::to_string(i);
  return h;
}

}  // namespace

void write_csv(std::ostream& out, const Json& doc) {
  if (doc.contains("meta")) {
    out << '#';
    bool first = true;
    for (const auto& [key, v] : doc["meta"].items()) {
      out << (first ? " " : ",") << key << '=' << csv_field(v);
      first = false;
    }
    out << '\n';
  }
  if (doc.contains("coeffs")) {
    out << "n" << coeff_header(doc["coeffs"]) << '\n';
    coeff_rows(out, doc["coeffs"], "");
  } else if (doc.contains("slots")) {
    const Json& slots = doc["slots"];
    out << "slot,n" << (slots.empty() ? "" : coeff_header(slots[0])) << '\n';
    for (std::size_t s = 0; s < slots.size(); ++s) coeff_rows(out, slots[s], std::to_string(s) + ",");
  } else if (doc.contains("rows") && !doc["rows"].empty()) {
    const Json& rows = doc["rows"];
    std::vector<std::string> header;
    for (const auto& [key, v] : rows[0].items()) {
      if (is_string_array(v))
        for (std::size_t i = 0; i < v.size(); ++i) header.push_back(key + std::to_string(i));
      else
        header.push_back(key);
    }
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      bool first = true;
      for (const auto& [key, v] : row.items()) {
        if (is_string_array(v)) {
          for (const auto& x : v) {
            out << (first ? "" : ",") << csv_field(x);
            first = false;
          }
        } else {
          out << (first ? "" : ",") << csv_field(v);
          first = false;
        }
      }
      out << '\n';
    }
  }
}

}  // namespace eiskron::io

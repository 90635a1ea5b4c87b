// Copyright 2026 The qldi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qldi/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qldi/errors.hpp"
#include "qldi/primes.hpp"

namespace qldi {

using json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    auto line = text.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    pos = nl + 1;
  }
  return out;
}

Vector parse_int_list(std::string_view s, std::size_t line) {
  Vector out;
  for (auto tok : split_ws(s)) {
    auto v = to_int(tok);
    if (!v) fail(line, "'" + std::string(tok) + "' is not an integer");
    out.push_back(*v);
  }
  return out;
}

json matrix_json(const std::vector<Vector>& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

json columns_json(const ColumnRecord& rec) {
  json origin = json::array();
  for (auto o : rec.origin) origin.push_back(o + 1);
  return json{{"origin", origin}, {"fourier_power", rec.fourier_power}};
}

std::string op_to_string(const Operation& op) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RowAdd>) {
          return "rowadd " + std::to_string(o.dst + 1) + " " + std::to_string(o.src + 1) + " " +
                 std::to_string(o.scalar);
        } else if constexpr (std::is_same_v<T, RowSwap>) {
          return "rowswap " + std::to_string(o.a + 1) + " " + std::to_string(o.b + 1);
        } else if constexpr (std::is_same_v<T, RowScale>) {
          return "rowscale " + std::to_string(o.row + 1) + " " + std::to_string(o.scalar);
        } else if constexpr (std::is_same_v<T, RegisterSwap>) {
          return "regswap " + std::to_string(o.a + 1) + " " + std::to_string(o.b + 1);
        } else {
          return "hadamard " + std::to_string(o.reg + 1);
        }
      },
      op);
}

json script_json(const OpScript& s) {
  json out = json::array();
  for (const auto& op : s) out.push_back(op_to_string(op));
  return out;
}

json bound_or_marker(const std::optional<std::size_t>& v, std::size_t w_max) {
  if (v) return *v;
  return ">" + std::to_string(w_max);
}

json witness_json(const ErrorWitness& w) {
  return json{{"word", w.word.to_string()},
              {"vector", phi_encode(w.word)},
              {"weight", w.weight},
              {"syndrome_int", w.syndrome_int},
              {"syndrome_mod", w.syndrome_mod},
              {"classification", std::string(to_string(w.classification))},
              {"in_group", w.in_group}};
}

json distance_body(const DistanceReport& r) {
  json j;
  j["prime"] = r.prime;
  j["max_weight_searched"] = r.max_weight_searched;
  j["distance"] = bound_or_marker(r.distance, r.max_weight_searched);
  j["degenerate"] = r.degenerate;
  j["min_stabilizer_weight"] = bound_or_marker(r.min_stabilizer_weight, r.max_weight_searched);
  j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
  return j;
}

json with_schema(const char* kind, json body) {
  json out;
  out["schema"] = kSchemaVersion;
  out["kind"] = kind;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::optional<std::size_t> read_marker(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<std::size_t>();
  return std::nullopt;
}

}  // namespace

StabilizerCode parse_code(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("empty code file: missing header 'n=.. k=.. q=..'");

  CodeParameters params;
  bool has_n = false, has_k = false, has_q = false;
  const auto& header = lines.front();
  for (auto tok : split_ws(header.text)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) fail(header.number, "expected key=value in header, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq);
    const auto value = to_int(tok.substr(eq + 1));
    if (!value || *value < 0) fail(header.number, "bad value in '" + std::string(tok) + "'");
    if (key == "n") {
      params.n = static_cast<std::size_t>(*value);
      has_n = true;
    } else if (key == "k") {
      params.k = static_cast<std::size_t>(*value);
      has_k = true;
    } else if (key == "q") {
      params.q = *value;
      has_q = true;
    } else if (key == "d") {
      params.d = static_cast<std::size_t>(*value);
    } else {
      fail(header.number, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (!has_n || !has_k || !has_q) fail(header.number, "header must define n, k and q");
  if (params.n == 0) fail(header.number, "n must be at least 1");
  if (params.q < 2 || !is_prime(static_cast<std::uint64_t>(params.q))) {
    fail(header.number, "q=" + std::to_string(params.q) + " is not prime");
  }

  std::optional<CodeFormat> format;
  std::vector<Vector> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const CodeFormat this_format = line.starts_with("x:") ? CodeFormat::Symplectic : CodeFormat::Letters;
    if (format && *format != this_format) fail(number, "mixes letter and symplectic generator formats");
    format = this_format;

    if (this_format == CodeFormat::Letters) {
      if (params.q != 2) fail(number, "letter generators are only allowed for q=2");
      if (line.size() != params.n) {
        fail(number, "generator '" + std::string(line) + "' has length " + std::to_string(line.size()) +
                         ", expected n=" + std::to_string(params.n));
      }
      try {
        rows.push_back(phi_encode(PauliWord::from_letters(line)));
      } catch (const ValidationError& e) {
        fail(number, e.what());
      }
    } else {
      const auto semi = line.find(';');
      if (semi == std::string_view::npos) fail(number, "symplectic row needs 'x: ... ; z: ...'");
      const auto zpart = trim(line.substr(semi + 1));
      if (!zpart.starts_with("z:")) fail(number, "symplectic row needs 'z:' after ';'");
      Vector xs = parse_int_list(line.substr(2, semi - 2), number);
      Vector zs = parse_int_list(zpart.substr(2), number);
      if (xs.size() != params.n || zs.size() != params.n) {
        fail(number, "symplectic row has " + std::to_string(xs.size()) + "+" + std::to_string(zs.size()) +
                         " entries, expected " + std::to_string(params.n) + "+" + std::to_string(params.n));
      }
      xs.insert(xs.end(), zs.begin(), zs.end());
      rows.push_back(std::move(xs));
    }
  }
  return StabilizerCode::validate(Tableau(params.n, std::move(rows), Context::integers()), params);
}

std::string serialize_code(const StabilizerCode& code, CodeFormat format) {
  if (format == CodeFormat::Letters && code.q() != 2) {
    throw ParameterError("letter format needs q=2");
  }
  std::ostringstream os;
  os << "n=" << code.n() << " k=" << code.k() << " q=" << code.q();
  if (code.declared_distance()) os << " d=" << *code.declared_distance();
  os << '\n';
  const std::size_t n = code.n();
  for (std::size_t r = 0; r < code.tableau().num_rows(); ++r) {
    if (format == CodeFormat::Letters) {
      os << code.tableau().word(r).to_string() << '\n';
      continue;
    }
    const auto& row = code.tableau().row(r);
    os << "x:";
    for (std::size_t i = 0; i < n; ++i) os << ' ' << row[i];
    os << " ; z:";
    for (std::size_t i = 0; i < n; ++i) os << ' ' << row[n + i];
    os << '\n';
  }
  return os.str();
}

OpScript parse_script(std::string_view text) {
  OpScript out;
  for (const auto& [number, line] : content_lines(text)) {
    const auto tok = split_ws(line);
    const auto name = tok.front();
    std::vector<long long> args;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      auto v = to_int(tok[i]);
      if (!v) fail(number, "'" + std::string(tok[i]) + "' is not an integer");
      args.push_back(*v);
    }
    auto expect = [&](std::size_t count) {
      if (args.size() != count) {
        fail(number, std::string(name) + " takes " + std::to_string(count) + " arguments");
      }
    };
    auto index = [&](std::size_t i) -> std::size_t {
      if (args[i] < 1) fail(number, "indices are 1-based");
      return static_cast<std::size_t>(args[i] - 1);
    };
    if (name == "rowswap") {
      expect(2);
      out.push_back(RowSwap{index(0), index(1)});
    } else if (name == "rowadd") {
      expect(3);
      out.push_back(RowAdd{index(0), index(1), args[2]});
    } else if (name == "rowscale") {
      expect(2);
      out.push_back(RowScale{index(0), args[1]});
    } else if (name == "regswap") {
      expect(2);
      out.push_back(RegisterSwap{index(0), index(1)});
    } else if (name == "hadamard") {
      expect(1);
      out.push_back(HadamardSwap{index(0)});
    } else {
      fail(number, "unknown operation '" + std::string(name) + "'");
    }
  }
  return out;
}

std::string serialize_script(const OpScript& script) {
  std::string out;
  for (const auto& op : script) out += op_to_string(op) + "\n";
  return out;
}

std::string code_to_json(const StabilizerCode& code) {
  json gens = json::array();
  for (std::size_t r = 0; r < code.tableau().num_rows(); ++r) gens.push_back(code.tableau().word(r).to_string());
  json body;
  body["n"] = code.n();
  body["k"] = code.k();
  body["q"] = code.q();
  body["d"] = code.declared_distance() ? json(*code.declared_distance()) : json(nullptr);
  body["generators"] = gens;
  body["tableau"] = matrix_json(code.tableau().rows());
  return dump(with_schema("code", body));
}

std::string tableau_to_json(const Tableau& t) {
  json body;
  body["context"] = t.context().to_string();
  body["n"] = t.num_registers();
  body["tableau"] = matrix_json(t.rows());
  return dump(with_schema("tableau", body));
}

std::string canonical_to_json(const CanonicalForm& c) {
  json body;
  body["q"] = c.tableau.context().modulus();
  body["n"] = c.tableau.num_registers();
  body["tableau"] = matrix_json(c.tableau.rows());
  body["script"] = script_json(c.script);
  body["columns"] = columns_json(c.columns);
  return dump(with_schema("canonical", body));
}

std::string ldi_to_json(const LdiForm& ldi) {
  json body;
  body["variant"] = std::string(to_string(ldi.variant));
  body["source_q"] = ldi.source_q;
  body["n"] = ldi.tableau.num_registers();
  body["k"] = ldi.k;
  body["B"] = ldi.B;
  body["repaired"] = ldi.repaired;
  body["canonicalized"] = ldi.canonical.has_value();
  body["L"] = matrix_json(ldi.L);
  body["tableau"] = matrix_json(ldi.tableau.rows());
  body["columns"] = ldi.canonical ? columns_json(ldi.canonical->columns) : json(nullptr);
  return dump(with_schema("ldi", body));
}

std::string bounds_to_json(const BoundsReport& r) {
  json body;
  body["reading"] = std::string(to_string(r.reading));
  body["B"] = r.B.get_str();
  body["q"] = r.q;
  body["n"] = r.n;
  body["k"] = r.k;
  body["d"] = r.d;
  body["degenerate"] = r.degenerate;
  body["p_star_original"] = r.p_star_original.get_str();
  body["p_star_alternative"] = r.p_star_alternative.get_str();
  body["p_star_effective"] = r.p_star_effective.get_str();
  if (r.p_d_star) {
    body["p_d_star"] = r.p_d_star->value.get_str();
    body["p_d_star_terms"] = json{{"doubled_original", r.p_d_star->doubled_original.get_str()},
                                  {"doubled_alternative", r.p_d_star->doubled_alternative.get_str()}};
  } else {
    body["p_d_star"] = nullptr;
    body["p_d_star_terms"] = nullptr;
  }
  body["hamming_applicable"] = r.hamming_applicable;
  if (r.p_double_star) {
    body["p_double_star"] = json{{"value", r.p_double_star->text},
                                 {"significant_digits", r.p_double_star->significant_digits},
                                 {"rounding", "down"}};
  } else {
    body["p_double_star"] = nullptr;
  }
  body["p_double_star_note"] = r.p_double_star_note;
  body["first_safe_prime"] = r.first_safe_prime.get_str();
  return dump(with_schema("bounds", body));
}

std::string distance_to_json(const DistanceReport& report) {
  return dump(with_schema("distance", distance_body(report)));
}

std::string scan_to_json(const std::vector<DistanceReport>& reports, std::optional<std::size_t> declared_d) {
  json list = json::array();
  for (const auto& r : reports) {
    json entry = distance_body(r);
    if (declared_d) entry["preserves_distance"] = preserves_distance(r, *declared_d);
    list.push_back(std::move(entry));
  }
  json body;
  body["declared_d"] = declared_d ? json(*declared_d) : json(nullptr);
  body["reports"] = std::move(list);
  return dump(with_schema("scan", body));
}

DistanceReport distance_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<int>() != kSchemaVersion || j.at("kind") != "distance") {
      throw ValidationError("not a distance report");
    }
    DistanceReport r;
    r.prime = j.at("prime").get<Int>();
    r.max_weight_searched = j.at("max_weight_searched").get<std::size_t>();
    r.distance = read_marker(j.at("distance"));
    r.degenerate = j.at("degenerate").get<bool>();
    r.min_stabilizer_weight = read_marker(j.at("min_stabilizer_weight"));
    if (const auto& w = j.at("witness"); !w.is_null()) {
      const auto vec = w.at("vector").get<Vector>();
      const auto cls = w.at("classification").get<std::string>();
      if (cls != "unavoidable" && cls != "artifact") throw ValidationError("bad classification " + cls);
      r.witness = ErrorWitness{phi_decode(vec, r.prime),
                               w.at("weight").get<std::size_t>(),
                               w.at("syndrome_int").get<Vector>(),
                               w.at("syndrome_mod").get<Vector>(),
                               cls == "unavoidable" ? ErrorClass::Unavoidable : ErrorClass::Artifact,
                               w.at("in_group").get<bool>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed distance report: ") + e.what());
  }
}

std::string format_tableau(const Tableau& t) {
  const std::size_t n = t.num_registers();
  std::size_t width = 1;
  for (const auto& row : t.rows()) {
    for (Int v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < 2 * n; ++c) {
      if (c == n) os << " |";
      if (c) os << ' ';
      os << std::setw(static_cast<int>(width)) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qldi

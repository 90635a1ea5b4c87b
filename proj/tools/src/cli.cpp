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


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "qldi/bounds.hpp"
#include "qldi/distance.hpp"
#include "qldi/errors.hpp"
#include "qldi/io.hpp"
#include "qldi/ldi.hpp"
#include "qldi/primes.hpp"

namespace qldi::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string file;
  std::string script_in;
  std::string script_out;
  std::string variant = "full";
  bool always_canonicalize = false;
  bool strict_reading = false;
  Int prime = 0;
  std::optional<std::size_t> w_max;
  bool classify = false;
  bool oracle = false;
  std::string primes;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

StabilizerCode load(const Options& o) { return parse_code(slurp(o.file)); }

LdiForm load_ldi(const StabilizerCode& code, const Options& o) {
  LVariant v = parse_variant(o.variant);
  return ldi_transform(code, v, LdiOptions{!o.always_canonicalize});
}

std::size_t require_d(const StabilizerCode& code, std::string_view command) {
  if (!code.declared_distance()) {
    throw ValidationError(std::string(command) + " needs a declared distance d in the header");
  }
  return *code.declared_distance();
}

Int parse_int(std::string_view s, std::string_view what) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::vector<Int> parse_prime_range(std::string_view s) {
  Int lo = 0, hi = 0;
  if (auto dots = s.find(".."); dots != std::string_view::npos) {
    lo = parse_int(s.substr(0, dots), "prime range");
    hi = parse_int(s.substr(dots + 2), "prime range");
  } else {
    lo = hi = parse_int(s, "prime range");
  }
  if (lo < 2 || hi < lo) throw UsageError("prime range must be LO..HI with 2 <= LO <= HI");
  return primes_between(lo, hi);
}

std::string dist_text(const std::optional<std::size_t>& d, std::size_t w_max) {
  return d ? std::to_string(*d) : ">" + std::to_string(w_max);
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int cmd_validate(const Options& o, std::ostream& out) {
  StabilizerCode code = load(o);
  if (o.json) {
    out << code_to_json(code) << "\n";
    return kExitOk;
  }
  out << "valid [[" << code.n() << "," << code.k();
  if (code.declared_distance()) out << "," << *code.declared_distance();
  out << "]]_" << code.q() << " code, " << code.tableau().num_rows() << " generators\n";
  return kExitOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  StabilizerCode code = load(o);
  CanonicalForm c = canonical_form(code);
  if (!o.script_out.empty()) {
    std::ofstream f(o.script_out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.script_out);
    f << serialize_script(c.script);
  }
  if (o.json) {
    out << canonical_to_json(c) << "\n";
  } else {
    out << format_tableau(c.tableau) << "# script\n" << serialize_script(c.script);
  }
  return kExitOk;
}

int cmd_replay(const Options& o, std::ostream& out) {
  StabilizerCode code = load(o);
  OpScript script = parse_script(slurp(o.script_in));
  Tableau t = apply_script(code.tableau(), script);
  out << (o.json ? tableau_to_json(t) + "\n" : format_tableau(t));
  return kExitOk;
}

int cmd_ldi(const Options& o, std::ostream& out) {
  LdiForm f = load_ldi(load(o), o);
  if (o.json) {
    out << ldi_to_json(f) << "\n";
    return kExitOk;
  }
  out << "variant " << to_string(f.variant) << ", B = " << f.B
      << (f.canonical ? "" : ", supplied generators kept") << (f.repaired ? ", repaired" : "")
      << "\n"
      << format_tableau(f.tableau);
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  StabilizerCode code = load(o);
  const std::size_t d = require_d(code, "bounds");
  LdiForm f = load_ldi(code, o);
  // Degeneracy is a property of the group at its own local dimension.
  const bool degenerate = distance_search(f, code.q(), std::min(d, code.n())).degenerate;
  BoundsReport r = evaluate_bounds(BigInt(f.B), code.params(), degenerate,
                                   o.strict_reading ? Reading::Strict : Reading::Decided);
  if (o.json) {
    out << bounds_to_json(r) << "\n";
    return kExitOk;
  }
  out << "B = " << r.B.get_str() << ", q = " << r.q << ", [[" << r.n << "," << r.k << "," << r.d
      << "]], " << (r.degenerate ? "degenerate" : "non-degenerate") << ", reading "
      << to_string(r.reading) << "\n";
  out << "p_star_original     " << r.p_star_original.get_str() << "\n";
  out << "p_star_alternative  " << r.p_star_alternative.get_str() << "\n";
  out << "p_star_effective    " << r.p_star_effective.get_str() << "\n";
  if (r.p_d_star) {
    out << "p_d_star            " << r.p_d_star->value.get_str() << "  (terms "
        << r.p_d_star->doubled_original.get_str() << ", "
        << r.p_d_star->doubled_alternative.get_str() << ")\n";
  }
  if (r.p_double_star) {
    out << "p_double_star       " << r.p_double_star->text << "\n";
  } else {
    out << "p_double_star       n/a (" << r.p_double_star_note << ")\n";
  }
  out << "first_safe_prime    " << r.first_safe_prime.get_str() << "\n";
  return kExitOk;
}

bool same_outcome(const DistanceReport& a, const DistanceReport& b) {
  return a.distance == b.distance && a.degenerate == b.degenerate &&
         a.min_stabilizer_weight == b.min_stabilizer_weight;
}

int cmd_distance(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.prime < 2 || !is_prime(static_cast<std::uint64_t>(o.prime))) {
    throw UsageError("-p must be a prime, got " + std::to_string(o.prime));
  }
  StabilizerCode code = load(o);
  LdiForm f = load_ldi(code, o);
  const std::size_t w = o.w_max.value_or(code.declared_distance().value_or(code.n()));
  DistanceReport r = distance_search(f, o.prime, w);
  std::optional<DistanceReport> oracle;
  if (o.oracle) oracle = enumeration_oracle(f, o.prime, w);
  const bool agree = !oracle || same_outcome(r, *oracle);

  if (o.json) {
    json j = json::parse(distance_to_json(r));
    if (oracle) {
      j["oracle"] = json::parse(distance_to_json(*oracle));
      j["oracle_agrees"] = agree;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "p = " << r.prime << ", distance " << dist_text(r.distance, w) << ", "
        << (r.degenerate ? "degenerate" : "non-degenerate") << ", min stabilizer weight "
        << dist_text(r.min_stabilizer_weight, w) << "\n";
    if (r.witness) {
      out << "witness " << r.witness->word.to_string();
      if (o.classify) {
        out << "  " << to_string(r.witness->classification) << ", integer syndrome ["
            << join(r.witness->syndrome_int) << "]";
      }
      out << "\n";
    }
    if (oracle) out << "oracle " << (agree ? "agrees" : "DISAGREES") << "\n";
  }
  if (!agree) {
    err << "rank search and enumeration oracle disagree\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  StabilizerCode code = load(o);
  const std::size_t d = require_d(code, "scan");
  LdiForm f = load_ldi(code, o);
  const std::vector<Int> primes = parse_prime_range(o.primes);
  const std::size_t w = o.w_max.value_or(std::min(d, code.n()));
  std::vector<DistanceReport> reports = scan_primes(f, primes, w);
  if (o.json) {
    out << scan_to_json(reports, d) << "\n";
    return kExitOk;
  }
  for (const auto& r : reports) {
    out << "p = " << r.prime << "  distance " << dist_text(r.distance, w) << "  "
        << (r.degenerate ? "degenerate" : "non-degenerate") << "  "
        << (preserves_distance(r, d) ? "preserves d" : "loses d") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-dimension-invariant stabilizer code toolkit", "qldi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");

  auto variant_opt = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "Correction variant")
        ->check(CLI::IsMember({"full", "plus", "minus"}));
    sub->add_flag("--always-canonicalize", o.always_canonicalize,
                  "Canonicalize even when the supplied generators already commute over the integers");
  };

  auto* validate = app.add_subcommand("validate", "Check a code file");
  validate->add_option("FILE", o.file)->required();

  auto* canon = app.add_subcommand("canon", "Canonical form and the operations that reach it");
  canon->add_option("FILE", o.file)->required();
  canon->add_option("--script", o.script_out, "Write the operation script here");

  auto* replay = app.add_subcommand("replay", "Apply an operation script to a code");
  replay->add_option("FILE", o.file)->required();
  replay->add_option("SCRIPT", o.script_in)->required();

  auto* ldi = app.add_subcommand("ldi", "Local-dimension-invariant form");
  ldi->add_option("FILE", o.file)->required();
  variant_opt(ldi);

  auto* bounds = app.add_subcommand("bounds", "Prime cutoffs for the LDI form");
  bounds->add_option("FILE", o.file)->required();
  bounds->add_flag("--strict-reading", o.strict_reading, "Use the alternative formula reading");
  variant_opt(bounds);

  auto* distance = app.add_subcommand("distance", "Distance of the LDI form at one prime");
  distance->add_option("FILE", o.file)->required();
  distance->add_option("-p,--prime", o.prime, "Prime local dimension")->required();
  distance->add_option("-w,--max-weight", o.w_max, "Largest error weight searched");
  distance->add_flag("--classify", o.classify, "Show witness syndrome and class");
  distance->add_flag("--oracle", o.oracle, "Cross-check with exhaustive enumeration");
  variant_opt(distance);

  auto* scan = app.add_subcommand("scan", "Distance of the LDI form over a prime range");
  scan->add_option("FILE", o.file)->required();
  scan->add_option("--primes", o.primes, "LO..HI")->required();
  scan->add_option("-w,--max-weight", o.w_max, "Largest error weight searched");
  variant_opt(scan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (canon->parsed()) return cmd_canon(o, out);
    if (replay->parsed()) return cmd_replay(o, out);
    if (ldi->parsed()) return cmd_ldi(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (distance->parsed()) return cmd_distance(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace qldi::cli

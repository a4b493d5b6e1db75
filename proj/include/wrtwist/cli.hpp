#pragma once

// Command front-end shared by tools/wrtwist and the tests. run() never throws
// for bad input; it maps failures to exit codes and returns the text that
// would be printed.

#include <cctype>
#include <iomanip>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wrtwist/enumeration.hpp"
#include "wrtwist/errors.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/ideal.hpp"
#include "wrtwist/oracle.hpp"
#include "wrtwist/similarity.hpp"
#include "wrtwist/twist.hpp"

namespace wrtwist::cli {

using json = nlohmann::ordered_json;

enum class Command { Canonical, Twists, Classes, Verify, OracleCheck };
enum class Format { Json, Csv, Table };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadField = 2,
  kZeroIdeal = 3,
  kInvariant = 4,
  kOracleMismatch = 5,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CanonicalInput {
  Integer t, y, g;
};

struct RunConfig {
  std::int64_t d = 0;
  std::optional<std::vector<QuadElem>> generators;
  std::optional<CanonicalInput> canonical;
  Format format = Format::Json;
  Command command = Command::Twists;
  std::optional<long long> oracle_bound;
  std::optional<std::string> report;  // verify: JSON text previously produced by `twists`
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::string error;
};

// ------------------------------------------------------------ parsing

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

inline Integer parse_integer(std::string_view text) {
  const std::string s(trim(text));
  const bool digits = !s.empty() && s.find_first_not_of("0123456789", (s[0] == '-' || s[0] == '+') ? 1 : 0) ==
                                        std::string::npos && s.size() > ((s[0] == '-' || s[0] == '+') ? 1u : 0u);
  if (!digits) throw UsageError("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

/// "p,q;p,q;..." in (1, delta) coordinates. An empty string means no generators.
inline std::vector<QuadElem> parse_generators(std::string_view text) {
  std::vector<QuadElem> gens;
  if (trim(text).empty()) return gens;
  for (auto item : split(text, ';')) {
    if (item.empty()) continue;
    const auto parts = split(item, ',');
    if (parts.size() != 2) throw UsageError("generator must be 'p,q', got '" + std::string(item) + "'");
    gens.push_back({parse_integer(parts[0]), parse_integer(parts[1])});
  }
  return gens;
}

/// "t,y,g".
inline CanonicalInput parse_canonical(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("canonical basis must be 't,y,g', got '" + std::string(text) + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
}

inline Command parse_command(std::string_view s) {
  if (s == "canonical") return Command::Canonical;
  if (s == "twists") return Command::Twists;
  if (s == "classes") return Command::Classes;
  if (s == "verify") return Command::Verify;
  if (s == "oracle-check") return Command::OracleCheck;
  throw UsageError("unknown command '" + std::string(s) + "'");
}

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw UsageError("unknown format '" + std::string(s) + "'");
}

// ------------------------------------------------------------ report

/// Integers go out as JSON numbers while they fit in 64 bits, as strings after.
inline json int_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvariantError("expected an integer, got " + j.dump());
}

struct TupleRow {
  GoodTuple tuple;
  Rat f1, f2, beta, cos;
  double alpha;
  std::array<Vec2, 2> basis;
};

inline TupleRow make_row(const IdealTriple& ideal, const GoodTuple& t) {
  const BasisPair b = realize(ideal, t);
  return {t, f1_coeff(b), f2_coeff(b), twist_beta(b), cos_theta(b), twist_alpha(b), twist_embed(b)};
}

struct Report {
  IdealTriple ideal;
  std::vector<TupleRow> rows;
  std::vector<TwistClass> classes;
};

inline Report build_report(const IdealTriple& ideal) {
  Report r{ideal, {}, {}};
  const auto tuples = all_good_tuples(ideal);
  for (const auto& t : tuples) r.rows.push_back(make_row(ideal, t));
  r.classes = classify(ideal, tuples);
  return r;
}

inline std::size_t index_of(const Report& r, const GoodTuple& t) {
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    if (r.rows[i].tuple == t) return i;
  throw InvariantError("class member missing from tuple list");
}

inline json field_json(const FieldDesc& k) { return {{"d", k.d()}, {"case", to_string(k.kind())}}; }

inline json ideal_json(const IdealTriple& i) {
  return {{"t", int_json(i.t)}, {"y", int_json(i.y)}, {"g", int_json(i.g)}};
}

inline json tuple_json(const GoodTuple& t) {
  return json::array({int_json(t.a), int_json(t.c), int_json(t.b), int_json(t.d)});
}

inline json classes_json(const Report& r, bool with_representatives) {
  json out = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (const auto& t : c.representatives) members.push_back(index_of(r, t));
    json entry = {{"cos_abs", to_string(c.cos_abs)}, {"label", to_string(c.label)}, {"members", members}};
    if (with_representatives) {
      json reps = json::array();
      for (const auto& t : c.representatives) reps.push_back(tuple_json(t));
      entry["representatives"] = reps;
    }
    out.push_back(entry);
  }
  return out;
}

inline json report_json(const Report& r) {
  json tuples = json::array();
  for (const auto& row : r.rows) {
    tuples.push_back({
        {"a", int_json(row.tuple.a)},
        {"c", int_json(row.tuple.c)},
        {"b", int_json(row.tuple.b)},
        {"d", int_json(row.tuple.d)},
        {"f1", to_string(row.f1)},
        {"f2", to_string(row.f2)},
        {"beta", to_string(row.beta)},
        {"cos", to_string(row.cos)},
        {"alpha_float", row.alpha},
        {"basis_float", {{row.basis[0][0], row.basis[0][1]}, {row.basis[1][0], row.basis[1][1]}}},
    });
  }
  return {{"field", field_json(r.ideal.field)},
          {"ideal", ideal_json(r.ideal)},
          {"tuples", tuples},
          {"classes", classes_json(r, false)}};
}

namespace detail {

inline std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + '\n';
}

// Left-aligned text table with a header rule.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i + 1 == rows[r].size()) {
        os << rows[r][i];
      } else {
        os << std::left << std::setw(static_cast<int>(width[i]) + 2) << rows[r][i];
      }
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
  return os.str();
}

inline std::string heading(const IdealTriple& i) {
  return "Q(sqrt(-" + std::to_string(i.field.d()) + ")) [" + to_string(i.field.kind()) + "], ideal (t,y,g) = (" +
         i.t.str() + "," + i.y.str() + "," + i.g.str() + ")\n";
}

inline std::string members_text(const Report& r, const TwistClass& c, const char* sep) {
  std::string s;
  for (const auto& t : c.representatives) {
    if (!s.empty()) s += sep;
    s += std::to_string(index_of(r, t));
  }
  return s;
}

}  // namespace detail

inline std::string render_canonical(const IdealTriple& i, Format f) {
  switch (f) {
    case Format::Json: return ideal_json(i).dump() + '\n';
    case Format::Csv: return "t,y,g\n" + detail::csv_line({i.t.str(), i.y.str(), i.g.str()});
    case Format::Table: return detail::heading(i);
  }
  return {};
}

inline std::string render_twists(const Report& r, Format f) {
  if (f == Format::Json) return report_json(r).dump() + '\n';
  std::vector<std::vector<std::string>> rows;
  if (f == Format::Csv) {
    std::string out = detail::csv_line({"index", "a", "c", "b", "d", "f1", "f2", "beta", "cos", "alpha_float", "u_x",
                                        "u_y", "v_x", "v_y"});
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      out += detail::csv_line({std::to_string(i), row.tuple.a.str(), row.tuple.c.str(), row.tuple.b.str(),
                               row.tuple.d.str(), to_string(row.f1), to_string(row.f2), to_string(row.beta),
                               to_string(row.cos), detail::fmt_double(row.alpha),
                               detail::fmt_double(row.basis[0][0]), detail::fmt_double(row.basis[0][1]),
                               detail::fmt_double(row.basis[1][0]), detail::fmt_double(row.basis[1][1])});
    }
    return out;
  }
  rows.push_back({"#", "(a,c,b,d)", "f1", "f2", "beta", "cos", "alpha"});
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    rows.push_back({std::to_string(i), to_string(row.tuple), to_string(row.f1), to_string(row.f2),
                    to_string(row.beta), to_string(row.cos), detail::fmt_double(row.alpha)});
  }
  return detail::heading(r.ideal) + detail::table(rows);
}

inline std::string render_classes(const Report& r, Format f) {
  if (f == Format::Json) {
    json j = {{"field", field_json(r.ideal.field)}, {"ideal", ideal_json(r.ideal)}, {"classes", classes_json(r, true)}};
    return j.dump() + '\n';
  }
  if (f == Format::Csv) {
    std::string out = detail::csv_line({"cos_abs", "label", "members", "representatives"});
    for (const auto& c : r.classes) {
      std::string reps;
      for (const auto& t : c.representatives) reps += (reps.empty() ? "" : " ") + to_string(t);
      out += detail::csv_line({to_string(c.cos_abs), to_string(c.label), detail::members_text(r, c, ";"),
                               "\"" + reps + "\""});
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"|cos|", "label", "tuples"}};
  for (const auto& c : r.classes) {
    std::string reps;
    for (const auto& t : c.representatives) reps += (reps.empty() ? "" : " ") + to_string(t);
    rows.push_back({to_string(c.cos_abs), to_string(c.label), reps});
  }
  return detail::heading(r.ideal) + detail::table(rows);
}

// ------------------------------------------------------------ verify

struct VerifyFailure {
  std::size_t index;
  std::string reason;
};

/// Re-checks every tuple of a `twists` JSON report for the given ideal:
/// unimodularity, goodness, the exact fields, and numeric well-roundedness.
inline std::vector<VerifyFailure> verify_report(const IdealTriple& ideal, const json& report) {
  std::vector<VerifyFailure> fails;
  if (report.at("field").at("d").get<std::int64_t>() != ideal.field.d() ||
      int_from_json(report.at("ideal").at("t")) != ideal.t || int_from_json(report.at("ideal").at("y")) != ideal.y ||
      int_from_json(report.at("ideal").at("g")) != ideal.g) {
    throw UsageError("report is for a different field or ideal");
  }
  const auto& tuples = report.at("tuples");
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& j = tuples[i];
    auto fail = [&](std::string why) { fails.push_back({i, std::move(why)}); };
    const GoodTuple t{int_from_json(j.at("a")), int_from_json(j.at("c")), int_from_json(j.at("b")),
                      int_from_json(j.at("d"))};
    const Integer det = t.a * t.d - t.b * t.c;
    if (det != 1 && det != -1) {
      fail("ad-bc = " + det.str());
      continue;
    }
    const BasisPair b = realize(ideal, t);
    if (!is_good(b)) {
      fail("not a good basis");
      continue;
    }
    const TupleRow row = make_row(ideal, t);
    if (j.at("f1") != to_string(row.f1)) fail("f1 differs");
    if (j.at("f2") != to_string(row.f2)) fail("f2 differs");
    if (j.at("beta") != to_string(row.beta)) fail("beta differs");
    if (j.at("cos") != to_string(row.cos)) fail("cos differs");
    if (abs(row.cos) > Rat(1, 2)) fail("|cos| above 1/2");
    const double n0 = norm(row.basis[0]);
    const double n1 = norm(row.basis[1]);
    if (std::abs(n0 - n1) > 1e-9 * std::max(n0, n1)) fail("twisted norms differ");
    if (!is_well_rounded_numeric(row.basis[0], row.basis[1], 1e-9)) fail("twisted lattice not well-rounded");
    const double c = dot(row.basis[0], row.basis[1]) / (n0 * n1);
    if (std::abs(c - to_double(row.cos)) > 1e-9) fail("floating cosine disagrees with exact cos");
  }
  return fails;
}

// ------------------------------------------------------------ run

inline IdealTriple resolve_ideal(const RunConfig& cfg, const FieldDesc& k) {
  if (cfg.generators.has_value() == cfg.canonical.has_value())
    throw UsageError("give exactly one of --gens or --canonical");
  if (cfg.generators) return canonical_basis(std::span<const QuadElem>(*cfg.generators), k);
  return make_ideal(k, cfg.canonical->t, cfg.canonical->y, cfg.canonical->g);
}

inline RunResult run_unchecked(const RunConfig& cfg) {
  const FieldDesc k(cfg.d);
  const IdealTriple ideal = resolve_ideal(cfg, k);
  switch (cfg.command) {
    case Command::Canonical:
      return {kOk, render_canonical(ideal, cfg.format), {}};
    case Command::Twists:
      return {kOk, render_twists(build_report(ideal), cfg.format), {}};
    case Command::Classes:
      return {kOk, render_classes(build_report(ideal), cfg.format), {}};
    case Command::Verify: {
      json report;
      if (cfg.report) {
        try {
          report = json::parse(*cfg.report);
        } catch (const json::exception& e) {
          throw UsageError(std::string("cannot parse report: ") + e.what());
        }
      } else {
        report = report_json(build_report(ideal));
      }
      std::vector<VerifyFailure> fails;
      try {
        fails = verify_report(ideal, report);
      } catch (const json::exception& e) {
        throw UsageError(std::string("malformed report: ") + e.what());
      }
      json failures = json::array();
      for (const auto& f : fails) failures.push_back({{"index", f.index}, {"reason", f.reason}});
      json out = {{"checked", report.at("tuples").size()}, {"ok", fails.empty()}, {"failures", failures}};
      std::string text;
      if (cfg.format == Format::Json) {
        text = out.dump() + '\n';
      } else {
        text = "checked " + std::to_string(report.at("tuples").size()) + " tuples: " +
               (fails.empty() ? "ok" : std::to_string(fails.size()) + " failures") + '\n';
        for (const auto& f : fails) text += "  #" + std::to_string(f.index) + ": " + f.reason + '\n';
      }
      return {fails.empty() ? kOk : kInvariant, text, {}};
    }
    case Command::OracleCheck: {
      const long long bound = cfg.oracle_bound.value_or(safe_bound(ideal));
      std::set<GoodTuple> alg, ora;
      for (const auto& t : all_good_tuples(ideal)) alg.insert(normalize_orientation(t));
      for (const auto& t : brute_force_good_tuples(ideal, bound)) ora.insert(normalize_orientation(t));
      json missing = json::array(), extra = json::array();
      for (const auto& t : ora)
        if (!alg.count(t)) missing.push_back(tuple_json(t));
      for (const auto& t : alg)
        if (!ora.count(t)) extra.push_back(tuple_json(t));
      const bool match = missing.empty() && extra.empty();
      json out = {{"bound", bound},    {"algorithm", alg.size()}, {"oracle", ora.size()},
                  {"match", match},    {"missing", missing},      {"extra", extra}};
      std::string text;
      if (cfg.format == Format::Json) {
        text = out.dump() + '\n';
      } else {
        text = "bound " + std::to_string(bound) + ": algorithm " + std::to_string(alg.size()) + ", oracle " +
               std::to_string(ora.size()) + " (up to orientation) -> " + (match ? "match" : "MISMATCH") + '\n';
      }
      return {match ? kOk : kOracleMismatch, text, {}};
    }
  }
  throw UsageError("unknown command");
}

inline RunResult run(const RunConfig& cfg) {
  try {
    return run_unchecked(cfg);
  } catch (const FieldError& e) {
    return {kBadField, {}, e.what()};
  } catch (const ZeroIdealError& e) {
    return {kZeroIdeal, {}, e.what()};
  } catch (const UsageError& e) {
    return {kUsage, {}, e.what()};
  } catch (const InsufficientBound& e) {
    return {kUsage, {}, e.what()};
  } catch (const Error& e) {
    return {kInvariant, {}, e.what()};
  }
}

}  // namespace wrtwist::cli

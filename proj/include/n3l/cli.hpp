#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. run() is the whole program; tools/n3l.cpp
 * only forwards argv to it.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 timeout.
 */

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "n3l/cache.hpp"
#include "n3l/checker.hpp"
#include "n3l/constructions.hpp"
#include "n3l/solver.hpp"

namespace n3l::cli {

using nlohmann::json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kTimeout = 3 };

inline constexpr const char* kSolveSchema = "n3l.solve/1";
inline constexpr const char* kProfileSchema = "n3l.profile/1";

// --- JSON records ----------------------------------------------------------

inline json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (auto p : pts) a.push_back({p.x, p.y});
  return a;
}

inline std::vector<Point> points_from_json(const json& a) {
  std::vector<Point> pts;
  for (const auto& e : a) pts.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return pts;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

/// Serializable view of one solve. Numbers only, so it round-trips exactly.
struct SolveRecord {
  Kind kind = Kind::torus;
  int m = 0;
  int n = 0;
  int T = 0;
  std::optional<std::uint64_t> count_max;
  std::optional<std::uint64_t> count_classes;
  std::vector<Point> witness;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  double elapsed_s = 0;
  int threads = 1;

  static SolveRecord from(const SolveResult& r) {
    const auto& g = r.witness.geometry();
    return {g.kind(),         g.m(),           g.n(),           r.T,
            r.count_max,      r.count_classes, r.witness.points(), r.stats.nodes,
            r.stats.pruned,   r.stats.elapsed.count(),          r.stats.threads};
  }

  friend bool operator==(const SolveRecord&, const SolveRecord&) = default;
};

inline json to_json(const SolveRecord& r) {
  return {{"schema", kSolveSchema},
          {"status", "ok"},
          {"kind", to_string(r.kind)},
          {"m", r.m},
          {"n", r.n},
          {"T", r.T},
          {"count_max", optional_json(r.count_max)},
          {"count_classes", optional_json(r.count_classes)},
          {"witness", points_json(r.witness)},
          {"stats", {{"nodes", r.nodes}, {"pruned", r.pruned}, {"elapsed_s", r.elapsed_s}, {"threads", r.threads}}}};
}

inline SolveRecord solve_record_from_json(const json& j) {
  SolveRecord r;
  r.kind = parse_kind(j.at("kind").get<std::string>());
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.T = j.at("T").get<int>();
  r.count_max = optional_from<std::uint64_t>(j, "count_max");
  r.count_classes = optional_from<std::uint64_t>(j, "count_classes");
  r.witness = points_from_json(j.at("witness"));
  const auto& s = j.at("stats");
  r.nodes = s.at("nodes").get<std::uint64_t>();
  r.pruned = s.at("pruned").get<std::uint64_t>();
  r.elapsed_s = s.at("elapsed_s").get<double>();
  r.threads = s.at("threads").get<int>();
  return r;
}

struct ProfileRecord {
  Kind kind = Kind::torus;
  int m = 0;
  int n = 0;
  std::vector<std::uint64_t> counts;
  int T = 0;
  std::uint64_t solutions_at_max = 0;
  bool naive = false;

  friend bool operator==(const ProfileRecord&, const ProfileRecord&) = default;
};

inline json to_json(const ProfileRecord& r) {
  return {{"schema", kProfileSchema}, {"kind", to_string(r.kind)}, {"m", r.m},      {"n", r.n},
          {"counts", r.counts},       {"T", r.T}, {"solutions_at_max", r.solutions_at_max}, {"naive", r.naive}};
}

inline ProfileRecord profile_record_from_json(const json& j) {
  return {parse_kind(j.at("kind").get<std::string>()),
          j.at("m").get<int>(),
          j.at("n").get<int>(),
          j.at("counts").get<std::vector<std::uint64_t>>(),
          j.at("T").get<int>(),
          j.at("solutions_at_max").get<std::uint64_t>(),
          j.at("naive").get<bool>()};
}

// --- argument helpers ------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& s, const std::string& what) {
  const auto t = trim(s);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw InvalidInput(what + ": '" + s + "' is not an integer");
  }
  if (used != t.size()) throw InvalidInput(what + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace detail

/// Parses "x,y;x,y;..." with optional whitespace around every token.
inline Placement parse_points(const BoardGeometry& g, const std::string& text) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  int item = 0;
  while (pos <= text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    const auto tok = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++item;
    if (tok.empty()) {
      if (end == text.size()) break;  // trailing separator
      throw InvalidInput("point " + std::to_string(item) + " is empty");
    }
    const auto comma = tok.find(',');
    if (comma == std::string::npos)
      throw InvalidInput("point " + std::to_string(item) + " ('" + tok + "') must be written x,y");
    const std::string where = "point " + std::to_string(item) + " ('" + tok + "')";
    const int x = detail::parse_int(tok.substr(0, comma), where + " x");
    const int y = detail::parse_int(tok.substr(comma + 1), where + " y");
    if (x < 0 || x >= g.m())
      throw InvalidInput(where + ": x=" + std::to_string(x) + " outside [0," + std::to_string(g.m()) + ")");
    if (y < 0 || y >= g.n())
      throw InvalidInput(where + ": y=" + std::to_string(y) + " outside [0," + std::to_string(g.n()) + ")");
    pts.push_back({x, y});
  }
  return {g, std::move(pts)};
}

/// "A..B" or a single "A".
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = detail::parse_int(s, "range");
    return {v, v};
  }
  int a = detail::parse_int(s.substr(0, dots), "range start");
  int b = detail::parse_int(s.substr(dots + 2), "range end");
  if (a < 1 || b < a) throw InvalidInput("range '" + s + "' must satisfy 1 <= A <= B");
  return {a, b};
}

inline std::string format_point(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

inline std::string format_points(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + format_point(pts[i]);
  return s;
}

// --- table -----------------------------------------------------------------

struct TableCell {
  int m = 0;
  int n = 0;
  std::optional<int> T;
  int lower = 0;
  int upper = 0;

  [[nodiscard]] std::string text() const {
    if (T) return std::to_string(*T);
    return "≥" + std::to_string(lower) + "/≤" + std::to_string(upper);
  }
};

/// T for every torus (m, n) in the ranges. Each unordered pair is solved
/// once; (m, n) with m > n takes the value of (n, m).
inline std::vector<std::vector<TableCell>> compute_table(std::pair<int, int> rows, std::pair<int, int> cols,
                                                         std::optional<double> per_entry_limit,
                                                         ResultCache* cache, int threads) {
  std::map<std::pair<int, int>, TableCell> solved;
  auto cell_for = [&](int m, int n) -> TableCell {
    const int a = std::min(m, n), b = std::max(m, n);
    if (auto it = solved.find({a, b}); it != solved.end()) return it->second;
    TableCell c{a, b, std::nullopt, 0, 0};
    const auto key = cache_key(Kind::torus, a, b);
    if (cache)
      if (auto e = cache->get(key)) c.T = e->T;
    if (!c.T) {
      SolveOptions opts;
      opts.threads = threads;
      if (per_entry_limit) opts.time_limit = std::chrono::duration<double>(*per_entry_limit);
      try {
        auto r = solve_max(build_line_system(BoardGeometry::torus(a, b)), opts);
        c.T = r.T;
        if (cache) cache->put(key, CacheEntry{r.T, std::nullopt, std::nullopt, kCacheVersion, 0});
      } catch (const TimeoutError& e) {
        c.lower = e.lower();
        c.upper = e.upper();
      }
    }
    solved[{a, b}] = c;
    return c;
  };
  std::vector<std::vector<TableCell>> out;
  for (int m = rows.first; m <= rows.second; ++m) {
    auto& row = out.emplace_back();
    for (int n = cols.first; n <= cols.second; ++n) {
      auto c = cell_for(m, n);
      c.m = m;
      c.n = n;
      row.push_back(c);
    }
  }
  return out;
}

inline void print_table(std::ostream& out, const std::vector<std::vector<TableCell>>& t,
                        std::pair<int, int> cols, const std::string& format) {
  if (format == "json") {
    json cells = json::array();
    for (const auto& row : t)
      for (const auto& c : row) {
        json j{{"m", c.m}, {"n", c.n}};
        if (c.T) {
          j["T"] = *c.T;
        } else {
          j["lower"] = c.lower;
          j["upper"] = c.upper;
        }
        cells.push_back(j);
      }
    out << json{{"schema", "n3l.table/1"}, {"kind", "torus"}, {"cells", cells}}.dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "m\\n";
    for (int n = cols.first; n <= cols.second; ++n) out << "," << n;
    out << "\n";
    for (const auto& row : t) {
      out << row.front().m;
      for (const auto& c : row) out << "," << c.text();
      out << "\n";
    }
    return;
  }
  // ascii
  std::size_t w = 3;
  for (const auto& row : t)
    for (const auto& c : row) w = std::max(w, c.text().size() + 1);
  out << std::setw(4) << "m\\n" << " |";
  for (int n = cols.first; n <= cols.second; ++n) out << std::setw(static_cast<int>(w)) << n;
  out << "\n" << std::string(6 + w * static_cast<std::size_t>(cols.second - cols.first + 1), '-') << "\n";
  for (const auto& row : t) {
    out << std::setw(4) << row.front().m << " |";
    for (const auto& c : row) {
      // setw counts bytes; the bound glyphs are 3 bytes each.
      auto s = c.text();
      auto visible = c.T ? s.size() : s.size() - 4;
      out << std::string(w > visible ? w - visible : 0, ' ') << s;
    }
    out << "\n";
  }
}

// --- run -------------------------------------------------------------------

/// Executes one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact no-three-in-line computations on discrete tori and lattices", "n3l"};
  app.require_subcommand(1);

  auto add_geometry = [](CLI::App* sub, std::string& geometry) {
    sub->add_option("--geometry", geometry, "torus or lattice")
        ->check(CLI::IsMember({"torus", "lattice"}));
  };

  int m = 0, n = 0;
  std::string geometry = "torus";
  bool as_json = false;

  auto* lines_cmd = app.add_subcommand("lines", "List the lines of a board");
  int min_size = 3;
  lines_cmd->add_option("m", m)->required();
  lines_cmd->add_option("n", n)->required();
  add_geometry(lines_cmd, geometry);
  lines_cmd->add_option("--min-size", min_size, "Minimum number of points per line");
  lines_cmd->add_flag("--json", as_json);

  auto* check_cmd = app.add_subcommand("check", "Check a placement for three points in a line");
  std::string points_text;
  check_cmd->add_option("m", m)->required();
  check_cmd->add_option("n", n)->required();
  check_cmd->add_option("--points", points_text, "Points as \"x,y;x,y;...\"")->required();
  add_geometry(check_cmd, geometry);
  check_cmd->add_flag("--json", as_json);

  auto* construct_cmd = app.add_subcommand("construct", "Build an explicit placement");
  std::string family;
  int p = 0, q = 0;
  bool verify = false;
  construct_cmd->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"parabola", "prime-square", "conic", "prime-pq"}));
  construct_cmd->add_option("-p", p)->required();
  construct_cmd->add_option("-q", q);
  construct_cmd->add_flag("--verify", verify, "Re-check the placement and report the result");
  construct_cmd->add_flag("--json", as_json);

  auto* solve_cmd = app.add_subcommand("solve", "Compute T exactly");
  bool count_all = false;
  int threads = 1;
  std::optional<double> time_limit;
  solve_cmd->add_option("m", m)->required();
  solve_cmd->add_option("n", n)->required();
  add_geometry(solve_cmd, geometry);
  solve_cmd->add_flag("--count-all", count_all, "Also count maximum placements");
  solve_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-limit", time_limit, "Seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--json", as_json);

  auto* profile_cmd = app.add_subcommand("profile", "Count valid placements of every size");
  bool naive = false;
  std::optional<int> guard;
  profile_cmd->add_option("m", m)->required();
  profile_cmd->add_option("n", n)->required();
  add_geometry(profile_cmd, geometry);
  profile_cmd->add_flag("--naive", naive, "Use the exhaustive subset oracle");
  profile_cmd->add_option("--max-points", guard, "Override the board-size guard");
  profile_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  profile_cmd->add_flag("--json", as_json);

  auto* table_cmd = app.add_subcommand("table", "Table of T over a range of tori");
  std::string rows_text, cols_text, table_format = "ascii", cache_path;
  std::optional<double> per_entry;
  table_cmd->add_option("--rows", rows_text, "A..B")->required();
  table_cmd->add_option("--cols", cols_text, "C..D")->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"ascii", "csv", "json"}));
  table_cmd->add_option("--cache", cache_path, "JSON cache file");
  table_cmd->add_option("--time-limit-per-entry", per_entry, "Seconds")->check(CLI::PositiveNumber);
  table_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* emit_cmd = app.add_subcommand("emit-ideal", "Print the line ideal for a computer algebra system");
  std::string ideal_format = "macaulay2";
  emit_cmd->add_option("m", m)->required();
  emit_cmd->add_option("n", n)->required();
  add_geometry(emit_cmd, geometry);
  emit_cmd->add_option("--format", ideal_format)->check(CLI::IsMember({"macaulay2", "singular", "cocoa", "json"}));

  std::vector<std::string> argv_store{"n3l"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*lines_cmd) {
      BoardGeometry g(parse_kind(geometry), m, n);
      auto lines = enumerate_lines(g, min_size);
      if (as_json) {
        json arr = json::array();
        for (const auto& l : lines)
          arr.push_back({{"direction", {l.direction.a, l.direction.b}}, {"size", l.size()}, {"points", points_json(l.points)}});
        out << json{{"kind", to_string(g.kind())}, {"m", m}, {"n", n}, {"min_size", min_size}, {"lines", arr}}.dump() << "\n";
      } else {
        out << lines.size() << " lines on the " << m << "x" << n << " " << to_string(g.kind())
            << " with at least " << min_size << " points\n";
        for (const auto& l : lines)
          out << "direction (" << l.direction.a << "," << l.direction.b << ") size " << l.size() << ": "
              << format_points(l.points) << "\n";
      }
      return kOk;
    }

    if (*check_cmd) {
      BoardGeometry g(parse_kind(geometry), m, n);
      auto pl = parse_points(g, points_text);
      auto sys = build_line_system(g);
      auto res = check_placement(sys, pl);
      auto bad = count_collinear_triples(sys, pl);
      if (as_json) {
        json j{{"ok", res.ok}, {"points", pl.size()}, {"collinear_triples", bad}};
        if (res.witness)
          j["witness"] = {{"triple", points_json({res.witness->triple.begin(), res.witness->triple.end()})},
                          {"line", points_json(res.witness->line.points)},
                          {"direction", {res.witness->line.direction.a, res.witness->line.direction.b}}};
        out << j.dump() << "\n";
      } else if (res.ok) {
        out << "ok: " << pl.size() << " points, no three in a line\n";
      } else {
        const auto& w = *res.witness;
        out << "FAIL: " << format_points({w.triple.begin(), w.triple.end()}) << " lie on the line "
            << format_points(w.line.points) << " (direction (" << w.line.direction.a << "," << w.line.direction.b
            << ")); " << bad << " collinear triples in total\n";
      }
      return res.ok ? kOk : kVerifyFailed;
    }

    if (*construct_cmd) {
      std::optional<Placement> pl;
      try {
        if (family == "parabola") pl = parabola(p);
        else if (family == "prime-square") pl = prime_square(p);
        else if (family == "conic") pl = conic(p);
        else {
          if (q == 0) throw InvalidInput("prime-pq needs -q");
          pl = prime_pq(p, q);
        }
      } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerifyFailed;
      }
      const auto& g = pl->geometry();
      bool ok = true;
      if (verify) ok = check_placement(build_line_system(g), *pl).ok;
      if (as_json) {
        json j{{"family", family}, {"m", g.m()}, {"n", g.n()}, {"size", pl->size()}, {"points", points_json(pl->points())}};
        if (verify) j["verified"] = ok;
        out << j.dump() << "\n";
      } else {
        out << family << " on the " << g.m() << "x" << g.n() << " torus, " << pl->size()
            << " points: " << format_points(pl->points()) << "\n";
        if (verify) out << (ok ? "verified: no three in a line\n" : "FAIL: three points in a line\n");
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (*solve_cmd) {
      BoardGeometry g(parse_kind(geometry), m, n);
      SolveOptions opts;
      opts.count_all = count_all;
      opts.threads = threads;
      if (time_limit) opts.time_limit = std::chrono::duration<double>(*time_limit);
      try {
        auto rec = SolveRecord::from(solve_max(build_line_system(g), opts));
        if (as_json) {
          out << to_json(rec).dump() << "\n";
        } else {
          out << "T(" << to_string(g.kind()) << " " << m << "x" << n << ") = " << rec.T << "\n";
          if (rec.count_max) out << "maximum placements: " << *rec.count_max << "\n";
          if (rec.count_classes) out << "up to translation: " << *rec.count_classes << "\n";
          out << "witness: " << format_points(rec.witness) << "\n";
          out << "nodes: " << rec.nodes << ", pruned: " << rec.pruned << ", " << rec.elapsed_s << " s\n";
        }
        return kOk;
      } catch (const TimeoutError& e) {
        if (as_json) {
          json j{{"schema", kSolveSchema}, {"status", "timeout"}, {"kind", to_string(g.kind())}, {"m", m},
                 {"n", n}, {"lower", e.lower()}, {"upper", e.upper()}};
          j["best"] = e.best() ? points_json(e.best()->points()) : json(nullptr);
          out << j.dump() << "\n";
        } else {
          out << "timeout: " << e.lower() << " <= T <= " << e.upper() << "\n";
          if (e.best()) out << "best: " << format_points(e.best()->points()) << "\n";
        }
        return kTimeout;
      }
    }

    if (*profile_cmd) {
      BoardGeometry g(parse_kind(geometry), m, n);
      auto sys = build_line_system(g);
      auto prof = naive ? naive_profile(sys) : profile(sys, guard, threads);
      ProfileRecord rec{g.kind(), m, n, prof.counts, prof.T, prof.solutions_at_max, naive};
      if (as_json) {
        out << to_json(rec).dump() << "\n";
      } else {
        out << "placements by size on the " << m << "x" << n << " " << to_string(g.kind()) << "\n";
        for (std::size_t d = 0; d < rec.counts.size(); ++d) out << d << " " << rec.counts[d] << "\n";
        out << "T = " << rec.T << ", placements of size T: " << rec.solutions_at_max << "\n";
      }
      return kOk;
    }

    if (*table_cmd) {
      const auto rows = parse_range(rows_text);
      const auto cols = parse_range(cols_text);
      std::optional<ResultCache> cache;
      if (!cache_path.empty())
        cache.emplace(cache_path, [&err](const std::string& msg) { err << "warning: " << msg << "\n"; });
      auto t = compute_table(rows, cols, per_entry, cache ? &*cache : nullptr, threads);
      print_table(out, t, cols, table_format);
      return kOk;
    }

    if (*emit_cmd) {
      BoardGeometry g(parse_kind(geometry), m, n);
      out << emit_ideal(build_line_system(g), parse_ideal_format(ideal_format));
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Refused& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedGeometry& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace n3l::cli

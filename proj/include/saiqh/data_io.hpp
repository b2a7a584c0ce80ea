#ifndef SAIQH_DATA_IO_HPP
#define SAIQH_DATA_IO_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "saiqh/dates.hpp"
#include "saiqh/errors.hpp"
#include "saiqh/stability.hpp"
#include "saiqh/trajectory.hpp"
#include "saiqh/types.hpp"

#ifndef SAIQH_DEFAULT_SCENARIO_PATH
#define SAIQH_DEFAULT_SCENARIO_PATH "data/portugal_2020.cfg"
#endif

namespace saiqh {

// ---------------------------------------------------------------------------
// Number formatting

/// 17 significant digits, enough for an exact double round trip.
inline std::string format_double(double value) {
  std::array<char, 40> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

inline std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// ---------------------------------------------------------------------------
// Scenario files
//
// One `key = value` per line; `#` starts a comment. Numeric values are
// arithmetic expressions over decimal literals with + - * / and parentheses,
// e.g. `mu = 111793 / (365 * 10286300)`. `t0_date` is YYYY-MM-DD and
// `scheme` is nsfd or rk4.

struct ConfigEntry {
  std::string value;
  std::size_t line = 0;  // 0 for command-line overrides
  std::string source;
};

using ConfigMap = std::map<std::string, ConfigEntry>;

inline const std::vector<std::string>& scenario_keys() {
  static const std::vector<std::string> keys = {
      "Lambda", "mu",    "beta", "lA",    "lH",    "phi",     "nu",    "delta1",
      "delta2", "eta",   "omega", "alpha1", "alpha2", "p",     "q",     "f1",
      "f2",     "f3",    "kappa", "m",     "S0",    "A0",      "I0",    "Q0",
      "H0",     "Hbar0", "D0",   "h",     "n_steps", "t0_date", "scheme"};
  return keys;
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Recursive-descent evaluator for the scenario value grammar.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  std::optional<double> evaluate() {
    const auto value = sum();
    skip_space();
    if (!value || pos_ != text_.size()) return std::nullopt;
    return value;
  }

 private:
  std::optional<double> sum() {
    auto lhs = product();
    while (lhs) {
      skip_space();
      if (accept('+')) {
        const auto rhs = product();
        if (!rhs) return std::nullopt;
        *lhs += *rhs;
      } else if (accept('-')) {
        const auto rhs = product();
        if (!rhs) return std::nullopt;
        *lhs -= *rhs;
      } else {
        break;
      }
    }
    return lhs;
  }

  std::optional<double> product() {
    auto lhs = unary();
    while (lhs) {
      skip_space();
      if (accept('*')) {
        const auto rhs = unary();
        if (!rhs) return std::nullopt;
        *lhs *= *rhs;
      } else if (accept('/')) {
        const auto rhs = unary();
        if (!rhs) return std::nullopt;
        *lhs /= *rhs;
      } else {
        break;
      }
    }
    return lhs;
  }

  std::optional<double> unary() {
    skip_space();
    if (accept('-')) {
      auto v = unary();
      if (v) *v = -*v;
      return v;
    }
    if (accept('+')) return unary();
    if (accept('(')) {
      auto v = sum();
      skip_space();
      if (!accept(')')) return std::nullopt;
      return v;
    }
    return number();
  }

  std::optional<double> number() {
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_known_key(const std::string& key) {
  const auto& keys = scenario_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

inline std::string where(const ConfigEntry& entry, const std::string& key) {
  if (entry.line == 0) return "override '" + key + "'";
  return entry.source + ":" + std::to_string(entry.line) + ": key '" + key + "'";
}

}  // namespace detail

inline std::optional<double> evaluate_expression(std::string_view text) {
  return detail::ExpressionParser(text).evaluate();
}

inline ConfigMap parse_config(std::istream& in, const std::string& source) {
  ConfigMap map;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string text = detail::trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": expected 'key = value'",
                        line_no);
    }
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
    if (!detail::is_known_key(key)) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": unknown key '" + key + "'",
                        line_no, key);
    }
    if (value.empty()) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": key '" + key +
                            "' has no value",
                        line_no, key);
    }
    if (map.count(key)) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'",
                        line_no, key);
    }
    map[key] = {value, line_no, source};
  }
  return map;
}

inline ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open scenario file '" + path + "'");
  return parse_config(in, path);
}

/// Applies `key=value`, replacing any existing entry.
inline void apply_override(ConfigMap& map, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw parse_error("override '" + std::string(assignment) + "' is not key=value", 0);
  }
  const std::string key = detail::trim(assignment.substr(0, eq));
  const std::string value = detail::trim(assignment.substr(eq + 1));
  if (!detail::is_known_key(key)) throw parse_error("unknown key '" + key + "' in override", 0, key);
  if (value.empty()) throw parse_error("override '" + key + "' has no value", 0, key);
  map[key] = {value, 0, "override"};
}

/// Entries of `overlay` replace those of `base`.
inline ConfigMap merge(ConfigMap base, const ConfigMap& overlay) {
  for (const auto& [key, entry] : overlay) base[key] = entry;
  return base;
}

struct Scenario {
  Parameters params;
  State init;
  double h = 1.0;
  std::size_t n_steps = 1;
  Date t0 = default_start_date();
  Scheme scheme = Scheme::nsfd;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline void validate(const Scenario& scenario) {
  validate(scenario.params);
  validate(scenario.init);
  if (!(std::isfinite(scenario.h) && scenario.h > 0.0)) {
    throw validation_error("h must be > 0 (got " + std::to_string(scenario.h) + ")");
  }
  if (scenario.n_steps < 1) throw validation_error("n_steps must be >= 1");
  if (!(scenario.init.total() > 0.0)) throw validation_error("initial population must be > 0");
}

inline Scenario scenario_from_config(const ConfigMap& map) {
  auto entry = [&](const std::string& key) -> const ConfigEntry& {
    const auto it = map.find(key);
    if (it == map.end()) throw parse_error("missing key '" + key + "'", 0, key);
    return it->second;
  };
  auto number = [&](const std::string& key) {
    const ConfigEntry& e = entry(key);
    const auto value = evaluate_expression(e.value);
    if (!value || !std::isfinite(*value)) {
      throw parse_error(detail::where(e, key) + ": cannot evaluate '" + e.value + "'", e.line, key);
    }
    return *value;
  };
  // Validation messages from the typed checks name the field; prefix the location.
  auto checked = [&](const std::string& key, auto&& check) {
    try {
      check();
    } catch (const validation_error& err) {
      const ConfigEntry& e = entry(key);
      throw validation_error(detail::where(e, key) + ": " + err.what());
    }
  };

  Scenario s;
  Parameters& p = s.params;
  p.Lambda = number("Lambda");
  p.mu = number("mu");
  p.beta = number("beta");
  p.lA = number("lA");
  p.lH = number("lH");
  p.phi = number("phi");
  p.nu = number("nu");
  p.delta1 = number("delta1");
  p.delta2 = number("delta2");
  p.eta = number("eta");
  p.omega = number("omega");
  p.alpha1 = number("alpha1");
  p.alpha2 = number("alpha2");
  p.p = number("p");
  p.q = number("q");
  p.f1 = number("f1");
  p.f2 = number("f2");
  p.f3 = number("f3");
  p.kappa = number("kappa");
  p.m = number("m");
  s.init = {number("S0"), number("A0"), number("I0"), number("Q0"),
            number("H0"), number("Hbar0"), number("D0")};
  s.h = number("h");
  checked("h", [&] {
    if (!(s.h > 0.0)) throw validation_error("h must be > 0 (got " + format_double(s.h) + ")");
  });
  const double steps = number("n_steps");
  checked("n_steps", [&] {
    if (!(steps >= 1.0) || steps != std::floor(steps) || steps > 1e12) {
      throw validation_error("n_steps must be an integer >= 1 (got " + format_double(steps) + ")");
    }
  });
  s.n_steps = static_cast<std::size_t>(steps);
  const ConfigEntry& date = entry("t0_date");
  const auto t0 = parse_iso_date(date.value);
  if (!t0) {
    throw parse_error(detail::where(date, "t0_date") + ": expected YYYY-MM-DD", date.line,
                      "t0_date");
  }
  s.t0 = *t0;
  checked("scheme", [&] { s.scheme = parse_scheme(entry("scheme").value); });
  validate(s);
  return s;
}

/// Path of the checked-in scenario that supplies every default value.
/// The SAIQH_DEFAULT_SCENARIO environment variable overrides the built-in location.
inline std::string default_scenario_path() {
  if (const char* env = std::getenv("SAIQH_DEFAULT_SCENARIO"); env && *env) return env;
  return SAIQH_DEFAULT_SCENARIO_PATH;
}

/// Loads `path` on top of the defaults file, then applies `key=value` overrides.
inline Scenario load_scenario(const std::string& path,
                              const std::vector<std::string>& overrides = {},
                              const std::string& defaults_path = default_scenario_path()) {
  ConfigMap map = merge(parse_config_file(defaults_path), parse_config_file(path));
  for (const auto& o : overrides) apply_override(map, o);
  return scenario_from_config(map);
}

inline void write_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write scenario file '" + path + "'");
  const Parameters& p = s.params;
  const std::vector<std::pair<const char*, double>> values = {
      {"Lambda", p.Lambda}, {"mu", p.mu},         {"beta", p.beta},     {"lA", p.lA},
      {"lH", p.lH},         {"phi", p.phi},       {"nu", p.nu},         {"delta1", p.delta1},
      {"delta2", p.delta2}, {"eta", p.eta},       {"omega", p.omega},   {"alpha1", p.alpha1},
      {"alpha2", p.alpha2}, {"p", p.p},           {"q", p.q},           {"f1", p.f1},
      {"f2", p.f2},         {"f3", p.f3},         {"kappa", p.kappa},   {"m", p.m},
      {"S0", s.init.S},     {"A0", s.init.A},     {"I0", s.init.I},     {"Q0", s.init.Q},
      {"H0", s.init.H},     {"Hbar0", s.init.Hbar}, {"D0", s.init.D},   {"h", s.h}};
  for (const auto& [key, value] : values) out << key << " = " << format_double(value) << '\n';
  out << "n_steps = " << s.n_steps << '\n';
  out << "t0_date = " << format_iso_date(s.t0) << '\n';
  out << "scheme = " << to_string(s.scheme) << '\n';
  if (!out) throw io_error("failed writing scenario file '" + path + "'");
}

// ---------------------------------------------------------------------------
// Trajectory CSV
//
//   # scheme=nsfd h=1 t0_date=2020-03-02
//   step,t_days,S,A,I,Q,H,Hbar,D,N,lambda
//   0,0,...

inline constexpr std::string_view kTrajectoryHeader = "step,t_days,S,A,I,Q,H,Hbar,D,N,lambda";

inline void write_trajectory(const Trajectory& traj, std::ostream& out) {
  out << "# scheme=" << to_string(traj.scheme) << " h=" << format_double(traj.h)
      << " t0_date=" << format_iso_date(traj.t0) << '\n';
  out << kTrajectoryHeader << '\n';
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    const State& s = traj.states[n];
    const StepDiagnostics& d = traj.diagnostics.at(n);
    out << n << ',' << format_double(traj.time(n));
    for (double v : {s.S, s.A, s.I, s.Q, s.H, s.Hbar, s.D, d.population, d.lambda}) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
}

inline void write_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write trajectory file '" + path + "'");
  write_trajectory(traj, out);
  out.flush();
  if (!out) throw io_error("failed writing trajectory file '" + path + "'");
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Trajectory read_trajectory(std::istream& in, const std::string& source = "<stream>") {
  Trajectory traj;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool h_known = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = detail::strip_cr(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream meta{std::string(line.substr(1))};
      std::string token;
      while (meta >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "scheme") {
          traj.scheme = parse_scheme(value);
        } else if (key == "h") {
          const auto h = parse_double(value);
          if (!h || !(*h > 0.0)) throw parse_error(source + ": bad h in metadata", line_no, "h");
          traj.h = *h;
          h_known = true;
        } else if (key == "t0_date") {
          const auto d = parse_iso_date(value);
          if (!d) throw parse_error(source + ": bad t0_date in metadata", line_no, "t0_date");
          traj.t0 = *d;
        }
      }
      continue;
    }
    if (!header_seen) {
      if (line != kTrajectoryHeader) {
        throw parse_error(source + ":" + std::to_string(line_no) +
                              ": expected header '" + std::string(kTrajectoryHeader) + "'",
                          line_no);
      }
      header_seen = true;
      continue;
    }
    const auto fields = detail::split(line, ',');
    if (fields.size() != 11) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": expected 11 fields", line_no);
    }
    std::array<double, 11> v{};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto parsed = parse_double(fields[i]);
      if (!parsed) {
        throw parse_error(source + ":" + std::to_string(line_no) + ": bad number '" +
                              std::string(fields[i]) + "'",
                          line_no);
      }
      v[i] = *parsed;
    }
    if (v[0] != static_cast<double>(traj.states.size())) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": steps must be consecutive",
                        line_no, "step");
    }
    if (!h_known && traj.states.size() == 1) {
      traj.h = v[1];
      h_known = v[1] > 0.0;
    }
    traj.states.push_back({v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
    traj.diagnostics.push_back({v[9], v[10], 0.0, 0});
  }
  if (!header_seen) throw parse_error(source + ": missing header", line_no);
  if (traj.states.empty()) throw parse_error(source + ": no data rows", line_no);
  return traj;
}

inline Trajectory read_trajectory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open trajectory file '" + path + "'");
  return read_trajectory(in, path);
}

// ---------------------------------------------------------------------------
// Observed case data

struct ObservedSeries {
  std::vector<Date> dates;
  std::vector<double> active_cases;

  std::size_t size() const noexcept { return dates.size(); }
};

/// CSV with header `date,active_cases`; dates strictly increasing, counts non-negative integers.
inline ObservedSeries read_observed(std::istream& in, const std::string& source = "<stream>") {
  ObservedSeries series;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(detail::strip_cr(raw));
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "date,active_cases") {
        throw parse_error(source + ":" + std::to_string(line_no) +
                              ": expected header 'date,active_cases'",
                          line_no);
      }
      header_seen = true;
      continue;
    }
    const std::size_t row = series.size() + 1;
    auto fail = [&](const std::string& why) {
      throw parse_error(source + ": data row " + std::to_string(row) + " (line " +
                            std::to_string(line_no) + "): " + why,
                        line_no);
    };
    const auto fields = detail::split(line, ',');
    if (fields.size() != 2) fail("expected 2 fields");
    const auto date = parse_iso_date(detail::trim(fields[0]));
    if (!date) fail("bad date '" + std::string(fields[0]) + "'");
    const auto count = parse_double(fields[1]);
    if (!count || *count < 0.0 || *count != std::floor(*count)) {
      fail("active_cases must be a non-negative integer");
    }
    if (!series.dates.empty() && !(*date > series.dates.back())) fail("dates must be strictly increasing");
    series.dates.push_back(*date);
    series.active_cases.push_back(*count);
  }
  if (!header_seen) throw parse_error(source + ": missing header 'date,active_cases'", line_no);
  if (series.dates.empty()) throw parse_error(source + ": no data rows", line_no);
  return series;
}

inline ObservedSeries load_observed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open observed data file '" + path + "'");
  return read_observed(in, path);
}

// ---------------------------------------------------------------------------
// Model vs data

enum class Mapping { I_only, I_plus_H_plus_Hbar };

inline std::string to_string(Mapping m) {
  return m == Mapping::I_only ? "I_only" : "I_plus_H_plus_Hbar";
}

/// Accepts the CLI spellings (I, IHH) and the report spellings.
inline Mapping parse_mapping(std::string_view text) {
  if (text == "I" || text == "I_only") return Mapping::I_only;
  if (text == "IHH" || text == "I_plus_H_plus_Hbar") return Mapping::I_plus_H_plus_Hbar;
  throw validation_error("mapping must be I or IHH (got '" + std::string(text) + "')");
}

inline double mapped_value(const State& s, Mapping m) {
  return m == Mapping::I_only ? s.I : s.I + s.H + s.Hbar;
}

struct FitReport {
  Mapping mapping = Mapping::I_only;
  double rmse = 0.0;
  double mae = 0.0;
  double max_abs_error = 0.0;
  std::size_t n_points = 0;
};

/// Samples the model at the observed dates (trajectory must be on a grid that divides one day)
/// and scores it over the overlapping dates.
inline FitReport compare(const Trajectory& traj, const ObservedSeries& obs, Mapping mapping) {
  if (!(traj.h > 0.0) || traj.h > 1.0 + 1e-12) {
    throw validation_error("trajectory step must divide one day (h = " + format_double(traj.h) + ")");
  }
  const double per_day = std::round(1.0 / traj.h);
  if (std::abs(per_day * traj.h - 1.0) > 1e-9) {
    throw validation_error("trajectory step must divide one day (h = " + format_double(traj.h) + ")");
  }
  const auto stride = static_cast<std::size_t>(per_day);

  FitReport report;
  report.mapping = mapping;
  double sum_sq = 0.0;
  double sum_abs = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const auto offset = (obs.dates[i] - traj.t0).count();
    if (offset < 0) continue;
    const std::size_t index = static_cast<std::size_t>(offset) * stride;
    if (index >= traj.states.size()) continue;
    const double err = mapped_value(traj.states[index], mapping) - obs.active_cases[i];
    sum_sq += err * err;
    sum_abs += std::abs(err);
    report.max_abs_error = std::max(report.max_abs_error, std::abs(err));
    ++report.n_points;
  }
  if (report.n_points == 0) throw validation_error("observed dates do not overlap the trajectory");
  const auto n = static_cast<double>(report.n_points);
  report.rmse = std::sqrt(sum_sq / n);
  report.mae = sum_abs / n;
  return report;
}

// ---------------------------------------------------------------------------
// JSON reports

inline nlohmann::json to_json(const FitReport& r) {
  return {{"mapping", to_string(r.mapping)},
          {"rmse", r.rmse},
          {"mae", r.mae},
          {"max_abs_error", r.max_abs_error},
          {"n_points", r.n_points}};
}

inline nlohmann::json to_json(const StabilityReport& r) {
  nlohmann::json series = nlohmann::json::array();
  for (const auto& v : r.lyapunov_series) series.push_back(v ? nlohmann::json(*v) : nlohmann::json());
  return {{"r0", r.r0},
          {"classification", to_string(r.classification)},
          {"lyapunov_series", std::move(series)},
          {"descent_violations", r.descent_violations},
          {"distance_to_target", r.distance_to_target},
          {"verified", r.verified},
          {"params_mismatch", r.params_mismatch}};
}

inline FitReport fit_report_from_json(const nlohmann::json& j) {
  FitReport r;
  r.mapping = parse_mapping(j.at("mapping").get<std::string>());
  r.rmse = j.at("rmse").get<double>();
  r.mae = j.at("mae").get<double>();
  r.max_abs_error = j.at("max_abs_error").get<double>();
  r.n_points = j.at("n_points").get<std::size_t>();
  return r;
}

inline void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write report file '" + path + "'");
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw io_error("failed writing report file '" + path + "'");
}

inline void write_report(const FitReport& r, const std::string& path) { write_json(to_json(r), path); }
inline void write_report(const StabilityReport& r, const std::string& path) {
  write_json(to_json(r), path);
}

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open report file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what(), 0);
  }
}

}  // namespace saiqh

#endif  // SAIQH_DATA_IO_HPP

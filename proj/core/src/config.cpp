#include "cascade/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cascade/error.hpp"
#include "cascade/format.hpp"

namespace cascade {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Thrown by field parsers; converted to ParseError with line and key.
struct BadValue {
  std::string message;
};

double to_double(std::string_view text) {
  double v = 0.0;
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v))
    throw BadValue{"expected a number, got '" + std::string(t) + "'"};
  return v;
}

std::size_t to_count(std::string_view text) {
  std::size_t v = 0;
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw BadValue{"expected a non-negative integer, got '" + std::string(t) + "'"};
  return v;
}

std::vector<double> to_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(to_double(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void check(bool ok, const char* rule) {
  if (!ok) throw BadValue{std::string("value must be ") + rule};
}

struct Field {
  std::string key;
  std::function<void(ExperimentConfig&, std::string_view)> parse;
  std::function<std::string(const ExperimentConfig&)> print;
};

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_shortest(values[i]);
  }
  return out;
}

template <typename Get>
Field real(std::string key, Get get, double lo, double hi, const char* rule, bool open_hi = false) {
  return {key,
          [=](ExperimentConfig& c, std::string_view v) {
            const double x = to_double(v);
            check(x >= lo && (open_hi ? x < hi : x <= hi), rule);
            get(c) = x;
          },
          [=](const ExperimentConfig& c) { return format_shortest(get(c)); }};
}

template <typename Get>
Field count(std::string key, Get get, std::size_t lo) {
  return {key,
          [=](ExperimentConfig& c, std::string_view v) {
            const auto x = to_count(v);
            if (x < lo) throw BadValue{"value must be >= " + std::to_string(lo)};
            auto& field = get(c);
            field = static_cast<std::remove_reference_t<decltype(field)>>(x);
          },
          [=](const ExperimentConfig& c) {
            return std::to_string(get(c));
          }};
}

template <typename Enum, typename Get>
Field choice(std::string key, Get get, std::vector<std::pair<std::string, Enum>> names) {
  return {key,
          [=](ExperimentConfig& c, std::string_view v) {
            for (const auto& [name, value] : names)
              if (name == v) {
                get(c) = value;
                return;
              }
            std::string options;
            for (const auto& [name, value] : names) options += (options.empty() ? "" : "|") + name;
            throw BadValue{"expected one of " + options};
          },
          [=](const ExperimentConfig& c) {
            for (const auto& [name, value] : names)
              if (get(c) == value) return name;
            return std::string{};
          }};
}

constexpr double kInf = HUGE_VAL;

const std::vector<Field>& fields() {
#define P(member) [](auto& c) -> auto& { return c.params.member; }
#define O(member) [](auto& c) -> auto& { return c.oracle.member; }
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(count("n", P(n), 1));
    f.push_back(real("p_c", P(p_c), 0, 1, "in [0, 1]"));
    f.push_back(real("f_m", P(f_m), 0, 1, "in [0, 1)", true));
    f.push_back(real("p_n", P(p_n), 0, 1, "in [0, 1]"));
    f.push_back(real("p_l", P(p_l), 0, 1, "in [0, 1]"));
    f.push_back(real("pp_max", P(pp_max), 0, 1, "in [0, 1]"));
    f.push_back(real("cp_half", P(cp_half), 0, kInf, ">= 0", true));
    f.push_back(real("p_r", P(p_r), 0, 1, "in [0, 1]"));
    f.push_back(real("s", P(s), 0, kInf, ">= 0", true));
    f.push_back(real("p_e", P(p_e), 0, 1, "in [0, 1]"));
    f.push_back(real("mu", P(mu), -kInf, kInf, "finite", true));
    f.push_back(real("sigma_e", P(sigma_e), 0, kInf, ">= 0", true));
    f.push_back(count("T", P(T), 0));
    f.push_back(real("rec1", P(rec1), 0, 1, "in [0, 1]"));
    f.push_back(count("failtime", P(failtime), 1));
    f.push_back(count("realizations", P(realizations), 1));
    f.push_back(real("init_fp0", P(init_fp0), -kInf, kInf, "finite", true));
    f.push_back(real("init_fp1", P(init_fp1), -kInf, kInf, "finite", true));
    f.push_back(real("init_sd", P(init_sd), 0, kInf, ">= 0", true));
    f.push_back(choice<CentralityMode>(
        "centrality", P(centrality),
        {{"max", CentralityMode::kMaxNorm}, {"euclid", CentralityMode::kEuclidNorm}}));
    f.push_back(choice<ImitationMode>(
        "imitation", P(imitation),
        {{"sequential", ImitationMode::kSequential},
         {"synchronous", ImitationMode::kSynchronous}}));
    f.push_back(choice<ExplorationMode>(
        "exploration", P(exploration),
        {{"independent", ExplorationMode::kIndependent},
         {"single", ExplorationMode::kSingleValue}}));
    f.push_back(choice<SweepAxis>(
        "axis", [](auto& c) -> auto& { return c.axis; },
        {{"p_l", SweepAxis::kLinkPropagation}, {"p_c", SweepAxis::kConnection}}));
    f.push_back({"values",
                 [](ExperimentConfig& c, std::string_view v) {
                   auto list = to_list(v);
                   for (double x : list) check(x >= 0 && x <= 1, "a list of values in [0, 1]");
                   c.values = std::move(list);
                 },
                 [](const ExperimentConfig& c) { return join(c.values); }});
    f.push_back(real("window_fraction",
                     [](auto& c) -> auto& { return c.stationarity.window_fraction; },
                     std::nextafter(0.0, 1.0), 1, "in (0, 1]"));
    f.push_back(real("threshold",
                     [](auto& c) -> auto& { return c.stationarity.threshold; }, 0,
                     kInf, ">= 0", true));
    f.push_back({"export_graph",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "true") c.export_graph = true;
                   else if (v == "false") c.export_graph = false;
                   else throw BadValue{"expected true or false"};
                 },
                 [](const ExperimentConfig& c) -> std::string {
                   return c.export_graph ? "true" : "false";
                 }});
    f.push_back(count("threads", [](auto& c) -> auto& { return c.threads; }, 0));
    f.push_back(real("gamma", O(gamma), 0, 1, "in [0, 1]"));
    f.push_back(real("beta", O(beta), 0, 1, "in [0, 1]"));
    f.push_back(real("p_p", O(p_p), 0, 1, "in [0, 1]"));
    f.push_back(real("x", O(x), 0, 1, "in [0, 1]"));
    f.push_back(real("n_failed", O(n_failed), 0, kInf, ">= 0", true));
    f.push_back(real("f_p", O(f_p), 0, 1, "in [0, 1]"));
    f.push_back(real("investment", O(investment), 0, kInf, ">= 0", true));
    f.push_back(real("k", O(k), -kInf, kInf, "finite", true));
    f.push_back(real("unit_payoff", O(unit_payoff), -kInf, kInf, "finite", true));
    f.push_back({"curve_x",
                 [](ExperimentConfig& c, std::string_view v) {
                   auto list = to_list(v);
                   for (double x : list) check(x > 0, "a list of positive values");
                   c.oracle.curve_x = std::move(list);
                 },
                 [](const ExperimentConfig& c) { return join(c.oracle.curve_x); }});
    f.push_back(count("trials", O(trials), 0));
    f.push_back(count("failures", O(failures), 0));
    f.push_back(real("p_fail", O(p_fail), 0, 1, "in [0, 1]"));
    return f;
  }();
#undef P
#undef O
  return table;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::vector<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("missing key", line_no);

    const Field* field = nullptr;
    for (const auto& f : fields())
      if (f.key == key) field = &f;
    if (!field) throw ParseError("unknown key '" + key + "'", line_no, key);
    for (const auto& s : seen)
      if (s == key) throw ParseError("repeated key '" + key + "'", line_no, key);
    seen.push_back(key);
    if (value.empty()) throw ParseError(key + ": missing value", line_no, key);

    try {
      field->parse(config, value);
    } catch (const BadValue& bad) {
      throw ParseError(key + ": " + bad.message, line_no, key);
    }
  }
  try {
    validate(config.params);
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what(), line_no);
  }
  if (config.oracle.failures > config.oracle.trials)
    throw ParseError("failures must not exceed trials", line_no, "failures");
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& config) {
  std::string out;
  for (const auto& f : fields()) out += f.key + " = " + f.print(config) + "\n";
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : fields()) keys.push_back(f.key);
  return keys;
}

}  // namespace cascade

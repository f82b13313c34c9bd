#include "nodalvar/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nodalvar/errors.hpp"

namespace nodalvar {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

double parse_number(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidConfiguration,
         "key '" + key + "': cannot parse number from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

double grid_scale_from_env() {
  const char* env = std::getenv("NODALVAR_GRID_SCALE");
  if (!env || !*env) return 1.0;
  try {
    double v = std::stod(env);
    if (!(v > 0.0) || !std::isfinite(v))
      fail(ErrorCode::InvalidConfiguration,
           "NODALVAR_GRID_SCALE must be a positive number");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidConfiguration,
         "NODALVAR_GRID_SCALE must be a positive number");
  }
}

Problem1D RunConfig::build_problem() const {
  const double scale = grid_scale_from_env();
  int n = n_points;
  if (scale != 1.0)
    n = static_cast<int>(std::lround((n_points - 1) * scale)) + 1;
  return make_problem(kind, x_max, n);
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  bool have_nodes = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail(ErrorCode::InvalidConfiguration,
             "line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "problem" && section != "nodes" && section != "subset" &&
          section != "objective" && section != "output")
        fail(ErrorCode::InvalidConfiguration,
             "unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::InvalidConfiguration,
           "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (section == "problem") {
      if (key == "kind")
        cfg.kind = problem_kind_from_string(value);
      else if (key == "x_max")
        cfg.x_max = parse_number(value, key);
      else if (key == "n_points")
        cfg.n_points = static_cast<int>(parse_number(value, key));
      else
        fail(ErrorCode::InvalidConfiguration,
             "unknown key '" + key + "' in [problem]");
    } else if (section == "nodes") {
      if (key == "values") {
        cfg.nodes.clear();
        for (const std::string& tok : split(value, ','))
          if (!tok.empty()) cfg.nodes.push_back(parse_number(tok, key));
        have_nodes = true;
      } else {
        fail(ErrorCode::InvalidConfiguration,
             "unknown key '" + key + "' in [nodes]");
      }
    } else if (section == "subset") {
      if (key == "indices") {
        std::vector<int> idx;
        for (const std::string& tok : split(value, ','))
          if (!tok.empty())
            idx.push_back(static_cast<int>(parse_number(tok, key)));
        cfg.subset = idx;
      } else {
        fail(ErrorCode::InvalidConfiguration,
             "unknown key '" + key + "' in [subset]");
      }
    } else if (section == "objective") {
      if (key == "kind") {
        if (value == "err1")
          cfg.objective = ObjectiveKind::Err1;
        else if (value == "err2")
          cfg.objective = ObjectiveKind::Err2;
        else
          fail(ErrorCode::InvalidConfiguration,
               "objective kind must be err1 or err2, got '" + value + "'");
      } else if (key == "gaussians") {
        cfg.scaling_set.clear();
        for (const std::string& tok : split(value, ',')) {
          if (tok.empty()) continue;
          std::vector<std::string> pair = split(tok, ':');
          if (pair.size() != 2)
            fail(ErrorCode::InvalidConfiguration,
                 "gaussians entries are d:x0 pairs, got '" + tok + "'");
          cfg.scaling_set.push_back(ScalingFunction::gaussian(
              parse_number(pair[0], key), parse_number(pair[1], key)));
        }
      } else if (key == "max_iterations") {
        cfg.optimize.max_iterations = static_cast<int>(parse_number(value, key));
      } else if (key == "simplex_scale") {
        cfg.optimize.simplex_scale = parse_number(value, key);
      } else if (key == "tolerance") {
        cfg.optimize.tolerance = parse_number(value, key);
      } else if (key == "levels") {
        cfg.jacobi_levels = static_cast<int>(parse_number(value, key));
      } else if (key == "residual_tolerance") {
        cfg.jacobi_tolerance = parse_number(value, key);
      } else {
        fail(ErrorCode::InvalidConfiguration,
             "unknown key '" + key + "' in [objective]");
      }
    } else if (section == "output") {
      if (key == "directory")
        cfg.out_dir = value;
      else if (key == "precision")
        cfg.precision = static_cast<int>(parse_number(value, key));
      else
        fail(ErrorCode::InvalidConfiguration,
             "unknown key '" + key + "' in [output]");
    } else {
      fail(ErrorCode::InvalidConfiguration,
           "line " + std::to_string(lineno) + ": key outside any section");
    }
  }

  // validation against module preconditions, before any compute
  if (!(cfg.x_max > 0))
    fail(ErrorCode::InvalidConfiguration, "x_max must be positive");
  if (cfg.n_points < 1000)
    fail(ErrorCode::InvalidConfiguration, "n_points must be at least 1000");
  if (have_nodes) {
    double prev = 0.0;
    for (double n : cfg.nodes) {
      if (!(n > prev))
        fail(ErrorCode::InvalidConfiguration,
             "nodes must be strictly increasing");
      if (!(n < cfg.x_max))
        fail(ErrorCode::InvalidConfiguration, "nodes must lie inside (0, x_max)");
      prev = n;
    }
  }
  if (cfg.subset) {
    const int m = static_cast<int>(cfg.nodes.size()) + 1;
    if (cfg.subset->empty())
      fail(ErrorCode::InvalidConfiguration, "subset indices must be non-empty");
    for (int i : *cfg.subset)
      if (i < 1 || i > m)
        fail(ErrorCode::InvalidConfiguration,
             "subset index " + std::to_string(i) + " out of range 1.." +
                 std::to_string(m));
  }
  if (cfg.precision < 1 || cfg.precision > 17)
    fail(ErrorCode::InvalidConfiguration, "precision must be in 1..17");
  if (cfg.optimize.max_iterations < 1)
    fail(ErrorCode::InvalidConfiguration, "max_iterations must be positive");
  if (!(cfg.optimize.simplex_scale > 0))
    fail(ErrorCode::InvalidConfiguration, "simplex_scale must be positive");
  if (!(cfg.optimize.tolerance > 0))
    fail(ErrorCode::InvalidConfiguration, "tolerance must be positive");
  if (cfg.jacobi_levels < 2)
    fail(ErrorCode::InvalidConfiguration, "levels must be at least 2");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::InvalidConfiguration, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace nodalvar

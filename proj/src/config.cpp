#include "qsym/config.hpp"

#include <cmath>
#include <fstream>

namespace qsym {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

namespace {

const Json& require_field(const Json& j, const std::string& field) {
  if (!j.contains(field))
    throw ConfigError("config: missing field '" + field + "'");
  return j.at(field);
}

cplx parse_complex(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("config: '" + field +
                      "' entries must be [re, im] pairs");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

Vec parse_complex_list(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ConfigError("config: '" + field + "' must be a non-empty array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], field);
  return v;
}

Mat parse_row_major(const Json& j, const std::string& field) {
  const Vec flat = parse_complex_list(j, field);
  const auto dim = static_cast<Eigen::Index>(
      std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (dim * dim != flat.size())
    throw ConfigError("config: '" + field + "' length " +
                      std::to_string(flat.size()) +
                      " is not a perfect square");
  Mat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k) m(i, k) = flat(i * dim + k);
  return m;
}

}  // namespace

std::int64_t require_int(const Json& j, const std::string& field) {
  const Json& f = require_field(j, field);
  if (!f.is_number_integer())
    throw ConfigError("config: '" + field + "' must be an integer");
  return f.get<std::int64_t>();
}

double require_real(const Json& j, const std::string& field) {
  const Json& f = require_field(j, field);
  if (!f.is_number())
    throw ConfigError("config: '" + field + "' must be a number");
  return f.get<double>();
}

std::vector<double> require_real_list(const Json& j,
                                      const std::string& field) {
  const Json& f = require_field(j, field);
  if (!f.is_array())
    throw ConfigError("config: '" + field + "' must be an array");
  std::vector<double> out;
  for (const auto& v : f) {
    if (!v.is_number())
      throw ConfigError("config: '" + field + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::int64_t optional_int(const Json& j, const std::string& field,
                          std::int64_t fallback) {
  return j.contains(field) ? require_int(j, field) : fallback;
}

double optional_real(const Json& j, const std::string& field,
                     double fallback) {
  return j.contains(field) ? require_real(j, field) : fallback;
}

bool optional_bool(const Json& j, const std::string& field, bool fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_boolean())
    throw ConfigError("config: '" + field + "' must be a boolean");
  return j.at(field).get<bool>();
}

GroupRep parse_group(const Json& config) {
  const Json& g = require_field(config, "group");
  const std::string kind =
      require_field(g, "kind").is_string() ? g.at("kind").get<std::string>()
                                           : "";
  if (kind == "cyclic") {
    const auto d = static_cast<int>(require_int(g, "d"));
    const Json& cj = require_field(g, "charges");
    if (!cj.is_array())
      throw ConfigError("config: 'group.charges' must be an array");
    std::vector<int> charges;
    for (const auto& c : cj) {
      if (!c.is_number_integer())
        throw ConfigError("config: 'group.charges' must hold integers");
      charges.push_back(c.get<int>());
    }
    try {
      return make_cyclic_rep(d, charges);
    } catch (const Error& e) {
      throw ConfigError(std::string("config: 'group': ") + e.what());
    }
  }
  if (kind == "explicit") {
    const Json& tj = require_field(g, "mult_table");
    if (!tj.is_array())
      throw ConfigError("config: 'group.mult_table' must be an array");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
      if (!row.is_array())
        throw ConfigError("config: 'group.mult_table' rows must be arrays");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(v.get<int>());
      table.push_back(std::move(r));
    }
    const Json& uj = require_field(g, "unitaries");
    if (!uj.is_array())
      throw ConfigError("config: 'group.unitaries' must be an array");
    std::vector<Mat> us;
    for (const auto& u : uj) us.push_back(parse_row_major(u, "group.unitaries"));
    return make_explicit_rep(std::move(table), std::move(us));
  }
  throw ConfigError("config: 'group.kind' must be 'cyclic' or 'explicit'");
}

DensityOperator parse_state(const Json& config) {
  const Json& s = require_field(config, "state");
  if (s.contains("amplitudes")) {
    const Vec amps = parse_complex_list(s.at("amplitudes"),
                                        "state.amplitudes");
    try {
      return DensityOperator::from_pure(amps);
    } catch (const NormalizationError& e) {
      throw NormalizationError(std::string("state.amplitudes: ") + e.what());
    }
  }
  if (s.contains("density")) {
    const Mat rho = parse_row_major(s.at("density"), "state.density");
    try {
      return DensityOperator(rho);
    } catch (const Error& e) {
      throw ConfigError(std::string("config: 'state.density': ") + e.what());
    }
  }
  throw ConfigError("config: 'state' needs 'amplitudes' or 'density'");
}

ProbabilityVector parse_probs(const Json& config) {
  const std::vector<double> p = require_real_list(config, "probs");
  try {
    return ProbabilityVector(p);
  } catch (const Error& e) {
    throw ConfigError(std::string("config: 'probs': ") + e.what());
  }
}

}  // namespace qsym

#include "seqeff/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "seqeff/errors.hpp"

namespace seqeff::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

int parse_size(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ConfigError("malformed algebra '" + whole + "'");
  }
  return std::stoi(s);
}

// Splits on top-level commas.
std::vector<std::string> split_top_level(const std::string& s, const std::string& whole) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ConfigError("unbalanced parentheses in '" + whole + "'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ConfigError("unbalanced parentheses in '" + whole + "'");
  out.push_back(trim(cur));
  return out;
}

json matrix_part(const Eigen::MatrixXcd& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back((imag ? m(i, j).imag() : m(i, j).real()) + 0.0);  // -0 becomes 0
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd read_matrix(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ConfigError("matrix must have " + std::to_string(n) + " rows");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      throw ConfigError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (int k = 0; k < n; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json vector_json(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  for (double& x : out) x += 0.0;
  return out;
}

Eigen::VectorXd read_vector(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json residual_json(double r) { return std::isfinite(r) ? json(r) : json("inf"); }

double residual_from_json(const json& j) {
  if (j.is_string()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

json inputs_to_json(const TrialInputs& in) {
  json elements = json::array();
  for (const auto& [name, e] : in.elements) elements.push_back({{"name", name}, {"element", element_to_json(e)}});
  json j = {{"elements", std::move(elements)}};
  if (in.iso) j["iso"] = {{"kind", to_string(in.iso->kind)}, {"seed", in.iso->seed}};
  return j;
}

TrialInputs inputs_from_json(const json& j) {
  TrialInputs in;
  for (const auto& item : j.at("elements")) in.add(item.at("name").get<std::string>(), element_from_json(item.at("element")));
  if (j.contains("iso")) {
    in.iso = IsoSpec{iso_kind_from_string(j["iso"].at("kind").get<std::string>()), j["iso"].at("seed").get<std::uint64_t>()};
  }
  return in;
}

Expectation expectation_from_string(const std::string& s) {
  if (s == "pass") return Expectation::pass;
  if (s == "fail") return Expectation::fail;
  throw ConfigError("expect must be pass or fail, got '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "error") return Verdict::error;
  throw ConfigError("unknown verdict '" + s + "'");
}

}  // namespace

AlgebraDescriptor parse_algebra(const std::string& text) {
  const std::string s = trim(text);
  if (s.rfind("sum(", 0) == 0) {
    if (s.back() != ')') throw ConfigError("malformed algebra '" + text + "'");
    std::vector<AlgebraDescriptor> parts;
    for (const auto& p : split_top_level(s.substr(4, s.size() - 5), text)) parts.push_back(parse_algebra(p));
    return AlgebraDescriptor::direct_sum(std::move(parts));
  }
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigError("malformed algebra '" + text + "'");
  const std::string kind = s.substr(0, colon);
  const int n = parse_size(s.substr(colon + 1), text);
  if (n < 1) throw ConfigError("algebra size must be >= 1 in '" + text + "'");
  if (kind == "real") return AlgebraDescriptor::real_symmetric(n);
  if (kind == "complex") return AlgebraDescriptor::complex_hermitian(n);
  if (kind == "quat") return AlgebraDescriptor::quaternionic_hermitian(n);
  if (kind == "spin") return AlgebraDescriptor::spin_factor(n);
  throw ConfigError("unknown algebra kind '" + kind + "' in '" + text + "'");
}

json algebra_to_json(const AlgebraDescriptor& alg) {
  switch (alg.kind()) {
    case AlgebraKind::real_symmetric:
      return {{"kind", "real_symmetric"}, {"n", alg.size()}};
    case AlgebraKind::complex_hermitian:
      return {{"kind", "complex_hermitian"}, {"n", alg.size()}};
    case AlgebraKind::quaternionic_hermitian:
      return {{"kind", "quaternionic_hermitian"}, {"n", alg.size()}};
    case AlgebraKind::spin_factor:
      return {{"kind", "spin_factor"}, {"d", alg.size()}};
    case AlgebraKind::direct_sum: {
      json summands = json::array();
      for (const auto& s : alg.summands()) summands.push_back(algebra_to_json(s));
      return {{"kind", "direct_sum"}, {"summands", std::move(summands)}};
    }
  }
  return {};
}

AlgebraDescriptor algebra_from_json(const json& j) {
  if (j.is_string()) return parse_algebra(j.get<std::string>());
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "real_symmetric") return AlgebraDescriptor::real_symmetric(j.at("n").get<int>());
    if (kind == "complex_hermitian") return AlgebraDescriptor::complex_hermitian(j.at("n").get<int>());
    if (kind == "quaternionic_hermitian") return AlgebraDescriptor::quaternionic_hermitian(j.at("n").get<int>());
    if (kind == "spin_factor") return AlgebraDescriptor::spin_factor(j.at("d").get<int>());
    if (kind == "direct_sum") {
      std::vector<AlgebraDescriptor> parts;
      for (const auto& s : j.at("summands")) parts.push_back(algebra_from_json(s));
      return AlgebraDescriptor::direct_sum(std::move(parts));
    }
    throw ConfigError("unknown algebra kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed algebra: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

json element_to_json(const Element& e) {
  const auto& alg = e.algebra();
  json data;
  switch (alg.kind()) {
    case AlgebraKind::spin_factor:
      data = {{"v", vector_json(e.spin_vector())}, {"t", e.spin_scalar() + 0.0}};
      break;
    case AlgebraKind::direct_sum: {
      json parts = json::array();
      for (const auto& p : e.parts()) parts.push_back(element_to_json(p));
      data = {{"summands", std::move(parts)}};
      break;
    }
    case AlgebraKind::real_symmetric:
      data = {{"re", matrix_part(e.matrix(), false)}};
      break;
    default:
      data = {{"re", matrix_part(e.matrix(), false)}, {"im", matrix_part(e.matrix(), true)}};
  }
  return {{"algebra", algebra_to_json(alg)}, {"data", std::move(data)}};
}

Element element_from_json(const json& j) {
  try {
    const AlgebraDescriptor alg = algebra_from_json(j.at("algebra"));
    const json& data = j.at("data");
    switch (alg.kind()) {
      case AlgebraKind::spin_factor:
        return Element::spin(alg, read_vector(data.at("v")), data.at("t").get<double>());
      case AlgebraKind::direct_sum: {
        std::vector<Element> parts;
        for (const auto& p : data.at("summands")) parts.push_back(element_from_json(p));
        return Element::direct_sum(alg, std::move(parts));
      }
      default: {
        const int n = alg.matrix_size();
        Eigen::MatrixXcd m = read_matrix(data.at("re"), n).cast<Complex>();
        if (data.contains("im")) m += Complex(0.0, 1.0) * read_matrix(data["im"], n).cast<Complex>();
        return Element::from_matrix(alg, m);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed element: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("malformed element: ") + e.what());
  } catch (const DescriptorMismatch& e) {
    throw ConfigError(std::string("malformed element: ") + e.what());
  }
}

json decomposition_to_json(const SpectralDecomposition& sd) {
  json pairs = json::array();
  for (const auto& p : sd.pairs()) {
    pairs.push_back({{"eigenvalue", p.eigenvalue}, {"idempotent", element_to_json(p.idempotent)}});
  }
  return {{"algebra", algebra_to_json(sd.algebra())}, {"pairs", std::move(pairs)}};
}

SpectralDecomposition decomposition_from_json(const json& j) {
  try {
    std::vector<SpectralPair> pairs;
    for (const auto& p : j.at("pairs")) {
      pairs.push_back({p.at("eigenvalue").get<double>(), element_from_json(p.at("idempotent"))});
    }
    return {algebra_from_json(j.at("algebra")), std::move(pairs)};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed decomposition: ") + e.what());
  }
}

json function_model_to_json(const FunctionModel& m) {
  json frame = json::array();
  for (const auto& f : m.frame()) frame.push_back(element_to_json(f));
  // real_dimension rows, one column per point
  json embedding = json::array();
  const Eigen::MatrixXd& e = m.embedding();
  for (Eigen::Index r = 0; r < e.cols(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < e.rows(); ++c) row.push_back(e(c, r));
    embedding.push_back(std::move(row));
  }
  return {{"points", m.points()}, {"frame", std::move(frame)}, {"embedding", std::move(embedding)}};
}

FunctionModel function_model_from_json(const json& j) {
  try {
    std::vector<Element> frame;
    for (const auto& f : j.at("frame")) frame.push_back(element_from_json(f));
    const auto& rows = j.at("embedding");
    const Eigen::Index k = static_cast<Eigen::Index>(frame.size());
    Eigen::MatrixXd e(k, static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != k) throw ConfigError("embedding row has the wrong length");
      for (Eigen::Index c = 0; c < k; ++c) e(c, static_cast<Eigen::Index>(r)) = rows[r][c].get<double>();
    }
    return {std::move(frame), std::move(e)};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed function model: ") + e.what());
  }
}

json row_to_json(const AuditRow& row) {
  json j = {{"law", to_string(row.law)},
            {"product", row.product.descriptor()},
            {"algebra", row.algebra.shorthand()},
            {"trials", row.trials},
            {"seed", row.seed},
            {"tol", row.tol},
            {"expect", to_string(row.expect)}};
  if (row.iso) j["iso"] = to_string(*row.iso);
  return j;
}

AuditRow row_from_json(const json& j, std::uint64_t default_seed) {
  if (!j.is_object()) throw ConfigError("row must be an object");
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known{"law", "product", "algebra", "trials", "seed", "tol", "expect", "iso"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown field '" + key + "'");
  }
  try {
    AuditRow row{.law = law_from_string(j.at("law").get<std::string>()),
                 .product = SequentialProduct::parse(j.value("product", std::string("standard"))),
                 .algebra = algebra_from_json(j.at("algebra")),
                 .trials = j.value("trials", 100),
                 .seed = j.value("seed", default_seed),
                 .tol = j.value("tol", 1e-8),
                 .expect = expectation_from_string(j.value("expect", std::string("pass")))};
    if (j.contains("iso")) row.iso = iso_kind_from_string(j["iso"].get<std::string>());
    if (row.trials < 0) throw ConfigError("trials must be non-negative");
    if (!(row.tol >= 0.0)) throw ConfigError("tol must be non-negative");
    return row;
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
}

json config_to_json(const SuiteConfig& config) {
  json rows = json::array();
  for (const auto& r : config.rows) rows.push_back(row_to_json(r));
  return {{"schema", kSchemaVersion}, {"seed", config.seed}, {"rows", std::move(rows)}};
}

SuiteConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (j.value("schema", 0) != kSchemaVersion) {
    throw ConfigError("config schema must be " + std::to_string(kSchemaVersion));
  }
  SuiteConfig config;
  try {
    config.seed = j.value("seed", std::uint64_t{42});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config seed: ") + e.what());
  }
  if (!j.contains("rows")) return config;
  if (!j["rows"].is_array()) throw ConfigError("config rows must be an array");
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    try {
      config.rows.push_back(row_from_json(j["rows"][i], config.seed));
    } catch (const Error& e) {
      throw ConfigError("row " + std::to_string(i) + ": " + e.what());
    }
  }
  return config;
}

json report_to_json(const AuditReport& report, bool include_elapsed) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j = row_to_json(e.row);
    j["verdict"] = to_string(e.verdict);
    j["as_expected"] = e.as_expected();
    j["max_residual"] = residual_json(e.max_residual);
    j["trials_run"] = e.trials_run;
    if (e.witness) {
      j["witness"] = {{"trial", e.witness->trial},
                      {"trial_seed", e.witness->trial_seed},
                      {"residual", residual_json(e.witness->residual)},
                      {"inputs", inputs_to_json(e.witness->inputs)}};
    } else {
      j["witness"] = nullptr;
    }
    if (e.verdict == Verdict::error) {
      j["error"] = e.error;
      j["error_kind"] = to_string(e.error_kind);
    }
    if (include_elapsed) j["elapsed_ms"] = e.elapsed_ms;
    entries.push_back(std::move(j));
  }
  return {{"schema", kSchemaVersion},
          {"status", report.passed() ? "pass" : "fail"},
          {"entries", std::move(entries)}};
}

AuditReport report_from_json(const json& j) {
  AuditReport report;
  try {
    for (const auto& item : j.at("entries")) {
      AuditEntry e(row_from_json(
          json{{"law", item.at("law")}, {"product", item.at("product")}, {"algebra", item.at("algebra")},
               {"trials", item.at("trials")}, {"seed", item.at("seed")}, {"tol", item.at("tol")},
               {"expect", item.at("expect")}},
          0));
      if (item.contains("iso")) e.row.iso = iso_kind_from_string(item["iso"].get<std::string>());
      e.verdict = verdict_from_string(item.at("verdict").get<std::string>());
      e.max_residual = residual_from_json(item.at("max_residual"));
      e.trials_run = item.at("trials_run").get<int>();
      if (!item.at("witness").is_null()) {
        const auto& w = item["witness"];
        e.witness = Witness{w.at("trial").get<int>(), w.at("trial_seed").get<std::uint64_t>(),
                            residual_from_json(w.at("residual")), inputs_from_json(w.at("inputs"))};
      }
      e.error = item.value("error", std::string());
      e.error_kind = error_kind_from_string(item.value("error_kind", std::string("none")));
      e.elapsed_ms = item.value("elapsed_ms", 0.0);
      report.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
  return report;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace seqeff::io

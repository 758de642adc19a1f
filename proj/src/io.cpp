#include "qframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qframe/error.hpp"

namespace qframe::io {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, path + ": " + msg);
}

[[noreturn]] void validation_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ValidationError, path + ": " + msg);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& obj, const std::string& path, const char* key) {
  const Json& v = field(obj, path, key);
  if (!v.is_array()) parse_fail(path + "." + key, "expected an array");
  return v;
}

std::size_t size_field(const Json& obj, const std::string& path, const char* key) {
  const Json& v = field(obj, path, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Quaternion quaternion_from(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) parse_fail(path, "expected a quaternion [r0, r1, r2, r3]");
  double c[4];
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_number()) parse_fail(at(path, k), "expected a number");
    c[k] = j[k].get<double>();
    if (!std::isfinite(c[k])) parse_fail(at(path, k), "non-finite component");
  }
  return {c[0], c[1], c[2], c[3]};
}

QVector vector_from(const Json& j, const std::string& path, std::size_t expected_dim) {
  const std::size_t dim = size_field(j, path, "dim");
  const Json& data = array_field(j, path, "data");
  if (data.size() != dim) {
    validation_fail(path + ".data", std::to_string(data.size()) + " entries for dim " + std::to_string(dim));
  }
  if (dim != expected_dim) {
    validation_fail(path + ".dim", "vector dimension " + std::to_string(dim) + ", expected " + std::to_string(expected_dim));
  }
  QVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = quaternion_from(data[k], at(path + ".data", k));
  return v;
}

std::vector<QVector> vectors_from(const Json& obj, const std::string& path, const char* key, std::size_t dim) {
  const Json& arr = array_field(obj, path, key);
  std::vector<QVector> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(vector_from(arr[i], at(path + "." + key, i), dim));
  return out;
}

QMatrix matrix_from(const Json& j, const std::string& path, std::optional<std::size_t> rows_expected,
                    std::size_t cols_expected) {
  const std::size_t rows = size_field(j, path, "rows");
  const std::size_t cols = size_field(j, path, "cols");
  const Json& data = array_field(j, path, "data");
  if (cols != cols_expected) {
    validation_fail(path + ".cols", std::to_string(cols) + " columns, expected " + std::to_string(cols_expected));
  }
  if (rows_expected && rows != *rows_expected) {
    validation_fail(path + ".rows", std::to_string(rows) + " rows, expected " + std::to_string(*rows_expected));
  }
  if (data.size() != rows) {
    validation_fail(path + ".data", std::to_string(data.size()) + " rows of data for rows = " + std::to_string(rows));
  }
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = at(path + ".data", r);
    if (!data[r].is_array()) parse_fail(row_path, "expected an array");
    if (data[r].size() != cols) {
      validation_fail(row_path, std::to_string(data[r].size()) + " entries for cols = " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = quaternion_from(data[r][c], at(row_path, c));
  }
  return m;
}

std::vector<QMatrix> matrices_from(const Json& obj, const std::string& path, const char* key,
                                   std::optional<std::size_t> rows, std::size_t cols) {
  const Json& arr = array_field(obj, path, key);
  std::vector<QMatrix> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(matrix_from(arr[i], at(path + "." + key, i), rows, cols));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json vectors_json(const std::vector<QVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(vector_json(v));
  return arr;
}

Json matrices_json(const std::vector<QMatrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(matrix_json(m));
  return arr;
}

}  // namespace

FrameFile parse_frame_file(std::string_view text) {
  const Json root = parse_json(text);
  const std::string path = "$";
  const Json& kind_json = field(root, path, "kind");
  if (!kind_json.is_string()) parse_fail("$.kind", "expected a string");
  FrameFile file;
  file.kind = kind_json.get<std::string>();
  file.dim = size_field(root, path, "dim");
  if (file.dim < 1) validation_fail("$.dim", "dimension must be at least 1");
  const std::size_t n = file.dim;

  if (file.kind == "vector_frame") {
    file.payload = VectorFrame(n, vectors_from(root, path, "members", n));
  } else if (file.kind == "operator_frame") {
    file.payload = OperatorFrame(n, matrices_from(root, path, "members", std::nullopt, n));
  } else if (file.kind == "fusion") {
    FusionFrame f;
    f.space_dim = n;
    const Json& weights = array_field(root, path, "weights");
    const Json& subspaces = array_field(root, path, "subspaces");
    if (weights.size() != subspaces.size()) {
      validation_fail("$.weights", std::to_string(weights.size()) + " weights for " + std::to_string(subspaces.size()) +
                                       " subspaces");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!weights[i].is_number()) parse_fail(at("$.weights", i), "expected a number");
      f.weights.push_back(weights[i].get<double>());
      if (!(f.weights.back() > 0.0)) validation_fail(at("$.weights", i), "weights must be positive");
    }
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
      const std::string sub_path = at("$.subspaces", i);
      if (!subspaces[i].is_array()) parse_fail(sub_path, "expected an array of vectors");
      std::vector<QVector> basis;
      for (std::size_t k = 0; k < subspaces[i].size(); ++k) basis.push_back(vector_from(subspaces[i][k], at(sub_path, k), n));
      f.subspaces.push_back(std::move(basis));
    }
    file.payload = std::move(f);
  } else if (file.kind == "pseudo") {
    PseudoFramePair p;
    p.space_dim = n;
    p.analyzers = vectors_from(root, path, "analyzers", n);
    p.synthesizers = vectors_from(root, path, "synthesizers", n);
    p.subspace = vectors_from(root, path, "subspace", n);
    if (p.analyzers.size() != p.synthesizers.size()) {
      validation_fail("$.synthesizers", std::to_string(p.synthesizers.size()) + " synthesizers for " +
                                            std::to_string(p.analyzers.size()) + " analyzers");
    }
    file.payload = std::move(p);
  } else if (file.kind == "quasi") {
    QuasiProjectorSystem q;
    q.space_dim = n;
    q.projectors = matrices_from(root, path, "projectors", n, n);
    if (root.contains("decomposition")) {
      const Json& d = root["decomposition"];
      QuasiDecomposition dec;
      dec.base = vectors_from(d, "$.decomposition", "base", n);
      dec.maps = matrices_from(d, "$.decomposition", "maps", n, n);
      if (dec.maps.size() != q.projectors.size()) {
        validation_fail("$.decomposition.maps", "need one map per projector");
      }
      q.decomposition = std::move(dec);
    }
    file.payload = std::move(q);
  } else {
    validation_fail("$.kind", "unknown kind \"" + file.kind + "\"");
  }
  return file;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrameFile load_frame_file(const std::filesystem::path& path) { return parse_frame_file(read_file(path)); }

QVector parse_vector_file(std::string_view text) {
  const Json root = parse_json(text);
  const std::size_t dim = size_field(root, "$", "dim");
  return vector_from(root, "$", dim);
}

Json quaternion_json(const Quaternion& q) { return Json::array({q.r0, q.r1, q.r2, q.r3}); }

Json vector_json(const QVector& v) {
  Json data = Json::array();
  for (const auto& q : v.entries()) data.push_back(quaternion_json(q));
  Json j;
  j["dim"] = v.dim();
  j["data"] = std::move(data);
  return j;
}

Json matrix_json(const QMatrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(quaternion_json(m(r, c)));
    data.push_back(std::move(row));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

Json frame_json(const VectorFrame& f) {
  Json j;
  j["kind"] = "vector_frame";
  j["dim"] = f.space_dim();
  j["members"] = vectors_json(f.members());
  return j;
}

Json frame_json(const OperatorFrame& f) {
  Json j;
  j["kind"] = "operator_frame";
  j["dim"] = f.space_dim();
  j["members"] = matrices_json(f.members());
  return j;
}

Json frame_json(const FusionFrame& f) {
  Json j;
  j["kind"] = "fusion";
  j["dim"] = f.space_dim;
  j["weights"] = f.weights;
  Json subspaces = Json::array();
  for (const auto& s : f.subspaces) subspaces.push_back(vectors_json(s));
  j["subspaces"] = std::move(subspaces);
  return j;
}

Json frame_json(const PseudoFramePair& p) {
  Json j;
  j["kind"] = "pseudo";
  j["dim"] = p.space_dim;
  j["analyzers"] = vectors_json(p.analyzers);
  j["synthesizers"] = vectors_json(p.synthesizers);
  j["subspace"] = vectors_json(p.subspace);
  return j;
}

Json frame_json(const QuasiProjectorSystem& q) {
  Json j;
  j["kind"] = "quasi";
  j["dim"] = q.space_dim;
  j["projectors"] = matrices_json(q.projectors);
  if (q.decomposition) {
    Json d;
    d["base"] = vectors_json(q.decomposition->base);
    d["maps"] = matrices_json(q.decomposition->maps);
    j["decomposition"] = std::move(d);
  }
  return j;
}

Json frame_json(const FrameFile& f) {
  return std::visit([](const auto& payload) { return frame_json(payload); }, f.payload);
}

double report_number(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json report_matrix_json(const QMatrix& m) {
  QMatrix rounded = m;
  for (auto& q : rounded.data()) {
    q = Quaternion(report_number(q.r0), report_number(q.r1), report_number(q.r2), report_number(q.r3));
  }
  return matrix_json(rounded);
}

Json verdict_json(const StabilityVerdict& v) {
  Json params;
  if (v.theorem == 1) {
    params["lambda1"] = report_number(v.params.lambda1);
    params["lambda2"] = report_number(v.params.lambda2);
  } else {
    params["lambda"] = report_number(v.params.lambda);
  }
  params["mu"] = report_number(v.params.mu);

  Json j;
  j["theorem"] = v.theorem;
  j["params"] = std::move(params);
  j["hypothesis_ok"] = v.hypothesis_ok;
  j["hypothesis_check"] = v.hypothesis_exact ? "exact" : "sampled";
  j["max_sampled_excess"] = report_number(v.max_sampled_excess);
  j["predicted"] = Json::array({report_number(v.predicted_lower), report_number(v.predicted_upper)});
  j["measured"] = Json::array({report_number(v.measured_lower), report_number(v.measured_upper)});
  j["frame_guarantee"] = v.frame_guarantee;
  j["consistent"] = v.consistent;
  j["seed"] = v.seed;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qframe::io

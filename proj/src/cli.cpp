#include "qframe/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "qframe/error.hpp"
#include "qframe/generalizations.hpp"
#include "qframe/io.hpp"
#include "qframe/qlinalg.hpp"
#include "qframe/random.hpp"
#include "qframe/stability.hpp"

namespace qframe::cli {

namespace {

using io::Json;

constexpr double kReconstructionTolerance = 1e-8;

struct Loaded {
  io::FrameFile file;
  std::string digest;
};

Loaded load(const std::string& path) {
  const std::string text = io::read_file(path);
  return {io::parse_frame_file(text), "fnv1a64:" + io::fnv1a64_hex(text)};
}

Json header(const Loaded& in) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["digest"] = in.digest;
  j["kind"] = in.file.kind;
  j["dim"] = in.file.dim;
  return j;
}

Json bounds_json(const FrameReport& r) {
  return Json::array({io::report_number(r.lower), io::report_number(r.upper)});
}

void add_report(Json& j, const FrameReport& r) {
  j["bounds"] = bounds_json(r);
  Json flags;
  flags["bessel"] = r.is_bessel;
  flags["frame"] = r.is_frame;
  flags["tight"] = r.is_tight;
  flags["parseval"] = r.is_parseval;
  flags["exact"] = r.is_exact;
  j["flags"] = std::move(flags);
  j["classification"] = r.classification();
  j["frame_operator"] = io::report_matrix_json(r.frame_operator);
}

/// Conversion to an operator frame; identity for operator
/// frames, rank-one functionals for vector frames.
OperatorFrame as_operator_frame(const io::FrameFile& f) {
  struct Visitor {
    OperatorFrame operator()(const VectorFrame& v) const {
      std::vector<QMatrix> members;
      for (const auto& u : v.members()) members.push_back(QMatrix::bra(u));
      return {v.space_dim(), std::move(members)};
    }
    OperatorFrame operator()(const OperatorFrame& o) const { return o; }
    OperatorFrame operator()(const FusionFrame& g) const { return fusion_to_op_frame(g); }
    OperatorFrame operator()(const PseudoFramePair& p) const { return pseudo_to_op_frame(p); }
    OperatorFrame operator()(const QuasiProjectorSystem& q) const { return quasi_to_op_frame(q); }
  };
  return std::visit(Visitor{}, f.payload);
}

std::size_t member_count(const io::FrameFile& f) {
  struct Visitor {
    std::size_t operator()(const VectorFrame& v) const { return v.size(); }
    std::size_t operator()(const OperatorFrame& o) const { return o.size(); }
    std::size_t operator()(const FusionFrame& g) const { return g.subspaces.size(); }
    std::size_t operator()(const PseudoFramePair& p) const { return p.analyzers.size(); }
    std::size_t operator()(const QuasiProjectorSystem& q) const { return q.projectors.size(); }
  };
  return std::visit(Visitor{}, f.payload);
}

void write_text(std::ostream& out, const Json& doc) {
  out << doc["kind"].get<std::string>() << " in H^" << doc["dim"].get<std::size_t>() << " ("
      << doc["members"].get<std::size_t>() << " members)\n";
  out << "  digest          " << doc["digest"].get<std::string>() << "\n";
  out << "  bounds          [" << doc["bounds"][0].dump() << ", " << doc["bounds"][1].dump() << "]\n";
  out << "  classification  " << doc["classification"].get<std::string>() << "\n";
  for (const auto& [name, value] : doc["flags"].items()) {
    out << "  " << name << std::string(16 - std::min<std::size_t>(name.size(), 15), ' ') << value.dump() << "\n";
  }
  for (const char* extra : {"pseudo", "quasi"}) {
    if (!doc.contains(extra)) continue;
    for (const auto& [name, value] : doc[extra].items()) {
      out << "  " << extra << "." << name << "  " << value.dump() << "\n";
    }
  }
}

int cmd_analyze(const std::string& path, const std::string& format, std::uint64_t seed, std::ostream& out) {
  const Loaded in = load(path);
  Json doc = header(in);
  doc["members"] = member_count(in.file);
  bool ok = false;

  if (const auto* v = std::get_if<VectorFrame>(&in.file.payload)) {
    const FrameReport r = report(*v);
    add_report(doc, r);
    ok = r.is_frame;
  } else if (const auto* o = std::get_if<OperatorFrame>(&in.file.payload)) {
    const FrameReport r = op_report(*o);
    add_report(doc, r);
    ok = r.is_frame;
  } else if (const auto* g = std::get_if<FusionFrame>(&in.file.payload)) {
    const FrameReport r = fusion_report(*g);
    add_report(doc, r);
    ok = r.is_frame;
  } else if (const auto* p = std::get_if<PseudoFramePair>(&in.file.payload)) {
    add_report(doc, pseudo_subspace_report(*p));
    const PseudoFrameVerdict verdict = pseudo_frame_check(*p, seed);
    Json pj;
    pj["holds"] = verdict.holds;
    pj["max_residual"] = io::report_number(verdict.max_residual);
    pj["seed"] = verdict.seed;
    doc["pseudo"] = std::move(pj);
    ok = verdict.holds;
  } else if (const auto* q = std::get_if<QuasiProjectorSystem>(&in.file.payload)) {
    add_report(doc, op_report(OperatorFrame(q->space_dim, q->projectors)));
    const QuasiProjectorVerdict verdict = quasi_projector_check(*q);
    Json qj;
    qj["resolution_ok"] = verdict.resolution_ok;
    qj["resolution_defect"] = io::report_number(verdict.resolution_defect);
    qj["bessel_bound"] = io::report_number(verdict.bessel_bound);
    qj["self_adjoint"] = verdict.self_adjoint;
    qj["compatible"] = verdict.compatible;
    qj["ranges_ok"] = verdict.ranges_ok;
    doc["quasi"] = std::move(qj);
    ok = verdict.resolution_ok;
  }

  if (format == "text") {
    write_text(out, doc);
  } else {
    out << io::dump(doc);
  }
  return ok ? kSuccess : kMathFailure;
}

void write_artifact(const std::string& out_path, const Json& j) {
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::ValidationError, "cannot write " + out_path);
  f << io::dump(j);
  if (!f) throw Error(ErrorKind::ValidationError, "failed writing " + out_path);
}

int emit_written(std::ostream& out, const Loaded& in, const std::string& command, const std::string& out_path,
                 const Json& artifact, const FrameReport& r) {
  write_artifact(out_path, artifact);
  Json doc = header(in);
  doc["command"] = command;
  doc["output"] = out_path;
  doc["output_kind"] = artifact["kind"];
  doc["bounds"] = bounds_json(r);
  out << io::dump(doc);
  return kSuccess;
}

int cmd_dual(const std::string& path, const std::string& out_path, std::ostream& out) {
  const Loaded in = load(path);
  if (const auto* v = std::get_if<VectorFrame>(&in.file.payload)) {
    const VectorFrame d = canonical_dual(*v);
    return emit_written(out, in, "dual", out_path, io::frame_json(d), report(d));
  }
  if (const auto* o = std::get_if<OperatorFrame>(&in.file.payload)) {
    const OperatorFrame d = op_dual(*o);
    return emit_written(out, in, "dual", out_path, io::frame_json(d), op_report(d));
  }
  throw Error(ErrorKind::ValidationError, "dual needs a vector_frame or operator_frame, got " + in.file.kind +
                                              " (run convert first)");
}

int cmd_parseval(const std::string& path, const std::string& out_path, std::ostream& out) {
  const Loaded in = load(path);
  if (const auto* v = std::get_if<VectorFrame>(&in.file.payload)) {
    const VectorFrame p = parseval(*v);
    return emit_written(out, in, "parseval", out_path, io::frame_json(p), report(p));
  }
  const OperatorFrame p = op_parseval(as_operator_frame(in.file));
  return emit_written(out, in, "parseval", out_path, io::frame_json(p), op_report(p));
}

int cmd_convert(const std::string& path, const std::string& out_path, std::ostream& out) {
  const Loaded in = load(path);
  if (in.file.kind != "fusion" && in.file.kind != "pseudo" && in.file.kind != "quasi") {
    throw Error(ErrorKind::ValidationError, "convert needs a fusion, pseudo or quasi file, got " + in.file.kind);
  }
  const OperatorFrame f = as_operator_frame(in.file);
  return emit_written(out, in, "convert", out_path, io::frame_json(f), op_report(f));
}

struct StabilityOptions {
  std::string frame_path;
  std::string perturbed_path;
  int theorem = 1;
  bool fit = false;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
};

OperatorFrame require_operator_frame(const Loaded& in, const std::string& path) {
  if (const auto* o = std::get_if<OperatorFrame>(&in.file.payload)) return *o;
  throw Error(ErrorKind::ValidationError, path + ": stability needs operator_frame files, got " + in.file.kind);
}

int cmd_stability(const StabilityOptions& opt, std::ostream& out) {
  const Loaded fin = load(opt.frame_path);
  const Loaded rin = load(opt.perturbed_path);
  const OperatorFrame f = require_operator_frame(fin, opt.frame_path);
  const OperatorFrame r = require_operator_frame(rin, opt.perturbed_path);

  PerturbationParams p;
  if (opt.fit) {
    p = opt.theorem == 1 ? fit_params_t1(f, r) : fit_params_t2(f, r);
  } else {
    p.lambda1 = opt.lambda1;
    p.lambda2 = opt.lambda2;
    p.lambda = opt.lambda;
    p.mu = opt.mu;
  }
  const StabilityVerdict v =
      opt.theorem == 1 ? check_stability_t1(f, r, p, opt.seed) : check_stability_t2(f, r, p, opt.seed);

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["frame_digest"] = fin.digest;
  doc["perturbed_digest"] = rin.digest;
  doc["fitted"] = opt.fit;
  const Json verdict = io::verdict_json(v);
  for (const auto& [key, value] : verdict.items()) doc[key] = value;
  out << io::dump(doc);
  return v.hypothesis_ok && v.consistent ? kSuccess : kMathFailure;
}

int cmd_reconstruct(const std::string& path, const std::string& vector_path, std::size_t count, std::uint64_t seed,
                    std::ostream& out) {
  const Loaded in = load(path);
  const OperatorFrame f = as_operator_frame(in.file);
  const OperatorFrame g = op_dual(f);

  std::vector<QVector> xs;
  if (!vector_path.empty()) {
    const QVector x = io::parse_vector_file(io::read_file(vector_path));
    if (x.dim() != f.space_dim()) {
      throw Error(ErrorKind::ValidationError, vector_path + ": vector dimension " + std::to_string(x.dim()) +
                                                  ", expected " + std::to_string(f.space_dim()));
    }
    xs.push_back(x);
  } else {
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) xs.push_back(random_unit_vector(f.space_dim(), rng));
  }
  double worst = 0.0;
  for (const auto& x : xs) worst = std::max(worst, (reconstruct(f, g, x) - x).norm());

  Json doc = header(in);
  doc["source"] = vector_path.empty() ? "random" : "file";
  doc["seed"] = seed;
  doc["vectors"] = xs.size();
  doc["max_residual"] = io::report_number(worst);
  doc["tolerance"] = kReconstructionTolerance;
  doc["ok"] = worst < kReconstructionTolerance;
  out << io::dump(doc);
  return worst < kReconstructionTolerance ? kSuccess : kMathFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames, frames of operators and their generalizations over the quaternions", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string in_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Frame bounds, classification and checker verdicts");
  analyze->add_option("input", in_path, "Frame file")->required();
  analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--seed", seed, "Seed for sampled checks");

  auto* dual = app.add_subcommand("dual", "Write the canonical dual frame");
  dual->add_option("input", in_path, "Frame file")->required();
  dual->add_option("-o,--out", out_path, "Output frame file")->required();

  auto* pars = app.add_subcommand("parseval", "Write the Parseval normalization S^{-1/2}");
  pars->add_option("input", in_path, "Frame file")->required();
  pars->add_option("-o,--out", out_path, "Output frame file")->required();

  auto* convert = app.add_subcommand("convert", "Convert fusion, pseudo or quasi files to an operator frame");
  convert->add_option("input", in_path, "Frame file")->required();
  convert->add_option("-o,--out", out_path, "Output frame file")->required();

  StabilityOptions stab;
  auto* stability = app.add_subcommand("stability", "Check a perturbed family against the stability bounds");
  stability->add_option("frame", stab.frame_path, "Operator frame file")->required();
  stability->add_option("perturbed", stab.perturbed_path, "Perturbed operator family file")->required();
  stability->add_option("--theorem", stab.theorem, "1: perturbation of T_i, 2: perturbation of T_i^*")
      ->check(CLI::IsMember({1, 2}));
  auto* fit = stability->add_flag("--fit", stab.fit, "Fit lambda-free admissible constants");
  stability->add_option("--lambda1", stab.lambda1, "Theorem 1 constant on sum ||T_i x||")->excludes(fit);
  stability->add_option("--lambda2", stab.lambda2, "Theorem 1 constant on sum ||R_i x||")->excludes(fit);
  stability->add_option("--lambda", stab.lambda, "Theorem 2 constant")->excludes(fit);
  stability->add_option("--mu", stab.mu, "Constant on ||x||")->excludes(fit);
  stability->add_option("--seed", stab.seed, "Seed for sampled hypothesis checks");

  std::string vector_path;
  std::size_t random_count = 100;
  auto* recon = app.add_subcommand("reconstruct", "Reconstruct vectors through the canonical dual");
  recon->add_option("input", in_path, "Frame file")->required();
  auto* vec_opt = recon->add_option("--vector", vector_path, "Vector file to reconstruct");
  recon->add_option("--random", random_count, "Number of seeded random unit vectors")->excludes(vec_opt);
  recon->add_option("--seed", seed, "Seed for random vectors");

  std::vector<const char*> argv{kToolName};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(in_path, format, seed, out);
    if (*dual) return cmd_dual(in_path, out_path, out);
    if (*pars) return cmd_parseval(in_path, out_path, out);
    if (*convert) return cmd_convert(in_path, out_path, out);
    if (*stability) return cmd_stability(stab, out);
    if (*recon) return cmd_reconstruct(in_path, vector_path, random_count, seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qframe::cli

// lpembed: verify, analyze and reduce frames of isometric embeddings
// l_2^m -> l_p^n over R, C and H.
//
// Exit codes: 0 success/pass, 1 semantic failure, 2 malformed input,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpembed/lpembed.hpp"

namespace {

using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFailure = 1, kMalformed = 2, kBudget = 3 };

struct RunConfig {
  std::string mode = "exact";
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::size_t grid = 0;
  unsigned budget = 200;
  std::string output = "text";
  std::string out_path;
};

// One report, rendered either as "key: value" lines or as a JSON object with
// the same keys in the same order.
class Report {
 public:
  void set(const std::string& key, ordered_json value) { fields_.emplace_back(key, std::move(value)); }

  void print(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      ordered_json j = ordered_json::object();
      for (const auto& [k, v] : fields_) j[k] = v;
      os << j.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : fields_) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }

 private:
  std::vector<std::pair<std::string, ordered_json>> fields_;
};

ordered_json rationals(const std::vector<lpembed::Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(lpembed::to_string(q));
  return a;
}

std::string residual_text(const lpembed::RealForm& r) {
  constexpr std::size_t kMaxChars = 400;
  std::string s = lpembed::to_string(r);
  if (s.size() > kMaxChars) s = s.substr(0, kMaxChars) + "...";
  return s;
}

void add_dim_fields(Report& rep, lpembed::Field field, std::size_t m, unsigned p) {
  rep.set("dim", lpembed::dim_phi(field, m, p));
  if (m >= 2)
    rep.set("bound", lpembed::upper_bound(field, m, p));
  else
    rep.set("bound", "refused (m=1: the minimal n is 1)");
}

void emit_frame(const lpembed::AnyFrame& f, const RunConfig& cfg, Report& rep) {
  if (!cfg.out_path.empty()) {
    lpembed::write_frame_file(cfg.out_path, f);
    rep.set("written", cfg.out_path);
  } else {
    rep.set("frame", ordered_json::parse(lpembed::serialize_frame(f)));
  }
}

int cmd_verify(const std::string& path, const RunConfig& cfg) {
  const lpembed::AnyFrame any = lpembed::read_frame_file(path);
  Report rep;
  rep.set("command", "verify");
  bool pass = false;
  const bool float_file = std::holds_alternative<lpembed::FloatFrame>(any);
  std::visit([&](const auto& f) {
    rep.set("field", lpembed::field_name(f.field()));
    rep.set("m", f.m());
    rep.set("p", f.p());
    rep.set("n", f.size());
  }, any);
  if (cfg.mode == "exact" && !float_file) {
    const auto& f = std::get<lpembed::WeightedFrame>(any);
    const auto v = lpembed::verify(f);
    pass = v.pass;
    rep.set("mode", "exact");
    rep.set("verdict", pass ? "pass" : "fail");
    rep.set("residual_terms", v.residual.size());
    rep.set("residual", residual_text(v.residual));
  } else {
    const lpembed::FloatFrame f =
        float_file ? std::get<lpembed::FloatFrame>(any) : lpembed::to_float(std::get<lpembed::WeightedFrame>(any));
    const auto v = lpembed::verify(f, cfg.tolerance);
    pass = v.pass;
    rep.set("mode", "float");
    rep.set("verdict", pass ? "pass" : "fail");
    rep.set("residual_terms", v.residual.size());
    rep.set("residual_max", v.max_residual);
    rep.set("tolerance", cfg.tolerance);
  }
  std::visit([&](const auto& f) { add_dim_fields(rep, f.field(), f.m(), f.p()); }, any);
  rep.print(std::cout, cfg.output);
  return pass ? kOk : kFailure;
}

int cmd_dim(const std::string& field_tag, std::size_t m, unsigned p, const RunConfig& cfg) {
  const lpembed::Field field = lpembed::parse_field(field_tag);
  if (m == 0) throw lpembed::ParseError("m must be at least 1");
  if (p == 0 || p % 2 != 0) throw lpembed::ParseError("p must be a positive even integer");
  Report rep;
  rep.set("command", "dim");
  rep.set("field", field_tag);
  rep.set("m", m);
  rep.set("p", p);
  add_dim_fields(rep, field, m, p);
  rep.print(std::cout, cfg.output);
  return kOk;
}

const lpembed::WeightedFrame& require_exact(const lpembed::AnyFrame& any) {
  if (!std::holds_alternative<lpembed::WeightedFrame>(any))
    throw lpembed::ParseError("this command needs an exact (rational) frame");
  return std::get<lpembed::WeightedFrame>(any);
}

int cmd_reduce(const std::string& path, const RunConfig& cfg) {
  const lpembed::AnyFrame any = lpembed::read_frame_file(path);
  const auto& f = require_exact(any);
  Report rep;
  rep.set("command", "reduce");
  rep.set("n_in", f.size());
  if (!lpembed::verify(f).pass) {
    rep.set("result", "refused: input frame does not verify");
    rep.print(std::cout, cfg.output);
    return kFailure;
  }
  ordered_json steps = ordered_json::array();
  const auto reduced = lpembed::reduce_to_independent(
      f, [&](const lpembed::WeightedFrame& before, const lpembed::DependenceCertificate& cert,
             const lpembed::WeightedFrame& after) {
        ordered_json s;
        s["n_before"] = before.size();
        s["n_after"] = after.size();
        s["pivot"] = cert.pivot;
        s["omega"] = rationals(cert.omega);
        steps.push_back(std::move(s));
      });
  rep.set("steps", steps);
  rep.set("result", steps.empty() ? "no dependence" : "reduced");
  rep.set("n_out", reduced.size());
  rep.set("dim", lpembed::dim_phi(f.field(), f.m(), f.p()));
  rep.set("verdict", lpembed::verify(reduced).pass ? "pass" : "fail");
  emit_frame(reduced, cfg, rep);
  rep.print(std::cout, cfg.output);
  return kOk;
}

int cmd_scale_reduce(const std::string& path, const RunConfig& cfg) {
  const lpembed::AnyFrame any = lpembed::read_frame_file(path);
  const auto& f = require_exact(any);
  Report rep;
  rep.set("command", "scale-reduce");
  rep.set("n_in", f.size());
  lpembed::ScalingSearch search;
  search.grid = cfg.grid;
  search.budget = cfg.budget;
  search.tolerance = cfg.tolerance;
  std::optional<lpembed::ScalingReduction> result;
  try {
    result = lpembed::scaling_reduce(f, search);
  } catch (const lpembed::BudgetExhausted& e) {
    rep.set("result", "budget exhausted");
    rep.set("detail", e.what());
    rep.print(std::cout, cfg.output);
    return kBudget;
  }
  if (!result) {
    rep.set("result", "none");
    rep.set("detail", "no reduction found");
    rep.print(std::cout, cfg.output);
    return kOk;
  }
  rep.set("result", "reduced");
  rep.set("n_out", result->frame.size());
  rep.set("mu", result->mu);
  rep.set("dropped", result->dropped);
  rep.set("bisection_steps", result->bisection_steps);
  rep.set("residual_max", result->residual);
  rep.set("verdict", result->residual <= cfg.tolerance ? "pass" : "fail");
  if (result->exact_verified)
    rep.set("exact_verdict", *result->exact_verified ? "pass" : "fail");
  emit_frame(result->frame, cfg, rep);
  rep.print(std::cout, cfg.output);
  return result->residual <= cfg.tolerance ? kOk : kFailure;
}

int cmd_catalog(const std::string& field_tag, std::size_t m, unsigned p, const std::string& kind,
                const RunConfig& cfg) {
  const auto frame = lpembed::catalog(lpembed::parse_field(field_tag), m, p, lpembed::parse_catalog_kind(kind));
  if (cfg.out_path.empty()) {
    std::cout << lpembed::serialize_frame(frame);
    return kOk;
  }
  lpembed::write_frame_file(cfg.out_path, frame);
  Report rep;
  rep.set("command", "catalog");
  rep.set("kind", kind);
  rep.set("written", cfg.out_path);
  rep.print(std::cout, cfg.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and reduction of frames for isometric embeddings l_2^m -> l_p^n"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--mode", cfg.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", cfg.tolerance, "Float tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--grid", cfg.grid, "Simplex grid points per axis (0 = default)");
  app.add_option("--budget", cfg.budget, "Bisection iteration budget");
  app.add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out_path, "Output frame file");

  std::string path, field_tag, kind;
  std::size_t m = 0;
  unsigned p = 0;

  auto* verify = app.add_subcommand("verify", "Check the frame identity");
  verify->add_option("path", path, "Frame file")->required();

  auto* dim = app.add_subcommand("dim", "Dimension of the invariant space and the bound on n");
  dim->add_option("field", field_tag)->required();
  dim->add_option("m", m)->required();
  dim->add_option("p", p)->required();

  auto* reduce = app.add_subcommand("reduce", "Remove linear dependences among the frame forms");
  reduce->add_option("path", path, "Frame file")->required();

  auto* scale = app.add_subcommand("scale-reduce", "Diagonal-scaling reduction");
  scale->add_option("path", path, "Frame file")->required();

  auto* cat = app.add_subcommand("catalog", "Write a known frame");
  cat->add_option("field", field_tag)->required();
  cat->add_option("m", m)->required();
  cat->add_option("p", p)->required();
  cat->add_option("kind", kind, "orthonormal-p2 | real2-equiangular | real2-rational-p4")->required();

  for (auto* sub : {verify, dim, reduce, scale, cat}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (verify->parsed()) return cmd_verify(path, cfg);
    if (dim->parsed()) return cmd_dim(field_tag, m, p, cfg);
    if (reduce->parsed()) return cmd_reduce(path, cfg);
    if (scale->parsed()) return cmd_scale_reduce(path, cfg);
    if (cat->parsed()) return cmd_catalog(field_tag, m, p, kind, cfg);
  } catch (const lpembed::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const lpembed::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

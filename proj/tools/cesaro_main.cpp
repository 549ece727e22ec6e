// Command-line driver: every library operation behind one deterministic
// binary. Sequence-transform commands print a bare JSON array so results can
// be piped back through --input; report commands print a JSON object or CSV.
// Exit codes: 0 success, 1 usage or IO failure, 2 violated invariant.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cesaro/bounds.hpp"
#include "cesaro/ergodic.hpp"
#include "cesaro/io.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/spaces.hpp"
#include "cesaro/spectral.hpp"
#include "cesaro/verify.hpp"

namespace {

int g_exit = 0;

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& get() { return *os; }
};

cesaro::Mode parse_mode(const std::string& s) {
  if (s == "float") return cesaro::Mode::Float;
  if (s == "exact") return cesaro::Mode::Exact;
  throw std::invalid_argument("mode must be float or exact");
}

cesaro::Exponent parse_exponent(const std::string& s) {
  if (s == "inf") return cesaro::Exponent::inf();
  return cesaro::Exponent(cesaro::RealParam::parse(s).value);
}

cesaro::SpaceSpec make_space(const std::string& kind, const std::string& p,
                             std::size_t seminorm_index) {
  if (kind == "lp") return cesaro::SpaceSpec::lp(parse_exponent(p));
  if (kind == "ces") return cesaro::SpaceSpec::ces(parse_exponent(p).value());
  if (kind == "dp") return cesaro::SpaceSpec::dp(parse_exponent(p).value());
  if (kind == "omega") return cesaro::SpaceSpec::omega(seminorm_index);
  throw std::invalid_argument("space must be lp, ces, dp, or omega");
}

cesaro::OpKind parse_op(const std::string& s) {
  if (s == "ct") return cesaro::OpKind::Ct;
  if (s == "rt") return cesaro::OpKind::Rt;
  if (s == "dphi") return cesaro::OpKind::Dphi;
  if (s == "shift") return cesaro::OpKind::Shift;
  if (s == "ct-dual") return cesaro::OpKind::CtDual;
  throw std::invalid_argument("op must be ct, rt, dphi, shift, or ct-dual");
}

void write_matrix_json(std::ostream& out, const cesaro::MatrixAny& m,
                       double t) {
  cesaro::JsonWriter w(out);
  const std::size_t n = (m.mode == cesaro::Mode::Float) ? m.f.n : m.q.n;
  w.begin_object();
  w.key("t");
  w.value(t);
  w.key("N");
  w.value(n);
  w.key("mode");
  w.value(m.mode == cesaro::Mode::Float ? "float" : "exact");
  w.key("rows");
  w.begin_array();
  for (std::size_t r = 0; r < n; ++r) {
    w.begin_array();
    for (std::size_t c = 0; c < n; ++c) {
      if (m.mode == cesaro::Mode::Float)
        w.value(m.f.at(r, c));
      else
        w.value(m.q.at(r, c));
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  w.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite truncations of the weighted averaging operator family"};
  app.require_subcommand(1);

  // shared option storage; each subcommand binds the subset it uses
  std::string t_str = "1/2";
  std::string mode_str = "float";
  std::string format = "json";
  std::string input_path;
  std::string output_path;
  std::size_t N = 256;
  std::uint64_t seed = 42;
  std::size_t trials = 200;

  auto add_common = [&](CLI::App* sub, bool with_t = true) {
    if (with_t)
      sub->add_option("--t", t_str, "parameter t in [0,1]; num/den enables exact mode");
    sub->add_option("--mode", mode_str, "float | exact")
        ->check(CLI::IsMember({"float", "exact"}));
    sub->add_option("--output", output_path, "write the report here instead of stdout");
    return sub;
  };

  // ---- apply ----------------------------------------------------------------
  auto* c_apply = add_common(app.add_subcommand(
      "apply", "apply an operator to a sequence; prints the image"));
  std::string op_str = "ct";
  unsigned shift_power = 1;
  c_apply->add_option("--op", op_str, "ct | rt | dphi | shift | ct-dual");
  c_apply->add_option("--shift-power", shift_power, "zeros prepended by shift");
  c_apply->add_option("--input", input_path, "sequence file (JSON array, - for stdin)")
      ->required();
  c_apply->callback([&] {
    const auto mode = parse_mode(mode_str);
    cesaro::OperatorSpec op{parse_op(op_str), cesaro::RealParam::parse(t_str),
                            shift_power};
    const auto x = cesaro::read_sequence_file(input_path, mode);
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(sink.get(), cesaro::apply(op, x));
  });

  // ---- inverse ---------------------------------------------------------------
  auto* c_inverse = add_common(app.add_subcommand(
      "inverse", "apply the two-term inverse of the averaging operator"));
  c_inverse->add_option("--input", input_path, "sequence file")->required();
  c_inverse->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto y = cesaro::read_sequence_file(input_path, mode);
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(
        sink.get(), cesaro::apply_inverse(cesaro::RealParam::parse(t_str), y));
  });

  // ---- resolvent ---------------------------------------------------------------
  auto* c_res = add_common(app.add_subcommand(
      "resolvent", "solve the shifted triangular system at a regular point"));
  std::string nu_str;
  std::string route = "forward";
  double sing_tol = 1e-12;
  c_res->add_option("--nu", nu_str, "spectral parameter: re,im or num/den")
      ->required();
  c_res->add_option("--route", route, "forward | coordinate")
      ->check(CLI::IsMember({"forward", "coordinate"}));
  c_res->add_option("--sing-tol", sing_tol, "rejection radius around diagonal entries");
  c_res->add_option("--input", input_path, "sequence file")->required();
  c_res->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto y = cesaro::read_sequence_file(input_path, mode);
    cesaro::ResolventOptions opt;
    opt.sing_tol = sing_tol;
    const auto t = cesaro::RealParam::parse(t_str);
    const auto nu = cesaro::ComplexParam::parse(nu_str);
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(
        sink.get(),
        cesaro::apply_resolvent(t, nu, y, opt, route == "coordinate"));
  });

  // ---- solve-range ----------------------------------------------------------
  auto* c_solve = add_common(app.add_subcommand(
      "solve-range", "solve (I - C_t) w = y given y_0 = 0, fixing w_0 = 0"));
  double zero_tol = 1e-12;
  c_solve->add_option("--zero-tol", zero_tol, "tolerance on the y_0 = 0 test");
  c_solve->add_option("--input", input_path, "sequence file")->required();
  c_solve->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto y = cesaro::read_sequence_file(input_path, mode);
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(
        sink.get(),
        cesaro::solve_range(cesaro::RealParam::parse(t_str), y, zero_tol));
  });

  // ---- matrix ---------------------------------------------------------------
  auto* c_matrix = add_common(app.add_subcommand(
      "matrix", "dump the N x N truncated operator matrix"));
  std::string matrix_format = "csv";
  c_matrix->add_option("--N", N, "truncation order");
  c_matrix->add_option("--format", matrix_format, "csv | json")
      ->check(CLI::IsMember({"json", "csv"}));
  c_matrix->callback([&] {
    const auto t = cesaro::RealParam::parse(t_str);
    const auto m = cesaro::materialize(t, N, parse_mode(mode_str));
    Sink sink;
    sink.open(output_path);
    if (matrix_format == "csv")
      cesaro::write_matrix_csv(sink.get(), m);
    else
      write_matrix_json(sink.get(), m, t.value);
  });

  // ---- eigvec / dual-eigvec / c1-dual-eigvec -----------------------------------
  auto* c_eig = add_common(app.add_subcommand(
      "eigvec", "eigenvector with eigenvalue 1/(m+1), zeros before m"));
  std::size_t m_index = 0;
  std::string alpha_str = "1";
  c_eig->add_option("--m", m_index, "eigenvalue index");
  c_eig->add_option("--alpha", alpha_str, "scale of the leading coordinate");
  c_eig->add_option("--N", N, "truncation order");
  c_eig->callback([&] {
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(
        sink.get(),
        cesaro::eigvec(m_index, cesaro::RealParam::parse(t_str),
                       cesaro::ComplexParam::parse(alpha_str), N,
                       parse_mode(mode_str)));
  });

  auto* c_dual = add_common(app.add_subcommand(
      "dual-eigvec", "dual eigenvector supported on 0..n, last coordinate 1"));
  std::size_t n_index = 0;
  c_dual->add_option("--index", n_index, "support endpoint n");
  c_dual->callback([&] {
    Sink sink;
    sink.open(output_path);
    cesaro::write_sequence_json(
        sink.get(), cesaro::dual_eigvec(n_index, cesaro::RealParam::parse(t_str),
                                        parse_mode(mode_str)));
  });

  auto* c_c1 = app.add_subcommand(
      "c1-dual-eigvec", "product-formula candidate for the t = 1 dual at z");
  std::string z_str = "1,0";
  bool diagnose = false;
  double q_exp = 2.0;
  c_c1->add_option("--z", z_str, "complex point: re,im")->required();
  c_c1->add_option("--N", N, "truncation order");
  c_c1->add_flag("--diagnose", diagnose, "attach the decay diagnostic");
  c_c1->add_option("--q", q_exp, "summability exponent for the diagnostic");
  c_c1->add_option("--output", output_path, "write the report here instead of stdout");
  c_c1->callback([&] {
    const auto z = cesaro::ComplexParam::parse(z_str);
    const auto x = cesaro::c1_dual_eigvec(z.value, N);
    Sink sink;
    sink.open(output_path);
    if (!diagnose) {
      cesaro::write_sequence_json(sink.get(), cesaro::Sequence(x));
      return;
    }
    const auto d = cesaro::decay_diagnostic(x, q_exp);
    cesaro::JsonWriter w(sink.get());
    w.begin_object();
    w.key("z");
    w.value(z.value);
    w.key("N");
    w.value(N);
    w.key("q");
    w.value(d.q);
    w.key("partial_sum");
    w.value(d.partial_sum);
    w.key("trailing_ratio");
    w.value(d.trailing_ratio);
    w.key("tail_estimate");
    w.value(d.tail_estimate);
    w.key("verdict");
    w.value(d.verdict);
    w.key("coordinates");
    w.begin_array();
    for (const auto& v : x) w.value(v);
    w.end_array();
    w.end_object();
    w.finish();
  });

  // ---- spectrum ----------------------------------------------------------------
  auto* c_spec = add_common(app.add_subcommand(
      "spectrum", "verify the eigenvalue family on the truncation"));
  std::size_t cap = 32;
  double residual_tol = 1e-10;
  c_spec->add_option("--N", N, "truncation order");
  c_spec->add_option("--cap", cap, "number of leading eigenvalues checked");
  c_spec->add_option("--residual-tol", residual_tol, "acceptance threshold (float mode)");
  c_spec->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_spec->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto rep =
        cesaro::verify_spectrum(cesaro::RealParam::parse(t_str), N, mode, cap);
    Sink sink;
    sink.open(output_path);
    if (format == "csv")
      cesaro::write_spectral_csv(sink.get(), rep);
    else
      cesaro::write_spectral_json(sink.get(), rep);
    const bool bad = !rep.diagonal_ok ||
                     (mode == cesaro::Mode::Float
                          ? rep.max_residual > residual_tol
                          : !rep.residuals_exact_zero);
    if (bad) g_exit = 2;
  });

  // ---- identity ----------------------------------------------------------------
  auto* c_ident = app.add_subcommand(
      "identity", "alternating binomial sum identity, exact integers");
  std::size_t max_n = 30;
  c_ident->add_option("--max-n", max_n, "check all n up to this");
  c_ident->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_ident->add_option("--output", output_path, "write the report here instead of stdout");
  c_ident->callback([&] {
    std::vector<bool> verdicts;
    bool all_true = true;
    for (std::size_t n = 0; n <= max_n; ++n) {
      verdicts.push_back(cesaro::binom_identity_check(n));
      if (!verdicts.back()) all_true = false;
    }
    Sink sink;
    sink.open(output_path);
    if (format == "csv") {
      sink.get() << "n,holds\n";
      for (std::size_t n = 0; n < verdicts.size(); ++n)
        sink.get() << n << ',' << (verdicts[n] ? "true" : "false") << '\n';
    } else {
      cesaro::JsonWriter w(sink.get());
      w.begin_object();
      w.key("max_n");
      w.value(max_n);
      w.key("verdicts");
      w.begin_array();
      for (bool v : verdicts) w.value(v);
      w.end_array();
      w.key("all_true");
      w.value(all_true);
      w.end_object();
      w.finish();
    }
    if (!all_true) g_exit = 2;
  });

  // ---- ergodic ----------------------------------------------------------------
  auto* c_erg = add_common(app.add_subcommand(
      "ergodic", "orbit and averaging-stage trace against the rank-one limit"));
  std::size_t steps = 60;
  std::string space_kind = "lp";
  std::string p_str = "inf";
  std::size_t seminorm_index = 0;
  bool seminorm_set = false;
  c_erg->add_option("--N", N, "truncation order");
  c_erg->add_option("--steps", steps, "number of iterations");
  c_erg->add_option("--space", space_kind, "lp | ces | dp | omega");
  c_erg->add_option("--p", p_str, "space exponent; inf allowed for lp");
  c_erg->add_option("--seminorm-index", seminorm_index, "coordinate cap for omega")
      ->each([&](const std::string&) { seminorm_set = true; });
  c_erg->add_option("--input", input_path,
                    "starting sequence (default: first basis vector)");
  c_erg->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_erg->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto x = input_path.empty()
                       ? cesaro::Sequence::basis(mode, 0, N)
                       : cesaro::read_sequence_file(input_path, mode);
    if (!seminorm_set) seminorm_index = x.size() == 0 ? 0 : x.size() - 1;
    const auto space = make_space(space_kind, p_str, seminorm_index);
    const auto tr = cesaro::ergodic_report(cesaro::RealParam::parse(t_str), x,
                                           steps, space);
    Sink sink;
    sink.open(output_path);
    if (format == "csv")
      cesaro::write_trace_csv(sink.get(), tr);
    else
      cesaro::write_trace_json(sink.get(), tr);
    if (!tr.power_bound_ok || !tr.mean_identity_ok) g_exit = 2;
  });

  // ---- bounds ----------------------------------------------------------------
  auto* c_bounds = add_common(app.add_subcommand(
      "bounds", "norm-bound suite: observed trial ratios against closed forms"));
  double p_val = 2.0;
  int shift_m = -1;
  c_bounds->add_option("--p", p_val, "exponent for the ces/dp/lp claims");
  c_bounds->add_option("--N", N, "truncation order");
  c_bounds->add_option("--trials", trials, "random trial vectors per claim");
  c_bounds->add_option("--seed", seed, "trial generator seed");
  c_bounds->add_option("--shift-m", shift_m,
                       "also report shift extremality at this power");
  c_bounds->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_bounds->callback([&] {
    const auto t = cesaro::RealParam::parse(t_str);
    auto reports = cesaro::bound_suite(t.value, p_val, N, trials, seed);
    if (shift_m >= 0)
      reports.push_back(cesaro::shift_dp_extremality(
          static_cast<unsigned>(shift_m), p_val, N, trials, seed));
    Sink sink;
    sink.open(output_path);
    if (format == "csv")
      cesaro::write_bounds_csv(sink.get(), reports);
    else
      cesaro::write_bounds_json(sink.get(), reports);
    for (const auto& r : reports)
      if (r.verdict == cesaro::Verdict::Violated) g_exit = 2;
  });

  // ---- norms ----------------------------------------------------------------
  auto* c_norms = app.add_subcommand(
      "norms", "norms, ladders, majorant, and ratio estimates of a sequence");
  std::string ladder_family;
  std::string ladder_base = "2";
  std::string ladder_direction = "plus";
  std::size_t ladder_count = 4;
  bool want_majorant = false;
  std::size_t ratio_window = 0;
  c_norms->add_option("--input", input_path, "sequence file")->required();
  c_norms->add_option("--mode", mode_str, "float | exact")
      ->check(CLI::IsMember({"float", "exact"}));
  c_norms->add_option("--space", space_kind, "lp | ces | dp | omega");
  c_norms->add_option("--p", p_str, "space exponent; inf allowed for lp");
  c_norms->add_option("--seminorm-index", seminorm_index, "coordinate cap for omega");
  c_norms->add_option("--ladder-family", ladder_family, "lp | ces | dp");
  c_norms->add_option("--ladder-base", ladder_base, "base exponent; inf allowed");
  c_norms->add_option("--ladder-direction", ladder_direction, "plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  c_norms->add_option("--ladder-count", ladder_count, "number of rungs");
  c_norms->add_flag("--majorant", want_majorant,
                    "print the least decreasing majorant instead");
  c_norms->add_option("--ratio-window", ratio_window,
                      "trailing window for the successive-ratio mean");
  c_norms->add_option("--output", output_path, "write the report here instead of stdout");
  c_norms->callback([&] {
    const auto mode = parse_mode(mode_str);
    const auto x = cesaro::read_sequence_file(input_path, mode);
    Sink sink;
    sink.open(output_path);
    if (want_majorant) {
      cesaro::write_sequence_json(sink.get(), cesaro::majorant(x));
      return;
    }
    cesaro::JsonWriter w(sink.get());
    if (ratio_window > 0) {
      w.begin_object();
      w.key("window");
      w.value(ratio_window);
      w.key("ratio");
      w.value(cesaro::ratio_beta(x, ratio_window));
      w.end_object();
      w.finish();
      return;
    }
    if (!ladder_family.empty()) {
      cesaro::LadderSpec lad;
      lad.family = make_space(ladder_family, "2", 0).kind;
      lad.base = parse_exponent(ladder_base);
      lad.direction = ladder_direction == "plus"
                          ? cesaro::LadderDirection::Plus
                          : cesaro::LadderDirection::Minus;
      lad.count = ladder_count;
      const auto exps = lad.exponents();
      const auto vals = cesaro::ladder_norms(x, lad);
      w.begin_object();
      w.key("family");
      w.value(ladder_family);
      w.key("direction");
      w.value(ladder_direction);
      w.key("exponents");
      w.begin_array();
      for (double e : exps) w.value(e);
      w.end_array();
      w.key("norms");
      w.begin_array();
      for (double v : vals) w.value(v);
      w.end_array();
      w.end_object();
      w.finish();
      return;
    }
    const auto space = make_space(space_kind, p_str, seminorm_index);
    w.begin_object();
    w.key("space");
    w.value(space.name());
    w.key("norm");
    w.value(cesaro::norm(x, space));
    w.end_object();
    w.finish();
  });

  // ---- verify ----------------------------------------------------------------
  auto* c_verify = app.add_subcommand(
      "verify", "run the numbered acceptance checks; one line per check");
  int criterion = 0;
  std::string suite = "all";
  std::string verify_format = "text";
  c_verify->add_option("--criterion", criterion, "run a single check by id (1..11)");
  c_verify->add_option("--suite", suite, "all (default)")
      ->check(CLI::IsMember({"all"}));
  c_verify->add_option("--format", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  c_verify->add_option("--output", output_path, "write the report here instead of stdout");
  c_verify->callback([&] {
    std::vector<cesaro::verify::CheckResult> results;
    if (criterion > 0)
      results.push_back(cesaro::verify::run_one(criterion));
    else
      results = cesaro::verify::run_all();
    bool all_pass = true;
    Sink sink;
    sink.open(output_path);
    if (verify_format == "json") {
      cesaro::JsonWriter w(sink.get());
      w.begin_object();
      w.key("checks");
      w.begin_array();
      for (const auto& c : results) {
        all_pass = all_pass && c.pass;
        w.begin_object();
        w.key("id");
        w.value(static_cast<std::uint64_t>(c.id));
        w.key("name");
        w.value(c.name);
        w.key("pass");
        w.value(c.pass);
        w.key("detail");
        w.value(c.detail);
        w.end_object();
      }
      w.end_array();
      w.key("all_pass");
      w.value(all_pass);
      w.end_object();
      w.finish();
    } else {
      for (const auto& c : results) {
        all_pass = all_pass && c.pass;
        sink.get() << (c.pass ? "PASS" : "FAIL") << ' ' << c.id << ' '
                   << c.name << ": " << c.detail << '\n';
      }
    }
    if (!all_pass) g_exit = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::domain_error& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return g_exit;
}

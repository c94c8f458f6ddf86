#include "dwigner/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dwigner/channels.hpp"
#include "dwigner/io.hpp"
#include "dwigner/verify.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner::cli {

namespace {

struct Options {
  int n = 0;
  std::string state;
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 0;
  int steps = 1;
  std::string unitary = "fourier";
  std::string kraus;
  std::string table;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Failures that carry their own exit code.
struct Failure {
  int code;
  std::string message;
};

double tolerance_scale() {
  const char* raw = std::getenv("DWIGNER_TOL");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw Failure{kInputError, "DWIGNER_TOL must be a positive number"};
  return v;
}

void require_even_n(int n) {
  if (n < 2 || n % 2 != 0) throw Failure{kInputError, "N must be even"};
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(v) < 5e-16 ? 0.0 : v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_number(values[i]);
  }
  return s;
}

void print_summary(std::ostream& os, const WignerTable& table) {
  os << "sum: " << format_number(table.sum()) << '\n';
  os << "position marginal: " << join(marginal_position(table)) << '\n';
  os << "momentum marginal: " << join(marginal_momentum(table)) << '\n';
}

std::string render(const WignerTable& table, const std::string& format) {
  if (format == "csv") return io::format_table_csv(table);
  if (format == "json") return io::table_to_json(table).dump(2) + "\n";
  return io::format_table_pgm(table);
}

void emit_table(const Options& o, const Streams& s, const WignerTable& table) {
  const std::string body = render(table, o.format);
  if (o.output.empty()) {
    s.out << body;
    print_summary(s.err, table);
  } else {
    io::write_text_file(o.output, body);
    print_summary(s.out, table);
  }
}

void emit_text(const Options& o, const Streams& s, const std::string& body) {
  if (o.output.empty()) {
    s.out << body;
  } else {
    io::write_text_file(o.output, body);
  }
}

DensityOperator load_state(const Options& o) {
  if (o.state.empty()) throw Failure{kInputError, "--state is required"};
  return density_from_spec(io::parse_state_spec(o.state), o.n);
}

WignerTable load_table(const Options& o, double scale) {
  WignerTable table = io::read_table_file(o.table);
  if (o.n != 0 && o.n != table.n()) throw Failure{kInputError, "table dimension differs from --n"};
  const double residual = symmetry_residual(table);
  if (residual > tol::kConsistency * scale)
    throw Failure{kConsistencyError, "table violates the symmetry relation (residual " + format_number(residual) + ")"};
  return table;
}

int cmd_wigner(const Options& o, const Streams& s) {
  require_even_n(o.n);
  emit_table(o, s, wigner_table(load_state(o)));
  return kSuccess;
}

int cmd_marginals(const Options& o, const Streams& s, double scale) {
  WignerTable table = WignerTable::zero(2);
  if (!o.table.empty()) {
    table = load_table(o, scale);
  } else {
    require_even_n(o.n);
    table = wigner_table(load_state(o));
  }
  s.out << "position: " << join(marginal_position(table)) << '\n';
  s.out << "momentum: " << join(marginal_momentum(table)) << '\n';
  return kSuccess;
}

int cmd_evolve(const Options& o, const Streams& s, double scale) {
  require_even_n(o.n);
  if (o.steps < 1) throw Failure{kInputError, "--steps must be positive"};
  const DensityOperator rho = load_state(o);
  const UnitaryMatrix u = o.unitary == "fourier" ? fourier_matrix(o.n)
                                                 : UnitaryMatrix(io::read_matrix_file(o.unitary), tol::kEigen * scale);
  if (u.dim() != o.n) throw Failure{kInputError, "unitary dimension differs from --n"};
  emit_table(o, s, unitary_propagator(u).apply(wigner_table(rho), o.steps));
  return kSuccess;
}

int cmd_channel(const Options& o, const Streams& s) {
  require_even_n(o.n);
  if (o.kraus.empty()) throw Failure{kInputError, "--kraus is required"};
  const KrausChannel channel = io::read_channel_file(o.kraus);
  emit_table(o, s, channel_wigner(channel, load_state(o)));
  return kSuccess;
}

int cmd_reconstruct(const Options& o, const Streams& s, double scale) {
  if (o.table.empty()) throw Failure{kInputError, "--table is required"};
  const WignerTable table = load_table(o, scale);
  const DensityOperator rho(reconstruct_operator(table), tol::kEigen * scale);
  emit_text(o, s, io::density_to_json(rho.matrix()).dump(2) + "\n");
  return kSuccess;
}

int cmd_verify(const Options& o, const Streams& s, double scale) {
  if (o.n != 2 && o.n != 4 && o.n != 6 && o.n != 8) {
    if (o.n % 2 != 0) throw Failure{kInputError, "N must be even"};
    throw Failure{kInputError, "verify supports N in {2, 4, 6, 8}"};
  }
  const auto results = verify::run_suite(o.n, o.seed, scale);
  const verify::CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-52s measured=%.3e %s %.1e", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.measured, r.lower_bound ? ">" : "<=", r.threshold);
    s.out << line << '\n';
    if (!r.pass && first_failure == nullptr) first_failure = &r;
  }
  if (first_failure != nullptr) {
    s.err << "invariant failed: " << first_failure->name << '\n';
    return kInvariantFailure;
  }
  s.out << "all " << results.size() << " invariants pass (N=" << o.n << ", seed=" << o.seed << ")\n";
  return kSuccess;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentTable:
    case ErrorCode::NonHermitianResult:
      return kConsistencyError;
    default:
      return kInputError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Streams streams{out, err};
  Options o;
  CLI::App app{"Discrete Wigner functions on the 2N x 2N phase-space lattice"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", o.n, "Hilbert space dimension (even)");
    if (required) opt->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv, json or pgm")->check(CLI::IsMember({"csv", "json", "pgm"}));
    sub->add_option("-o,--output", o.output, "output file (default: stdout)");
  };
  const char* state_help = "ket:<q0>, sup:<q0>,<q1>,<phi> or file:<density.json>";

  auto* wigner = app.add_subcommand("wigner", "compute the Wigner table of a state");
  add_n(wigner, true);
  wigner->add_option("--state", o.state, state_help)->required();
  add_output(wigner);

  auto* marginals = app.add_subcommand("marginals", "print position and momentum marginals");
  add_n(marginals, false);
  marginals->add_option("--state", o.state, state_help);
  marginals->add_option("--table", o.table, "Wigner table file (CSV or JSON)");

  auto* evolve = app.add_subcommand("evolve", "propagate a Wigner table under a unitary");
  add_n(evolve, true);
  evolve->add_option("--state", o.state, state_help)->required();
  evolve->add_option("--unitary", o.unitary, "'fourier' or a matrix JSON file");
  evolve->add_option("--steps", o.steps, "number of applications");
  add_output(evolve);

  auto* channel = app.add_subcommand("channel", "apply a Kraus channel once");
  add_n(channel, true);
  channel->add_option("--state", o.state, state_help)->required();
  channel->add_option("--kraus", o.kraus, "Kraus channel JSON file")->required();
  add_output(channel);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "density matrix JSON from a Wigner table");
  add_n(reconstruct_cmd, false);
  reconstruct_cmd->add_option("--table", o.table, "Wigner table file (CSV or JSON)")->required();
  reconstruct_cmd->add_option("-o,--output", o.output, "output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  add_n(verify_cmd, true);
  verify_cmd->add_option("--seed", o.seed, "seed of the random inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kInputError;
  }

  try {
    const double scale = tolerance_scale();
    if (wigner->parsed()) return cmd_wigner(o, streams);
    if (marginals->parsed()) return cmd_marginals(o, streams, scale);
    if (evolve->parsed()) return cmd_evolve(o, streams, scale);
    if (channel->parsed()) return cmd_channel(o, streams);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(o, streams, scale);
    if (verify_cmd->parsed()) return cmd_verify(o, streams, scale);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace dwigner::cli

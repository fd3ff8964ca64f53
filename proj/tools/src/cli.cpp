// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qcc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qcc/channel.hpp"
#include "qcc/conjugate.hpp"
#include "qcc/ebt.hpp"
#include "qcc/error.hpp"
#include "qcc/gl.hpp"
#include "qcc/io.hpp"
#include "qcc/pauli.hpp"
#include "qcc/purity.hpp"
#include "qcc/random.hpp"
#include "qcc/verify.hpp"

namespace qcc::cli {

namespace {

constexpr double kRelateTol = 1e-8;

struct Globals {
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int restarts = 32;
  std::string threads = "1";
  std::string format = "json";
  std::string out;
  bool timings = false;
};

struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  double seconds = 0.0;
  bool pass = true;

  void check(const std::string& name, bool ok, Json detail = Json::object()) {
    Json c;
    c["name"] = name;
    c["pass"] = ok;
    for (auto& [k, v] : detail.items()) c[k] = v;
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string scalar_text(const Json& j) {
  if (j.is_number_float()) return fmt_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "." + std::to_string(i), rows);
    }
  } else {
    rows.emplace_back(prefix, scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const Report& r, const Globals& g) {
  Json doc;
  doc["command"] = r.command;
  doc["config"] = r.config;
  doc["results"] = r.results;
  if (!r.checks.empty()) {
    doc["checks"] = r.checks;
    doc["pass"] = r.pass;
  }
  if (g.timings) doc["timings"] = {{"total_seconds", r.seconds}};
  if (g.format == "json") return doc.dump(2) + "\n";

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  flatten(r.config, "config", rows);
  flatten(r.results, "results", rows);
  for (const auto& c : r.checks) {
    std::string detail;
    for (const auto& [k, v] : c.items()) {
      if (k == "name" || k == "pass") continue;
      if (!detail.empty()) detail += "; ";
      detail += k + "=" + scalar_text(v);
    }
    rows.emplace_back("check." + c["name"].get<std::string>(),
                      std::string(c["pass"].get<bool>() ? "PASS" : "FAIL") +
                          (detail.empty() ? "" : " " + detail));
  }
  if (!r.checks.empty()) rows.emplace_back("pass", r.pass ? "true" : "false");
  if (g.timings) rows.emplace_back("timings.total_seconds", fmt_double(r.seconds));

  std::ostringstream os;
  if (g.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
  }
  return os.str();
}

int resolve_threads(const Globals& g) {
  std::string spec = g.threads;
  if (const char* env = std::getenv("QCC_THREADS"); env != nullptr && *env) {
    spec = env;
  }
  if (spec == "auto") {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  try {
    const int n = std::stoi(spec);
    if (n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw ValidationError("threads must be a positive integer or 'auto'");
}

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInf;
  try {
    std::size_t pos = 0;
    const double p = std::stod(s, &pos);
    if (pos == s.size() && p >= 1.0) return p;
  } catch (const std::exception&) {
  }
  throw ValidationError("p must be a number >= 1 or 'inf', got '" + s + "'");
}

Json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

Json real_vector_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json complex_list_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

PurityOptions purity_options(const Globals& g, int threads) {
  PurityOptions opts;
  opts.seed = g.seed;
  opts.tol = g.tol;
  opts.restarts = g.restarts;
  opts.threads = threads;
  return opts;
}

Json purity_json(const PurityReport& r) {
  Json out;
  out["value"] = r.value;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  out["restarts"] = r.restarts;
  out["optimizer_state"] = vector_to_json(r.optimizer_state);
  return out;
}

LoadedChannel load_channel(const std::string& path) {
  return any_channel_from_json(read_json_file(path));
}

Matrix load_state_matrix(const std::string& rho_path,
                         const std::string& state_path, int d, Rng& rng) {
  if (!rho_path.empty()) return matrix_from_json(read_json_file(rho_path));
  if (!state_path.empty()) {
    return projector(vector_from_json(read_json_file(state_path)));
  }
  return projector(random_pure_state(d, rng));
}

void require_dim(const Matrix& m, int d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw DimensionError(std::string(what) + " must be " + std::to_string(d) +
                         "x" + std::to_string(d));
  }
}

const PauliDiagonalChannel& require_pauli(const LoadedChannel& ch) {
  if (!ch.pauli) {
    throw ValidationError("this command needs a Pauli-diagonal channel");
  }
  return *ch.pauli;
}

const EBTChannel& require_ebt(const LoadedChannel& ch) {
  if (!ch.ebt) throw ValidationError("this command needs an EBT channel");
  return *ch.ebt;
}

Json indices_json(const PauliBasis& basis, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int m : idx) out.push_back(basis.name(m));
  return out;
}

// Output sink shared by every command.
struct Sink {
  const Globals& g;
  std::ostream& out;

  void write(const std::string& text) const {
    if (g.out.empty()) {
      out << text;
    } else {
      write_text_file(g.out, text);
    }
  }
};

struct BuildArgs {
  std::string kind;
  int d = 2;
  int d_out = 0;
  int kraus = 2;
  double b = 0.0;
  double s = 1.0;
  double u = 0.0;
  bool has_u = false;
  std::vector<double> weights;
  std::vector<std::string> axes;
  std::string basis = "pauli";
};

LoadedChannel build_channel(const BuildArgs& a, const Globals& g) {
  Rng rng(g.seed);
  const int d_out = a.d_out > 0 ? a.d_out : a.d;
  auto pauli = [](PauliDiagonalChannel p) {
    KrausChannel k = p.channel();
    return LoadedChannel{std::move(k), std::move(p), std::nullopt};
  };
  auto ebt = [](EBTChannel e) {
    KrausChannel k = e.channel();
    return LoadedChannel{std::move(k), std::nullopt, std::move(e)};
  };
  const std::string& kind = a.kind;
  if (kind == "identity") {
    return LoadedChannel{identity_channel(a.d), std::nullopt, std::nullopt};
  }
  if (kind == "random") {
    return LoadedChannel{random_channel(a.d, d_out, a.kraus, rng), std::nullopt,
                         std::nullopt};
  }
  if (kind == "ebt") return ebt(random_ebt(a.d, d_out, a.kraus, rng));
  if (kind == "cq") return ebt(random_extreme_cq(a.d, d_out, rng));

  const PauliBasis basis = basis_from_descriptor(a.basis, a.d);
  const int n = basis.size();
  if (kind == "noisy") {
    return pauli(PauliDiagonalChannel(basis, std::vector<double>(n, 1.0 / n)));
  }
  if (kind == "depolarizing") return pauli(depolarizing(basis, a.b));
  if (kind == "pauli") return pauli(PauliDiagonalChannel(basis, a.weights));
  if (kind == "axes") {
    std::vector<Axis> axes;
    double rest = 1.0 - a.s;
    for (const std::string& spec : a.axes) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) {
        throw ValidationError("axis must be GENERATOR:T, got '" + spec + "'");
      }
      Axis axis{std::stoi(spec.substr(0, colon)), std::stod(spec.substr(colon + 1))};
      rest -= axis.t;
      axes.push_back(axis);
    }
    return pauli(axes_channel(basis, a.s, axes, a.has_u ? a.u : rest));
  }
  throw ValidationError("unknown channel kind '" + kind + "'");
}

KrausChannel conjugate_by(const KrausChannel& ch, const std::string& method) {
  if (method == "kraus") return conjugate_kraus(ch);
  if (method == "choi") return choi_to_kraus(conjugate_choi(kraus_to_choi(ch)));
  if (method == "ancilla") return conjugate_ancilla(kraus_to_ancilla(ch));
  throw ValidationError("unknown conjugation method '" + method + "'");
}

// Relates two channels and reports the residual on err; false on mismatch.
bool relate_and_report(const KrausChannel& a, const KrausChannel& b,
                       const std::string& label, std::ostream& err) {
  try {
    const KrausRelation rel = find_relating_isometry(a, b, kRelateTol);
    err << "relating isometry residual vs " << label << ": "
        << fmt_double(rel.residual) << " (rank " << rel.rank << ")\n";
    return true;
  } catch (const MismatchError& e) {
    err << "relating isometry vs " << label << " failed: " << e.what() << "\n";
    return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Globals g;
  CLI::App app{"Quantum channels, conjugate channels and output purity", "qcc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Numerical tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--restarts", g.restarts, "Optimizer restarts")
      ->capture_default_str()
      ->check(CLI::Range(1, 1 << 20));
  app.add_option("--threads", g.threads, "Worker threads or 'auto'")
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "Write output to this file");
  app.add_flag("--timings", g.timings, "Include wall-clock timings");

  Report report;
  // The action selected by the parsed subcommand. Returns the exit code.
  std::function<int(const Sink&)> action;
  auto sub = [&](CLI::App* parent, const std::string& name,
                 const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  std::chrono::steady_clock::time_point started;
  auto finish_report = [&](const Sink& sink) {
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    sink.write(render(report, g));
    return report.pass ? kOk : kVerifyFailed;
  };
  auto base_config = [&](bool random) {
    report.config["tol"] = g.tol;
    if (random) report.config["seed"] = g.seed;
  };

  // build
  BuildArgs build;
  {
    CLI::App* s = sub(&app, "build", "Construct a channel and print its JSON");
    s->add_option("kind", build.kind, "Channel family")
        ->required()
        ->check(CLI::IsMember({"identity", "noisy", "depolarizing", "pauli",
                               "ebt", "cq", "axes", "random"}));
    s->add_option("-d,--din", build.d, "Input dimension")->capture_default_str();
    s->add_option("--dout", build.d_out, "Output dimension (default: d)");
    s->add_option("--kraus", build.kraus, "Kraus count")->capture_default_str();
    s->add_option("-b", build.b, "Depolarizing parameter");
    s->add_option("--weights", build.weights, "Pauli weights")->delimiter(',');
    s->add_option("--basis", build.basis, "pauli or pauli_product:[d1,d2]")
        ->capture_default_str();
    s->add_option("-s", build.s, "Identity coefficient for axes");
    s->add_option("--axis", build.axes, "Axis as GENERATOR:T (repeatable)");
    CLI::Option* u = s->add_option("-u", build.u, "Completely-noisy weight");
    s->callback([&, u] {
      build.has_u = u->count() > 0;
      action = [&](const Sink& sink) {
        sink.write(any_channel_to_json(build_channel(build, g)).dump(2) + "\n");
        return kOk;
      };
    });
  }

  // conjugate
  std::string in_path, method = "kraus", against_path;
  bool check_routes = false;
  {
    CLI::App* s = sub(&app, "conjugate", "Conjugate (complementary) channel");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->add_option("--method", method, "kraus, choi or ancilla")
        ->capture_default_str()
        ->check(CLI::IsMember({"kraus", "choi", "ancilla"}));
    s->add_flag("--check", check_routes,
                "Relate the result to the other conjugation methods");
    s->add_option("--against", against_path,
                  "Relate the result to the channel in this file");
    s->callback([&] {
      action = [&](const Sink& sink) {
        const KrausChannel ch = load_channel(in_path).kraus;
        const KrausChannel conj = conjugate_by(ch, method);
        bool ok = true;
        if (check_routes) {
          for (const char* other : {"kraus", "choi", "ancilla"}) {
            if (other == method) continue;
            ok = relate_and_report(conj, conjugate_by(ch, other), other, err) && ok;
          }
        }
        if (!against_path.empty()) {
          ok = relate_and_report(conj, load_channel(against_path).kraus,
                                 against_path, err) &&
               ok;
        }
        sink.write(channel_to_json(conj).dump(2) + "\n");
        return ok ? kOk : kVerifyFailed;
      };
    });
  }

  // apply
  std::string rho_path, state_path;
  {
    CLI::App* s = sub(&app, "apply", "Apply a channel to a state");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->add_option("--rho", rho_path, "Density matrix JSON");
    s->add_option("--state", state_path, "Pure state vector JSON");
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "apply";
        const KrausChannel ch = load_channel(in_path).kraus;
        Rng rng(g.seed);
        const Matrix rho = load_state_matrix(rho_path, state_path, ch.d_in(), rng);
        require_dim(rho, ch.d_in(), "input state");
        base_config(rho_path.empty() && state_path.empty());
        report.config["in"] = in_path;
        const Matrix output = apply_channel(ch, rho);
        report.results["input"] = matrix_to_json(rho);
        report.results["output"] = matrix_to_json(output);
        report.results["output_eigenvalues"] =
            real_vector_json(eigenvalues_hermitian(output));
        return finish_report(sink);
      };
    });
  }

  // choi
  {
    CLI::App* s = sub(&app, "choi", "Normalized Choi matrix of a channel");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "choi";
        base_config(false);
        report.config["in"] = in_path;
        const KrausChannel ch = load_channel(in_path).kraus;
        const ChoiMatrix choi = kraus_to_choi(ch);
        report.results["d_in"] = choi.d_in;
        report.results["d_out"] = choi.d_out;
        report.results["kraus_rank"] = kraus_rank(ch);
        report.results["gamma"] = matrix_to_json(choi.gamma);
        return finish_report(sink);
      };
    });
  }

  // nu, smin
  std::string p_text = "2";
  std::string log_base = "2";
  {
    CLI::App* s = sub(&app, "nu", "Maximal output p-norm");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->add_option("-p", p_text, "Order p (number >= 1 or inf)")->capture_default_str();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "nu";
        const double p = parse_p(p_text);
        base_config(true);
        report.config["restarts"] = g.restarts;
        report.config["in"] = in_path;
        report.config["p"] = p_to_json(p);
        const KrausChannel ch = load_channel(in_path).kraus;
        report.results = purity_json(nu_p(ch, p, purity_options(g, resolve_threads(g))));
        return finish_report(sink);
      };
    });
  }
  {
    CLI::App* s = sub(&app, "smin", "Minimal output entropy");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->add_option("--base", log_base, "Logarithm base: 2 or e")
        ->capture_default_str()
        ->check(CLI::IsMember({"2", "e"}));
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "smin";
        base_config(true);
        report.config["restarts"] = g.restarts;
        report.config["in"] = in_path;
        report.config["base"] = log_base;
        const KrausChannel ch = load_channel(in_path).kraus;
        PurityOptions opts = purity_options(g, resolve_threads(g));
        opts.base = log_base == "e" ? LogBase::E : LogBase::Two;
        report.results = purity_json(s_min(ch, opts));
        return finish_report(sink);
      };
    });
  }

  // mult
  std::string a_path, b_path;
  {
    CLI::App* s = sub(&app, "mult", "Multiplicativity or additivity gap of a pair");
    s->add_option("--a", a_path, "First channel JSON")->required();
    s->add_option("--b", b_path, "Second channel JSON")->required();
    s->add_option("-p", p_text, "Order p, or 'entropy' for S_min additivity")
        ->capture_default_str();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "mult";
        base_config(true);
        report.config["restarts"] = g.restarts;
        report.config["a"] = a_path;
        report.config["b"] = b_path;
        const KrausChannel a = load_channel(a_path).kraus;
        const KrausChannel b = load_channel(b_path).kraus;
        const PurityOptions opts = purity_options(g, resolve_threads(g));
        GapReport gap;
        if (p_text == "entropy") {
          report.config["p"] = "entropy";
          gap = additivity_gap_entropy(a, b, opts);
        } else {
          const double p = parse_p(p_text);
          report.config["p"] = p_to_json(p);
          gap = multiplicativity_gap(a, b, p, opts);
        }
        report.results["product_value"] = gap.lhs;
        report.results["product_of_values"] = gap.rhs;
        report.results["gap"] = gap.gap;
        report.results["violation_witness"] =
            gap.witness_state ? vector_to_json(*gap.witness_state) : Json(nullptr);
        return finish_report(sink);
      };
    });
  }

  // capacity
  {
    CLI::App* s = sub(&app, "capacity", "Holevo capacity of a Pauli-diagonal channel");
    s->add_option("--in", in_path, "Pauli channel JSON")->required();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "capacity";
        base_config(true);
        report.config["restarts"] = g.restarts;
        report.config["in"] = in_path;
        const LoadedChannel ch = load_channel(in_path);
        const PauliDiagonalChannel& p = require_pauli(ch);
        const PurityOptions opts = purity_options(g, resolve_threads(g));
        report.results["capacity_bits"] = holevo_capacity_weyl(p, opts);
        report.results["s_min_bits"] = s_min(p.channel(), opts).value;
        return finish_report(sink);
      };
    });
  }

  // pauli
  int dim = 2;
  int power = 2;
  std::string basis_desc = "pauli";
  {
    CLI::App* grp = sub(&app, "pauli", "Pauli-diagonal channel tools");
    grp->require_subcommand(1);

    CLI::App* s = sub(grp, "lambda", "Eigenvalues of a Pauli-diagonal channel");
    s->add_option("--in", in_path, "Pauli channel JSON")->required();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "pauli lambda";
        report.config["in"] = in_path;
        const LoadedChannel ch = load_channel(in_path);
        const PauliDiagonalChannel& p = require_pauli(ch);
        report.results["labels"] = Json::array();
        for (int m = 0; m < p.basis().size(); ++m) {
          report.results["labels"].push_back(p.basis().name(m));
        }
        report.results["lambda"] = complex_list_json(lambda_spectrum(p));
        return finish_report(sink);
      };
    });

    s = sub(grp, "ncimage", "Image of a state under the conjugate of the noisy channel");
    s->add_option("-d", dim, "Dimension")->capture_default_str();
    s->add_option("--rho", rho_path, "Density matrix JSON");
    s->add_option("--state", state_path, "Pure state vector JSON");
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "pauli ncimage";
        Rng rng(g.seed);
        const Matrix rho = load_state_matrix(rho_path, state_path, dim, rng);
        require_dim(rho, dim, "state");
        base_config(rho_path.empty() && state_path.empty());
        report.config["d"] = dim;
        const NcImage img = noisy_conjugate_image(build_basis(dim), rho);
        const NcProperties props = nc_properties(img.matrix, dim);
        report.results["state"] = matrix_to_json(rho);
        report.results["image"] = matrix_to_json(img.matrix);
        report.results["projector_defect"] = props.projector_defect;
        report.results["projector_rank"] = props.projector_rank;
        report.results["diagonal_defect"] = props.diagonal_defect;
        report.results["entry_excess"] = props.entry_excess;
        report.results["doubly_stochastic_defect"] = props.doubly_stochastic_defect;
        if (std::abs(rho.trace().real() - 1.0) < 1e-10 &&
            std::abs(schatten_norm(rho, 2.0) - 1.0) < 1e-10) {
          report.check("pure_state_image_properties", props.holds(dim, g.tol));
        }
        return finish_report(sink);
      };
    });

    s = sub(grp, "bound", "Upper bounds on the maximal output p-norm");
    s->add_option("--in", in_path, "Pauli channel JSON")->required();
    s->add_option("-p", p_text, "Order p (number >= 1 or inf)")->capture_default_str();
    s->add_option("-r", power, "Tensor power for the p=inf certificate")
        ->capture_default_str()
        ->check(CLI::Range(2, 64));
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "pauli bound";
        const double p = parse_p(p_text);
        report.config["in"] = in_path;
        report.config["p"] = p_to_json(p);
        const LoadedChannel ch = load_channel(in_path);
        const PauliDiagonalChannel& pc = require_pauli(ch);
        const MajorizationBound mb = majorization_bound(pc, p);
        Json maj;
        maj["bound"] = mb.bound;
        maj["beta"] = mb.beta;
        maj["partition"] = Json::array();
        for (const auto& block : mb.partition) {
          maj["partition"].push_back(indices_json(pc.basis(), block));
        }
        maj["ambiguous_partition"] = mb.ambiguous_partition;
        maj["attaining_subgroup"] =
            mb.attaining_subgroup ? indices_json(pc.basis(), *mb.attaining_subgroup)
                                  : Json(nullptr);
        report.results["majorization"] = maj;
        if (p == 2.0) {
          const Nu2Bound nb = nu2_bound(pc);
          Json nu2;
          nu2["bound"] = nb.bound;
          nu2["argmax"] = pc.basis().name(nb.argmax);
          nu2["witness_state"] =
              nb.witness_state ? vector_to_json(*nb.witness_state) : Json(nullptr);
          nu2["witness_value"] = nb.witness_value;
          report.results["nu2"] = nu2;
        }
        if (std::isinf(p)) {
          report.config["r"] = power;
          const InfinityCheck ic = p_infty_multiplicativity_check(pc, power);
          report.results["infinity_certificate"] = {
              {"subgroup_ok", ic.subgroup_ok},
              {"inequality_ok", ic.inequality_ok},
              {"certified", ic.certified},
              {"conclusion", ic.conclusion}};
        }
        return finish_report(sink);
      };
    });

    s = sub(grp, "subgroup", "Pauli subgroup supporting a state");
    s->add_option("-d", dim, "Dimension")->capture_default_str();
    s->add_option("--basis", basis_desc, "pauli or pauli_product:[d1,d2]")
        ->capture_default_str();
    s->add_option("--rho", rho_path, "Density matrix JSON");
    s->add_option("--state", state_path, "Pure state vector JSON");
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "pauli subgroup";
        Rng rng(g.seed);
        const Matrix rho = load_state_matrix(rho_path, state_path, dim, rng);
        require_dim(rho, dim, "state");
        base_config(rho_path.empty() && state_path.empty());
        report.config["d"] = dim;
        report.config["basis"] = basis_desc;
        const PauliBasis basis = basis_from_descriptor(basis_desc, dim);
        const SubgroupReport sg = subgroup_of_support(basis, rho, g.tol);
        report.results["order"] = sg.order;
        report.results["generators"] = indices_json(basis, sg.generator_indices);
        report.results["subgroup"] = indices_json(basis, sg.subgroup_indices);
        report.results["cosets"] = Json::array();
        for (const auto& c : sg.cosets) {
          report.results["cosets"].push_back(indices_json(basis, c));
        }
        return finish_report(sink);
      };
    });

    s = sub(grp, "classify", "Classify a two-party state as product or maximally entangled");
    s->add_option("-d", dim, "Prime dimension of each factor")->capture_default_str();
    s->add_option("--state", state_path, "State vector JSON of length d^2");
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "pauli classify";
        Rng rng(g.seed);
        const Vector psi = state_path.empty()
                               ? random_pure_state(dim * dim, rng)
                               : vector_from_json(read_json_file(state_path));
        base_config(state_path.empty());
        report.config["d"] = dim;
        const ProductOrMe c = classify_product_or_me(
            product_basis(build_basis(dim), build_basis(dim)), psi);
        report.results["d2_decomposable"] = c.d2_decomposable;
        report.results["class"] = to_string(c.state_class);
        report.results["schmidt"] = c.schmidt;
        return finish_report(sink);
      };
    });
  }

  // ebt
  {
    CLI::App* grp = sub(&app, "ebt", "Entanglement-breaking and Hadamard channel tools");
    grp->require_subcommand(1);

    CLI::App* s = sub(grp, "conjugate", "Conjugate of an EBT channel");
    s->add_option("--in", in_path, "EBT channel JSON")->required();
    s->callback([&] {
      action = [&](const Sink& sink) {
        const LoadedChannel ch = load_channel(in_path);
        const EbtConjugate c = conjugate_ebt(require_ebt(ch));
        sink.write(channel_to_json(c.channel).dump(2) + "\n");
        return kOk;
      };
    });

    s = sub(grp, "detect", "Test whether a channel has Hadamard form");
    s->add_option("--in", in_path, "Channel JSON")->required();
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "ebt detect";
        base_config(false);
        report.config["in"] = in_path;
        const KrausChannel ch = load_channel(in_path).kraus;
        const HadamardDetection h = is_hadamard_form(ch, std::max(g.tol, 1e-8));
        report.results["verdict"] = to_string(h.verdict);
        report.results["orthonormal_frame"] = h.orthonormal_frame;
        report.results["worst_ratio"] = h.worst_ratio;
        if (h.verdict != Verdict::No) report.results["gram"] = matrix_to_json(h.gram);
        const EbtReconstruction e = as_ebt(ch, std::max(g.tol, 1e-8));
        report.results["entanglement_breaking_form"] = e.rank_one;
        return finish_report(sink);
      };
    });
  }

  // gl
  int p_int = 2;
  {
    CLI::App* grp = sub(&app, "gl", "Linearisation operators for integer p");
    grp->require_subcommand(1);
    for (const char* name : {"theta", "omega", "verify"}) {
      CLI::App* s = sub(grp, name,
                        std::string(name) == "verify"
                            ? "Check the linearisation identities"
                            : std::string("Print the ") + name + " operator");
      s->add_option("--in", in_path, "Channel JSON")->required();
      s->add_option("-p", p_int, "Integer order")
          ->capture_default_str()
          ->check(CLI::Range(1, 4));
      const std::string which = name;
      s->callback([&, which] {
        action = [&, which](const Sink& sink) {
          report.command = "gl " + which;
          base_config(false);
          report.config["in"] = in_path;
          report.config["p"] = p_int;
          const KrausChannel ch = load_channel(in_path).kraus;
          if (which == "theta") {
            report.results["theta"] = matrix_to_json(theta(ch, p_int));
          } else if (which == "omega") {
            report.results["omega"] = matrix_to_json(omega(ch, p_int));
          } else {
            const GlResiduals r = verify_gl_identity(ch, p_int);
            report.results["conjugate_residual"] = r.res1;
            report.results["shift_residual"] = r.res2;
            report.check("conjugate_identity", r.res1 < g.tol,
                         {{"residual", r.res1}});
            report.check("shift_identity", r.res2 < g.tol, {{"residual", r.res2}});
          }
          return finish_report(sink);
        };
      });
    }
  }

  // verify
  std::string suite = "all";
  int trials = 0;
  {
    CLI::App* s = sub(&app, "verify", "Run property-based verification suites");
    std::vector<std::string> names = verify::suite_names();
    names.push_back("all");
    s->add_option("--suite", suite, "Suite name or 'all'")
        ->capture_default_str()
        ->check(CLI::IsMember(names));
    s->add_option("--trials", trials, "Override trial counts (0 keeps defaults)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&](const Sink& sink) {
        report.command = "verify";
        report.config["seed"] = g.seed;
        report.config["suite"] = suite;
        report.config["trials"] = trials;
        verify::SuiteConfig cfg;
        cfg.seed = g.seed;
        cfg.trials = trials;
        cfg.threads = resolve_threads(g);
        const std::vector<verify::SuiteResult> results =
            suite == "all" ? verify::run_all(cfg)
                           : std::vector<verify::SuiteResult>{
                                 verify::run_suite(suite, cfg)};
        for (const auto& r : results) {
          report.results[r.suite] = {{"pass", r.pass()},
                                     {"checks", static_cast<int>(r.checks.size())}};
          for (const auto& c : r.checks) {
            report.check(r.suite + "." + c.name, c.pass,
                         {{"passed", c.passed},
                          {"trials", c.trials},
                          {"worst", c.worst},
                          {"threshold", c.threshold}});
          }
        }
        return finish_report(sink);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qcc: " << e.what() << "\n";
    return kValidation;
  }

  try {
    const Sink sink{g, out};
    started = std::chrono::steady_clock::now();
    return action(sink);
  } catch (const IoError& e) {
    err << "qcc: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "qcc: " << e.what() << "\n";
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "qcc: invalid JSON: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "qcc: invalid argument: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "qcc: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace qcc::cli

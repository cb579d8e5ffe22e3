#include "seqstate/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "evaluator.hpp"
#include "figures.hpp"
#include "json.hpp"
#include "seqstate/entanglement.hpp"
#include "seqstate/error.hpp"
#include "seqstate/format.hpp"
#include "seqstate/grover.hpp"
#include "seqstate/ingest.hpp"
#include "seqstate/qstate.hpp"
#include "settings.hpp"
#include "table.hpp"

namespace seqstate::cli {
namespace {

using detail::format_real;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Common {
  std::string family;
  unsigned r = 1;
  std::optional<unsigned> n;
  std::string n_range;
  std::string format = "csv";
  std::string out;
  SettingFlags flags;
};

void add_settings(CLI::App* app, SettingFlags& f) {
  app->add_option("--threads", f.threads, "Worker threads for the bipartition sweep")->check(CLI::PositiveNumber);
  app->add_option("--max-qubits", f.max_qubits, "Largest register the generators accept");
  app->add_option("--lucky-cap", f.lucky_cap, "Largest register for the Lucky sieve");
  app->add_option("--segment-size", f.segment_size, "Sieve segment length")->check(CLI::PositiveNumber);
  app->add_option("--cache-dir", f.cache_dir, "Result cache directory (else SEQSTATE_CACHE_DIR)");
  app->add_option("--config", f.config_path, "JSON config file (else SEQSTATE_CONFIG)");
}

void add_family(CLI::App* app, Common& c, bool required = true) {
  auto* opt = app->add_option("--family", c.family, "Sequence family, e.g. prime, pa, s-osc");
  if (required) opt->required();
  app->add_option("--r", c.r, "Ratio for the pa family")->capture_default_str();
}

void add_output(CLI::App* app, Common& c, bool json = true) {
  if (json) app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "Output file (default stdout)");
}

SequenceSpec make_spec(const std::string& name, unsigned r) {
  const auto family = parse_family(name);
  if (!family) {
    std::string known;
    for (const auto f : kAllFamilies) known += (known.empty() ? "" : ", ") + std::string(family_name(f));
    throw DomainError("unknown family '" + name + "'; expected one of " + known);
  }
  SequenceSpec spec{*family, r};
  spec.validate();
  return spec;
}

unsigned parse_unsigned(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(text, &used);
    if (used == text.size() && v <= 64) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw DomainError(std::string(what) + " expects a register size, got '" + text + "'");
}

std::vector<unsigned> registers(const Common& c) {
  if (c.n && !c.n_range.empty()) throw DomainError("give either --n or --n-range, not both");
  if (c.n) return {*c.n};
  if (c.n_range.empty()) throw DomainError("one of --n or --n-range is required");
  const auto colon = c.n_range.find(':');
  if (colon == std::string::npos) throw DomainError("--n-range expects a:b, got '" + c.n_range + "'");
  const unsigned lo = parse_unsigned(c.n_range.substr(0, colon), "--n-range");
  const unsigned hi = parse_unsigned(c.n_range.substr(colon + 1), "--n-range");
  if (lo > hi) throw DomainError("--n-range " + c.n_range + " is empty");
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) throw StorageError("cannot write " + path.string());
}

void emit(const Common& c, const std::string& content, std::ostream& out) {
  if (c.out.empty()) {
    out << content;
  } else {
    write_file(c.out, content);
  }
}

std::string render(const Common& c, const Table& t, const Json& j) {
  if (c.format == "json") return j.dump(2) + "\n";
  std::ostringstream s;
  t.write_csv(s);
  return s.str();
}

// ---- seq ----

struct SeqArgs {
  Common c;
  std::optional<unsigned> k_end;
  std::string overlap;
  unsigned overlap_r = 1;
};

int cmd_seq(SeqArgs& a, std::ostream& out) {
  const auto spec = make_spec(a.c.family, a.c.r);
  if (a.k_end) {
    if (spec.family != Family::SOscillating) throw DomainError("--k-end applies to the s-osc family only");
    if (a.c.n && *a.c.n != *a.k_end) throw DomainError("--k-end and --n disagree");
    a.c.n = a.k_end;
  }
  if (!a.c.n) throw DomainError("--n is required");
  Evaluator eval(resolve_settings(a.c.flags));
  const unsigned n = *a.c.n;
  const auto sample = eval.sample(spec, n);

  if (!a.overlap.empty()) {
    const auto other_spec = make_spec(a.overlap, a.overlap_r);
    const auto rep = overlap(sample, eval.sample(other_spec, n));
    std::string values;
    Json jv = Json::array();
    for (const auto v : rep.common_values) {
      values += (values.empty() ? "" : " ") + std::to_string(v);
      jv.push_back(v);
    }
    Table t{{"family_a", "family_b", "n", "common_count", "fraction_of_smaller", "fraction_of_larger", "common_values"},
            {{spec.label(), other_spec.label(), std::to_string(n), std::to_string(rep.common_count),
              format_real(rep.fraction_of_smaller), format_real(rep.fraction_of_larger), values}}};
    Json j{{"family_a", spec.label()},
           {"family_b", other_spec.label()},
           {"n", n},
           {"common_count", rep.common_count},
           {"fraction_of_smaller", rep.fraction_of_smaller},
           {"fraction_of_larger", rep.fraction_of_larger},
           {"common_values", jv}};
    emit(a.c, render(a.c, t, j), out);
    return kSuccess;
  }

  Table t{{"value", "multiplicity"}, {}};
  Json values = Json::array(), mults = Json::array();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto e = sample.entry(i);
    t.rows.push_back({std::to_string(e.value), std::to_string(e.multiplicity)});
    values.push_back(e.value);
    mults.push_back(e.multiplicity);
  }
  Json j{{"family", spec.label()}, {"n", n},           {"size", sample.size()},
         {"tau", sample.tau()},    {"values", values}, {"multiplicities", mults}};
  emit(a.c, render(a.c, t, j), out);
  return kSuccess;
}

// ---- state ----

int cmd_state(Common& c, std::ostream& out) {
  const auto spec = make_spec(c.family, c.r);
  if (!c.n) throw DomainError("--n is required");
  Evaluator eval(resolve_settings(c.flags));
  const auto state = from_sample(eval.sample(spec, *c.n), *c.n);
  Table t{{"index", "re", "im"}, {}};
  Json terms = Json::array();
  for (std::size_t k = 0; k < state.size(); ++k) {
    const auto a = state.amplitude(k);
    t.rows.push_back({std::to_string(state.index(k)), format_real(a.real()), format_real(a.imag())});
    terms.push_back(Json::array({state.index(k), a.real(), a.imag()}));
  }
  Json j{{"family", spec.label()}, {"n", *c.n}, {"terms", terms}};
  emit(c, render(c, t, j), out);
  return kSuccess;
}

// ---- entangle ----

struct EntangleArgs {
  Common c;
  std::string measure = "avg_th";
  std::string bipartitions;
};

int cmd_entangle(EntangleArgs& a, std::ostream& out) {
  const auto spec = make_spec(a.c.family, a.c.r);
  const auto ns = registers(a.c);
  Evaluator eval(resolve_settings(a.c.flags));
  Table t;
  Json j = Json::array();
  if (a.measure == "profile") {
    t.columns = {"family", "n", "qubit", "entropy"};
    for (const unsigned n : ns) {
      const auto p = eval.profile(spec, n);
      for (unsigned q = 1; q <= n; ++q)
        t.rows.push_back({spec.label(), std::to_string(n), std::to_string(q), format_real(p[q - 1])});
      j.push_back({{"family", spec.label()}, {"n", n}, {"per_qubit", p}});
    }
  } else if (a.measure == "avg_th") {
    t.columns = {"family", "n", "e_avg_th"};
    for (const unsigned n : ns) {
      const double v = eval.avg_th(spec, n);
      t.rows.push_back({spec.label(), std::to_string(n), format_real(v)});
      j.push_back({{"family", spec.label()}, {"n", n}, {"e_avg_th", v}});
    }
  } else {
    t.columns = {"family", "n", "e_sum", "e_avg_all", "max_avg_all", "fraction_of_bound"};
    for (const unsigned n : ns) {
      const auto v = eval.avg_all(spec, n);
      const double bound = max_avg_all(n);
      t.rows.push_back({spec.label(), std::to_string(n), format_real(v.e_sum), format_real(v.e_avg_all),
                        format_real(bound), format_real(v.e_avg_all / bound)});
      j.push_back({{"family", spec.label()},
                   {"n", n},
                   {"e_sum", v.e_sum},
                   {"e_avg_all", v.e_avg_all},
                   {"max_avg_all", bound},
                   {"fraction_of_bound", v.e_avg_all / bound}});
    }
  }
  if (!a.bipartitions.empty()) {
    if (ns.size() != 1) throw DomainError("--bipartitions needs a single --n");
    std::ostringstream rows;
    write_bipartitions_csv(eval.sweep(spec, ns.front()), rows);
    write_file(a.bipartitions, rows.str());
  }
  emit(a.c, render(a.c, t, j), out);
  return kSuccess;
}

// ---- grover ----

struct GroverArgs {
  Common c;
  bool simulate = false;
  std::optional<std::uint64_t> iterations;
};

int cmd_grover(GroverArgs& a, std::ostream& out) {
  const auto spec = make_spec(a.c.family, a.c.r);
  const auto ns = registers(a.c);
  const auto settings = resolve_settings(a.c.flags);
  if (a.iterations) a.simulate = true;

  if (!a.simulate) {
    const auto rows = growth_profile(spec, ns.front(), ns.back(), settings.generator);
    if (a.c.format == "csv") {
      std::ostringstream s;
      write_growth_csv(rows, s);
      emit(a.c, s.str(), out);
      return kSuccess;
    }
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n_qubits},
                   {"M", r.marked_count},
                   {"density", r.density},
                   {"g_real", r.g_real},
                   {"g_int", r.g_int},
                   {"tau", r.tau},
                   {"g_real_tau", r.g_real_tau ? Json(*r.g_real_tau) : Json(nullptr)}});
    }
    emit(a.c, j.dump(2) + "\n", out);
    return kSuccess;
  }

  Table t{{"n", "M", "k", "hit_probability", "success_probability", "fidelity_to_target"}, {}};
  Json j = Json::array();
  for (const unsigned n : ns) {
    const auto p = plan(spec, n, settings.generator);
    const auto k = a.iterations.value_or(p.g_int);
    const auto sim = simulate(spec, n, k, settings.generator);
    const double closed = success_probability(p.marked_count, n, k);
    t.rows.push_back({std::to_string(n), std::to_string(p.marked_count), std::to_string(k),
                      format_real(sim.hit_probability), format_real(closed), format_real(sim.fidelity_to_target)});
    j.push_back({{"n", n},
                 {"M", p.marked_count},
                 {"k", k},
                 {"hit_probability", sim.hit_probability},
                 {"success_probability", closed},
                 {"fidelity_to_target", sim.fidelity_to_target}});
  }
  emit(a.c, render(a.c, t, j), out);
  return kSuccess;
}

// ---- validate ----

struct ValidateArgs {
  Common c;
  std::string bfile;
  std::string oeis_id;
  std::size_t required = kRequiredValidationTerms;
};

int cmd_validate(ValidateArgs& a, std::ostream& out) {
  const auto spec = make_spec(a.c.family, a.c.r);
  const unsigned n = a.c.n.value_or(20);
  const auto settings = resolve_settings(a.c.flags);
  const auto bfile = read_bfile(a.bfile, a.oeis_id);
  const auto rep = validate(spec, bfile, n, settings.generator, a.required);

  std::string index, expected, actual;
  Json div = nullptr;
  if (rep.first_divergence) {
    const auto& d = *rep.first_divergence;
    index = std::to_string(d.index);
    expected = d.expected;
    actual = d.actual ? std::to_string(*d.actual) : "";
    div = {{"index", d.index}, {"expected", d.expected}, {"actual", d.actual ? Json(*d.actual) : Json(nullptr)}};
  }
  Table t{{"oeis_id", "family", "n", "compared_terms", "status", "divergence_index", "expected", "actual"},
          {{rep.oeis_id, spec.label(), std::to_string(n), std::to_string(rep.compared_terms),
            std::string(to_string(rep.status)), index, expected, actual}}};
  Json j{{"oeis_id", rep.oeis_id},
         {"family", spec.label()},
         {"n", n},
         {"compared_terms", rep.compared_terms},
         {"status", to_string(rep.status)},
         {"first_divergence", div}};
  emit(a.c, render(a.c, t, j), out);
  return rep.status == ValidationStatus::Pass ? kSuccess : kValidationFailed;
}

// ---- figure ----

struct FigureArgs {
  int id = 0;
  std::string scale = "desk";
  std::string out_dir = ".";
  bool chart = false;
  std::optional<unsigned> n_max;
  SettingFlags flags;
};

int cmd_figure(FigureArgs& a, std::ostream& out) {
  Evaluator eval(resolve_settings(a.flags));
  const auto data = make_figure(a.id, a.scale == "paper" ? Scale::Paper : Scale::Desk, eval, a.n_max);
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw StorageError("cannot create " + a.out_dir + ": " + ec.message());
  for (const auto& f : data.files) {
    const auto path = fs::path(a.out_dir) / f.name;
    write_file(path, f.csv);
    out << path.string() << '\n';
  }
  if (a.chart) {
    const auto path = fs::path(a.out_dir) / ("fig" + std::to_string(a.id) + ".svg");
    write_file(path, render_svg(data.chart));
    out << path.string() << '\n';
  }
  return kSuccess;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Domain: return kUsage;
    case ErrorKind::Range:
    case ErrorKind::Capacity: return kCapacity;
    case ErrorKind::Numeric: return kNumeric;
    case ErrorKind::Parse:
    case ErrorKind::Format:
    case ErrorKind::Storage: return kIo;
  }
  return kUsage;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum states from integer sequences: entanglement and Grover feasibility", "seqstate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "seqstate 0.1.0");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "List the in-range elements of a sequence");
  add_family(seq_cmd, seq.c);
  seq_cmd->add_option("--n", seq.c.n, "Register size");
  seq_cmd->add_option("--k-end", seq.k_end, "Last construction step of the s-osc sequence");
  seq_cmd->add_option("--overlap", seq.overlap, "Report common elements with this family instead");
  seq_cmd->add_option("--overlap-r", seq.overlap_r, "Ratio when --overlap is pa");
  add_output(seq_cmd, seq.c);
  add_settings(seq_cmd, seq.c.flags);

  Common state;
  auto* state_cmd = app.add_subcommand("state", "Print the nonzero amplitudes of a sequence state");
  add_family(state_cmd, state);
  state_cmd->add_option("--n", state.n, "Register size")->required();
  add_output(state_cmd, state);
  add_settings(state_cmd, state.flags);

  EntangleArgs ent;
  auto* ent_cmd = app.add_subcommand("entangle", "Entanglement measures of a sequence state");
  add_family(ent_cmd, ent.c);
  ent_cmd->add_option("--n", ent.c.n, "Register size");
  ent_cmd->add_option("--n-range", ent.c.n_range, "Inclusive register range a:b");
  ent_cmd->add_option("--measure", ent.measure, "profile, avg_th or avg_all")
      ->check(CLI::IsMember({"profile", "avg_th", "avg_all"}))
      ->capture_default_str();
  ent_cmd->add_option("--bipartitions", ent.bipartitions, "Also write per-bipartition entropies to this CSV");
  add_output(ent_cmd, ent.c);
  add_settings(ent_cmd, ent.c.flags);

  GroverArgs gro;
  auto* gro_cmd = app.add_subcommand("grover", "Grover iteration counts or simulation");
  add_family(gro_cmd, gro.c);
  gro_cmd->add_option("--n", gro.c.n, "Register size");
  gro_cmd->add_option("--n-range", gro.c.n_range, "Inclusive register range a:b");
  gro_cmd->add_flag("--simulate", gro.simulate, "Run the dense simulation at the planned iteration count");
  gro_cmd->add_option("--iterations", gro.iterations, "Simulate this many iterations instead");
  add_output(gro_cmd, gro.c);
  add_settings(gro_cmd, gro.c.flags);

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Compare a generator with an OEIS b-file");
  add_family(val_cmd, val.c);
  val_cmd->add_option("--bfile", val.bfile, "b-file path")->required();
  val_cmd->add_option("--id", val.oeis_id, "OEIS id when the file name does not carry one");
  val_cmd->add_option("--n", val.c.n, "Register size bounding the generated terms (default 20)");
  val_cmd->add_option("--required", val.required, "Terms that must be compared")->capture_default_str();
  add_output(val_cmd, val.c);
  add_settings(val_cmd, val.c.flags);

  FigureArgs fig;
  auto* fig_cmd = app.add_subcommand("figure", "Write the data behind one figure");
  fig_cmd->add_option("--id", fig.id, "Figure number 1..12")->required();
  fig_cmd->add_option("--scale", fig.scale, "desk or paper")
      ->check(CLI::IsMember({"desk", "paper"}))
      ->capture_default_str();
  fig_cmd->add_option("--out", fig.out_dir, "Output directory")->capture_default_str();
  fig_cmd->add_flag("--chart", fig.chart, "Also write an SVG line chart");
  fig_cmd->add_option("--n-max", fig.n_max, "Lower every register bound to this");
  add_settings(fig_cmd, fig.flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*seq_cmd) return cmd_seq(seq, out);
    if (*state_cmd) return cmd_state(state, out);
    if (*ent_cmd) return cmd_entangle(ent, out);
    if (*gro_cmd) return cmd_grover(gro, out);
    if (*val_cmd) return cmd_validate(val, out);
    return cmd_figure(fig, out);
  } catch (const Error& e) {
    err << "seqstate: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::bad_alloc&) {
    err << "seqstate: capacity error: out of memory\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "seqstate: error: " << e.what() << '\n';
    return kIo;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace seqstate::cli

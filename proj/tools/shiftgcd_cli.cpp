// Command-line front end: every subcommand prints one document to stdout,
// JSON by default ({"cmd", "input", "result", "elapsed_ms"}) or CSV rows.
// Identical invocations produce byte-identical documents; elapsed_ms stays 0
// unless --timing asks for a real (non-reproducible) measurement.
//
// Exit codes: 0 ok, 2 validation error, 3 resource-guard error, 1 broken
// internal certificate.

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftgcd/constants.hpp"
#include "shiftgcd/coprime.hpp"
#include "shiftgcd/crt_instance.hpp"
#include "shiftgcd/instance_json.hpp"
#include "shiftgcd/linear_forms.hpp"
#include "shiftgcd/shift_search.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using nlohmann::ordered_json;
using namespace shiftgcd;

namespace {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_i64(const std::vector<std::int64_t>& v, char sep) {
  std::vector<std::string> parts;
  parts.reserve(v.size());
  for (auto x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void print_csv(const CsvTable& table) {
  auto line = [](const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(fields[i]);
    }
    return out;
  };
  std::cout << line(table.header) << "\n";
  for (const auto& row : table.rows) std::cout << line(row) << "\n";
}

struct CommandOutput {
  ordered_json input;
  ordered_json result;
  std::optional<CsvTable> table;  // absent => JSON-only subcommand
};

std::vector<std::int64_t> parse_i64_list(const std::string& csv, const char* what) {
  std::vector<std::int64_t> out;
  for (const Integer& e : IntVector::parse(csv)) {
    if (e < std::numeric_limits<std::int64_t>::min() ||
        e > std::numeric_limits<std::int64_t>::max())
      throw DomainError(std::string(what) + ": value out of range");
    out.push_back(e.convert_to<std::int64_t>());
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& csv, const char* what) {
  std::vector<std::uint64_t> out;
  for (const Integer& e : IntVector::parse(csv)) {
    if (e < 0 || e > std::numeric_limits<std::uint64_t>::max())
      throw DomainError(std::string(what) + ": value out of range");
    out.push_back(e.convert_to<std::uint64_t>());
  }
  return out;
}

std::uint64_t guard_or(std::int64_t guard_opt, std::uint64_t fallback) {
  return guard_opt >= 0 ? static_cast<std::uint64_t>(guard_opt) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shiftgcd: exact solvers and experiments for gcds of additively shifted "
      "integer vectors"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // frees -h/--h

  std::string format = "json";
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--format", format, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timing", timing,
                  "put a real elapsed_ms measurement in the document "
                  "(breaks byte-reproducibility)");
  };

  // shared option slots; exactly one subcommand parses
  std::string a_csv, d_csv, h_list_csv, in_path;
  std::int64_t big_h = 0, small_h = 0, scale = 0, m_value = 0;
  int n_param = 0, trials = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::int64_t guard_opt = -1;
  bool allow_large = false, canonicalize = false, with_ud_table = false;

  std::function<CommandOutput()> runner;
  std::string cmd_name;
  auto arm = [&](CLI::App* sub, std::function<CommandOutput()> fn) {
    add_common(sub);
    sub->callback([&runner, &cmd_name, sub, fn = std::move(fn)] {
      runner = fn;
      cmd_name = sub->get_name();
    });
  };

  {
    auto* sub = app.add_subcommand(
        "constants", "growth-exponent calculus: kappa, theta, gamma, residual");
    sub->add_option("--n", n_param, "vector length (>= 2)")->required();
    sub->add_option("--eps", eps, "exponent in (0,1)")->required();
    arm(sub, [&]() -> CommandOutput {
      const ConstantsReport rep = constants_report(n_param, eps);
      CommandOutput out;
      out.input = {{"n", n_param}, {"eps", eps}};
      out.result = {{"kappa", rep.kappa},
                    {"theta", rep.theta},
                    {"gamma", rep.gamma},
                    {"residual", rep.residual}};
      out.table = CsvTable{{"n", "eps", "kappa", "theta", "gamma", "residual"},
                           {{std::to_string(rep.n), format_double(rep.epsilon),
                             format_double(rep.kappa), format_double(rep.theta),
                             format_double(rep.gamma), format_double(rep.residual)}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "max-gcd-shift", "largest gcd(a+h) over shifts of height <= H, exact");
    sub->add_option("--a", a_csv, "comma-separated integers")->required();
    sub->add_option("--H", big_h, "shift height bound")->required();
    sub->add_flag("--allow-large-shifts", allow_large,
                  "permit H >= min a_i (shifted entries may hit zero)");
    sub->add_flag("--canonicalize-signs", canonicalize,
                  "accept negative entries via |a_i|");
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const ShiftGcdResult res = max_shifted_gcd(
          a, big_h, {.allow_large_shifts = allow_large,
                     .canonicalize_signs = canonicalize});
      CommandOutput out;
      out.input = {{"a", a.to_strings()},
                   {"H", big_h},
                   {"allow_large_shifts", allow_large},
                   {"canonicalize_signs", canonicalize}};
      out.result = {{"d", res.d.str()}, {"h", res.witness.entries()}};
      if (res.exponent) out.result["exponent"] = *res.exponent;
      out.table = CsvTable{
          {"d", "h", "exponent"},
          {{res.d.str(), join_i64(res.witness.entries(), ';'),
            res.exponent ? format_double(*res.exponent) : ""}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "exponent-sweep",
        "seeded random vectors, H = floor(scale^eps), exact shifted gcd per trial");
    sub->add_option("--n", n_param, "vector length (>= 2)")->required();
    sub->add_option("--eps", eps, "height exponent in (0,1)")->required();
    sub->add_option("--scale", scale, "entry scale; entries drawn from [scale/2, scale]")
        ->required();
    sub->add_option("--trials", trials, "number of sampled vectors")->required();
    sub->add_option("--seed", seed, "RNG seed (required: no silent entropy)")
        ->required();
    arm(sub, [&]() -> CommandOutput {
      const auto records = exponent_experiment(n_param, eps, scale, trials, seed);
      CommandOutput out;
      out.input = {{"n", n_param},
                   {"eps", eps},
                   {"scale", scale},
                   {"trials", trials},
                   {"seed", seed}};
      ordered_json recs = ordered_json::array();
      CsvTable table{{"trial", "a", "H", "d", "exponent"}, {}};
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        recs.push_back({{"trial", i},
                        {"a", r.a.to_strings()},
                        {"H", r.height_limit},
                        {"d", r.d.str()},
                        {"exponent", r.exponent}});
        table.rows.push_back({std::to_string(i), join(r.a.to_strings(), ';'),
                              std::to_string(r.height_limit), r.d.str(),
                              format_double(r.exponent)});
      }
      out.result = {{"records", std::move(recs)}};
      out.table = std::move(table);
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "greedy-coprime",
        "one-sided greedy shifts making the entries pairwise coprime");
    sub->add_option("--a", a_csv, "comma-separated positive integers")->required();
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const CoprimeShiftResult res = greedy_coprime(a);
      CommandOutput out;
      out.input = {{"a", a.to_strings()}};
      out.result = {{"h", res.shifts.entries()},
                    {"shifted", res.shifted_vector.to_strings()},
                    {"height_used", res.height_used}};
      out.table = CsvTable{{"h", "shifted", "height_used"},
                           {{join_i64(res.shifts.entries(), ';'),
                             join(res.shifted_vector.to_strings(), ';'),
                             std::to_string(res.height_used)}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "l-exact", "smallest H so that some shift of height <= H is pairwise coprime");
    sub->add_option("--a", a_csv, "comma-separated integers")->required();
    sub->add_option("--guard", guard_opt, "per-level enumeration cap (default 1e8)");
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const std::int64_t L = l_exact(a, guard_or(guard_opt, 100'000'000));
      CommandOutput out;
      out.input = {{"a", a.to_strings()}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = {{"L", L}};
      out.table = CsvTable{{"L"}, {{std::to_string(L)}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "ell-exact", "smallest H so that some shift of height <= H has gcd 1");
    sub->add_option("--a", a_csv, "comma-separated integers")->required();
    sub->add_option("--guard", guard_opt, "per-level enumeration cap (default 1e8)");
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const std::int64_t ell = ell_exact(a, guard_or(guard_opt, 100'000'000));
      CommandOutput out;
      out.input = {{"a", a.to_strings()}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = {{"ell", ell}};
      out.table = CsvTable{{"ell"}, {{std::to_string(ell)}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "crt-instance",
        "CRT-planted vector with a blocking prime at every shift tuple of height <= H");
    sub->add_option("--n", n_param, "vector length (>= 1)")->required();
    sub->add_option("--H", big_h, "certified shift height")->required();
    sub->add_option("--guard", guard_opt, "prime-count cap (default 1e4)");
    arm(sub, [&]() -> CommandOutput {
      const HardInstance inst =
          crt_hard_instance(n_param, big_h, guard_or(guard_opt, 10'000));
      CommandOutput out;
      out.input = {{"n", n_param}, {"H", big_h}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = instance_to_json(inst);
      return out;  // JSON only: nested document
    });
  }

  {
    auto* sub = app.add_subcommand(
        "verify-instance",
        "re-check a serialized instance: primality, distinctness, full divisibility cube");
    sub->add_option("--in", in_path, "instance JSON path ('-' reads stdin)")->required();
    sub->add_option("--guard", guard_opt, "cube cap (default 1e6)");
    arm(sub, [&]() -> CommandOutput {
      std::string text;
      if (in_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin),
                    std::istreambuf_iterator<char>());
      } else {
        std::ifstream in(in_path);
        if (!in) throw DomainError("verify-instance: cannot open " + in_path);
        text.assign(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>());
      }
      ordered_json doc;
      try {
        doc = ordered_json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("verify-instance: bad JSON: ") + e.what());
      }
      // accept either a bare instance or a full CLI document
      if (doc.contains("result")) doc = doc["result"];
      const HardInstance inst = instance_from_json(doc);
      const VerifyReport rep =
          verify_hard_instance(inst, guard_or(guard_opt, 1'000'000));
      CommandOutput out;
      out.input = {{"in", in_path}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = {{"pass", rep.pass}};
      if (rep.failing_tuple) out.result["failing_tuple"] = *rep.failing_tuple;
      if (!rep.detail.empty()) out.result["detail"] = rep.detail;
      if (rep.pass) out.result["certified_lower_bound"] = inst.H + 1;
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "count-r",
        "exact R(a,h): pairs of positive vectors whose linear forms keep gcd(a)");
    sub->add_option("--a", a_csv, "comma-separated positive integers")->required();
    sub->add_option("--h", small_h, "component height bound")->required();
    sub->add_option("--guard", guard_opt, "d-scan budget (default 2000)");
    sub->add_flag("--ud-table", with_ud_table, "include the squarefree U_d table (JSON)");
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const CountReport rep =
          count_report(a, small_h, guard_or(guard_opt, 2'000), with_ud_table);
      CommandOutput out;
      out.input = {{"a", a.to_strings()}, {"h", small_h}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = {{"R", rep.R.str()},
                    {"main_term", rep.main_term},
                    {"rel_error", rep.rel_error},
                    {"d_max", rep.d_max.str()}};
      if (with_ud_table) {
        ordered_json tbl = ordered_json::array();
        for (const auto& [d, u] : rep.ud_table)
          tbl.push_back({{"d", d}, {"u", u.str()}});
        out.result["ud_table"] = std::move(tbl);
      }
      out.table = CsvTable{{"R", "main_term", "rel_error", "d_max"},
                           {{rep.R.str(), format_double(rep.main_term),
                             format_double(rep.rel_error), rep.d_max.str()}}};
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "bound-audit", "exact checks of the three U_d estimates at sampled d");
    sub->add_option("--a", a_csv, "comma-separated positive integers, gcd 1")
        ->required();
    sub->add_option("--h", small_h, "component height bound")->required();
    sub->add_option("--d", d_csv, "comma-separated d values to audit")->required();
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const auto d_samples = parse_u64_list(d_csv, "bound-audit --d");
      const auto rows = bound_audit(a, small_h, d_samples);
      CommandOutput out;
      out.input = {{"a", a.to_strings()}, {"h", small_h}, {"d", d_samples}};
      ordered_json jrows = ordered_json::array();
      CsvTable table{{"d", "squarefree", "u_d", "asymp_applicable", "asymp_ok",
                      "u1_ok", "u2_applicable", "u2_ok"},
                     {}};
      int violations = 0;
      for (const auto& r : rows) {
        const bool violated = (r.asymp_applicable && !r.asymp_ok) || !r.u1_ok ||
                              (r.u2_applicable && !r.u2_ok);
        if (violated) ++violations;
        jrows.push_back({{"d", r.d},
                         {"squarefree", r.squarefree},
                         {"u_d", r.ud.str()},
                         {"asymp_applicable", r.asymp_applicable},
                         {"asymp_ok", r.asymp_ok},
                         {"u1_ok", r.u1_ok},
                         {"u2_applicable", r.u2_applicable},
                         {"u2_ok", r.u2_ok}});
        auto b = [](bool v) { return std::string(v ? "true" : "false"); };
        table.rows.push_back({std::to_string(r.d), b(r.squarefree), r.ud.str(),
                              b(r.asymp_applicable), b(r.asymp_ok), b(r.u1_ok),
                              b(r.u2_applicable), b(r.u2_ok)});
      }
      out.result = {{"rows", std::move(jrows)}, {"violations", violations}};
      out.table = std::move(table);
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "converge", "R/h^(2n) against 1/zeta(2) over a list of heights");
    sub->add_option("--a", a_csv, "comma-separated positive integers")->required();
    sub->add_option("--h-list", h_list_csv, "comma-separated heights")->required();
    sub->add_option("--guard", guard_opt, "d-scan budget (default 2000)");
    arm(sub, [&]() -> CommandOutput {
      const IntVector a = IntVector::parse(a_csv);
      const auto h_range = parse_i64_list(h_list_csv, "converge --h-list");
      const auto rows =
          convergence_sweep(a, h_range, guard_or(guard_opt, 2'000));
      const double predicted = error_exponent_bound(static_cast<int>(a.size()));
      CommandOutput out;
      out.input = {{"a", a.to_strings()}, {"h_list", h_range}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      ordered_json jrows = ordered_json::array();
      CsvTable table{{"h", "R", "ratio", "abs_err", "err_exponent_bound"}, {}};
      for (const auto& r : rows) {
        jrows.push_back({{"h", r.h},
                         {"R", r.R.str()},
                         {"ratio", r.ratio},
                         {"abs_err", r.abs_err}});
        table.rows.push_back({std::to_string(r.h), r.R.str(),
                              format_double(r.ratio), format_double(r.abs_err),
                              format_double(predicted)});
      }
      out.result = {{"err_exponent_bound", predicted}, {"rows", std::move(jrows)}};
      out.table = std::move(table);
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand(
        "jacobsthal", "largest gap between consecutive integers coprime to m");
    sub->add_option("--m", m_value, "modulus (>= 1)")->required();
    sub->add_option("--guard", guard_opt, "sieve cap (default 1e8)");
    arm(sub, [&]() -> CommandOutput {
      if (m_value < 1) throw DomainError("jacobsthal: m must be >= 1");
      const std::uint64_t g = jacobsthal(static_cast<std::uint64_t>(m_value),
                                         guard_or(guard_opt, 100'000'000));
      CommandOutput out;
      out.input = {{"m", m_value}};
      if (guard_opt >= 0) out.input["guard"] = guard_opt;
      out.result = {{"g", g}};
      out.table = CsvTable{{"m", "g"}, {{std::to_string(m_value), std::to_string(g)}}};
      return out;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    CommandOutput out = runner();
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  t0)
            .count();
    if (format == "csv") {
      if (!out.table)
        throw DomainError(cmd_name + ": csv output is not supported here (use json)");
      print_csv(*out.table);
    } else {
      ordered_json doc;
      doc["cmd"] = cmd_name;
      doc["input"] = std::move(out.input);
      doc["result"] = std::move(out.result);
      doc["elapsed_ms"] = timing ? elapsed : 0.0;
      std::cout << doc.dump(2) << "\n";
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << std::endl;
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 1;
  }
}

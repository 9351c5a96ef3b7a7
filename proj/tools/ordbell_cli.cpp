// ordbell: exact and modular weak-ordering counts on the command line.
//
// Subcommands: compute (single values), table (index/value listings),
// period (modular periodicity reports), verify (cross-check suites),
// render (Stirling triangles mod m as ascii or PBM).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 domain error, 4 theorem-bound violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordbell/bigint.hpp"
#include "ordbell/number_theory.hpp"
#include "ordbell/periodicity.hpp"
#include "ordbell/sequences.hpp"
#include "ordbell/verify.hpp"

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";
constexpr std::size_t kMaxRenderSize = 1024;

json make_record(const std::string& command, json inputs, json results) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"schema_version", kSchemaVersion}};
}

void emit(const json& record) { std::cout << record.dump(2) << "\n"; }

enum class SequenceTag { factorial, fubini, fubini_r, horse_r };

SequenceTag parse_sequence_tag(const std::string& name) {
  if (name == "factorial") return SequenceTag::factorial;
  if (name == "fubini") return SequenceTag::fubini;
  if (name == "fubini_r") return SequenceTag::fubini_r;
  return SequenceTag::horse_r;  // "horse", guarded by the flag validator
}

bool needs_r(SequenceTag tag) {
  return tag == SequenceTag::fubini_r || tag == SequenceTag::horse_r;
}

const char* canonical_name(SequenceTag tag) {
  switch (tag) {
    case SequenceTag::factorial: return "factorial";
    case SequenceTag::fubini: return "fubini";
    case SequenceTag::fubini_r: return "fubini_r";
    case SequenceTag::horse_r: return "horse_r";
  }
  return "";
}

std::uint64_t mod_reduce(const ordbell::BigInt& value, std::uint64_t modulus) {
  return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

// Flags shared by compute and table.
struct SequenceRequest {
  std::string sequence;
  std::int64_t n = 0;
  std::int64_t r = -1;  // -1: not given
  std::uint64_t modulus = 0;
  bool has_modulus = false;

  SequenceTag tag() const { return parse_sequence_tag(sequence); }

  // Usage-level validation; returns false after printing a diagnostic.
  bool validate_r() const {
    if (needs_r(tag()) && r < 0) {
      std::cerr << "error: --seq " << sequence << " requires --r\n";
      return false;
    }
    return true;
  }

  unsigned r_value() const { return r < 0 ? 0u : static_cast<unsigned>(r); }

  json inputs() const {
    json in{{"sequence", canonical_name(tag())}, {"n", std::to_string(n)}};
    if (r >= 0) in["r"] = std::to_string(r);
    if (has_modulus) in["modulus"] = std::to_string(modulus);
    return in;
  }
};

void check_index(std::int64_t n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
}

ordbell::BigInt exact_value(SequenceTag tag, std::uint64_t n, unsigned r) {
  switch (tag) {
    case SequenceTag::factorial: {
      ordbell::BigInt f;
      mpz_fac_ui(f.get_mpz_t(), n);
      return f;
    }
    case SequenceTag::fubini: return ordbell::fubini(n + 1).at(n);
    case SequenceTag::fubini_r: return ordbell::fubini_r(n, r);
    case SequenceTag::horse_r: return ordbell::horse_r(n, r);
  }
  throw std::logic_error("exact_value: unknown sequence tag");
}

std::uint64_t modular_value(SequenceTag tag, std::uint64_t n, unsigned r,
                            std::uint64_t modulus) {
  switch (tag) {
    case SequenceTag::factorial: {
      if (modulus == 0) throw std::domain_error("modulus must be positive");
      std::uint64_t acc = 1 % modulus;
      for (std::uint64_t i = 2; i <= n; ++i)
        acc = ordbell::mod_mul(acc, i % modulus, modulus);
      return acc;
    }
    case SequenceTag::fubini:
      return ordbell::fubini_mod_sequence(modulus, n + 1).back();
    case SequenceTag::fubini_r: {
      if (n < r) throw std::domain_error("fubini_r: not meaningful for n < r");
      return ordbell::fubini_r_mod_sequence(modulus, r, n + 1).back();
    }
    case SequenceTag::horse_r:
      // no modular shortcut: 1/r! needs the exact value before reduction
      return mod_reduce(ordbell::horse_r(n, r), modulus);
  }
  throw std::logic_error("modular_value: unknown sequence tag");
}

int run_compute(const SequenceRequest& request) {
  if (!request.validate_r()) return 2;
  check_index(request.n);
  const auto n = static_cast<std::uint64_t>(request.n);
  json results;
  if (request.has_modulus)
    results["value"] =
        std::to_string(modular_value(request.tag(), n, request.r_value(), request.modulus));
  else
    results["value"] = ordbell::to_decimal(exact_value(request.tag(), n, request.r_value()));
  emit(make_record("compute", request.inputs(), results));
  return 0;
}

int run_table(const SequenceRequest& request, const std::string& format) {
  if (!request.validate_r()) return 2;
  check_index(request.n);
  const auto n_max = static_cast<std::size_t>(request.n);
  const unsigned r = request.r_value();
  const SequenceTag tag = request.tag();

  std::size_t first = 0;
  ordbell::BigSequence seq = [&] {
    switch (tag) {
      case SequenceTag::factorial: return ordbell::factorials(n_max + 1);
      case SequenceTag::fubini: return ordbell::fubini(n_max + 1);
      case SequenceTag::fubini_r: return ordbell::fubini_r_sequence(r, n_max + 1);
      case SequenceTag::horse_r: return ordbell::horse_r_sequence(r, n_max + 1);
    }
    throw std::logic_error("run_table: unknown sequence tag");
  }();
  first = seq.start();

  if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t n = first; n <= n_max; ++n)
      std::cout << n << "," << ordbell::to_decimal(seq.at(n)) << "\n";
    return 0;
  }
  json rows = json::array();
  for (std::size_t n = first; n <= n_max; ++n)
    rows.push_back(json{{"n", std::to_string(n)}, {"value", ordbell::to_decimal(seq.at(n))}});
  json inputs = request.inputs();
  inputs.erase("n");
  inputs["n_max"] = std::to_string(request.n);
  inputs["format"] = format;
  emit(make_record("table", std::move(inputs), json{{"rows", std::move(rows)}}));
  return 0;
}

int run_period(std::uint64_t modulus, unsigned r) {
  const ordbell::PeriodReport report = ordbell::analyze(modulus, r);
  json inputs{{"modulus", std::to_string(modulus)}, {"r", std::to_string(r)}};
  json results{{"sequence", r == 0 ? "fubini" : "fubini_r"},
               {"r", std::to_string(report.r)},
               {"onset", std::to_string(report.onset)},
               {"period", std::to_string(report.period)},
               {"carmichael", std::to_string(report.carmichael)},
               {"max_exponent", std::to_string(report.max_exponent)},
               {"period_divides_carmichael", report.period_divides_carmichael},
               {"onset_within_bound", report.onset_within_bound}};
  emit(make_record("period", std::move(inputs), std::move(results)));
  return 0;
}

int run_verify(const std::string& suite, std::optional<std::size_t> limit) {
  const std::vector<ordbell::CheckResult> checks =
      ordbell::run_suite(ordbell::parse_suite(suite), limit);
  std::size_t failed = 0;
  json listing = json::array();
  for (const ordbell::CheckResult& check : checks) {
    failed += check.passed ? 0 : 1;
    listing.push_back(json{
        {"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  json inputs{{"suite", suite}};
  if (limit) inputs["limit"] = std::to_string(*limit);
  json results{{"checks", std::move(listing)},
               {"total", std::to_string(checks.size())},
               {"failed", std::to_string(failed)}};
  emit(make_record("verify", std::move(inputs), std::move(results)));
  return failed == 0 ? 0 : 1;
}

// Stirling triangle mod m by the row recurrences, residue-only so huge sizes
// stay cheap: s(n+1,k) = s(n,k-1) - n s(n,k), S(n+1,k) = S(n,k-1) + k S(n,k).
std::vector<std::vector<std::uint64_t>> triangle_mod(const std::string& kind,
                                                     std::uint64_t modulus,
                                                     std::size_t size) {
  const bool first_kind = kind == "first_signed";
  auto mod_mul_add = [modulus](std::uint64_t scale, std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(scale) * a + b) % modulus);
  };
  std::vector<std::vector<std::uint64_t>> rows(size);
  rows[0] = {1 % modulus};
  for (std::size_t n = 1; n < size; ++n) {
    rows[n].assign(n + 1, 0);
    const std::uint64_t scale =
        first_kind ? (modulus - (n - 1) % modulus) % modulus  // -(n-1) mod m
                   : 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t above = k < n ? rows[n - 1][k] : 0;
      const std::uint64_t factor = first_kind ? scale : k % modulus;
      rows[n][k] = mod_mul_add(factor, above, rows[n - 1][k - 1]);
    }
  }
  return rows;
}

char ascii_cell(std::uint64_t residue) {
  if (residue == 0) return '.';
  if (residue <= 9) return static_cast<char>('0' + residue);
  if (residue <= 35) return static_cast<char>('a' + (residue - 10));
  return '#';
}

int run_render(const std::string& kind, std::uint64_t modulus, std::size_t size,
               const std::string& format) {
  if (modulus < 2) throw std::domain_error("render: modulus must be at least 2");
  if (size == 0 || size > kMaxRenderSize)
    throw std::domain_error("render: size must be in 1..1024");

  const auto rows = triangle_mod(kind, modulus, size);
  std::string out;
  if (format == "pbm") {
    out = "P1\n" + std::to_string(size) + " " + std::to_string(size) + "\n";
    for (std::size_t n = 0; n < size; ++n) {
      for (std::size_t k = 0; k < size; ++k)
        out += (k < rows[n].size() && rows[n][k] != 0) ? '1' : '0';
      out += '\n';
    }
  } else {
    for (std::size_t n = 0; n < size; ++n) {
      for (std::size_t k = 0; k < size; ++k)
        out += k < rows[n].size() ? ascii_cell(rows[n][k]) : '.';
      out += '\n';
    }
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and modular arithmetic for weak-ordering counts"};
  app.require_subcommand(1);

  const std::vector<std::string> sequence_tags{"factorial", "fubini", "fubini_r",
                                               "horse", "horse_r"};

  SequenceRequest compute_request;
  CLI::App* compute = app.add_subcommand("compute", "compute one sequence value");
  compute->add_option("--seq", compute_request.sequence, "sequence to evaluate")
      ->required()
      ->check(CLI::IsMember(sequence_tags));
  compute->add_option("--n", compute_request.n, "index n")->required();
  compute->add_option("--r", compute_request.r, "number of marked elements")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--mod", compute_request.modulus, "evaluate modulo this")
      ->check(CLI::PositiveNumber);

  SequenceRequest table_request;
  std::string table_format = "json";
  CLI::App* table = app.add_subcommand("table", "list values up to an index");
  table->add_option("--seq", table_request.sequence, "sequence to list")
      ->required()
      ->check(CLI::IsMember(sequence_tags));
  table->add_option("--max", table_request.n, "largest index")->required();
  table->add_option("--r", table_request.r, "number of marked elements")
      ->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::uint64_t period_modulus = 0;
  std::int64_t period_r = 0;
  CLI::App* period = app.add_subcommand("period", "modular periodicity report");
  period->add_option("--mod", period_modulus, "modulus K")->required();
  period->add_option("--r", period_r, "number of marked elements")
      ->check(CLI::NonNegativeNumber);

  std::string verify_suite = "all";
  std::int64_t verify_limit = -1;
  CLI::App* verify = app.add_subcommand("verify", "run cross-check suites");
  verify->add_option("--suite", verify_suite, "suite to run")
      ->check(CLI::IsMember({"oracle", "matrix", "periodicity", "lemma", "all"}));
  verify->add_option("--limit", verify_limit, "tighten per-check input ceilings")
      ->check(CLI::NonNegativeNumber);

  std::string render_kind;
  std::string render_format = "ascii";
  std::uint64_t render_modulus = 0;
  std::uint64_t render_size = 0;
  CLI::App* render = app.add_subcommand("render", "draw a Stirling triangle mod m");
  render->add_option("--matrix", render_kind, "which triangle")
      ->required()
      ->check(CLI::IsMember({"first_signed", "second"}));
  render->add_option("--mod", render_modulus, "modulus")->required();
  render->add_option("--size", render_size, "rows and columns")->required();
  render->add_option("--format", render_format, "output format")
      ->check(CLI::IsMember({"ascii", "pbm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    compute_request.has_modulus = compute->count("--mod") > 0;
    if (compute->parsed()) return run_compute(compute_request);
    if (table->parsed()) return run_table(table_request, table_format);
    if (period->parsed())
      return run_period(period_modulus, static_cast<unsigned>(period_r));
    if (verify->parsed())
      return run_verify(verify_suite,
                        verify_limit < 0
                            ? std::nullopt
                            : std::optional<std::size_t>(
                                  static_cast<std::size_t>(verify_limit)));
    if (render->parsed())
      return run_render(render_kind, render_modulus,
                        static_cast<std::size_t>(render_size), render_format);
  } catch (const ordbell::TheoremViolation& error) {
    std::cerr << "theorem violation: " << error.what()
              << " (please report this as a bug)\n";
    return 4;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::out_of_range& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  }
  return 2;
}

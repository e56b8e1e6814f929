#include "icx/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icx/cache.hpp"
#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"
#include "icx/error.hpp"
#include "icx/spectrum_tables.hpp"
#include "icx/spectrum_verify.hpp"
#include "icx/stability.hpp"

namespace icx {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSweepLimit = 100000;
constexpr unsigned kDefaultKMax = 30;
constexpr std::uint64_t kDefaultStabilityLimit = 1000000;

struct TableSource {
  std::string cache_flag;

  // An explicit --cache must be readable; ICX_CACHE is used only when it
  // exists. A cache smaller than `needed` is ignored and the table rebuilt.
  ComplexityTable get(std::uint64_t needed) const {
    std::optional<std::filesystem::path> path;
    if (!cache_flag.empty()) {
      path = cache_flag;
    } else if (const char* env = std::getenv("ICX_CACHE"); env && *env && std::filesystem::exists(env)) {
      path = env;
    }
    if (path) {
      ComplexityTable cached = read_cache(*path);
      if (cached.limit() >= needed) return cached;
    }
    return build_fast(std::max<std::uint64_t>(needed, 1));
  }

  std::optional<std::uint64_t> cached_limit() const {
    if (!cache_flag.empty()) return read_cache(cache_flag).limit();
    if (const char* env = std::getenv("ICX_CACHE"); env && *env && std::filesystem::exists(env)) {
      return read_cache(env).limit();
    }
    return std::nullopt;
  }
};

std::string display(long double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v << "~";
  return os.str();
}

std::uint64_t e_index(unsigned k) {
  const auto e = max_with_complexity_u64(k);
  if (!e) throw Error(ErrorKind::invalid_argument, "E(" + std::to_string(k) + ") exceeds 64 bits");
  return *e;
}

json report_json(const StabilityReport& r, const ComplexityTable& table) {
  const Certified<unsigned> dst = stable_integer_defect(r.n, r.horizon, table);
  json j;
  j["n"] = r.n;
  j["horizon"] = r.horizon;
  j["complexities"] = r.complexities;
  j["stable_complexity"] = r.stable_complexity;
  j["first_stable_k"] = r.first_stable_k;
  j["certified"] = r.certified;
  j["integer_defect"] = integer_defect(r.n, table);
  j["stable_integer_defect"] = dst.value;
  const Defect st(r.stable_complexity, r.n);
  j["stable_defect"] = {{"complexity", st.complexity}, {"base", st.base.get_str()}, {"approx", display(approximate(st))}};
  return j;
}

int emit_report(const VerificationReport& report, std::ostream& out) {
  out << report.to_json().dump() << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact integer complexity, defects and spectrum verification"};
  app.require_subcommand(1);

  TableSource source;

  std::uint64_t sieve_limit = 0;
  std::string sieve_mode = "fast";
  std::string sieve_out;
  auto* sieve = app.add_subcommand("sieve", "Build a complexity table and write it as a cache file");
  sieve->add_option("--limit", sieve_limit, "Largest n")->required()->check(CLI::PositiveNumber);
  sieve->add_option("--mode", sieve_mode, "oracle or fast")->check(CLI::IsMember({"oracle", "fast"}));
  sieve->add_option("--out", sieve_out, "Cache path")->required();

  std::uint64_t n = 0;
  auto* cpx = app.add_subcommand("cpx", "Print ||N||");
  cpx->add_option("N", n)->required()->check(CLI::PositiveNumber);
  cpx->add_option("--cache", source.cache_flag, "Cache file (default: $ICX_CACHE)");

  auto* defect = app.add_subcommand("defect", "Print the exact defect of N");
  defect->add_option("N", n)->required()->check(CLI::PositiveNumber);
  defect->add_option("--cache", source.cache_flag);

  auto* idefect = app.add_subcommand("idefect", "Print L(N), D(N) and the threshold cross-check");
  idefect->add_option("N", n)->required()->check(CLI::PositiveNumber);
  idefect->add_option("--cache", source.cache_flag);

  std::optional<unsigned> horizon;
  auto* stability = app.add_subcommand("stability", "Probe ||3^k N|| for stable complexity");
  stability->add_option("N", n)->required()->check(CLI::PositiveNumber);
  stability->add_option("--horizon", horizon, "Largest power of 3 to examine");
  stability->add_option("--cache", source.cache_flag);

  unsigned residue = 0;
  std::optional<unsigned> rows;
  auto* table_cmd = app.add_subcommand("table", "Print spectrum rows as CSV");
  table_cmd->add_option("--residue", residue, "k mod 3")->required()->check(CLI::Range(0u, 2u));
  table_cmd->add_option("--rows", rows, "Number of rows")->check(CLI::Range(1u, 10000u));

  std::string suite;
  std::optional<unsigned> kmax;
  std::optional<std::uint64_t> limit;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff it passes");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"tables", "classify", "dtod", "small3", "coinci", "v3lem", "segment", "dinterp"}));
  auto* kmax_opt = verify->add_option("--kmax", kmax)->check(CLI::Range(2u, 60u));
  auto* limit_opt = verify->add_option("--limit", limit)->check(CLI::PositiveNumber);
  kmax_opt->excludes(limit_opt);
  verify->add_option("--cache", source.cache_flag);

  std::uint64_t classify_limit = 0;
  auto* classify = app.add_subcommand("classify", "List all n with D(n) <= 1 as CSV");
  classify->add_option("--limit", classify_limit)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("icx");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "argument"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*sieve) {
      const ComplexityTable t = sieve_mode == "oracle" ? build_oracle(sieve_limit) : build_fast(sieve_limit);
      write_cache(sieve_out, t);
      out << json{{"limit", t.limit()}, {"mode", sieve_mode}, {"out", sieve_out}}.dump() << "\n";
      return 0;
    }
    if (*cpx) {
      out << source.get(n).at(n) << "\n";
      return 0;
    }
    if (*defect) {
      const ComplexityTable t = source.get(n);
      const Defect d = defect_of(n, t);
      out << json{{"complexity", d.complexity},
                  {"base", d.base.get_str()},
                  {"approx", display(approximate(d))},
                  {"approx_note", "display only; comparisons are exact"}}
                 .dump()
          << "\n";
      return 0;
    }
    if (*idefect) {
      const ComplexityTable t = source.get(n);
      json j{{"n", n}, {"complexity", t.at(n)}, {"L", complexity_floor(n)}, {"D", integer_defect(n, t)}};
      if (n > 1) {
        const unsigned via = integer_defect_from(defect_of(n, t));
        j["D_from_defect"] = via;
        j["consistent"] = via == integer_defect(n, t);
      } else {
        j["D_from_defect"] = nullptr;
        j["consistent"] = true;
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (*stability) {
      std::uint64_t needed = n;
      if (horizon) {
        for (unsigned k = 0; k < *horizon; ++k) {
          if (needed > std::numeric_limits<std::uint32_t>::max() / 3) {
            throw Error(ErrorKind::insufficient_table, "3^horizon * N is too large to tabulate");
          }
          needed *= 3;
        }
      } else if (!source.cached_limit()) {
        needed = std::max(n, kDefaultStabilityLimit);
      }
      const ComplexityTable t = source.get(needed);
      const StabilityReport r = horizon ? probe(n, *horizon, t) : probe(n, t);
      out << report_json(r, t).dump() << "\n";
      return 0;
    }
    if (*table_cmd) {
      const unsigned count = rows.value_or(static_cast<unsigned>(tabulated_row_count(residue)));
      out << "r,h_num,h_den,K,leader\n";
      for (const SpectrumRow& row : spectrum_rows(residue, count)) {
        out << row.r << "," << row.h.get_num().get_str() << "," << row.h.get_den().get_str() << "," << row.K << ","
            << row.leader.get_str() << "\n";
      }
      return 0;
    }
    if (*verify) {
      const bool by_k = suite == "tables" || suite == "v3lem";
      if (by_k && limit) throw CLI::ValidationError("--limit", "suite " + suite + " takes --kmax");
      if (!by_k && kmax) throw CLI::ValidationError("--kmax", "suite " + suite + " takes --limit");
      if (by_k) {
        const unsigned k_max = kmax.value_or(kDefaultKMax);
        const ComplexityTable t = source.get(e_index(k_max));
        if (suite == "tables") return emit_report(verify_tables(k_max, t), out);
        VerificationReport combined("v3lem", {{"kmax", k_max}});
        for (unsigned k = 2; k <= k_max; ++k) combined.merge(verify_ratio_integrality(k, t));
        return emit_report(combined, out);
      }
      const std::uint64_t lim = limit.value_or(kDefaultSweepLimit);
      const ComplexityTable t = source.get(lim);
      if (suite == "classify") return emit_report(verify_classification(lim, t), out);
      if (suite == "dtod") return emit_report(verify_threshold_equivalence(lim, t), out);
      if (suite == "small3") return emit_report(verify_smallest_defects(lim, t), out);
      if (suite == "coinci") return emit_report(verify_table_coincidence(lim, t), out);
      if (suite == "dinterp") return emit_report(verify_interpolation(lim, t), out);
      VerificationReport combined("segment", {{"limit", lim}});
      for (unsigned a = 0; a < 3; ++a) combined.merge(verify_initial_segment(a, lim, t));
      return emit_report(combined, out);
    }
    if (*classify) {
      out << "n,complexity\n";
      for (const ClassifiedNumber& c : classify_low_integer_defect(classify_limit)) {
        out << c.n << "," << c.claimed_complexity << "\n";
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "argument"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace icx

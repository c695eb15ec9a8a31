// Command-line driver: every experiment is a subcommand that emits one flat
// record (or one per grid point) as CSV or JSON. Output is deterministic for
// a fixed set of flags, independent of --threads.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corrsieve.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Row {
  std::string command;
  std::optional<uint64_t> N, D;
  std::optional<double> kappa, kappa1, kappa2, delta;
  std::optional<int64_t> h1, h2;
  std::optional<double> weighted_sum, normalizer_sum, ratio, extra;
};

std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(uint64_t v) { return std::to_string(v); }
std::string fmt(int64_t v) { return std::to_string(v); }

template <class T>
std::string cell(const std::optional<T>& v) {
  return v ? fmt(*v) : std::string();
}

void emit_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "command,N,kappa,kappa1,kappa2,delta,h1,h2,D,"
        "weighted_sum,normalizer_sum,ratio,extra\n";
  for (const auto& r : rows) {
    os << r.command << ',' << cell(r.N) << ',' << cell(r.kappa) << ','
       << cell(r.kappa1) << ',' << cell(r.kappa2) << ',' << cell(r.delta)
       << ',' << cell(r.h1) << ',' << cell(r.h2) << ',' << cell(r.D) << ','
       << cell(r.weighted_sum) << ',' << cell(r.normalizer_sum) << ','
       << cell(r.ratio) << ',' << cell(r.extra) << '\n';
  }
}

void emit_json(std::ostream& os, const std::vector<Row>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["command"] = r.command;
    if (r.N) o["N"] = *r.N;
    if (r.kappa) o["kappa"] = *r.kappa;
    if (r.kappa1) o["kappa1"] = *r.kappa1;
    if (r.kappa2) o["kappa2"] = *r.kappa2;
    if (r.delta) o["delta"] = *r.delta;
    if (r.h1) o["h1"] = *r.h1;
    if (r.h2) o["h2"] = *r.h2;
    if (r.D) o["D"] = *r.D;
    if (r.weighted_sum) o["weighted_sum"] = *r.weighted_sum;
    if (r.normalizer_sum) o["normalizer_sum"] = *r.normalizer_sum;
    if (r.ratio) o["ratio"] = *r.ratio;
    if (r.extra) o["extra"] = *r.extra;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

struct CsError {
  cs_status status;
  std::string message;
};

void check(cs_status st) {
  if (st != CS_OK) throw CsError{st, cs_last_error()};
}

// One sieve table per invocation, grown to the largest limit any
// subcommand run needs; CORRSIEVE_TABLE_LIMIT can raise the floor.
class SieveHolder {
 public:
  ~SieveHolder() {
    if (sieve_) cs_sieve_free(sieve_);
  }
  cs_sieve* get(uint64_t need) {
    if (const char* env = std::getenv("CORRSIEVE_TABLE_LIMIT")) {
      uint64_t floor = std::strtoull(env, nullptr, 10);
      need = std::max(need, floor);
    }
    need = std::max<uint64_t>(need, 2);
    if (!sieve_ || cs_sieve_limit(sieve_) < need) {
      if (sieve_) cs_sieve_free(sieve_);
      sieve_ = nullptr;
      check(cs_sieve_build(need, &sieve_));
    }
    return sieve_;
  }

 private:
  cs_sieve* sieve_ = nullptr;
};

struct SeqHandle {
  cs_seq* s = nullptr;
  ~SeqHandle() {
    if (s) cs_seq_free(s);
  }
};

cs_seq* make_named_seq(SieveHolder& holder, const std::string& name,
                       uint64_t scale, uint64_t limit, SeqHandle& out) {
  if (name == "one") {
    check(cs_seq_ones(limit, &out.s));
  } else if (name == "coeff") {
    check(cs_seq_coefficient_preset(holder.get(std::max(scale, limit)), scale,
                                    limit, &out.s));
  } else {
    cs_classical_fn f;
    if (name == "mobius")
      f = CS_FN_MOBIUS;
    else if (name == "liouville")
      f = CS_FN_LIOUVILLE;
    else if (name == "von-mangoldt")
      f = CS_FN_VON_MANGOLDT;
    else
      throw CsError{CS_EINVAL, "unknown sequence preset: " + name};
    check(cs_seq_classical(holder.get(limit), f, limit, &out.s));
  }
  return out.s;
}

void require_admissible(int64_t h1, int64_t h2) {
  int ok = 0;
  check(cs_is_admissible_pair(h1, h2, &ok));
  if (!ok)
    throw CsError{CS_EINVAL, "inadmissible pair (" + std::to_string(h1) +
                                 ", " + std::to_string(h2) + ")"};
}

double resolve_h_of_n(const std::string& mode, double h_value, uint64_t N) {
  double dn = static_cast<double>(N);
  if (mode == "sqrt") return std::sqrt(dn);
  if (mode == "log_power") return std::pow(std::log(dn), h_value);
  if (mode == "constant") return h_value;
  throw CsError{CS_EINVAL, "unknown h mode: " + mode};
}

uint64_t shift_margin(int64_t h1, int64_t h2) {
  int64_t m = std::max<int64_t>({h1, h2, 0});
  return static_cast<uint64_t>(m);
}

// ---- per-command row builders -----------------------------------------

Row run_sieve_info(SieveHolder& holder, uint64_t limit) {
  cs_sieve* t = holder.get(limit);
  uint64_t primes = 0;
  check(cs_sieve_prime_count(t, &primes));
  Row r;
  r.command = "sieve-info";
  r.N = cs_sieve_limit(t);
  r.extra = static_cast<double>(primes);
  return r;
}

Row run_identity_check(SieveHolder& holder, double kappa, uint64_t limit) {
  double dev = 0;
  check(cs_check_leibnitz(holder.get(limit), kappa, limit, &dev));
  Row r;
  r.command = "identity-check";
  r.N = limit;
  r.kappa = kappa;
  r.extra = dev;
  return r;
}

Row run_alpha_check(SieveHolder& holder, double kappa, uint64_t limit,
                    uint64_t N) {
  double dev = 0;
  check(cs_alpha_identity_check(holder.get(limit), kappa, limit, N, &dev));
  Row r;
  r.command = "alpha-check";
  r.N = N;
  r.kappa = kappa;
  r.extra = dev;
  return r;
}

Row report_row(const char* cmd, const cs_report& rep) {
  Row r;
  r.command = cmd;
  r.weighted_sum = rep.weighted_sum;
  r.normalizer_sum = rep.normalizer_sum;
  if (rep.ratio_defined) r.ratio = rep.ratio;
  return r;
}

Row run_single_corr(SieveHolder& holder, double kappa, uint64_t N) {
  cs_report rep;
  check(cs_single_correlation(holder.get(N), kappa, N, &rep));
  Row r = report_row("single-corr", rep);
  r.N = N;
  r.kappa = kappa;
  return r;
}

Row run_two_point(SieveHolder& holder, int64_t h1, int64_t h2, double kappa,
                  uint64_t N) {
  require_admissible(h1, h2);
  cs_weight_spec w{CS_WEIGHT_ALPHA_KAPPA, kappa, 0.0, 1.0, 2.0};
  cs_report rep;
  check(cs_two_point_plain(holder.get(N + shift_margin(h1, h2)), h1, h2, &w,
                           N, &rep));
  Row r = report_row("two-point", rep);
  r.N = N;
  r.kappa = kappa;
  r.h1 = h1;
  r.h2 = h2;
  return r;
}

Row run_two_point_logavg(SieveHolder& holder, int64_t h1, int64_t h2,
                         double kappa, uint64_t N, const std::string& h_mode,
                         double h_value) {
  require_admissible(h1, h2);
  double h = resolve_h_of_n(h_mode, h_value, N);
  cs_report rep;
  check(cs_two_point_log_avg(holder.get(N + shift_margin(h1, h2)), h1, h2,
                             kappa, N, h, &rep));
  Row r = report_row("two-point-logavg", rep);
  r.N = N;
  r.kappa = kappa;
  r.h1 = h1;
  r.h2 = h2;
  r.extra = std::log(h);  // so the o(log h) reading can be checked too
  return r;
}

Row run_chowla_raw(SieveHolder& holder, int64_t h1, int64_t h2, uint64_t N) {
  double sum = 0;
  check(cs_chowla_raw(holder.get(N + shift_margin(h1, h2)), h1, h2, N, &sum));
  Row r;
  r.command = "chowla-raw";
  r.N = N;
  r.h1 = h1;
  r.h2 = h2;
  r.weighted_sum = sum;
  r.normalizer_sum = static_cast<double>(N);
  r.ratio = sum / static_cast<double>(N);
  return r;
}

Row run_chowla_general(SieveHolder& holder, int64_t h1, int64_t h2,
                       double kappa1, double kappa2, double delta,
                       uint64_t N) {
  require_admissible(h1, h2);
  double y = std::exp(std::pow(std::log(static_cast<double>(N)), delta));
  cs_weight_spec w{CS_WEIGHT_TAU_PM, 0.0, kappa1, kappa2, y};
  cs_report rep;
  check(cs_two_point_plain(holder.get(N + shift_margin(h1, h2)), h1, h2, &w,
                           N, &rep));
  Row r = report_row("chowla-general", rep);
  r.N = N;
  r.kappa1 = kappa1;
  r.kappa2 = kappa2;
  r.delta = delta;
  r.h1 = h1;
  r.h2 = h2;
  return r;
}

Row run_discrepancy(SieveHolder& holder, const std::string& func, uint64_t N,
                    uint64_t q, uint64_t residue) {
  SeqHandle seq;
  make_named_seq(holder, func, N, N, seq);
  double d = 0;
  check(cs_discrepancy(seq.s, q, residue, &d));
  Row r;
  r.command = "discrepancy";
  r.N = N;
  r.D = q;
  r.h1 = static_cast<int64_t>(residue);
  r.extra = d;
  return r;
}

Row run_geh_sum(SieveHolder& holder, const std::string& afunc,
                const std::string& bfunc, uint64_t N, uint64_t M,
                uint64_t limit, uint64_t D) {
  SeqHandle a, b;
  make_named_seq(holder, afunc, N, limit, a);
  make_named_seq(holder, bfunc, M, limit, b);
  double total = 0;
  check(cs_geh_aggregate(a.s, b.s, D, limit, nullptr, &total));
  Row r;
  r.command = "geh-sum";
  r.N = N;
  r.D = D;
  r.weighted_sum = total;
  r.extra = total;
  return r;
}

Row run_alladi(SieveHolder& holder, uint64_t x, double y, double delta,
               bool have_y) {
  if (!have_y)
    y = std::exp(std::pow(std::log(static_cast<double>(x)), delta));
  double d = 0;
  check(cs_alladi_distance(holder.get(x), x, y, &d));
  Row r;
  r.command = "alladi";
  r.N = x;
  r.delta = have_y ? std::optional<double>() : std::optional<double>(delta);
  r.kappa1 = y;  // y rides in kappa1; documented in the README schema notes
  r.extra = d;
  return r;
}

Row run_selberg_pik(SieveHolder& holder, uint64_t x, uint32_t k) {
  cs_fit fit;
  check(cs_selberg_pi_k(holder.get(x), x, k, &fit));
  Row r;
  r.command = "selberg-pik";
  r.N = x;
  r.D = k;
  r.weighted_sum = fit.observed;
  r.normalizer_sum = fit.predicted;
  if (fit.ratio_defined) r.ratio = fit.ratio;
  r.extra = fit.extra;
  return r;
}

Row run_mean_tau(SieveHolder& holder, uint64_t x, double kappa) {
  cs_fit fit;
  check(cs_mean_tau(holder.get(x), x, kappa, &fit));
  Row r;
  r.command = "mean-tau";
  r.N = x;
  r.kappa = kappa;
  r.weighted_sum = fit.observed;
  r.normalizer_sum = fit.predicted;
  if (fit.ratio_defined) r.ratio = fit.ratio;
  r.extra = fit.extra;  // fit residual; c = normalizer/(x (log x)^(kappa-1))
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corrsieve: weighted Liouville/Moebius correlation and "
               "discrepancy experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads/--format/--output may follow the subcommand

  int threads = 1;
  std::string format = "csv";
  std::string output;
  app.add_option("--threads", threads, "worker threads (output-invariant)");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "output path (default stdout)");

  // Shared parameter slots; each subcommand registers the ones it uses.
  uint64_t N = 1000000, limit = 100000, x = 1000000, q = 3, residue = 1;
  uint64_t M = 0, conv_limit = 0, D = 50, k = 2, table_limit = 1000000;
  double kappa = 1.0, kappa1 = 0.0, kappa2 = 1.0, delta = 0.3;
  double y = 10.0, h_value = 2.0;
  int64_t h1 = 0, h2 = 2;
  std::string h_mode = "sqrt", func = "mobius", afunc = "mobius",
              bfunc = "one", grid_command;
  std::vector<double> kappa_grid;
  std::vector<uint64_t> n_grid;
  bool have_y = false;

  auto* sc_info = app.add_subcommand("sieve-info", "table summary");
  sc_info->add_option("--limit", table_limit, "table limit");

  auto* sc_ident = app.add_subcommand("identity-check",
                                      "Leibniz-type convolution identity");
  sc_ident->add_option("--kappa", kappa);
  sc_ident->add_option("--limit", limit);

  auto* sc_alpha = app.add_subcommand("alpha-check",
                                      "alpha weight identity check");
  sc_alpha->add_option("--kappa", kappa);
  sc_alpha->add_option("--limit", limit);
  sc_alpha->add_option("--N", N, "scale N (defaults to limit)");

  auto* sc_single = app.add_subcommand("single-corr",
                                       "lambda against alpha_kappa");
  sc_single->add_option("--kappa", kappa);
  sc_single->add_option("--N", N);

  auto* sc_two = app.add_subcommand("two-point",
                                    "plain two-point alpha correlation");
  sc_two->add_option("--h1", h1);
  sc_two->add_option("--h2", h2);
  sc_two->add_option("--kappa", kappa);
  sc_two->add_option("--N", N);

  auto* sc_log = app.add_subcommand("two-point-logavg",
                                    "1/n-averaged two-point correlation");
  sc_log->add_option("--h1", h1);
  sc_log->add_option("--h2", h2);
  sc_log->add_option("--kappa", kappa);
  sc_log->add_option("--N", N);
  sc_log->add_option("--h-mode", h_mode)
      ->check(CLI::IsMember({"sqrt", "log_power", "constant"}));
  sc_log->add_option("--h-value", h_value,
                     "exponent (log_power) or value (constant)");

  auto* sc_raw = app.add_subcommand("chowla-raw",
                                    "unweighted two-point Liouville sum");
  sc_raw->add_option("--h1", h1);
  sc_raw->add_option("--h2", h2);
  sc_raw->add_option("--N", N);

  auto* sc_gen = app.add_subcommand("chowla-general",
                                    "mu pairs with split tau weights");
  sc_gen->add_option("--h1", h1);
  sc_gen->add_option("--h2", h2);
  sc_gen->add_option("--kappa1", kappa1);
  sc_gen->add_option("--kappa2", kappa2);
  sc_gen->add_option("--delta", delta);
  sc_gen->add_option("--N", N);

  auto* sc_disc = app.add_subcommand("discrepancy",
                                     "signed discrepancy on one class");
  sc_disc->add_option("--func", func, "mobius|liouville|von-mangoldt|one|coeff");
  sc_disc->add_option("--N", N, "sequence range / preset scale");
  sc_disc->add_option("--q", q);
  sc_disc->add_option("--residue", residue);

  auto* sc_geh = app.add_subcommand("geh-sum",
                                    "sup-discrepancy aggregate of a*b");
  sc_geh->add_option("--alpha-func", afunc);
  sc_geh->add_option("--beta-func", bfunc);
  sc_geh->add_option("--N", N, "scale of alpha preset");
  sc_geh->add_option("--M", M, "scale of beta preset (defaults to N)");
  sc_geh->add_option("--limit", conv_limit,
                     "convolution range (defaults to N)");
  sc_geh->add_option("--D", D);

  auto* sc_all = app.add_subcommand("alladi",
                                    "omega normality on y-rough integers");
  sc_all->add_option("--x", x);
  sc_all->add_option("--y", y)->each([&](const std::string&) {
    have_y = true;
  });
  sc_all->add_option("--delta", delta, "y = exp((log x)^delta) when --y unset");

  auto* sc_pik = app.add_subcommand("selberg-pik",
                                    "count of n with omega(n) = k vs formula");
  sc_pik->add_option("--x", x);
  sc_pik->add_option("--k", k);

  auto* sc_mean = app.add_subcommand("mean-tau",
                                     "partial sums of tau_kappa vs fit");
  sc_mean->add_option("--x", x);
  sc_mean->add_option("--kappa", kappa);

  auto* sc_grid = app.add_subcommand("grid",
                                     "sweep kappa and/or N for a command");
  sc_grid->add_option("--command", grid_command,
                      "single-corr|two-point|two-point-logavg|"
                      "chowla-general|chowla-raw|mean-tau")
      ->required();
  sc_grid->add_option("--kappa-grid", kappa_grid, "comma list")
      ->delimiter(',');
  sc_grid->add_option("--N-grid", n_grid, "comma list")->delimiter(',');
  sc_grid->add_option("--h1", h1);
  sc_grid->add_option("--h2", h2);
  sc_grid->add_option("--kappa", kappa);
  sc_grid->add_option("--kappa1", kappa1);
  sc_grid->add_option("--kappa2", kappa2);
  sc_grid->add_option("--delta", delta);
  sc_grid->add_option("--N", N);
  sc_grid->add_option("--h-mode", h_mode)
      ->check(CLI::IsMember({"sqrt", "log_power", "constant"}));
  sc_grid->add_option("--h-value", h_value);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cs_set_thread_count(threads);
  SieveHolder holder;
  std::vector<Row> rows;

  try {
    if (sc_info->parsed()) {
      rows.push_back(run_sieve_info(holder, table_limit));
    } else if (sc_ident->parsed()) {
      rows.push_back(run_identity_check(holder, kappa, limit));
    } else if (sc_alpha->parsed()) {
      if (sc_alpha->count("--N") == 0) N = limit;
      rows.push_back(run_alpha_check(holder, kappa, limit, N));
    } else if (sc_single->parsed()) {
      rows.push_back(run_single_corr(holder, kappa, N));
    } else if (sc_two->parsed()) {
      rows.push_back(run_two_point(holder, h1, h2, kappa, N));
    } else if (sc_log->parsed()) {
      rows.push_back(
          run_two_point_logavg(holder, h1, h2, kappa, N, h_mode, h_value));
    } else if (sc_raw->parsed()) {
      rows.push_back(run_chowla_raw(holder, h1, h2, N));
    } else if (sc_gen->parsed()) {
      rows.push_back(
          run_chowla_general(holder, h1, h2, kappa1, kappa2, delta, N));
    } else if (sc_disc->parsed()) {
      rows.push_back(run_discrepancy(holder, func, N, q, residue));
    } else if (sc_geh->parsed()) {
      if (M == 0) M = N;
      if (conv_limit == 0) conv_limit = N;
      rows.push_back(run_geh_sum(holder, afunc, bfunc, N, M, conv_limit, D));
    } else if (sc_all->parsed()) {
      rows.push_back(run_alladi(holder, x, y, delta, have_y));
    } else if (sc_pik->parsed()) {
      rows.push_back(run_selberg_pik(holder, x, static_cast<uint32_t>(k)));
    } else if (sc_mean->parsed()) {
      rows.push_back(run_mean_tau(holder, x, kappa));
    } else if (sc_grid->parsed()) {
      if (kappa_grid.empty() && n_grid.empty())
        throw CsError{CS_EINVAL, "grid: empty grid"};
      std::vector<uint64_t> ns = n_grid.empty()
                                     ? std::vector<uint64_t>{N}
                                     : n_grid;
      std::vector<double> ks = kappa_grid.empty()
                                   ? std::vector<double>{kappa}
                                   : kappa_grid;
      for (uint64_t gn : ns) {
        for (double gk : ks) {
          if (grid_command == "single-corr")
            rows.push_back(run_single_corr(holder, gk, gn));
          else if (grid_command == "two-point")
            rows.push_back(run_two_point(holder, h1, h2, gk, gn));
          else if (grid_command == "two-point-logavg")
            rows.push_back(
                run_two_point_logavg(holder, h1, h2, gk, gn, h_mode, h_value));
          else if (grid_command == "chowla-general")
            rows.push_back(run_chowla_general(holder, h1, h2,
                                              kappa_grid.empty() ? kappa1 : gk,
                                              kappa2, delta, gn));
          else if (grid_command == "chowla-raw")
            rows.push_back(run_chowla_raw(holder, h1, h2, gn));
          else if (grid_command == "mean-tau")
            rows.push_back(run_mean_tau(holder, gn, gk));
          else
            throw CsError{CS_EINVAL,
                          "grid: unknown command " + grid_command};
        }
      }
      for (auto& r : rows) r.command = "grid:" + r.command;
    }
  } catch (const CsError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status == CS_ENOMEM ? kExitResource : kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitResource;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file " << output << '\n';
      return kExitUsage;
    }
    os = &file;
  }
  if (format == "json")
    emit_json(*os, rows);
  else
    emit_csv(*os, rows);
  return kExitOk;
}

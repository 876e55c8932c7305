#include "levy/cli.h"

#include "levy/pricing_oracle.h"
#include "levy/smile_asymptotics.h"
#include "levy/stable_atm.h"
#include "levy/variance_options.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace levy::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_decimal(const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return v;
}

std::string format_g(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Formatting of output cells.
std::string fixed4(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string sci(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fixed6(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Model keys: required names and optional names with defaults.
struct ModelKeys {
  std::vector<std::string> required;
  std::vector<std::pair<std::string, double>> optional;
};

const std::map<std::string, ModelKeys>& model_keys() {
  static const std::map<std::string, ModelKeys> keys = {
      {"VG", {{"sigma", "nu", "theta"}, {{"eta", 0.0}}}},
      {"CGMY", {{"C", "G", "M", "Y"}, {}}},
      {"Merton", {{"lambda", "mu_j", "delta_j", "sigma"}, {}}},
      {"Kou", {{"lambda", "p", "lambda_plus", "lambda_minus", "sigma"}, {}}},
      {"NIG", {{"alpha", "beta", "delta"}, {{"sigma", 0.0}}}},
  };
  return keys;
}

const std::set<std::string>& global_keys() {
  static const std::set<std::string> keys = {
      "model",     "k",         "t",         "K",      "columns",        "abs_tol",
      "rel_tol",   "order",     "seed",      "title",  "cir_kappa",      "cir_theta",
      "cir_sigma", "cir_y0",    "cir_stationary",      "ey0",            "rho",
      "gamma"};
  return keys;
}

const std::vector<std::string>& command_columns(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> cols = {
      {"table", {"first", "second", "ift"}},
      {"smile", {"first", "second", "ift", "iv-exact", "iv-approx-1", "iv-approx-2"}},
      {"iv-errors", {"iv-approx-1", "iv-approx-2"}},
      {"timechange", {"first", "second", "iv-approx-1", "iv-approx-2"}},
      {"atm", {}},
      {"varcall", {}},
  };
  const auto it = cols.find(command);
  if (it == cols.end()) throw ConfigError("unknown command '" + command + "'");
  return it->second;
}

ModelParams build_params(const std::string& name, const std::map<std::string, double>& v) {
  auto g = [&](const char* key) { return v.at(key); };
  if (name == "VG") return VGParams{g("sigma"), g("nu"), g("theta"), g("eta")};
  if (name == "CGMY") return CGMYParams{g("C"), g("G"), g("M"), g("Y")};
  if (name == "Merton") return MertonParams{g("lambda"), g("mu_j"), g("delta_j"), g("sigma")};
  if (name == "Kou") {
    return KouParams{g("lambda"), g("p"), g("lambda_plus"), g("lambda_minus"), g("sigma")};
  }
  return NIGParams{g("alpha"), g("beta"), g("delta"), g("sigma")};
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string s = lower(value);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("key '" + key + "' expects true/false, got '" + value + "'");
}

void require_grid(const std::vector<GridValue>& g, const char* name) {
  if (g.empty()) throw ConfigError(std::string("grid '") + name + "' must not be empty");
}

// Runs fn(i) for i in [0, n) on `threads` workers; fn must not throw.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Result of one computed cell: a value or an error message.
struct Cell {
  double value = 0.0;
  bool ok = false;
  std::string error;
};

template <class F>
Cell compute_cell(F&& f) {
  Cell c;
  try {
    c.value = f();
    c.ok = true;
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

class Table {
 public:
  explicit Table(const RunConfig& cfg) : cfg_(cfg) {}

  void header_line(const std::string& line) { header_ << "# " << line << "\n"; }
  void columns(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) body_ << (i ? "," : "") << names[i];
    body_ << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) body_ << (i ? "," : "") << cells[i];
    body_ << "\n";
  }
  void raw(const std::string& line) { body_ << line << "\n"; }

  // Formats a cell, recording failures under `where`.
  std::string cell(const Cell& c, const std::string& where,
                   const std::function<std::string(double)>& fmt) {
    if (c.ok) return fmt(c.value);
    ++result_.failed_cells;
    result_.messages.push_back(where + ": " + c.error);
    return kErrorToken;
  }

  CommandResult finish() {
    std::ostringstream os;
    os << "# levy-smile " << kVersion << " " << cfg_.command << "\n";
    os << "# model: " << cfg_.model_name << " (";
    for (std::size_t i = 0; i < cfg_.model_entries.size(); ++i) {
      os << (i ? ", " : "") << cfg_.model_entries[i].first << "=" << cfg_.model_entries[i].second;
    }
    os << ")\n";
    os << "# quadrature: abs_tol=" << format_g(cfg_.tol.abs_tol)
       << " rel_tol=" << format_g(cfg_.tol.rel_tol) << "; expansion order=" << cfg_.order
       << "; seed=" << cfg_.seed << "\n";
    os << "# day count: t in years, 252 trading days per year\n";
    os << "# failed cells are printed as " << kErrorToken << "\n";
    os << header_.str() << body_.str();
    result_.output = os.str();
    return result_;
  }

 private:
  const RunConfig& cfg_;
  std::ostringstream header_;
  std::ostringstream body_;
  CommandResult result_;
};

bool wants(const RunConfig& cfg, const std::string& column) {
  return std::find(cfg.columns.begin(), cfg.columns.end(), column) != cfg.columns.end();
}

std::string at(const GridValue& k, const GridValue& t) {
  return "k=" + k.label + ", t=" + t.label;
}

// Per-strike expansion coefficients (a1 only for order 2).
std::vector<std::pair<CallCoefficients, Cell>> strike_coefficients(const RunConfig& cfg,
                                                                   const LevyTriplet& model,
                                                                   const LevyTriplet* share,
                                                                   int threads) {
  std::vector<std::pair<CallCoefficients, Cell>> out(cfg.k.size());
  D2Options d2o;
  d2o.quad = cfg.tol;
  parallel_for(cfg.k.size(), threads, [&](std::size_t i) {
    const double k = cfg.k[i].value;
    out[i].second = compute_cell([&] {
      if (cfg.order == 2) {
        out[i].first = call_coefficients(model, *share, k, d2o);
      } else {
        const quad::Result lead = a0(model, k, cfg.tol);
        out[i].first.k = k;
        out[i].first.a0 = lead.value;
        out[i].first.a0_error = lead.error;
      }
      return out[i].first.a0;
    });
  });
  return out;
}

const char* kPriceScaling =
    "prices: 1000 x (1/t) x E(S_t - K)_+ / S_0 at log-moneyness k = log(K/S_0), 4 decimals";

CommandResult cmd_table(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const std::optional<LevyTriplet> share =
      cfg.order == 2 ? std::optional(share_measure_transform(model, cfg.tol)) : std::nullopt;
  const auto coeffs = strike_coefficients(cfg, model, share ? &*share : nullptr, threads);
  const std::size_t nk = cfg.k.size(), nt = cfg.t.size();
  std::vector<Cell> ift(nk * nt);
  if (wants(cfg, "ift")) {
    parallel_for(nk * nt, threads, [&](std::size_t j) {
      const double k = cfg.k[j / nt].value, t = cfg.t[j % nt].value;
      ift[j] = compute_cell([&] { return ift_call(model, k, t).price_per_spot; });
    });
  }
  Table tab(cfg);
  tab.header_line(kPriceScaling);
  tab.header_line("first: 1000 a0(k) (t-independent); second: 1000 (a0 + t a1); ift: Fourier oracle");
  std::vector<std::string> names{"k"};
  if (wants(cfg, "first")) names.push_back("first");
  for (const auto& t : cfg.t) {
    if (wants(cfg, "second")) names.push_back("second[t=" + t.label + "]");
    if (wants(cfg, "ift")) names.push_back("ift[t=" + t.label + "]");
  }
  tab.columns(names);
  for (std::size_t i = 0; i < nk; ++i) {
    const auto& [c, cell] = coeffs[i];
    std::vector<std::string> row{cfg.k[i].label};
    if (wants(cfg, "first")) {
      row.push_back(tab.cell(cell, "k=" + cfg.k[i].label, [](double a) { return fixed4(1000.0 * a); }));
    }
    for (std::size_t j = 0; j < nt; ++j) {
      const double t = cfg.t[j].value;
      if (wants(cfg, "second")) {
        row.push_back(tab.cell(cell, at(cfg.k[i], cfg.t[j]) + " (second)", [&](double) {
          return fixed4(1000.0 * call_price_expansion(c, t, 2).price_per_spot / t);
        }));
      }
      if (wants(cfg, "ift")) {
        row.push_back(tab.cell(ift[i * nt + j], at(cfg.k[i], cfg.t[j]) + " (ift)",
                               [&](double p) { return fixed4(1000.0 * p / t); }));
      }
    }
    tab.row(row);
  }
  return tab.finish();
}

// Exact implied vol; flagged quotes without a usable vol fail the cell.
Cell exact_iv_cell(const LevyTriplet& model, double k, double t) {
  return compute_cell([&] {
    const ImpliedVolQuote q = exact_implied_vol(model, k, t);
    if (!std::isfinite(q.vol)) throw Error("implied vol unavailable: " + q.reason);
    return q.vol;
  });
}

CommandResult cmd_smile(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const std::optional<LevyTriplet> share =
      cfg.order == 2 ? std::optional(share_measure_transform(model, cfg.tol)) : std::nullopt;
  const auto coeffs = strike_coefficients(cfg, model, share ? &*share : nullptr, threads);
  const std::size_t nk = cfg.k.size(), nt = cfg.t.size();
  std::vector<Cell> ift(nk * nt), iv(nk * nt);
  parallel_for(nk * nt, threads, [&](std::size_t j) {
    const double k = cfg.k[j / nt].value, t = cfg.t[j % nt].value;
    if (wants(cfg, "ift")) ift[j] = compute_cell([&] { return ift_call(model, k, t).price_per_spot; });
    if (wants(cfg, "iv-exact")) iv[j] = exact_iv_cell(model, k, t);
  });
  Table tab(cfg);
  tab.header_line(kPriceScaling);
  tab.header_line("iv-*: annualised Black-Scholes implied volatility; iv-approx-1/2 are sigma~_1, sigma~_2 of Section 6");
  std::vector<std::string> names{"t", "k"};
  for (const auto& c : cfg.columns) names.push_back(c);
  tab.columns(names);
  for (std::size_t j = 0; j < nt; ++j) {
    for (std::size_t i = 0; i < nk; ++i) {
      const double t = cfg.t[j].value, k = cfg.k[i].value;
      const std::string where = at(cfg.k[i], cfg.t[j]);
      const auto& [c, cell] = coeffs[i];
      std::vector<std::string> row{cfg.t[j].label, cfg.k[i].label};
      for (const auto& col : cfg.columns) {
        if (col == "first") {
          row.push_back(tab.cell(cell, where + " (first)", [](double a) { return fixed4(1000.0 * a); }));
        } else if (col == "second") {
          row.push_back(tab.cell(cell, where + " (second)", [&](double) {
            return fixed4(1000.0 * call_price_expansion(c, t, 2).price_per_spot / t);
          }));
        } else if (col == "ift") {
          row.push_back(tab.cell(ift[i * nt + j], where + " (ift)",
                                 [&](double p) { return fixed4(1000.0 * p / t); }));
        } else if (col == "iv-exact") {
          row.push_back(tab.cell(iv[i * nt + j], where + " (iv-exact)", fixed6));
        } else {
          const bool second = col == "iv-approx-2";
          const Cell approx = compute_cell([&] {
            if (!cell.ok) throw Error(cell.error);
            const ImpliedVarApprox v = implied_var_terms_from_a0(c.a0, k, t);
            return second ? v.sigma_tilde_2 : v.sigma_tilde_1;
          });
          row.push_back(tab.cell(approx, where + " (" + col + ")", fixed6));
        }
      }
      tab.row(row);
    }
  }
  return tab.finish();
}

CommandResult cmd_iv_errors(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const std::size_t nk = cfg.k.size(), nt = cfg.t.size();
  std::vector<Cell> iv(nk * nt);
  std::vector<Cell> lead(nk);
  parallel_for(nk, threads, [&](std::size_t i) {
    lead[i] = compute_cell([&] { return a0(model, cfg.k[i].value, cfg.tol).value; });
  });
  parallel_for(nk * nt, threads, [&](std::size_t j) {
    iv[j] = exact_iv_cell(model, cfg.k[j / nt].value, cfg.t[j % nt].value);
  });
  Table tab(cfg);
  tab.header_line("iv: annualised Black-Scholes implied volatility; rel_err = (approx - exact)/exact in percent");
  std::vector<std::string> names{"k", "t", "iv_exact"};
  const bool want1 = wants(cfg, "iv-approx-1"), want2 = wants(cfg, "iv-approx-2");
  if (want1) names.insert(names.end(), {"iv_approx_1", "rel_err_1"});
  if (want2) names.insert(names.end(), {"iv_approx_2", "rel_err_2"});
  tab.columns(names);
  // Relative errors per strike and approximation, in grid order.
  std::vector<std::vector<double>> errs1(nk), errs2(nk);
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double k = cfg.k[i].value, t = cfg.t[j].value;
      const std::string where = at(cfg.k[i], cfg.t[j]);
      const Cell& exact = iv[i * nt + j];
      std::vector<std::string> row{cfg.k[i].label, cfg.t[j].label,
                                   tab.cell(exact, where + " (iv-exact)", fixed6)};
      for (int which : {1, 2}) {
        if ((which == 1 && !want1) || (which == 2 && !want2)) continue;
        const Cell approx = compute_cell([&] {
          if (!lead[i].ok) throw Error(lead[i].error);
          const ImpliedVarApprox v = implied_var_terms_from_a0(lead[i].value, k, t);
          return which == 1 ? v.sigma_tilde_1 : v.sigma_tilde_2;
        });
        row.push_back(tab.cell(approx, where + " (iv-approx-" + std::to_string(which) + ")", fixed6));
        if (approx.ok && exact.ok && std::isfinite(approx.value)) {
          const double e = 100.0 * (approx.value - exact.value) / exact.value;
          (which == 1 ? errs1 : errs2)[i].push_back(e);
          row.push_back(fixed4(e));
        } else {
          row.push_back("NA");
        }
      }
      tab.row(row);
    }
  }
  tab.raw("# summary: relative error of the approximation over the t-grid, in percent");
  tab.raw("summary,k,approx,min,max,mean_abs,n");
  for (std::size_t i = 0; i < nk; ++i) {
    for (int which : {1, 2}) {
      if ((which == 1 && !want1) || (which == 2 && !want2)) continue;
      const auto& e = (which == 1 ? errs1 : errs2)[i];
      std::string line = "summary," + cfg.k[i].label + ",sigma_tilde_" + std::to_string(which) + ",";
      if (e.empty()) {
        line += "NA,NA,NA,0";
      } else {
        double mean_abs = 0.0;
        for (double x : e) mean_abs += std::abs(x);
        mean_abs /= static_cast<double>(e.size());
        line += fixed4(*std::min_element(e.begin(), e.end())) + "," +
                fixed4(*std::max_element(e.begin(), e.end())) + "," + fixed4(mean_abs) + "," +
                std::to_string(e.size());
      }
      tab.raw(line);
    }
  }
  return tab.finish();
}

CommandResult cmd_atm(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const LevyTriplet share = share_measure_transform(model, cfg.tol);
  const StableLimit limit = stable_limit(share);
  const std::size_t nt = cfg.t.size();
  std::vector<Cell> price(nt), iv(nt);
  parallel_for(nt, threads, [&](std::size_t j) {
    const double t = cfg.t[j].value;
    price[j] = compute_cell([&] { return ift_call(model, 0.0, t).price_per_spot; });
    if (price[j].ok) iv[j] = compute_cell([&] { return bs_implied_vol(price[j].value, 0.0, t); });
    else iv[j] = price[j];
  });
  Table tab(cfg);
  tab.header_line("at-the-money (k = 0) call per unit spot; limit_price = t^{1/Y} E*(Z+), iv_limit = sqrt(2 pi) E*(Z+) t^{1/Y - 1/2}");
  tab.header_line("stable limit: Y=" + format_g(limit.alpha()) + " scale c=" + format_g(limit.scale()) +
                  " E*(Z+)=" + format_g(limit.ez_plus()));
  tab.columns({"t", "limit_price", "oracle_atm", "ratio", "iv_limit", "iv_oracle", "iv_ratio"});
  for (std::size_t j = 0; j < nt; ++j) {
    const double t = cfg.t[j].value;
    const double lp = atm_price_limit(limit, t), lv = atm_implied_vol_limit(limit, t);
    const std::string where = "t=" + cfg.t[j].label;
    tab.row({cfg.t[j].label, sci(lp), tab.cell(price[j], where + " (oracle)", sci),
             price[j].ok ? fixed6(price[j].value / lp) : kErrorToken, fixed6(lv),
             tab.cell(iv[j], where + " (iv)", fixed6),
             iv[j].ok ? fixed6(iv[j].value / lv) : kErrorToken});
  }
  return tab.finish();
}

CommandResult cmd_varcall(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const std::size_t nK = cfg.K.size(), nt = cfg.t.size();
  std::vector<Cell> x(nK), y(nK);
  parallel_for(nK, threads, [&](std::size_t i) {
    const double K = cfg.K[i].value;
    x[i] = compute_cell([&] { return variance_call_leading(model, K, 1.0, cfg.tol).value; });
    y[i] = compute_cell([&] { return variance_call_leading_yform(model, K, 1.0, cfg.tol).value; });
  });
  Table tab(cfg);
  tab.header_line("leading-order variance call E([X]_t - K)_+ ~ t int (x^2 - K)_+ nu(x) dx (x-form) = t int (y - K)_+ q(y) dy (y-form)");
  tab.columns({"K", "t", "x_form", "y_form", "rel_diff"});
  for (std::size_t i = 0; i < nK; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double t = cfg.t[j].value;
      const std::string where = "K=" + cfg.K[i].label + ", t=" + cfg.t[j].label;
      std::string rel = kErrorToken;
      if (x[i].ok && y[i].ok) {
        rel = x[i].value != 0.0 ? sci((y[i].value - x[i].value) / x[i].value) : sci(0.0);
      }
      tab.row({cfg.K[i].label, cfg.t[j].label,
               tab.cell(x[i], where + " (x-form)", [&](double v) { return sci(t * v); }),
               tab.cell(y[i], where + " (y-form)", [&](double v) { return sci(t * v); }), rel});
    }
  }
  return tab.finish();
}

CommandResult cmd_timechange(const RunConfig& cfg, int threads) {
  const LevyTriplet model = make_model(cfg.model);
  const TimeChangeMoments m = cfg.cir ? cir_moments(*cfg.cir) : *cfg.moments;
  const std::optional<LevyTriplet> share =
      cfg.order == 2 ? std::optional(share_measure_transform(model, cfg.tol)) : std::nullopt;
  const auto coeffs = strike_coefficients(cfg, model, share ? &*share : nullptr, threads);
  Table tab(cfg);
  tab.header_line(kPriceScaling);
  tab.header_line("time change: E Y0=" + format_g(m.ey0) + " rho=" + format_g(m.rho) +
                  " gamma=" + format_g(m.gamma) +
                  (m.gamma_negative ? " (warning: gamma < 0, outside Eq. 3.5(iii))" : ""));
  tab.header_line("first: 1000 E(Y0) a0; second: 1000 [E(Y0) a0 + t (rho a1 + gamma a0)]");
  std::vector<std::string> names{"k", "t"};
  for (const auto& c : cfg.columns) names.push_back(c);
  tab.columns(names);
  for (std::size_t i = 0; i < cfg.k.size(); ++i) {
    const auto& [c, cell] = coeffs[i];
    for (std::size_t j = 0; j < cfg.t.size(); ++j) {
      const double t = cfg.t[j].value, k = cfg.k[i].value;
      const std::string where = at(cfg.k[i], cfg.t[j]);
      std::vector<std::string> row{cfg.k[i].label, cfg.t[j].label};
      for (const auto& col : cfg.columns) {
        if (col == "first" || col == "second") {
          const int order = col == "first" ? 1 : 2;
          row.push_back(tab.cell(cell, where + " (" + col + ")", [&](double) {
            return fixed4(1000.0 * tc_call_expansion(c, m, t, order).price_per_spot / t);
          }));
        } else {
          const bool second = col == "iv-approx-2";
          const Cell approx = compute_cell([&] {
            if (!cell.ok) throw Error(cell.error);
            const ImpliedVarApprox v = implied_var_terms_from_a0(m.ey0 * c.a0, k, t);
            return second ? v.sigma_tilde_2 : v.sigma_tilde_1;
          });
          row.push_back(tab.cell(approx, where + " (" + col + ")", fixed6));
        }
      }
      tab.row(row);
    }
  }
  return tab.finish();
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  const double num = parse_decimal(s.substr(0, slash));
  const double den = parse_decimal(s.substr(slash + 1));
  if (den == 0.0) throw ConfigError("zero denominator in '" + text + "'");
  return num / den;
}

std::vector<GridValue> parse_grid(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) return {};
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ConfigError("range must be start:step:stop, got '" + text + "'");
    const double start = parse_number(parts[0]), step = parse_number(parts[1]),
                 stop = parse_number(parts[2]);
    if (!(step > 0.0) || stop < start) throw ConfigError("invalid range '" + text + "'");
    const double count = std::round((stop - start) / step);
    if (count > 100000) throw ConfigError("range '" + text + "' has too many points");
    std::vector<GridValue> out;
    for (int i = 0; i <= static_cast<int>(count); ++i) {
      // Round through 12 significant digits so 0.05 + 3 * 0.01 is 0.08.
      const std::string label = format_g(start + i * step);
      out.push_back({parse_decimal(label), label});
    }
    return out;
  }
  std::vector<GridValue> out;
  for (const auto& item : split(s, ',')) {
    if (item.empty()) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back({parse_number(item), item});
  }
  return out;
}

RunConfig parse_config(std::istream& in, const std::string& command) {
  const std::vector<std::string>& all_columns = command_columns(command);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  RunConfig cfg;
  cfg.command = command;
  if (!kv.count("model")) throw ConfigError("missing key 'model'");
  const std::string want = lower(kv.at("model"));
  for (const auto& [name, keys] : model_keys()) {
    if (lower(name) == want) cfg.model_name = name;
  }
  if (cfg.model_name.empty()) {
    throw ConfigError("unknown model '" + kv.at("model") + "' (VG, CGMY, Merton, Kou, NIG)");
  }
  const ModelKeys& mk = model_keys().at(cfg.model_name);
  std::map<std::string, double> values;
  std::set<std::string> allowed = global_keys();
  for (const auto& key : mk.required) {
    allowed.insert(key);
    if (!kv.count(key)) throw ConfigError("model " + cfg.model_name + " needs key '" + key + "'");
    values[key] = parse_number(kv.at(key));
    cfg.model_entries.emplace_back(key, kv.at(key));
  }
  for (const auto& [key, def] : mk.optional) {
    allowed.insert(key);
    values[key] = kv.count(key) ? parse_number(kv.at(key)) : def;
    if (kv.count(key)) cfg.model_entries.emplace_back(key, kv.at(key));
  }
  for (const auto& [key, value] : kv) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "'");
  }
  cfg.model = build_params(cfg.model_name, values);
  try {
    (void)make_model(cfg.model);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  if (kv.count("k")) cfg.k = parse_grid(kv.at("k"));
  if (kv.count("t")) cfg.t = parse_grid(kv.at("t"));
  if (kv.count("K")) cfg.K = parse_grid(kv.at("K"));
  if (kv.count("abs_tol")) cfg.tol.abs_tol = parse_number(kv.at("abs_tol"));
  if (kv.count("rel_tol")) cfg.tol.rel_tol = parse_number(kv.at("rel_tol"));
  if (!(cfg.tol.abs_tol > 0.0) || !(cfg.tol.rel_tol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (kv.count("order")) {
    const std::string o = kv.at("order");
    if (o != "1" && o != "2") throw ConfigError("order must be 1 or 2");
    cfg.order = o == "1" ? 1 : 2;
  }
  if (kv.count("seed")) {
    const std::string& s = kv.at("seed");
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cfg.seed);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError("seed must be an unsigned integer");
  }

  // Columns: explicit list (validated) or every column of the command.
  if (kv.count("columns")) {
    if (all_columns.empty()) throw ConfigError("command '" + command + "' has no selectable columns");
    for (const auto& c : split(kv.at("columns"), ',')) {
      if (std::find(all_columns.begin(), all_columns.end(), c) == all_columns.end()) {
        throw ConfigError("column '" + c + "' not available for '" + command + "'");
      }
      if (std::find(cfg.columns.begin(), cfg.columns.end(), c) != cfg.columns.end()) {
        throw ConfigError("duplicate column '" + c + "'");
      }
      cfg.columns.push_back(c);
    }
    if (cfg.columns.empty()) throw ConfigError("empty column list");
  } else {
    cfg.columns = all_columns;
  }

  // Time change: CIR generator or explicit moments.
  const bool has_cir = kv.count("cir_kappa") || kv.count("cir_theta") || kv.count("cir_sigma") ||
                       kv.count("cir_y0") || kv.count("cir_stationary");
  const bool has_moments = kv.count("ey0") || kv.count("rho") || kv.count("gamma");
  if (has_cir && has_moments) throw ConfigError("give either cir_* keys or ey0/rho/gamma, not both");
  try {
    if (has_cir) {
      for (const char* key : {"cir_kappa", "cir_theta", "cir_sigma"}) {
        if (!kv.count(key)) throw ConfigError(std::string("missing key '") + key + "'");
      }
      CIRParams p{parse_number(kv.at("cir_kappa")), parse_number(kv.at("cir_theta")),
                  parse_number(kv.at("cir_sigma")), std::nullopt};
      const bool stationary =
          kv.count("cir_stationary") && parse_bool("cir_stationary", kv.at("cir_stationary"));
      if (stationary == static_cast<bool>(kv.count("cir_y0"))) {
        throw ConfigError("CIR needs exactly one of cir_y0 or cir_stationary = true");
      }
      if (!stationary) p.y0 = parse_number(kv.at("cir_y0"));
      (void)cir_moments(p);
      cfg.cir = p;
    } else if (has_moments) {
      for (const char* key : {"ey0", "rho", "gamma"}) {
        if (!kv.count(key)) throw ConfigError(std::string("missing key '") + key + "'");
      }
      cfg.moments = make_moments(parse_number(kv.at("ey0")), parse_number(kv.at("rho")),
                                 parse_number(kv.at("gamma")));
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  // Grid validation per command.
  auto require_maturities = [&] {
    require_grid(cfg.t, "t");
    for (const auto& t : cfg.t) {
      if (!(t.value > 0.0 && t.value < 1.0)) throw ConfigError("t = " + t.label + " outside (0, 1)");
    }
  };
  if (command == "atm") {
    require_maturities();
    for (const auto& k : cfg.k) {
      if (k.value != 0.0) throw ConfigError("atm uses k = 0 only");
    }
    const auto ts = tempered_stable_params(make_model(cfg.model));
    if (cfg.model_name != "CGMY" || !ts || !(ts->Y > 1.0 && ts->Y < 2.0)) {
      throw ConfigError("atm requires a CGMY model with 1 < Y < 2");
    }
  } else if (command == "varcall") {
    require_maturities();
    require_grid(cfg.K, "K");
    for (const auto& K : cfg.K) {
      if (!(K.value > 0.0)) throw ConfigError("K = " + K.label + " must be positive");
    }
  } else {
    require_maturities();
    require_grid(cfg.k, "k");
    for (const auto& k : cfg.k) {
      if (!(k.value > 0.0)) throw ConfigError("k = " + k.label + " must be positive");
    }
    if (command == "timechange" && !cfg.cir && !cfg.moments) {
      throw ConfigError("timechange needs cir_* keys or ey0/rho/gamma");
    }
  }
  if (cfg.order == 1) {
    if (kv.count("columns") && wants(cfg, "second")) {
      throw ConfigError("column 'second' needs order = 2");
    }
    cfg.columns.erase(std::remove(cfg.columns.begin(), cfg.columns.end(), "second"),
                      cfg.columns.end());
  }
  return cfg;
}

RunConfig load_config(const std::string& path, const std::string& command) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, command);
}

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    int n = 0;
    const std::string s = env;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CommandResult run_command(const RunConfig& config, int threads) {
  if (config.command == "table") return cmd_table(config, threads);
  if (config.command == "smile") return cmd_smile(config, threads);
  if (config.command == "iv-errors") return cmd_iv_errors(config, threads);
  if (config.command == "atm") return cmd_atm(config, threads);
  if (config.command == "varcall") return cmd_varcall(config, threads);
  if (config.command == "timechange") return cmd_timechange(config, threads);
  throw ConfigError("unknown command '" + config.command + "'");
}

}  // namespace levy::cli

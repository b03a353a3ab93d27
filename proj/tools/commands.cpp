#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "franel/document.hpp"
#include "franel/limits.hpp"
#include "franel/sequences.hpp"
#include "franel/telescoper.hpp"

namespace franel::cli {

namespace {

using nlohmann::json;

// zeta(3), from a direct sum to k = 999 plus an Euler-Maclaurin tail
// (truncation below 1e-50).
constexpr const char* kZeta3Reference = "1.2020569031595942853997381615114499907649862923405";
// 10^49: the reference is truncated after 49 decimals.
const Integer kZeta3Scale = ipow(10, 49);

// "d.ddd" to an exact rational.
Rational decimal_to_rational(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s, 10));
  const Integer num(s.substr(0, dot) + s.substr(dot + 1), 10);
  return ratio(num, ipow(10, static_cast<unsigned long>(s.size() - dot - 1)));
}

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
  } else {
    write_file_atomic(g.out, text);
  }
}

int decimal_digits(long bits) { return static_cast<int>(static_cast<double>(bits) * 0.30103); }

std::string format_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

void check_precision(long bits) {
  if (bits < 64) throw InvalidInput("--precision-bits must be at least 64");
}

std::string describe_attempts(const std::vector<OrderAttempt>& attempts) {
  std::ostringstream os;
  for (const auto& a : attempts) {
    os << "  order " << a.order << ": " << (a.solvable ? "solvable" : "unsolvable") << " (degree bound "
       << a.gosper_degree << ", unknowns " << a.unknowns << ", equations " << a.equations << ", rank " << a.rank
       << ")\n";
  }
  return os.str();
}

std::string describe_structure(const StructureReport& r) {
  std::ostringstream os;
  os << "order " << r.order << " (expected " << r.expected_order << "), coefficient degree " << r.coeff_degree
     << " (expected " << r.expected_degree << ")\n";
  os << "certificate denominator: ";
  if (r.denominator_matches) {
    os << "equals (n-k+1)_m^s\n";
  } else if (r.denominator_divides) {
    os << "DISCREPANCY: strictly divides (n-k+1)_m^s\n";
  } else {
    os << "DISCREPANCY: does not divide (n-k+1)_m^s\n";
  }
  os << "certificate numerator: k-degree " << r.numerator_k_degree << " (expected " << r.expected_numerator_k_degree
     << "), n-degree " << r.numerator_n_degree << "\n";
  os << "first valid n: " << r.first_valid_n() << "\n";
  return os.str();
}

}  // namespace

int cmd_compute(const GlobalOptions& g, const ComputeArgs& a, std::ostream& out, std::ostream&) {
  if (a.n_max < 0) throw InvalidInput("--n-max must be nonnegative");
  if (a.format != "text" && a.format != "json") throw InvalidInput("--format must be text or json");
  const SequenceTable t = coefficient_table(a.s, a.n_max, a.J);
  if (g.json || a.format == "json") {
    json rows = json::array();
    for (long n = 0; n <= t.n_max(); ++n) {
      json vals = json::array();
      for (const auto& x : t.row(n)) vals.push_back(x.get_str());
      rows.push_back({{"n", n}, {"A", std::move(vals)}});
    }
    const json doc = {{"s", t.s}, {"J", t.J}, {"rows", std::move(rows)}};
    emit(g, doc.dump(2) + "\n", out);
    return kOk;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n"};
  for (int j = 0; j <= a.J; ++j) header.push_back("A_" + std::to_string(j));
  cells.push_back(std::move(header));
  for (long n = 0; n <= t.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& x : t.row(n)) row.push_back(x.get_str());
    cells.push_back(std::move(row));
  }
  emit(g, format_table(cells), out);
  return kOk;
}

int cmd_telescope(const GlobalOptions& g, const TelescopeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.s < 1) throw InvalidInput("--s must be at least 1");
  if (a.r_max < 1) throw InvalidInput("--r-max must be at least 1");
  const HyperTerm term = binom_power_term(a.s);
  const std::filesystem::path dir = g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir);
  const std::filesystem::path entry = dir / cache_file_name(a.s, a.r_max);

  if (!a.no_cache) {
    if (auto cached = read_file(entry)) {
      try {
        const OperatorDocument doc = parse_document(*cached);
        if (doc.s != a.s || doc.provenance.r_max != a.r_max) throw DocumentError("cache entry for other parameters");
        if (!verify_certificate(term, doc.op, doc.certificate)) throw DocumentError("cached certificate fails");
        err << "cache hit: " << entry.string() << "\n";
        err << describe_structure(analyze_structure(doc.op, doc.certificate, a.s));
        emit(g, *cached, out);
        return kOk;
      } catch (const Error& e) {
        err << "warning: ignoring corrupt cache entry " << entry.string() << " (" << e.what() << "), recomputing\n";
      }
    }
  }

  TelescopeResult res = [&] {
    try {
      return zeilberger(term, a.r_max);
    } catch (const NoTelescoperFound& e) {
      err << "no telescoper for s=" << a.s << " up to order " << a.r_max << "\n" << describe_attempts(e.attempts());
      throw;
    }
  }();
  err << describe_attempts(res.attempts);
  const CertificateCheck check = check_certificate(term, res.op, res.certificate);
  if (!check.ok) {
    err << "internal error: produced certificate fails verification; residual " << to_string(check.residual) << "\n";
    return kInternal;
  }
  err << describe_structure(analyze_structure(res.op, res.certificate, a.s));

  OperatorDocument doc;
  doc.s = a.s;
  doc.op = res.op;
  doc.certificate = res.certificate;
  doc.provenance = {tool_version(), current_timestamp(), a.r_max};
  const std::string text = serialize(doc);
  if (!a.no_cache) {
    try {
      write_file_atomic(entry, text);
    } catch (const std::exception& e) {
      err << "warning: cannot write cache entry: " << e.what() << "\n";
    }
  }
  emit(g, text, out);
  return kOk;
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto text = read_file(a.in);
  if (!text) throw InvalidInput("cannot read " + a.in);
  const OperatorDocument doc = parse_document(*text);
  const CertificateCheck check = check_certificate(binom_power_term(doc.s), doc.op, doc.certificate);
  std::ostringstream os;
  if (g.json) {
    json j = {{"s", doc.s}, {"order", doc.op.order()}, {"verified", check.ok}};
    if (!check.ok) j["residual"] = to_string(check.residual);
    os << j.dump(2) << "\n";
  } else if (check.ok) {
    os << "verified: s=" << doc.s << ", order " << doc.op.order() << "\n";
  } else {
    os << "MISMATCH: s=" << doc.s << ", order " << doc.op.order() << "\nresidual: " << to_string(check.residual)
       << "\n";
  }
  emit(g, os.str(), out);
  if (!check.ok) err << "certificate identity does not hold\n";
  return check.ok ? kOk : kMismatch;
}

int cmd_limits(const GlobalOptions& g, const LimitsArgs& a, std::ostream& out, std::ostream&) {
  check_precision(g.precision_bits);
  const LimitSummary sum = limit_report(a.s, a.n_max, a.J, g.precision_bits, a.window, a.J_force);
  const int digits = std::min(decimal_digits(g.precision_bits), 40);
  auto err_str = [](const BigFloat& x) {
    std::ostringstream os;
    os << std::setprecision(3) << x.to_double();
    return os.str();
  };
  if (g.json) {
    json reports = json::array();
    for (const auto& r : sum.reports) {
      reports.push_back({{"s", r.s},
                         {"j", r.j},
                         {"n_used", r.n_used},
                         {"estimate", r.estimate.to_string(digits)},
                         {"target", r.target.to_string(digits)},
                         {"abs_error", err_str(r.abs_error)},
                         {"successive_diff_ratio", r.successive_diff_ratio.to_string(6)},
                         {"window", r.window},
                         {"max_window_ratio", r.max_window_ratio},
                         {"window_monotone", r.window_monotone}});
    }
    json normalized = json::array();
    for (const auto& r : sum.normalized) {
      normalized.push_back({{"name", r.name},
                            {"j", r.j},
                            {"n_used", r.n_used},
                            {"estimate", r.estimate.to_string(digits)},
                            {"target", r.target.to_string(digits)},
                            {"abs_error", err_str(r.abs_error)}});
    }
    emit(g, json{{"reports", reports}, {"normalized", normalized}}.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream os;
  for (const auto& r : sum.reports) {
    os << "s=" << r.s << " j=" << r.j << " n=" << r.n_used << "\n"
       << "  estimate  " << r.estimate.to_string(digits) << "\n"
       << "  target    " << r.target.to_string(digits) << "  (phi_j pi^2j)\n"
       << "  |error| <= " << err_str(r.abs_error) << "\n"
       << "  successive difference ratio " << r.successive_diff_ratio.to_string(6) << ", window " << r.window
       << ": max |ratio| " << r.max_window_ratio << ", " << (r.window_monotone ? "monotone" : "NOT monotone")
       << "\n";
  }
  for (const auto& r : sum.normalized) {
    os << r.name << "-form (j=" << r.j << ") n=" << r.n_used << "\n"
       << "  estimate  " << r.estimate.to_string(digits) << "\n"
       << "  target    " << r.target.to_string(digits) << "\n"
       << "  |error| <= " << err_str(r.abs_error) << "\n";
  }
  emit(g, os.str(), out);
  return kOk;
}

int cmd_asym(const GlobalOptions& g, const AsymArgs& a, std::ostream& out, std::ostream&) {
  check_precision(g.precision_bits);
  const BigFloat r = asymptotic_ratio(a.s, a.n, g.precision_bits);
  const BigFloat dev = distance_upper(r, BigFloat::from_integer(1, g.precision_bits));
  const int digits = std::min(decimal_digits(g.precision_bits), 40);
  std::ostringstream os;
  if (g.json) {
    os << json{{"s", a.s}, {"n", a.n}, {"ratio", r.to_string(digits)}, {"abs_deviation", dev.to_double()},
               {"exact", r.is_exact()}}
              .dump(2)
       << "\n";
  } else {
    os << "ratio       " << r.to_string(digits) << (r.is_exact() ? "  (exact)" : "") << "\n"
       << "|ratio - 1| " << std::setprecision(6) << dev.to_double() << "\n";
  }
  emit(g, os.str(), out);
  return kOk;
}

int cmd_demo_apery(const GlobalOptions& g, const DemoAperyArgs& a, std::ostream& out, std::ostream&) {
  check_precision(g.precision_bits);
  const std::vector<AperyPair> rows = apery_zeta3(a.n_max);
  const BigFloat limit = apery_zeta3_limit(a.n_max, g.precision_bits);
  const BigFloat zeta3 = BigFloat::with_error(BigFloat::from_rational(decimal_to_rational(kZeta3Reference), g.precision_bits),
                                              BigFloat::from_rational(ratio(2, kZeta3Scale), 64));
  const BigFloat diff = distance_upper(limit, zeta3);
  const double agree = diff.to_double() > 0 ? -std::log10(diff.to_double()) : 99.0;
  const int digits = std::min(decimal_digits(g.precision_bits), 50);

  std::ostringstream os;
  if (g.json) {
    json table = json::array();
    for (const auto& r : rows) table.push_back({{"n", r.n}, {"A", r.A.get_str()}, {"B", r.B.get_str()}});
    os << json{{"rows", table},
               {"six_B_over_A", limit.to_string(digits)},
               {"zeta3_reference", kZeta3Reference},
               {"agreement_digits", agree}}
              .dump(2)
       << "\n";
  } else {
    std::vector<std::vector<std::string>> cells{{"n", "A(n)", "B(n)"}};
    for (const auto& r : rows) cells.push_back({std::to_string(r.n), r.A.get_str(), r.B.get_str()});
    os << format_table(cells);
    os << "6 B(n)/A(n) at n=" << a.n_max << ": " << limit.to_string(digits) << "\n"
       << "zeta(3) reference:    " << kZeta3Reference << "\n"
       << "agreement: " << std::fixed << std::setprecision(1) << agree << " digits\n";
  }
  emit(g, os.str(), out);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact creative telescoping and Apery limits for sums of powers of binomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--out", g.out, "Write the result to this file");
  app.add_option("--cache-dir", g.cache_dir, "Telescoper cache directory (default: $FRANEL_CACHE_DIR)");
  app.add_option("--precision-bits", g.precision_bits, "Working precision for floating-point reports")
      ->capture_default_str();

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Table of A_j^(s)(n), 0 <= n <= n_max, 0 <= j <= J");
  compute->add_option("--s", ca.s, "Binomial power")->required();
  compute->add_option("--n-max", ca.n_max, "Last row")->required();
  compute->add_option("--J", ca.J, "Last even coefficient index")->capture_default_str();
  compute->add_option("--format", ca.format, "text or json")->capture_default_str();

  TelescopeArgs ta;
  auto* telescope = app.add_subcommand("telescope", "Creative telescoping for binom(n,k)^s");
  telescope->add_option("--s", ta.s, "Binomial power")->required();
  telescope->add_option("--r-max", ta.r_max, "Largest order tried")->capture_default_str();
  telescope->add_flag("--no-cache", ta.no_cache, "Neither read nor write the cache");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the certificate identity of an operator document");
  verify->add_option("--in", va.in, "Operator document")->required();

  LimitsArgs la;
  auto* limits = app.add_subcommand("limits", "Compare A_j/A_0 with phi_j pi^(2j)");
  limits->add_option("--s", la.s, "Binomial power")->required();
  limits->add_option("--n-max", la.n_max, "Row used for the estimate")->required();
  limits->add_option("--J", la.J, "Last even coefficient index")->capture_default_str();
  limits->add_flag("--J-force", la.J_force, "Allow J > floor((s-1)/2)");
  limits->add_option("--window", la.window, "Trailing steps for the convergence diagnostic")->capture_default_str();

  AsymArgs aa;
  auto* asym = app.add_subcommand("asym", "A^(s)(n) against its leading asymptotic");
  asym->add_option("--s", aa.s, "Binomial power")->required();
  asym->add_option("--n", aa.n, "Index")->required();

  DemoAperyArgs da;
  auto* demo = app.add_subcommand("demo-apery", "Apery sequences for zeta(3)");
  demo->add_option("--n-max", da.n_max, "Last row")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  try {
    if (*compute) return cmd_compute(g, ca, out, err);
    if (*telescope) return cmd_telescope(g, ta, out, err);
    if (*verify) return cmd_verify(g, va, out, err);
    if (*limits) return cmd_limits(g, la, out, err);
    if (*asym) return cmd_asym(g, aa, out, err);
    if (*demo) return cmd_demo_apery(g, da, out, err);
  } catch (const NoTelescoperFound&) {
    return kNotFound;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace franel::cli

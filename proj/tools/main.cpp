// bks: command-line frontend for the exact boundary-degree toolkit on
// X = [P,P]\Sp(2n).  Subcommands:
//
//   lfactors --n N [--coset i1,i2,...]   formal L-factor product + symbols
//   basic    --n N --upto M [--out f]    truncated basic function as JSON
//   fourier  --in f [--out f]            Fourier transform of a function file
//   norm     --p P --matrix f            Pluecker norm and coset index
//   verify   local|rank-one|classical|global
//
// Exit codes: 0 success, 2 usage, 3 parse, 4 check failed, 5 internal.
// When BKS_REPORT_DIR is set, every run writes a JSON report there that is
// byte-stable across runs except for the timing fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bkx/errors.hpp"
#include "bkx/global_check.hpp"
#include "bkx/io.hpp"
#include "bkx/oracles.hpp"
#include "bkx/plucker.hpp"
#include "bkx/schwartz.hpp"
#include "bkx/weyl.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bkx::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bkx::Error("cannot write '" + path + "'");
  out << content;
}

void emit_report(const std::string& slug, const ordered_json& report) {
  const char* dir = std::getenv("BKS_REPORT_DIR");
  if (dir == nullptr || *dir == '\0') return;
  std::filesystem::create_directories(dir);
  write_file(std::string(dir) + "/report-" + slug + ".json", report.dump(2) + "\n");
}

std::string format_double(double x) {
  std::ostringstream ss;
  ss << std::setprecision(17) << x;
  return ss.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw bkx::CheckFailed(what);
}

struct CheckResult {
  bool pass = false;
  long long ms = 0;
  ordered_json data;
  std::string error;
};

// Named checks queued for a verify run.  Bodies execute concurrently (they
// only touch value types) but results always come back in queue order.  A
// body signals failure by throwing CheckFailed or OracleDisagreement; other
// exceptions propagate and abort the whole run as internal errors.
class CheckSuite {
 public:
  void add(const std::string& name, std::function<ordered_json()> body) {
    names_.push_back(name);
    futures_.push_back(std::async(std::launch::async, [body = std::move(body)]() {
      CheckResult r;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        r.data = body();
        r.pass = true;
      } catch (const bkx::CheckFailed& e) {
        r.error = e.what();
      } catch (const bkx::OracleDisagreement& e) {
        r.error = e.what();
      }
      r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
      return r;
    }));
  }

  // Appends one report entry per check and prints a status line for each;
  // true when every check passed.
  bool collect(ordered_json& out) {
    bool all = true;
    for (size_t i = 0; i < futures_.size(); ++i) {
      CheckResult r = futures_[i].get();
      ordered_json entry;
      entry["name"] = names_[i];
      entry["pass"] = r.pass;
      entry["ms"] = r.ms;
      if (!r.data.is_null()) entry["data"] = r.data;
      if (!r.error.empty()) entry["error"] = r.error;
      out.push_back(std::move(entry));
      std::cout << (r.pass ? "  ok   " : "  FAIL ") << names_[i];
      if (!r.error.empty()) std::cout << "  (" << r.error << ")";
      std::cout << "\n";
      all = all && r.pass;
    }
    return all;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::future<CheckResult>> futures_;
};

// Deterministic pseudo-random rational symbol: a short Laurent polynomial
// over a handful of geometric denominator factors.  uniform_int_distribution
// is implementation-defined, so draw bits directly.
bkx::MellinSymbol random_rational_symbol(std::mt19937& rng) {
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  std::map<int, bkx::ScalarQV> terms;
  const int low = draw(-3, 2);
  const int len = draw(1, 4);
  for (int t = 0; t < len; ++t) {
    int c = draw(-5, 5);
    if (c == 0) c = 1;
    const int deg = low + draw(0, 4);
    terms[deg] = terms[deg] + bkx::ScalarQV(c) * bkx::ScalarQV::v_power(draw(-4, 4));
  }
  bkx::MellinSymbol sym = bkx::MellinSymbol::from_laurent(terms);
  if (sym.is_zero()) sym = bkx::MellinSymbol::one();
  const int factors = draw(0, 2);
  for (int t = 0; t < factors; ++t) {
    const int e = draw(1, 2);
    const bkx::ScalarQV coeff = bkx::ScalarQV(-1) * bkx::ScalarQV::v_power(draw(-3, 3));
    sym = sym / bkx::MellinSymbol::from_laurent({{0, bkx::ScalarQV(1)}, {e, coeff}});
  }
  return sym;
}

int run_lfactors(int n, const std::vector<int>& coset) {
  const bkx::WeylCosetDatum w = bkx::make_coset(n, coset);
  const bkx::LFactorProduct a = bkx::a_factor(w);
  const std::string product = a.to_string();
  const std::string a_sym = a.symbol(n).to_string();
  const std::string c_sym = bkx::c_symbol(w).to_string();
  std::cout << product << "\n";
  std::cout << "a = " << a_sym << "\n";
  std::cout << "c = " << c_sym << "\n";

  ordered_json report;
  report["command"] = "lfactors";
  report["config"]["n"] = n;
  report["config"]["coset"] = coset;
  report["product"] = product;
  report["a"] = a_sym;
  report["c"] = c_sym;
  emit_report("lfactors", report);
  return 0;
}

int run_basic(int n, int upto, const std::string& out) {
  const bkx::CoefficientFunction b = bkx::basic_function(n);
  const bkx::CoefficientFunction truncated =
      bkx::CoefficientFunction::finite(n, 0, b.coefficients(upto));
  const std::string text = bkx::serialize_coefficient_function(truncated);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }

  ordered_json report;
  report["command"] = "basic";
  report["config"]["n"] = n;
  report["config"]["upto"] = upto;
  report["config"]["out"] = out;
  report["function"] = bkx::coefficient_function_to_json(truncated);
  emit_report("basic", report);
  return 0;
}

int run_fourier(const std::string& in, const std::string& out) {
  const bkx::CoefficientFunction f = bkx::parse_coefficient_function(read_file(in));
  const bkx::CoefficientFunction ft = bkx::fourier(f);
  const std::string text = bkx::serialize_coefficient_function(ft);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }

  ordered_json report;
  report["command"] = "fourier";
  report["config"]["in"] = in;
  report["config"]["out"] = out;
  report["function"] = bkx::coefficient_function_to_json(ft);
  emit_report("fourier", report);
  return 0;
}

int run_norm(const std::string& place, const std::string& matrix_path) {
  const bkx::SymplecticMatrix g = bkx::parse_matrix(read_file(matrix_path));

  ordered_json report;
  report["command"] = "norm";
  report["config"]["p"] = place;
  report["config"]["matrix"] = matrix_path;

  if (place == "inf") {
    const double norm = bkx::norm_arch(g);
    std::cout << "norm = " << format_double(norm) << "\n";
    report["norm"] = format_double(norm);
  } else {
    long p = 0;
    try {
      size_t used = 0;
      p = std::stol(place, &used);
      if (used != place.size()) throw std::invalid_argument(place);
    } catch (const std::exception&) {
      throw bkx::DomainError("--p expects a prime or 'inf', got '" + place + "'");
    }
    const long c = bkx::coset_index(g, p);
    const mpq_class norm = bkx::norm_padic(g, p);
    std::cout << "norm = " << norm.get_str() << "\n";
    std::cout << "coset = " << c << "\n";
    report["norm"] = norm.get_str();
    report["coset"] = c;
  }
  emit_report("norm", report);
  return 0;
}

int run_verify_local(int n, int samples) {
  std::cout << "verify local  n = " << n << "\n";
  CheckSuite suite;

  suite.add("a-empty-equals-d", [n] {
    const auto empty = bkx::make_coset(n, {});
    const auto a = bkx::a_factor(empty);
    const auto d = bkx::d_factor(n);
    require(a == d, "numerator at the trivial coset differs from d");
    ordered_json data;
    data["d"] = d.to_string();
    return data;
  });

  suite.add("c-empty-equals-one", [n] {
    const auto empty = bkx::make_coset(n, {});
    require(bkx::c_symbol(empty) == bkx::MellinSymbol::one(),
            "normalized quotient at the trivial coset is not 1");
    return ordered_json();
  });

  suite.add("a-full-closed-form", [n] {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    const auto a = bkx::a_factor(bkx::make_coset(n, full));
    const auto closed = bkx::a_full_closed_form(n);
    require(a == closed, "longest-coset numerator differs from the closed form");
    ordered_json data;
    data["a"] = closed.to_string();
    return data;
  });

  suite.add("gk-product", [n] {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    const auto direct = bkx::c_symbol(bkx::make_coset(n, full));
    const auto telescoped = bkx::gk_product(n);
    require(direct == telescoped, "rank-one telescoping product disagrees");
    ordered_json data;
    data["c"] = direct.to_string();
    return data;
  });

  suite.add("basic-fixed", [n] {
    const auto b = bkx::basic_function(n);
    require(bkx::fourier(b) == b, "basic function is not a fixed point");
    ordered_json data;
    data["mellin"] = mellin(b).to_string();
    return data;
  });

  suite.add("fourier-involution", [n, samples] {
    std::mt19937 rng(1000u + static_cast<unsigned>(n));
    for (int t = 0; t < samples; ++t) {
      const auto f = bkx::CoefficientFunction::rational(n, random_rational_symbol(rng));
      require(bkx::fourier(bkx::fourier(f)) == f,
              "double transform moved sample " + std::to_string(t));
    }
    ordered_json data;
    data["samples"] = samples;
    return data;
  });

  ordered_json report;
  report["command"] = "verify local";
  report["config"]["n"] = n;
  report["config"]["samples"] = samples;
  report["checks"] = ordered_json::array();
  const bool pass = suite.collect(report["checks"]);
  report["pass"] = pass;
  emit_report("verify-local", report);
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitCheckFailed;
}

std::complex<double> parse_z(const std::string& text) {
  if (text == "1") return {1.0, 0.0};
  if (text == "-1") return {-1.0, 0.0};
  if (text == "i") return {0.0, 1.0};
  if (text == "-i") return {0.0, -1.0};
  throw bkx::DomainError("--z must be one of 1, -1, i, -i");
}

std::complex<double> parse_complex(const std::string& text) {
  try {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw bkx::DomainError("expected RE or RE,IM, got '" + text + "'");
  }
}

double parse_positive_real(const std::string& text) {
  try {
    const auto slash = text.find('/');
    double value = 0.0;
    if (slash == std::string::npos) {
      value = std::stod(text);
    } else {
      const double den = std::stod(text.substr(slash + 1));
      if (den == 0.0) throw std::invalid_argument(text);
      value = std::stod(text.substr(0, slash)) / den;
    }
    if (!(value > 0.0)) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw bkx::DomainError("expected a positive real (also as p/q), got '" + text + "'");
  }
}

int run_verify_rank_one(long q, const std::string& z_text, const std::string& s_text,
                        int shells) {
  const std::complex<double> z = parse_z(z_text);
  const std::complex<double> s = parse_complex(s_text);
  const bkx::ShellSumReport rep = bkx::rank_one_shell_sum(q, z, s, shells);
  const double gap = std::abs(rep.partial - rep.closed_form);
  // The truncation bound saturates for z = 1 and real s, so allow the last
  // few ulps of the O(1) summands on top of it.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon();
  const bool pass = gap <= rep.tail_bound + slack;

  std::cout << "partial = " << format_double(rep.partial.real()) << " + "
            << format_double(rep.partial.imag()) << "i\n";
  std::cout << "closed  = " << format_double(rep.closed_form.real()) << " + "
            << format_double(rep.closed_form.imag()) << "i\n";
  std::cout << "gap = " << format_double(gap)
            << "  bound = " << format_double(rep.tail_bound) << "\n";
  std::cout << (pass ? "PASS" : "FAIL") << "\n";

  ordered_json report;
  report["command"] = "verify rank-one";
  report["config"]["q"] = q;
  report["config"]["z"] = z_text;
  report["config"]["s"] = s_text;
  report["config"]["shells"] = shells;
  report["partial"] = {format_double(rep.partial.real()), format_double(rep.partial.imag())};
  report["closed"] = {format_double(rep.closed_form.real()),
                      format_double(rep.closed_form.imag())};
  report["gap"] = format_double(gap);
  report["tail_bound"] = format_double(rep.tail_bound);
  report["pass"] = pass;
  emit_report("verify-rank-one", report);
  return pass ? 0 : kExitCheckFailed;
}

int run_verify_classical(int c) {
  const auto transformed = bkx::fourier(bkx::shifted_basic_rank_one(c));
  const auto pattern = bkx::classical_fourier_pattern(c);
  const bool pass = transformed == pattern;
  std::cout << "fourier(shifted basic at " << c
            << ") = " << mellin(transformed).to_string() << "\n";
  std::cout << "plane-transform pattern    = " << mellin(pattern).to_string() << "\n";
  std::cout << (pass ? "PASS" : "FAIL") << "\n";

  ordered_json report;
  report["command"] = "verify classical";
  report["config"]["c"] = c;
  report["transformed"] = mellin(transformed).to_string();
  report["pattern"] = mellin(pattern).to_string();
  report["pass"] = pass;
  emit_report("verify-classical", report);
  return pass ? 0 : kExitCheckFailed;
}

int run_verify_global(const std::string& lambda_text, int radius, double tol,
                      const std::string& json_out) {
  const double lambda = parse_positive_real(lambda_text);
  const bkx::GlobalCheckReport rep = bkx::verify_global_rank_one(lambda, radius, tol);

  ordered_json report;
  report["command"] = "verify global";
  report["config"]["lambda"] = lambda_text;
  report["config"]["radius"] = radius;
  report["config"]["tol"] = format_double(tol);
  report["lambda"] = format_double(rep.lambda);
  report["sum_phi"] = format_double(rep.sum_phi);
  report["sum_fphi"] = format_double(rep.sum_fphi);
  report["res_phi"] = format_double(rep.res_phi);
  report["res_fphi"] = format_double(rep.res_fphi);
  report["res_phi_alt"] = format_double(rep.res_phi_alt);
  report["res_fphi_alt"] = format_double(rep.res_fphi_alt);
  report["lhs"] = format_double(rep.lhs);
  report["rhs"] = format_double(rep.rhs);
  report["discrepancy"] = format_double(rep.discrepancy);
  report["route_gap"] = format_double(rep.route_gap);
  report["finite_points_checked"] = rep.finite_points_checked;
  report["pass"] = rep.pass;
  if (!json_out.empty()) write_file(json_out, report.dump(2) + "\n");
  emit_report("verify-global", report);

  std::cout << "lambda = " << format_double(rep.lambda) << ", radius = " << radius
            << "\n";
  std::cout << "lhs = sum(Phi) + residue(F Phi) = " << format_double(rep.lhs) << "\n";
  std::cout << "rhs = sum(F Phi) + residue(Phi) = " << format_double(rep.rhs) << "\n";
  std::cout << "discrepancy = " << format_double(rep.discrepancy) << "  (tol "
            << format_double(tol) << ")\n";
  std::cout << "residue route gap = " << format_double(rep.route_gap) << "\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"exact Schwartz-space toolkit for the boundary degrees of [P,P]\\Sp(2n)"};
  app.require_subcommand(1);

  int lf_n = 1;
  std::vector<int> lf_coset;
  CLI::App* lf = app.add_subcommand("lfactors", "L-factor product of a coset datum");
  lf->add_option("--n", lf_n, "rank")->required()->check(CLI::Range(1, 8));
  lf->add_option("--coset", lf_coset, "inverted indices i1,i2,...")->delimiter(',');

  int basic_n = 1;
  int basic_upto = 10;
  std::string basic_out;
  CLI::App* basic = app.add_subcommand("basic", "truncated basic function as JSON");
  basic->add_option("--n", basic_n, "rank")->required()->check(CLI::Range(1, 8));
  basic->add_option("--upto", basic_upto, "last coefficient index")
      ->check(CLI::Range(0, 4000));
  basic->add_option("--out", basic_out, "output path (default stdout)");

  std::string fourier_in;
  std::string fourier_out;
  CLI::App* four = app.add_subcommand("fourier", "Fourier transform of a function file");
  four->add_option("--in", fourier_in, "input JSON path")->required();
  four->add_option("--out", fourier_out, "output path (default stdout)");

  std::string norm_p;
  std::string norm_matrix;
  CLI::App* norm = app.add_subcommand("norm", "Pluecker norm and coset index");
  norm->add_option("--p", norm_p, "prime, or 'inf' for the real place")->required();
  norm->add_option("--matrix", norm_matrix, "matrix JSON path")->required();

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);

  int local_n = 3;
  int local_samples = 5;
  CLI::App* vlocal = verify->add_subcommand("local", "exact symbolic identities");
  vlocal->add_option("--n", local_n, "rank")->check(CLI::Range(1, 6));
  vlocal->add_option("--samples", local_samples, "involution sample count")
      ->check(CLI::Range(1, 200));

  long r1_q = 5;
  std::string r1_z = "1";
  std::string r1_s = "2";
  int r1_shells = 30;
  CLI::App* vrank = verify->add_subcommand("rank-one", "shell sum vs closed form");
  vrank->add_option("--q", r1_q, "residue field size")->check(CLI::Range(2L, 1000000L));
  vrank->add_option("--z", r1_z, "character value at the uniformizer")
      ->check(CLI::IsMember({"1", "-1", "i", "-i"}));
  vrank->add_option("--s", r1_s, "complex parameter RE or RE,IM");
  vrank->add_option("--shells", r1_shells, "number of shells")->check(CLI::Range(1, 10000));

  int cl_c = 0;
  CLI::App* vclassical = verify->add_subcommand("classical", "plane-transform pattern");
  vclassical->add_option("--c", cl_c, "shift")->check(CLI::Range(-10, 10));

  std::string gl_lambda = "1";
  int gl_radius = 10;
  double gl_tol = 1e-8;
  std::string gl_json;
  CLI::App* vglobal = verify->add_subcommand("global", "summation formula over Q");
  vglobal->add_option("--lambda", gl_lambda, "Gaussian scale (also as p/q)");
  vglobal->add_option("--radius", gl_radius, "lattice radius")->check(CLI::Range(5, 1000));
  vglobal->add_option("--tol", gl_tol, "discrepancy tolerance");
  vglobal->add_option("--json", gl_json, "also write the report to this path");

  int rc = 0;
  lf->callback([&] { rc = run_lfactors(lf_n, lf_coset); });
  basic->callback([&] { rc = run_basic(basic_n, basic_upto, basic_out); });
  four->callback([&] { rc = run_fourier(fourier_in, fourier_out); });
  norm->callback([&] { rc = run_norm(norm_p, norm_matrix); });
  vlocal->callback([&] { rc = run_verify_local(local_n, local_samples); });
  vrank->callback([&] { rc = run_verify_rank_one(r1_q, r1_z, r1_s, r1_shells); });
  vclassical->callback([&] { rc = run_verify_classical(cl_c); });
  vglobal->callback([&] { rc = run_verify_global(gl_lambda, gl_radius, gl_tol, gl_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const bkx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bkx::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bkx::NotSymplectic& e) {
    std::cerr << "matrix error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bkx::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bkx::CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const bkx::OracleDisagreement& e) {
    std::cerr << "oracle disagreement: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return rc;
}

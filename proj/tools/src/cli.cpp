#include "ldens/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ldens/output.hpp"
#include "ldens/verify.hpp"
#include "localdensity/density.hpp"
#include "localdensity/errors.hpp"
#include "localdensity/gauss.hpp"
#include "localdensity/localcount.hpp"

namespace ldens {

namespace {

using namespace localdensity;

// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt parse_big(const std::string& flag, const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  const bool digits = i < text.size() &&
                      std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                                  [](char ch) { return ch >= '0' && ch <= '9'; });
  if (!digits) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

std::int64_t parse_small(const std::string& flag, const std::string& text) {
  const BigInt v = parse_big(flag, text);
  if (!v.fits_slong_p()) {
    throw UsageError(flag + ": value out of range");
  }
  return v.get_si();
}

OddPrime parse_prime(const std::string& text) {
  const std::int64_t p = parse_small("--p", text);
  try {
    return OddPrime(p);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
}

DiagonalForm parse_form(const std::string& a, const std::string& b, const std::string& c) {
  const BigInt x = parse_big("--a", a);
  const BigInt y = parse_big("--b", b);
  const BigInt z = parse_big("--c", c);
  for (const auto& [flag, v] : {std::pair{"--a", &x}, std::pair{"--b", &y}, std::pair{"--c", &z}}) {
    if (*v == 0) throw UsageError(std::string(flag) + ": coefficient must be nonzero");
  }
  return DiagonalForm(x, y, z);
}

struct FormArgs {
  std::string a, b, c;
};

void add_form_flags(CLI::App* cmd, FormArgs& f) {
  cmd->add_option("--a", f.a, "coefficient of x^2")->required();
  cmd->add_option("--b", f.b, "coefficient of y^2")->required();
  cmd->add_option("--c", f.c, "coefficient of z^2")->required();
}

struct DensityArgs {
  FormArgs form;
  std::string p, m;
  bool json = false;
  std::int64_t show_counts = 0;
  std::int64_t cap = kDefaultBruteForceCap;
};

int cmd_density(const DensityArgs& args, std::ostream& out) {
  const DiagonalForm q = parse_form(args.form.a, args.form.b, args.form.c);
  const OddPrime p = parse_prime(args.p);
  const BigInt m = parse_big("--m", args.m);
  if (args.show_counts < 0) throw UsageError("--show-counts: must be nonnegative");

  const DensityResult result = local_density(m, q, p);
  OutputRecord record{q.a(), q.b(), q.c(), p.value(), m, result.value,
                      std::string(to_string(result.branch)), {}};
  for (std::int64_t k = 1; k <= args.show_counts; ++k) {
    record.counts.emplace_back(k, count_local(m, q, p, k, args.cap));
  }
  out << (args.json ? to_json(record) : to_text(record)) << '\n';
  return kExitOk;
}

struct CountArgs {
  FormArgs form;
  std::string m, n, p;
  std::int64_t k = 0;
  std::vector<std::string> methods;
  std::int64_t cap = kDefaultBruteForceCap;
};

int cmd_count(const CountArgs& args, std::ostream& out) {
  const DiagonalForm q = parse_form(args.form.a, args.form.b, args.form.c);
  const BigInt m = parse_big("--m", args.m);
  const bool have_pk = !args.p.empty();
  if (have_pk == !args.n.empty()) {
    throw UsageError("count: give either --n or both --p and --k");
  }
  std::optional<OddPrime> p;
  std::int64_t n = 0;
  if (have_pk) {
    p = parse_prime(args.p);
    if (args.k < 1) throw UsageError("--k: must be at least 1");
    const BigInt pk = ipow(p->value(), static_cast<unsigned>(std::min<std::int64_t>(args.k, 64)));
    n = pk.fits_slong_p() && args.k <= 64 ? pk.get_si() : -1;
  } else {
    n = parse_small("--n", args.n);
    if (n < 1) throw UsageError("--n: must be positive");
  }

  std::vector<std::string> methods = args.methods;
  if (methods.empty()) methods.push_back("brute");
  std::vector<BigInt> values;
  for (const std::string& method : methods) {
    if (method != "brute" && !have_pk) {
      throw UsageError("--method " + method + " needs --p and --k");
    }
    if (method == "brute") {
      if (n < 0) throw ResourceLimitError("modulus exceeds brute-force cap");
      values.emplace_back(static_cast<unsigned long>(count_bruteforce(m, q, n, args.cap)));
    } else if (method == "gauss-float") {
      values.emplace_back(static_cast<unsigned long>(count_via_gauss_float(m, q, *p, args.k).value));
    } else {
      values.push_back(count_local(m, q, *p, args.k, args.cap));
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? " " : "") << values[i];
  }
  if (values.size() > 1) {
    const bool match = std::all_of(values.begin(), values.end(),
                                   [&](const BigInt& v) { return v == values.front(); });
    out << (match ? " MATCH" : " MISMATCH") << '\n';
    if (!match) throw Mismatch("count evaluators disagree");
    return kExitOk;
  }
  out << '\n';
  return kExitOk;
}

struct VerifyArgs {
  VerifyOptions options;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  VerifyOptions options = args.options;
  if (options.p_max < 3) throw UsageError("--p-max: must be at least 3");
  if (options.c1_max < 0) throw UsageError("--c1-max: must be nonnegative");
  if (args.inject_fault) options.density = faulty_density;

  const VerifyReport report = run_verify(options);
  std::size_t total = 0;
  std::vector<std::string> failures;
  for (const FamilyReport& f : report.families) {
    out << std::left << std::setw(17) << f.name << " pass " << std::setw(6) << f.passed
        << " fail " << f.failed << '\n';
    total += f.passed + f.failed;
    for (const std::string& line : f.failures) {
      if (failures.size() < 10) failures.push_back(f.name + " " + line);
    }
  }
  out << total << " cases in " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
  if (report.ok()) {
    out << "all families PASS\n";
    return kExitOk;
  }
  for (const std::string& line : failures) err << "FAIL " << line << '\n';
  out << "verification FAILED\n";
  return kExitMismatch;
}

struct TableArgs {
  FormArgs form;
  std::string p, range;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  const DiagonalForm q = parse_form(args.form.a, args.form.b, args.form.c);
  const OddPrime p = parse_prime(args.p);
  const auto dots = args.range.find("..");
  if (dots == std::string::npos) {
    throw UsageError("--m-range: expected LO..HI, got '" + args.range + "'");
  }
  const std::int64_t lo = parse_small("--m-range", args.range.substr(0, dots));
  const std::int64_t hi = parse_small("--m-range", args.range.substr(dots + 2));
  if (lo > hi) throw UsageError("--m-range: LO exceeds HI");

  out << "m,alpha_num,alpha_den,branch\n";
  for (std::int64_t m = lo; m <= hi; ++m) {
    const DensityResult r = local_density(BigInt(static_cast<long>(m)), q, p);
    out << m << ',' << r.value.numerator() << ',' << r.value.denominator() << ','
        << to_string(r.branch) << '\n';
  }
  return kExitOk;
}

struct GaussArgs {
  std::string a, p;
  std::int64_t k = 0;
  std::uint64_t cap = kDefaultGaussFloatCap;
};

int cmd_gauss(const GaussArgs& args, std::ostream& out) {
  const BigInt a = parse_big("--a", args.a);
  const OddPrime p = parse_prime(args.p);
  if (args.k < 1) throw UsageError("--k: must be at least 1");
  const GaussValue exact = gauss_sum_exact(a, p, args.k);
  out << exact.str() << '\n';
  const BigInt q = ipow(p.value(), static_cast<unsigned>(std::min<std::int64_t>(args.k, 64)));
  if (args.k > 63 || q > BigInt(static_cast<unsigned long>(args.cap))) {
    throw ResourceLimitError("p^k exceeds the float summation cap " + std::to_string(args.cap));
  }
  const auto direct = gauss_sum_float(a, q.get_ui(), args.cap);
  // Summation noise on a zero component prints as 0.
  const double noise = 1e-9 * std::sqrt(static_cast<double>(q.get_ui()));
  const double re = std::abs(direct.real()) < noise ? 0.0 : direct.real();
  const double im = std::abs(direct.imag()) < noise ? 0.0 : direct.imag();
  out << "float = " << std::setprecision(12) << re << (im < 0 ? " - " : " + ") << std::abs(im)
      << "i\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic densities of a x^2 + b y^2 + c z^2", "ldens"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* d = app.add_subcommand("density", "exact local density alpha_p(m, Q)");
  add_form_flags(d, density.form);
  d->add_option("--p", density.p, "odd prime")->required();
  d->add_option("--m", density.m, "represented integer")->required();
  d->add_flag("--json", density.json, "emit one JSON object");
  d->add_option("--show-counts", density.show_counts, "also print r_{p^k} for k = 1..K");
  d->add_option("--cap", density.cap, "brute-force modulus cap");

  CountArgs count;
  auto* c = app.add_subcommand("count", "local representation number r_n(m, Q)");
  add_form_flags(c, count.form);
  c->add_option("--m", count.m, "represented integer")->required();
  c->add_option("--n", count.n, "modulus");
  c->add_option("--p", count.p, "odd prime (modulus p^k)");
  c->add_option("--k", count.k, "exponent (modulus p^k)");
  c->add_option("--method", count.methods, "brute, gauss-float or stratified; repeatable")
      ->check(CLI::IsMember({"brute", "gauss-float", "stratified"}));
  c->add_option("--cap", count.cap, "brute-force modulus cap");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "cross-check closed forms against counting oracles");
  v->add_option("--p-max", verify.options.p_max, "largest prime in the grid");
  v->add_option("--c1-max", verify.options.c1_max, "largest c1 in the grid");
  v->add_option("--m1-max", verify.options.m1_max, "largest m1 in the grid");
  v->add_option("--cap", verify.options.cap, "brute-force modulus cap");
  v->add_option("--threads", verify.options.threads, "worker threads (0 = all cores)");
  v->add_flag("--inject-fault", verify.inject_fault)->group("");

  TableArgs table;
  auto* t = app.add_subcommand("table", "CSV of alpha_p(m, Q) over a range of m");
  add_form_flags(t, table.form);
  t->add_option("--p", table.p, "odd prime")->required();
  t->add_option("--m-range", table.range, "LO..HI")->required();

  GaussArgs gauss;
  auto* g = app.add_subcommand("gauss", "exact quadratic Gauss sum G(a; p^k)");
  g->add_option("--a", gauss.a, "multiplier")->required();
  g->add_option("--p", gauss.p, "odd prime")->required();
  g->add_option("--k", gauss.k, "exponent")->required();
  g->add_option("--cap", gauss.cap, "float summation cap");

  std::vector<const char*> argv{"ldens"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (d->parsed()) return cmd_density(density, out);
    if (c->parsed()) return cmd_count(count, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (t->parsed()) return cmd_table(table, out);
    return cmd_gauss(gauss, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const NumericalInstabilityError& e) {
    err << "numerical instability: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const Mismatch& e) {
    err << "mismatch: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ldens

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "qweyl/braidrep.hpp"
#include "qweyl/expr_parser.hpp"
#include "qweyl/repn.hpp"
#include "qweyl/rmatrix.hpp"
#include "qweyl/serialize.hpp"
#include "qweyl/twist.hpp"

namespace qweyl::cli {

namespace {

using nlohmann::json;

// An error in the user's request; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kNumericTol = 1e-9;

struct Beta {
  std::string label;
  RingElem value;
};

std::vector<Beta> parse_betas(const RunConfig& cfg, std::vector<std::string> fallback) {
  const auto& texts = cfg.beta1.empty() ? fallback : cfg.beta1;
  std::vector<Beta> out;
  for (const auto& t : texts) out.push_back({t, parse_expr(t)});
  return out;
}

TwistConfig twist_config(const RunConfig& cfg, const RingElem& beta1) {
  TwistConfig t;
  t.beta1 = beta1;
  t.variant = parse_variant(cfg.variant);
  t.alpha = HalfInteger::from_string(cfg.alpha);
  return t;
}

std::complex<double> sample_point(const RunConfig& cfg) {
  if (cfg.at_q.size() > 1) throw UsageError("this subcommand takes a single --at-q value");
  return cfg.at_q.front();
}

// ---- artifact output ------------------------------------------------------

using Named = std::vector<std::pair<std::string, QMatrix>>;

void emit_matrices(std::ostream& out, const RunConfig& cfg, const Named& mats, bool bare_single) {
  const bool numeric = !cfg.at_q.empty();
  const std::complex<double> q0 = numeric ? sample_point(cfg) : std::complex<double>{};
  if (cfg.format == Format::json) {
    json doc = json::object();
    for (const auto& [name, m] : mats) doc[name] = json::parse(numeric ? to_json(evaluate(m, q0)) : to_json(m));
    out << (bare_single && mats.size() == 1 ? doc.begin().value() : doc).dump() << '\n';
    return;
  }
  for (const auto& [name, m] : mats) {
    const bool label = !(bare_single && mats.size() == 1);
    if (cfg.format == Format::latex) {
      if (label) out << name << " = ";
      out << (numeric ? to_latex(evaluate(m, q0)) : to_latex(m)) << '\n';
    } else {
      if (label) out << name << ":\n";
      out << (numeric ? to_plain(evaluate(m, q0)) : to_plain(m));
    }
  }
}

void emit_numeric(std::ostream& out, const RunConfig& cfg, const NumMatrix& m) {
  switch (cfg.format) {
    case Format::json: out << to_json(m) << '\n'; break;
    case Format::latex: out << to_latex(m) << '\n'; break;
    case Format::plain: out << to_plain(m); break;
  }
}

// ---- artifact subcommands -------------------------------------------------

int cmd_irrep(const RunConfig& cfg, std::ostream& out) {
  const IrrepSpec rep = irrep(cfg.dim);
  emit_matrices(out, cfg, {{"H", rep.H}, {"X", rep.X}, {"Y", rep.Y}, {"E", rep.E}, {"F", rep.F}, {"K", rep.K}},
                false);
  return 0;
}

int cmd_rmatrix(const RunConfig& cfg, const std::string& kind, std::ostream& out) {
  if (cfg.dims.size() != 2) throw UsageError("--dims takes exactly two dimensions, e.g. --dims 2,3");
  const int a = cfg.dims[0];
  const int b = cfg.dims[1];
  if (a < 1 || b < 1) throw UsageError("--dims entries must be positive");
  QMatrix m;
  if (kind == "R") {
    m = r_matrix(a, b);
  } else if (kind == "R21") {
    m = r21_matrix(a, b);
  } else if (kind == "Rinv") {
    m = inverse(r_matrix(a, b));
  } else {
    if (a != b) throw UsageError("--kind B needs equal dimensions");
    m = braid_matrix(a);
  }
  emit_matrices(out, cfg, {{kind, m}}, true);
  return 0;
}

int cmd_twist(const RunConfig& cfg, std::ostream& out) {
  if (cfg.beta1.size() != 1) throw UsageError("twist takes exactly one --beta1");
  const QMatrix t = twist_t(cfg.dim, twist_config(cfg, parse_expr(cfg.beta1.front())));
  if (cfg.basis == Basis::symmetric) {
    if (cfg.at_q.empty()) throw UsageError("--basis symmetric needs --at-q (the symmetric basis is not defined over Q(x))");
    const double q0 = cfg.at_q.front();
    if (cfg.at_q.size() > 1) throw UsageError("this subcommand takes a single --at-q value");
    if (!(q0 > 0) || q0 == 1) throw UsageError("--basis symmetric needs a sample point q0 > 0, q0 != 1");
    emit_numeric(out, cfg, to_symmetric_basis(evaluate(t, q0), q0));
    return 0;
  }
  emit_matrices(out, cfg, {{"t", t}}, true);
  return 0;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.beta1.size() != 1) throw UsageError("coeffs takes exactly one --beta1");
  const CoeffTable table = beta_coeffs(cfg.terms, parse_expr(cfg.beta1.front()));
  const std::size_t n = table.betas.size();
  if (cfg.format == Format::json) {
    json doc = json::object();
    const auto column = [](const std::vector<RingElem>& v) {
      json arr = json::array();
      for (const auto& e : v) arr.push_back(json::parse(to_json(e)));
      return arr;
    };
    doc["beta"] = column(table.betas);
    doc["beta_prime"] = column(table.beta_primes);
    doc["alpha"] = column(table.alphas);
    out << doc.dump() << '\n';
    return 0;
  }
  const bool latex = cfg.format == Format::latex;
  for (std::size_t a = 0; a < n; ++a) {
    const auto f = [&](const RingElem& e) { return latex ? to_latex(e) : to_plain(e); };
    if (latex)
      out << "\\beta_{" << a << "} = " << f(table.betas[a]) << ", \\quad \\beta'_{" << a
          << "} = " << f(table.beta_primes[a]) << ", \\quad \\alpha_{" << a << "} = " << f(table.alphas[a]) << '\n';
    else
      out << "a=" << a << "  beta=" << f(table.betas[a]) << "  beta'=" << f(table.beta_primes[a])
          << "  alpha=" << f(table.alphas[a]) << '\n';
  }
  return 0;
}

// ---- verification ---------------------------------------------------------

struct Entry {
  std::string suite;
  std::string params;
  Check check;
};

class Collector {
public:
  void add(const std::string& suite, const std::string& params, const Report& report) {
    if (std::find(order_.begin(), order_.end(), suite) == order_.end()) order_.push_back(suite);
    for (const auto& c : report.checks) entries_.push_back({suite, params, c});
  }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::string>& suites() const { return order_; }

private:
  std::vector<Entry> entries_;
  std::vector<std::string> order_;
};

void suite_four_braid(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas)
    for (int da = 1; da <= cfg.max_dim; ++da)
      for (int db = 1; db <= cfg.max_dim; ++db)
        col.add("four-braid", "beta1=" + b.label, verify_variant(da, db, twist_config(cfg, b.value)));
}

void suite_zdelta(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas)
    for (int da = 1; da <= cfg.max_dim; ++da)
      for (int db = 1; db <= cfg.max_dim; ++db) col.add("zdelta", "beta1=" + b.label, verify_zdelta(da, db, b.value));
}

void suite_bform(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas) col.add("bform", "beta1=" + b.label, verify_bform(cfg.max_sum, b.value));
}

void suite_coproduct(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas) {
    TwistConfig t;
    t.beta1 = b.value;
    for (int da = 1; da <= cfg.max_dim; ++da)
      for (int db = 1; db <= cfg.max_dim; ++db) col.add("coproduct", "beta1=" + b.label, verify_coproduct(da, db, t));
    col.add("coproduct", "beta1=" + b.label, verify_counit(t));
  }
}

void suite_inverse(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas)
    for (int d = 1; d <= cfg.max_dim; ++d) col.add("inverse", "beta1=" + b.label, verify_zhat_inverse(d, b.value));
}

void suite_zbn(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  const double q0 = cfg.at_q.empty() ? 0.7 : cfg.at_q.front();
  for (const auto& b : betas)
    for (int d = 1; d <= cfg.max_dim; ++d) {
      const TwistConfig t = twist_config(cfg, b.value);
      const std::string params = "beta1=" + b.label + " d=" + std::to_string(d) + " n=" + std::to_string(cfg.strands);
      if (std::pow(static_cast<double>(d), cfg.strands) <= static_cast<double>(max_exact_dim()))
        col.add("zbn", params, verify_zbn_relations(zbn_generators(d, cfg.strands, t)));
      else
        col.add("zbn", params + " numeric q0=" + format_complex(q0),
                verify_zbn_relations(zbn_generators_numeric(d, cfg.strands, t, q0), kNumericTol));
    }
}

void suite_affine(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  for (const auto& b : betas) {
    TwistConfig t;
    t.beta1 = b.value;
    t.variant = Variant::affine;
    for (int d = 1; d <= cfg.max_dim; ++d) col.add("affine", "beta1=" + b.label, verify_affine_relation(d, t));
    for (int da = 1; da <= cfg.max_dim; ++da)
      for (int db = 1; db <= cfg.max_dim; ++db) col.add("affine", "beta1=" + b.label, verify_variant(da, db, t));
  }
}

void suite_paper(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  const std::vector<double> samples = cfg.at_q.empty() ? std::vector<double>{0.7, 1.3} : cfg.at_q;
  for (const auto& b : betas) {
    if (!b.value.is_constant()) {
      Report skipped;
      Check c;
      c.name = "published matrices need a rational beta1; skipped";
      skipped.add(c);
      col.add("paper-matrices", "beta1=" + b.label, skipped);
      continue;
    }
    const double beta = b.value.num().is_zero() ? 0.0 : b.value.num().coeff(0).get_d();
    for (const double q0 : samples)
      for (int d = 2; d <= 4; ++d) {
        Report r;
        Check c;
        const double residual = compare_paper_matrix(d, beta, q0);
        std::ostringstream name;
        name << "symmetric-basis t matches the published matrix, d=" << d << " q0=" << q0;
        c.name = name.str();
        c.passed = residual < kNumericTol;
        std::ostringstream detail;
        detail << "residual " << residual;
        c.detail = detail.str();
        r.add(c);
        col.add("paper-matrices", "beta1=" + b.label, r);
      }
  }
}

void suite_rmatrix(const RunConfig& cfg, Collector& col) {
  const int triple = std::min(cfg.max_dim, 3);
  for (int a = 1; a <= triple; ++a)
    for (int b = 1; b <= triple; ++b)
      for (int c = 1; c <= triple; ++c) col.add("rmatrix", "", verify_yang_baxter(a, b, c));
  for (int a = 1; a <= cfg.max_dim; ++a)
    for (int b = 1; b <= cfg.max_dim; ++b) {
      col.add("rmatrix", "", verify_intertwiner(a, b));
      col.add("rmatrix", "", verify_weyl_r(a, b));
    }
  for (int d = 1; d <= cfg.max_dim; ++d) {
    col.add("rmatrix", "", verify_drinfeld_u(d));
    col.add("rmatrix", "", verify_weyl(d));
  }
}

void suite_variants(const RunConfig& cfg, const std::vector<Beta>& betas, Collector& col) {
  struct V {
    Variant variant;
    int twice_alpha;
  };
  const std::vector<V> variants = {{Variant::w_inverse, 0},   {Variant::k_conjugate, 1}, {Variant::k_conjugate, -1},
                                   {Variant::k_conjugate, 2}, {Variant::u_conjugate, 0}, {Variant::affine, 0}};
  for (const auto& b : betas)
    for (const auto& v : variants) {
      TwistConfig t;
      t.beta1 = b.value;
      t.variant = v.variant;
      t.alpha.twice = v.twice_alpha;
      std::string params = "beta1=" + b.label;
      if (v.variant == Variant::k_conjugate) params += " alpha=" + t.alpha.to_string();
      for (int da = 1; da <= cfg.max_dim; ++da)
        for (int db = 1; db <= cfg.max_dim; ++db) col.add("variants", params, verify_variant(da, db, t));
    }
}

using SuiteFn = std::function<void(const RunConfig&, const std::vector<Beta>&, Collector&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"four-braid", suite_four_braid},
      {"zdelta", suite_zdelta},
      {"bform", suite_bform},
      {"coproduct", suite_coproduct},
      {"inverse", suite_inverse},
      {"zbn", suite_zbn},
      {"affine", suite_affine},
      {"paper-matrices", suite_paper},
      {"rmatrix", [](const RunConfig& c, const std::vector<Beta>&, Collector& col) { suite_rmatrix(c, col); }},
      {"variants", suite_variants},
  };
  return table;
}

json mismatch_json(const Mismatch& m) {
  return json{{"row", m.row}, {"col", m.col}, {"lhs", json::parse(to_json(m.lhs))}, {"rhs", json::parse(to_json(m.rhs))}};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_dim < 1) throw UsageError("--max-dim must be positive");
  const std::vector<Beta> betas = parse_betas(cfg, {"0", "1"});
  Collector col;
  bool found = false;
  for (const auto& [name, fn] : suite_table())
    if (cfg.suite == "all" || cfg.suite == name) {
      fn(cfg, betas, col);
      found = true;
    }
  if (!found) throw UsageError("unknown verify suite: " + cfg.suite);

  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // suite -> (checks, failures)
  for (const auto& e : col.entries()) {
    auto& [n, f] = tally[e.suite];
    ++n;
    f += e.check.passed ? 0 : 1;
  }
  std::size_t failures = 0;
  for (const auto& [suite, t] : tally) failures += t.second;

  if (cfg.format == Format::json) {
    json checks = json::array();
    for (const auto& e : col.entries()) {
      json c{{"suite", e.suite},      {"params", e.params},        {"name", e.check.name},
             {"passed", e.check.passed}, {"instances", e.check.instances}};
      if (!e.check.detail.empty()) c["detail"] = e.check.detail;
      if (e.check.mismatch) c["mismatch"] = mismatch_json(*e.check.mismatch);
      checks.push_back(std::move(c));
    }
    json suites = json::array();
    for (const auto& s : col.suites())
      suites.push_back(json{{"suite", s}, {"checks", tally[s].first}, {"failures", tally[s].second}});
    out << json{{"checks", checks},
                {"summary", {{"suites", suites}, {"checks", col.entries().size()}, {"failures", failures}}}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& e : col.entries())
      out << e.suite << (e.params.empty() ? "" : " [" + e.params + "]") << ": " << describe(e.check) << '\n';
    out << "summary:";
    for (const auto& s : col.suites()) out << ' ' << s << ' ' << tally[s].first - tally[s].second << '/' << tally[s].first << ';';
    out << " total " << col.entries().size() << " checks, " << failures << " failed\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_zbn(const RunConfig& cfg, std::ostream& out) {
  if (cfg.beta1.size() > 1) throw UsageError("zbn takes at most one --beta1");
  const TwistConfig t = twist_config(cfg, parse_expr(cfg.beta1.empty() ? "0" : cfg.beta1.front()));
  const std::size_t rows = static_cast<std::size_t>(std::llround(std::pow(cfg.dim, cfg.strands)));
  const bool numeric = !cfg.at_q.empty();
  if (!numeric && std::pow(static_cast<double>(cfg.dim), cfg.strands) > static_cast<double>(max_exact_dim()))
    throw UsageError("V_" + std::to_string(cfg.dim) + "^(x)" + std::to_string(cfg.strands) + " has " +
                     std::to_string(rows) + " rows, above the exact limit " + std::to_string(max_exact_dim()) +
                     "; pass --at-q for numeric mode or raise QW_MAX_EXACT_DIM");

  if (cfg.word) {
    const BraidWord word = BraidWord::parse(*cfg.word, cfg.strands);
    if (numeric)
      emit_numeric(out, cfg, eval_braid_word(word, zbn_generators_numeric(cfg.dim, cfg.strands, t, sample_point(cfg))));
    else
      emit_matrices(out, cfg, {{"word", eval_braid_word(word, zbn_generators(cfg.dim, cfg.strands, t))}}, true);
    return 0;
  }
  if (cfg.strands < 2) throw UsageError("the relation suite needs --strands >= 2");
  const Report report = numeric
                            ? verify_zbn_relations(zbn_generators_numeric(cfg.dim, cfg.strands, t, sample_point(cfg)), kNumericTol)
                            : verify_zbn_relations(zbn_generators(cfg.dim, cfg.strands, t));
  for (const auto& c : report.checks) out << report.suite << ": " << describe(c) << '\n';
  out << "summary: " << report.checks.size() - report.failures() << '/' << report.checks.size() << " relations hold\n";
  return report.passed() ? 0 : 1;
}

// ---- command line ---------------------------------------------------------

const std::map<std::string, Format> kFormats = {{"json", Format::json}, {"latex", Format::latex}, {"plain", Format::plain}};
const std::map<std::string, Basis> kBases = {{"integer", Basis::integer}, {"symmetric", Basis::symmetric}};

void add_format(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "json|latex|plain")->transform(CLI::CheckedTransformer(kFormats).description(""));
}

void add_at_q(CLI::App* sub, RunConfig& cfg, bool many) {
  auto* opt = sub->add_option("--at-q", cfg.at_q, many ? "Sample point(s) q0" : "Evaluate numerically at q0");
  if (many)
    opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->delimiter(',');
  else
    opt->expected(1);
}

void add_beta(CLI::App* sub, RunConfig& cfg, bool many, bool required) {
  auto* opt = sub->add_option("--beta1", cfg.beta1, many ? "beta_1 expression(s); repeat to sweep" : "beta_1 expression");
  opt->expected(1);
  if (many) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  if (required) opt->required();
}

void add_variant(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--variant", cfg.variant, "standard|w-inverse|k-conjugate|u-conjugate|affine")
      ->check([](const std::string& s) {
        try {
          parse_variant(s);
          return std::string();
        } catch (const std::invalid_argument& e) {
          return std::string(e.what());
        }
      });
  sub->add_option("--alpha", cfg.alpha, "Half-integer exponent for k-conjugate")->check([](const std::string& s) {
    try {
      HalfInteger::from_string(s);
      return std::string();
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string kind = "R";
  CLI::App app{"Exact computations with U_q(sl2) R-matrices and cylinder twists", "qweyl"};
  app.require_subcommand(1);

  auto* irrep_cmd = app.add_subcommand("irrep", "Generator matrices of V_d");
  irrep_cmd->add_option("--dim", cfg.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
  add_format(irrep_cmd, cfg);
  add_at_q(irrep_cmd, cfg, false);

  auto* rmat_cmd = app.add_subcommand("rmatrix", "R-matrix on V_a (x) V_b");
  rmat_cmd->add_option("--dims", cfg.dims, "a,b")->required()->delimiter(',')->expected(2);
  rmat_cmd->add_option("--kind", kind, "R|R21|Rinv|B")->check(CLI::IsMember({"R", "R21", "Rinv", "B"}));
  add_format(rmat_cmd, cfg);
  add_at_q(rmat_cmd, cfg, false);

  auto* twist_cmd = app.add_subcommand("twist", "Twist matrix t on V_d");
  twist_cmd->add_option("--dim", cfg.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
  add_beta(twist_cmd, cfg, false, true);
  add_variant(twist_cmd, cfg);
  add_format(twist_cmd, cfg);
  add_at_q(twist_cmd, cfg, false);
  twist_cmd->add_option("--basis", cfg.basis, "integer|symmetric")->transform(CLI::CheckedTransformer(kBases).description(""));

  auto* coeffs_cmd = app.add_subcommand("coeffs", "beta_a, beta'_a and alpha_a tables");
  coeffs_cmd->add_option("--terms", cfg.terms, "Highest index")->check(CLI::NonNegativeNumber);
  add_beta(coeffs_cmd, cfg, false, true);
  add_format(coeffs_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
  verify_cmd->add_option("suite", cfg.suite, "four-braid|zdelta|bform|coproduct|inverse|zbn|affine|paper-matrices|rmatrix|variants|all")
      ->required()
      ->check(CLI::IsMember({"four-braid", "zdelta", "bform", "coproduct", "inverse", "zbn", "affine", "paper-matrices",
                             "rmatrix", "variants", "all"}));
  verify_cmd->add_option("--max-dim", cfg.max_dim, "Largest irrep dimension")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-sum", cfg.max_sum, "Largest a+b for bform")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--strands", cfg.strands, "Strands for zbn")->check(CLI::PositiveNumber);
  add_beta(verify_cmd, cfg, true, false);
  add_variant(verify_cmd, cfg);
  add_at_q(verify_cmd, cfg, true);
  Format verify_format = Format::plain;
  verify_cmd->add_option("--format", verify_format, "plain|json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"plain", Format::plain}}).description(""));

  auto* zbn_cmd = app.add_subcommand("zbn", "Representation of ZB_n on V_d^(x)n");
  zbn_cmd->add_option("--dim", cfg.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
  zbn_cmd->add_option("--strands", cfg.strands, "Strand count n")->required()->check(CLI::PositiveNumber);
  add_beta(zbn_cmd, cfg, false, false);
  add_variant(zbn_cmd, cfg);
  zbn_cmd->add_option("--word", cfg.word, "Generator indices, ' marks an inverse");
  add_format(zbn_cmd, cfg);
  add_at_q(zbn_cmd, cfg, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (app.got_subcommand(verify_cmd)) cfg.format = verify_format;

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    if (sub == irrep_cmd) return cmd_irrep(cfg, out);
    if (sub == rmat_cmd) return cmd_rmatrix(cfg, kind, out);
    if (sub == twist_cmd) return cmd_twist(cfg, out);
    if (sub == coeffs_cmd) return cmd_coeffs(cfg, out);
    if (sub == verify_cmd) return cmd_verify(cfg, out);
    return cmd_zbn(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace qweyl::cli

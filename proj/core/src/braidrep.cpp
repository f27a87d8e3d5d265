#include "qweyl/braidrep.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qweyl/rmatrix.hpp"

namespace qweyl {

namespace {

constexpr std::size_t kDefaultExactLimit = 256;

std::size_t tensor_size(int d, int n) {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) {
    if (s > (std::size_t{1} << 40) / static_cast<std::size_t>(d)) throw std::length_error("tensor power too large");
    s *= static_cast<std::size_t>(d);
  }
  return s;
}

QMatrix id(std::size_t n) { return QMatrix::identity(n); }

QMatrix embed(const QMatrix& op, int position, int width, int d, int n) {
  // op acts on tensor factors [position, position + width).
  return kron(kron(id(tensor_size(d, position)), op), id(tensor_size(d, n - position - width)));
}

NumMatrix num_embed(const NumMatrix& op, int position, int width, int d, int n) {
  const auto left = static_cast<Eigen::Index>(tensor_size(d, position));
  const auto right = static_cast<Eigen::Index>(tensor_size(d, n - position - width));
  return num_kron(num_kron(NumMatrix::Identity(left, left), op), NumMatrix::Identity(right, right));
}

void validate_shape(int d, int n) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (n < 1) throw std::invalid_argument("strand count must be positive");
}

// Visits every relation instance as (family, label, lhs word, rhs word).
template <typename Fn>
void for_each_relation(int n, Fn&& fn) {
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      fn("far commutation", "t" + std::to_string(i) + " t" + std::to_string(j), std::vector<int>{i, j},
         std::vector<int>{j, i});
  for (int i = 1; i + 1 < n; ++i)
    fn("braid relation", "t" + std::to_string(i) + " t" + std::to_string(i + 1), std::vector<int>{i, i + 1, i},
       std::vector<int>{i + 1, i, i + 1});
  if (n >= 2) fn("type-B relation", "t0 t1 t0 t1", std::vector<int>{0, 1, 0, 1}, std::vector<int>{1, 0, 1, 0});
  for (int i = 2; i < n; ++i)
    fn("t0 commutation", "t0 t" + std::to_string(i), std::vector<int>{0, i}, std::vector<int>{i, 0});
}

}  // namespace

BraidWord BraidWord::parse(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be positive");
  BraidWord word;
  word.strands = strands;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    Letter letter;
    if (tok.back() == '\'') {
      letter.power = -1;
      tok.pop_back();
    }
    std::size_t used = 0;
    int idx = -1;
    try {
      idx = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter: '" + tok + "'");
    }
    if (used != tok.size() || tok.empty()) throw std::invalid_argument("bad braid letter: '" + tok + "'");
    if (idx < 0 || idx >= strands)
      throw std::invalid_argument("generator index " + std::to_string(idx) + " out of range for " +
                                  std::to_string(strands) + " strands");
    letter.generator = idx;
    word.letters.push_back(letter);
  }
  return word;
}

std::size_t max_exact_dim() {
  if (const char* env = std::getenv("QW_MAX_EXACT_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultExactLimit;
}

QMatrix RepBundle::generator_inverse(int i) const {
  if (i < 0 || i >= strands) throw std::invalid_argument("generator index out of range");
  if (i == 0) return embed(twist_inv, 0, 1, dim, strands);
  return embed(braid_inv, i - 1, 2, dim, strands);
}

RepBundle zbn_generators(int d, int n, const QMatrix& twist, const QMatrix& braid) {
  validate_shape(d, n);
  const std::size_t size = tensor_size(d, n);
  if (size > max_exact_dim())
    throw std::length_error("exact mode refuses " + std::to_string(size) + " rows (limit " +
                            std::to_string(max_exact_dim()) + ", set QW_MAX_EXACT_DIM to raise)");
  RepBundle bundle;
  bundle.dim = d;
  bundle.strands = n;
  bundle.twist = twist;
  bundle.braid = braid;
  bundle.twist_inv = inverse(twist);
  bundle.braid_inv = inverse(braid);
  bundle.generators.push_back(embed(twist, 0, 1, d, n));
  for (int i = 1; i < n; ++i) bundle.generators.push_back(embed(braid, i - 1, 2, d, n));
  return bundle;
}

RepBundle zbn_generators(int d, int n, const TwistConfig& config) {
  validate_shape(d, n);
  if (tensor_size(d, n) > max_exact_dim())
    throw std::length_error("exact mode refuses " + std::to_string(tensor_size(d, n)) + " rows (limit " +
                            std::to_string(max_exact_dim()) + ", set QW_MAX_EXACT_DIM to raise)");
  return zbn_generators(d, n, twist_t(d, config), braid_matrix(d));
}

Report verify_zbn_relations(const RepBundle& bundle) {
  Report report;
  report.suite = "zbn d=" + std::to_string(bundle.dim) + " n=" + std::to_string(bundle.strands);
  const auto product = [&](const std::vector<int>& gens) {
    QMatrix m = bundle.generators[static_cast<std::size_t>(gens.front())];
    for (std::size_t k = 1; k < gens.size(); ++k) m = m * bundle.generators[static_cast<std::size_t>(gens[k])];
    return m;
  };
  for_each_relation(bundle.strands, [&](const std::string& family, const std::string& label, const std::vector<int>& lhs,
                                        const std::vector<int>& rhs) {
    report.add(compare_exact(family + ": " + label, product(lhs), product(rhs)));
  });
  return report;
}

Report verify_zbn_relations(int d, int n, const TwistConfig& config) {
  if (n < 2) throw std::invalid_argument("relation suite needs at least 2 strands");
  return verify_zbn_relations(zbn_generators(d, n, config));
}

QMatrix eval_braid_word(const BraidWord& word, const RepBundle& bundle) {
  if (word.strands != bundle.strands) throw std::invalid_argument("word and bundle strand counts differ");
  QMatrix m = QMatrix::identity(bundle.size());
  for (const auto& letter : word.letters) {
    if (letter.generator < 0 || letter.generator >= bundle.strands)
      throw std::invalid_argument("generator index out of range");
    m = m * (letter.power > 0 ? bundle.generators[static_cast<std::size_t>(letter.generator)]
                              : bundle.generator_inverse(letter.generator));
  }
  return m;
}

Report verify_affine_relation(int d, const TwistConfig& config) {
  TwistConfig affine = config;
  affine.variant = Variant::affine;
  const QMatrix fbar = kron(QMatrix::identity(static_cast<std::size_t>(d)), twist_t(d, affine));
  const QMatrix b = braid_matrix(d);
  Report report;
  report.suite = "affine";
  report.add(compare_exact("(1(x)Fbar) B (1(x)Fbar) B = B (1(x)Fbar) B (1(x)Fbar) on V_" + std::to_string(d),
                           fbar * b * fbar * b, b * fbar * b * fbar));
  return report;
}

NumericBundle zbn_generators_numeric(int d, int n, const TwistConfig& config, std::complex<double> q0) {
  validate_shape(d, n);
  (void)tensor_size(d, n);
  const NumMatrix t = evaluate(twist_t(d, config), q0);
  const NumMatrix b = evaluate(braid_matrix(d), q0);
  const NumMatrix tinv = t.inverse();
  const NumMatrix binv = b.inverse();
  NumericBundle bundle;
  bundle.dim = d;
  bundle.strands = n;
  bundle.generators.push_back(num_embed(t, 0, 1, d, n));
  bundle.inverses.push_back(num_embed(tinv, 0, 1, d, n));
  for (int i = 1; i < n; ++i) {
    bundle.generators.push_back(num_embed(b, i - 1, 2, d, n));
    bundle.inverses.push_back(num_embed(binv, i - 1, 2, d, n));
  }
  return bundle;
}

NumMatrix eval_braid_word(const BraidWord& word, const NumericBundle& bundle) {
  if (word.strands != bundle.strands) throw std::invalid_argument("word and bundle strand counts differ");
  const Eigen::Index size = bundle.generators.front().rows();
  NumMatrix m = NumMatrix::Identity(size, size);
  for (const auto& letter : word.letters) {
    if (letter.generator < 0 || letter.generator >= bundle.strands)
      throw std::invalid_argument("generator index out of range");
    const auto g = static_cast<std::size_t>(letter.generator);
    m = m * (letter.power > 0 ? bundle.generators[g] : bundle.inverses[g]);
  }
  return m;
}

Report verify_zbn_relations(const NumericBundle& bundle, double tol) {
  Report report;
  report.suite = "zbn numeric d=" + std::to_string(bundle.dim) + " n=" + std::to_string(bundle.strands);
  const auto product = [&](const std::vector<int>& gens) {
    NumMatrix m = bundle.generators[static_cast<std::size_t>(gens.front())];
    for (std::size_t k = 1; k < gens.size(); ++k) m = m * bundle.generators[static_cast<std::size_t>(gens[k])];
    return m;
  };
  for_each_relation(bundle.strands, [&](const std::string& family, const std::string& label, const std::vector<int>& lhs,
                                        const std::vector<int>& rhs) {
    const NumMatrix l = product(lhs);
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    const double residual = (l - product(rhs)).cwiseAbs().maxCoeff() / scale;
    Check c;
    c.name = family + ": " + label;
    c.passed = residual <= tol;
    std::ostringstream os;
    os << "relative residual " << residual;
    c.detail = os.str();
    report.add(std::move(c));
  });
  return report;
}

}  // namespace qweyl

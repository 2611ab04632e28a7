#include "tautint/universal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tautint/binomial.hpp"

namespace tautint {

namespace {

Rational taut_scalar(ClassKind kind, int degree, int k, long d) {
  switch (kind) {
    case ClassKind::chern: return taut_chern_coeff(k, d, degree);
    case ClassKind::segre: return taut_segre_coeff(k, d, degree);
    case ClassKind::ch: return taut_ch_coeff(k, d, degree);
  }
  throw std::logic_error("taut_scalar: bad kind");
}

Rational monomial_on_projective_space(const ClassMonomial& mono, int k, long d) {
  Rational r(1);
  for (const auto& [gen, exp] : mono.factors()) {
    const Rational base = taut_scalar(gen.kind, gen.degree, k, d);
    for (int i = 0; i < exp; ++i) r *= base;
    if (r.is_zero()) return r;
  }
  return r;
}

ClassExpr monomial_expr(const ClassMonomial& mono) {
  ClassExpr e = ClassExpr::constant(Rational(1));
  for (const auto& [gen, exp] : mono.factors()) {
    e = e * ClassExpr::generator(gen.kind, gen.degree, exp);
  }
  return e;
}

using BiMonomial = std::pair<ClassMonomial, ClassMonomial>;
using BiExpansion = std::map<BiMonomial, Rational>;

/// Splits one generator of the bundle A + B into its two-sided pieces:
/// c and s are multiplicative (c_i = sum_j c_j(A) c_{i-j}(B)), ch is
/// additive.
BiExpansion expand_generator(const Generator& gen) {
  BiExpansion out;
  auto put = [&](int deg_a, int deg_b) {
    ClassMonomial a, b;
    if (deg_a > 0) a.multiply_by({gen.kind, deg_a}, 1);
    if (deg_b > 0) b.multiply_by({gen.kind, deg_b}, 1);
    out[{a, b}] += Rational(1);
  };
  if (gen.kind == ClassKind::ch) {
    put(gen.degree, 0);
    put(0, gen.degree);
  } else {
    for (int j = 0; j <= gen.degree; ++j) put(j, gen.degree - j);
  }
  return out;
}

BiExpansion convolve(const BiExpansion& x, const BiExpansion& y) {
  BiExpansion out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      BiMonomial m{mx.first * my.first, mx.second * my.second};
      auto [it, inserted] = out.try_emplace(m, cx * cy);
      if (!inserted) it->second += cx * cy;
    }
  }
  return out;
}

BiExpansion expand_union_monomial(const ClassMonomial& mono) {
  BiExpansion acc;
  acc[{ClassMonomial(), ClassMonomial()}] = Rational(1);
  for (const auto& [gen, exp] : mono.factors()) {
    const BiExpansion single = expand_generator(gen);
    for (int i = 0; i < exp; ++i) acc = convolve(acc, single);
  }
  return acc;
}

const std::vector<std::pair<int, std::vector<long>>>& held_out_configs() {
  static const std::vector<std::pair<int, std::vector<long>>> configs = {
      {2, {3, 3}},
      {3, {2, 2, 2}},
      {2, {4, 4}},
  };
  return configs;
}

std::string poly_key(int i, int j) {
  if (i == 0 && j == 0) return "1";
  std::string s;
  if (i > 0) s += "d^" + std::to_string(i);
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += "g^" + std::to_string(j);
  }
  return s;
}

std::pair<int, int> parse_poly_key(const std::string& key) {
  if (key == "1") return {0, 0};
  int i = 0, j = 0;
  size_t pos = 0;
  while (pos < key.size()) {
    const char var = key[pos];
    if ((var != 'd' && var != 'g') || pos + 1 >= key.size() || key[pos + 1] != '^') {
      throw std::invalid_argument("bad polynomial coefficient key '" + key + "'");
    }
    pos += 2;
    size_t len = 0;
    while (pos + len < key.size() && std::isdigit(static_cast<unsigned char>(key[pos + len]))) ++len;
    if (len == 0) throw std::invalid_argument("bad polynomial coefficient key '" + key + "'");
    const int e = std::stoi(key.substr(pos, len));
    pos += len;
    (var == 'd' ? i : j) = e;
    if (pos < key.size()) {
      if (key[pos] != '*') throw std::invalid_argument("bad polynomial coefficient key '" + key + "'");
      ++pos;
    }
  }
  return {i, j};
}

bool held_out_pass(const UniversalIntegral& u) {
  for (const auto& [m, degrees] : held_out_configs()) {
    const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
    const Rational have = eval_expr_on_union(u.expr, m, degrees, u.weight);
    const Rational predicted = u.polynomial.eval(Rational(total), Rational(1 - m));
    if (have != predicted) return false;
  }
  return true;
}

}  // namespace

Rational genus_zero_integral(const ClassExpr& expr, long d) {
  if (expr.is_zero()) return Rational(0);
  const int k = expr.weight();
  if (k == 0) return expr.constant_value();
  Rational total(0);
  for (const auto& [mono, coeff] : expr.terms()) {
    total += coeff * monomial_on_projective_space(mono, k, d);
  }
  return total;
}

UniversalIntegral UniversalEngine::compute(const ClassExpr& expr, int k, int bound) const {
  std::vector<int> attempts{bound};
  if (bound == k) attempts.push_back(k + 2);

  std::string failure;
  for (const int T : attempts) {
    std::vector<FitSample> samples;
    samples.reserve(static_cast<size_t>(T + 1) * (T + 1));
    for (int m = 1; m <= T + 1; ++m) {
      for (int step = 0; step <= T; ++step) {
        const long total = k + 1 + step;
        std::vector<long> degrees(static_cast<size_t>(m), 1);
        degrees[0] = total - (m - 1);
        samples.push_back({Rational(total), Rational(1 - m), eval_expr_on_union(expr, m, degrees, k)});
      }
    }

    BivariatePolynomial poly;
    try {
      poly = fit_bivariate(samples, T);
    } catch (const FitError& e) {
      failure = e.what();
      continue;
    }

    UniversalIntegral result;
    result.expr = expr;
    result.weight = k;
    result.degree_bound = T;
    result.polynomial = poly;
    result.sample_count = static_cast<int>(samples.size());
    for (const auto& s : samples) {
      result.sample_grid.emplace_back(s.d.to_long(), s.g.to_long());
    }

    bool ok = true;
    for (const auto& [m, degrees] : held_out_configs()) {
      const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
      const Rational have = eval_expr_on_union(expr, m, degrees, k);
      const Rational predicted = poly.eval(Rational(total), Rational(1 - m));
      if (have != predicted) {
        failure = "held-out sample at " + std::to_string(m) + " lines disagrees with the fit of '" + expr.str() + "'";
        ok = false;
        break;
      }
      result.held_out.push_back({m, degrees, have.str()});
    }
    if (ok) return result;
  }
  throw ConsistencyError("universal_integral: degree-bound validation failed for '" + expr.str() +
                         "': " + failure);
}

const UniversalIntegral& UniversalEngine::universal_integral(const ClassExpr& expr, int k, int degree_bound) {
  if (expr.is_zero()) throw std::invalid_argument("universal_integral: zero expression");
  if (expr.weight() != k) {
    throw WeightMismatch("universal_integral: expression weight " + std::to_string(expr.weight()) +
                         " does not match k=" + std::to_string(k));
  }
  if (k < 1) throw std::invalid_argument("universal_integral: weight must be >= 1");
  const int bound = degree_bound < 0 ? k : degree_bound;
  const std::string key = expr.str();

  std::optional<UniversalIntegral> candidate;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto pit = pending_.find(key);
    if (pit != pending_.end()) {
      candidate = std::move(pit->second);
      pending_.erase(pit);
    }
  }

  UniversalIntegral result;
  if (candidate && candidate->weight == k && held_out_pass(*candidate)) {
    result = std::move(*candidate);
    for (const auto& [m, degrees] : held_out_configs()) {
      const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
      result.held_out.push_back({m, degrees, result.polynomial.eval(Rational(total), Rational(1 - m)).str()});
    }
  } else {
    result = compute(expr, k, bound);
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.try_emplace(key, std::move(result));
  return it->second;
}

Rational UniversalEngine::eval_universal(const ClassExpr& expr, int k, long d, long g) {
  return universal_integral(expr, k).polynomial.eval(Rational(d), Rational(g));
}

Rational UniversalEngine::recursion_integral(const ClassExpr& expr, int k, long g, long d) {
  if (g < 0) throw std::invalid_argument("recursion_integral: genus must be >= 0");
  if (!expr.is_zero() && expr.weight() != k) {
    throw WeightMismatch("recursion_integral: expression weight mismatch");
  }
  return recursion_value(expr, g, d);
}

Rational UniversalEngine::recursion_value(const ClassExpr& expr, long g, long d) {
  if (expr.is_zero()) return Rational(0);
  const int w = expr.weight();
  if (w == 0) return expr.constant_value();
  if (g == 0) return genus_zero_integral(expr, d);

  const auto key = std::make_tuple(expr.str(), g, d);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = recursion_memo_.find(key);
    if (it != recursion_memo_.end()) return it->second;
  }

  // (C ⊔ P^1)^{[w]} at (g-1, d+1), with the extra line carrying O(1):
  // the pure-C component reproduces the genus-g integral; every mixed
  // component pairs a lower-weight integral over C with an exact value on
  // a projective space.
  Rational value = recursion_value(expr, g - 1, d + 1);
  for (const auto& [mono, coeff] : expr.terms()) {
    for (const auto& [bimono, c2] : expand_union_monomial(mono)) {
      const int wb = bimono.second.weight();
      if (wb == 0) continue;
      const Rational on_line = monomial_on_projective_space(bimono.second, wb, 1);
      if (on_line.is_zero()) continue;
      const Rational on_curve = recursion_value(monomial_expr(bimono.first), g, d);
      value -= coeff * c2 * on_line * on_curve;
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = recursion_memo_.try_emplace(key, std::move(value));
  return it->second;
}

std::vector<UniversalIntegral> UniversalEngine::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<UniversalIntegral> out;
  out.reserve(memo_.size());
  for (const auto& [key, u] : memo_) out.push_back(u);
  return out;
}

size_t UniversalEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    try {
      UniversalIntegral u;
      u.expr = ClassExpr::parse_canonical(j.at("expr").get<std::string>());
      u.weight = j.at("weight").get<int>();
      u.degree_bound = j.at("degree_bound").get<int>();
      u.sample_count = j.value("sample_count", 0);
      BivariatePolynomial p(u.degree_bound);
      for (const auto& [key, val] : j.at("coefficients").items()) {
        const auto [i, jj] = parse_poly_key(key);
        p.set_coefficient(i, jj, Rational::from_string(val.get<std::string>()));
      }
      u.polynomial = p;
      if (u.expr.weight() != u.weight) continue;
      std::lock_guard<std::mutex> lock(mu_);
      pending_[u.expr.str()] = std::move(u);
      ++count;
    } catch (const std::exception&) {
      // Malformed entries are skipped; the engine recomputes them.
    }
  }
  return count;
}

size_t UniversalEngine::save_cache(const std::string& path) const {
  std::vector<nlohmann::json> rows;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, u] : memo_) {
      nlohmann::ordered_json j;
      j["expr"] = key;
      j["weight"] = u.weight;
      j["degree_bound"] = u.degree_bound;
      j["sample_count"] = u.sample_count;
      nlohmann::ordered_json coeffs;
      for (const auto& [exps, c] : u.polynomial.coefficients()) {
        coeffs[poly_key(exps.first, exps.second)] = c.str();
      }
      j["coefficients"] = std::move(coeffs);
      rows.push_back(std::move(j));
    }
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
  for (const auto& j : rows) out << j.dump() << "\n";
  return rows.size();
}

Rational castelnuovo_count(int e, long d, long g) {
  if (e < 0) throw std::invalid_argument("castelnuovo_count: e must be >= 0");
  Rational v(0);
  for (int a = 0; a <= e; ++a) {
    Rational term = binomial_general(Rational(g + 2 * e - d - 2), a) * binomial_general(Rational(g), e - a);
    v += (a % 2 == 0) ? term : -term;
  }
  return v;
}

PowerSeries<Rational> castelnuovo_series(long d, long g, int order) {
  if (order < 0) throw std::invalid_argument("castelnuovo_series: negative order");
  const PowerSeries<Rational> root = ps_sqrt_one_plus(Rational(4), order + 2);

  // First base (1 + sqrt(1+4t))/2, needed only to the requested order.
  PowerSeries<Rational> base_a(order);
  for (int i = 0; i <= order; ++i) {
    base_a.set(i, (i == 0 ? root.at(0) + Rational(1) : root.at(i)) / Rational(2));
  }

  // Second base (-1 - 4t + (1+2t) sqrt(1+4t)) / (2 t^2): the numerator
  // vanishes to order 2 identically, which we verify before shifting.
  PowerSeries<Rational> numer(order + 2);
  for (int i = 0; i <= order + 2; ++i) {
    Rational c = root.at(i);
    if (i >= 1) c += Rational(2) * root.at(i - 1);
    if (i == 0) c -= Rational(1);
    if (i == 1) c -= Rational(4);
    numer.set(i, c);
  }
  if (!numer.at(0).is_zero() || !numer.at(1).is_zero()) {
    throw std::logic_error("castelnuovo_series: t^-2 pole failed to cancel");
  }
  PowerSeries<Rational> base_b(order);
  for (int i = 0; i <= order; ++i) base_b.set(i, numer.at(i + 2) / Rational(2));

  return ps_pow(base_a, d) * ps_pow(base_b, g - 1);
}

Rational ch_integral_formula(int k, long g, long d) {
  if (k < 1) throw std::invalid_argument("ch_integral_formula: k must be >= 1");
  Rational v = Rational(d + (k - 1) * g - k + 1) / factorial(k);
  return (k % 2 == 1) ? v : -v;
}

namespace {

PowerSeries<Rational> times_z_exp_minus_z(const std::vector<std::pair<int, Rational>>& poly, int order) {
  PowerSeries<Rational> p(order);
  for (const auto& [power, coeff] : poly) {
    if (power <= order) p.set(power, coeff);
  }
  PowerSeries<Rational> minus_z(order);
  if (order >= 1) minus_z.set(1, Rational(-1));
  return p * ps_exp(minus_z);
}

}  // namespace

PowerSeries<Rational> hphipsi0_series(long d, int order) {
  if (order < 1) throw std::invalid_argument("hphipsi0_series: order must be >= 1");
  return times_z_exp_minus_z({{1, Rational(-d) * Rational(d)}, {2, Rational(1 - 2 * d)}, {3, Rational(-1)}}, order);
}

PowerSeries<Rational> hphipsi0_series_as_printed(long d, int order) {
  if (order < 1) throw std::invalid_argument("hphipsi0_series_as_printed: order must be >= 1");
  return times_z_exp_minus_z({{1, Rational(-d) * Rational(d)}, {2, Rational(1 - 2 * d)}, {3, Rational(-1, 2)}},
                             order);
}

PowerSeries<Rational> hpsi_series(long g, long d, int order) {
  if (order < 1) throw std::invalid_argument("hpsi_series: order must be >= 1");
  return times_z_exp_minus_z({{1, Rational(g - d - 1)}, {2, Rational(g - 1)}}, order);
}

namespace {

Rational closed_b_from_sigma1(int k, long g, long d, const Rational& sigma1_z_coeff) {
  if (k < 2) throw std::invalid_argument("closed_b: requires k >= 2");
  const Rational dgk(d + g - k + 1);
  Rational a = dgk * dgk;
  a -= Rational(g) * Rational(2 - k) * (Rational(2 - k) - Rational(g - 1) / Rational(2));
  a -= Rational(4 - k) * sigma1_z_coeff;
  a /= factorial(k - 1);
  return (k % 2 == 0) ? a : -a;
}

}  // namespace

Rational closed_b(int k, long g, long d) {
  return closed_b_from_sigma1(k, g, d, Rational(g - 2) * Rational(2 * d + g - 1) / Rational(2));
}

Rational closed_b_corrected(int k, long g, long d) {
  return closed_b_from_sigma1(k, g, d, Rational(g) * Rational(2 * d + g - 1) / Rational(2));
}

Rational closed_s4(long d, long g) {
  return binomial_general(Rational(d), 4) - Rational(3) * binomial_general(Rational(d), 3) +
         binomial_general(Rational(d), 2) * Rational(6 - g) + Rational(5 * d) * Rational(g - 2) +
         binomial_general(Rational(g), 2) - Rational(15) * Rational(g) + Rational(15);
}

Rational closed_c4(long g, long d) {
  Rational v = binomial_general(Rational(d + g), 4);
  for (long m = 0; m < g; ++m) {
    Rational inner = binomial_general(Rational(d + g + m), 3);
    for (long n = 0; n < g; ++n) inner -= binomial_general(Rational(d + m + n), 2);
    v -= inner;
  }
  return v;
}

ClassExpr dual_top_segre_expr(int e) {
  if (e < 1) throw std::invalid_argument("dual_top_segre_expr: e must be >= 1");
  return ClassExpr::generator(ClassKind::segre, e).dualized();
}

PowerSeries<Rational> top_segre_series(UniversalEngine& engine, long d, long g, int order) {
  PowerSeries<Rational> t(order);
  t.set(0, Rational(1));
  for (int k = 1; k <= order; ++k) {
    t.set(k, engine.eval_universal(dual_top_segre_expr(k), k, d, g));
  }
  return t;
}

PowerSeries<Rational> defect_series(UniversalEngine& engine, long d, long g, int order) {
  // Unshifted additive assembly: phi = c_1 and psi = ch as genuine
  // additive classes.  The rank-0 coefficients at z^0 vanish on Hilbert
  // schemes, so H_phi = d z and H_psi starts at z^1.
  PowerSeries<Rational> h_phi(order);
  if (order >= 1) h_phi.set(1, engine.eval_universal(ClassExpr::generator(ClassKind::chern, 1), 1, d, g));

  PowerSeries<Rational> h_psi(order);
  for (int k = 1; k <= order; ++k) {
    h_psi.set(k, engine.eval_universal(ClassExpr::generator(ClassKind::ch, k), k, d, g));
  }

  PowerSeries<Rational> h_phipsi(order);
  for (int k = 1; k <= order; ++k) {
    ClassExpr expr = (k == 1) ? ClassExpr::generator(ClassKind::chern, 1)
                              : ClassExpr::generator(ClassKind::chern, 1) * ClassExpr::generator(ClassKind::ch, k - 1);
    h_phipsi.set(k, engine.eval_universal(expr, k, d, g));
  }

  return h_phipsi - h_phi * h_psi;
}

}  // namespace tautint

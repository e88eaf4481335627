#include "eulerx/curves.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "eulerx/polyroots.hpp"

namespace eulerx {
namespace {

using cd = std::complex<double>;

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

double qpow(std::uint64_t q, int e) { return std::pow(double(q), e); }

std::uint64_t qpow_int(std::uint64_t q, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > (std::uint64_t(1) << 62) / q)
      throw std::overflow_error("point count exceeds 2^62");
    v *= q;
  }
  return v;
}

// |X(F_{q^l})| from whatever the data carries: explicit counts first,
// then alpha/beta root data, then the curve zeta recovered from counts.
struct CountProvider {
  const CurveData& data;
  const CurveZeta* zeta = nullptr;  // optional, dim 1 only

  std::uint64_t at(int l) const {
    if (l >= 1 && std::size_t(l) <= data.counts.size()) return data.counts[l - 1];
    if (!data.alphas.empty() || !data.betas.empty() || data.dim != 1) {
      // |X(F_{q^l})| = q^{l dim} + sum beta^l - sum alpha^l
      double corr = 0.0;
      for (const cd& b : data.betas) corr += std::pow(b, l).real();
      for (const cd& a : data.alphas) corr -= std::pow(a, l).real();
      return qpow_int(data.q, l * data.dim) + std::uint64_t(std::llround(corr));
    }
    if (zeta) return extended_count(*zeta, l);
    throw std::invalid_argument("point count for l = " + std::to_string(l) +
                                " not available");
  }
};

std::uint64_t closed_point_count_from(const CountProvider& counts, int d) {
  long double sum = 0.0L;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int m = moebius(e);
    if (m == 0) continue;
    sum += (long double)m * (long double)counts.at(d / e);
  }
  const long double b = sum / d;
  const long double rounded = llroundl(b);
  if (fabsl(b - rounded) > 1e-6 || rounded < 0)
    throw std::invalid_argument("inconsistent point counts: b_" + std::to_string(d) +
                                " is not a nonnegative integer");
  return std::uint64_t(rounded);
}

}  // namespace

std::complex<double> CurveZeta::value(std::complex<double> s) const {
  const cd u = std::exp(-s * std::log(double(q)));
  cd num = 0.0;
  for (std::size_t k = numerator.size(); k-- > 0;) num = num * u + numerator[k];
  return num / ((1.0 - u) * (1.0 - double(q) * u));
}

double CurveZeta::value_at_half() const {
  return value(cd(0.5, 0.0)).real();
}

std::uint64_t closed_point_count(const CurveData& data, int d) {
  CountProvider provider{data};
  CurveZeta z;
  if (data.dim == 1 && std::size_t(d) > data.counts.size() && data.alphas.empty()) {
    z = zeta_from_counts(data);
    provider.zeta = &z;
  }
  return closed_point_count_from(provider, d);
}

CurveZeta zeta_from_counts(const CurveData& data) {
  if (data.dim != 1) throw std::invalid_argument("zeta_from_counts: curves only (dim 1)");
  const int g = data.genus;
  if (int(data.counts.size()) < g)
    throw std::invalid_argument("zeta_from_counts: need counts for l = 1..genus");

  CurveZeta zeta;
  zeta.q = data.q;
  zeta.genus = g;

  // Newton recursion: power sums s_l = q^l + 1 - |X(F_{q^l})| of the 2g
  // numerator roots give the elementary symmetric functions e_k.
  std::vector<double> psum(g + 1, 0.0), esym(2 * g + 1, 0.0);
  for (int l = 1; l <= g; ++l)
    psum[l] = qpow(data.q, l) + 1.0 - double(data.counts[l - 1]);
  esym[0] = 1.0;
  for (int k = 1; k <= g; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i)
      acc += (i % 2 ? 1.0 : -1.0) * esym[k - i] * psum[i];
    esym[k] = acc / k;
  }
  zeta.numerator.assign(2 * g + 1, 0.0);
  for (int k = 0; k <= g; ++k) {
    const double a_k = (k % 2 ? -1.0 : 1.0) * esym[k];
    zeta.numerator[k] = a_k;
    zeta.numerator[2 * g - k] = qpow(data.q, g - k) * a_k;  // functional equation
  }

  zeta.alphas.clear();
  for (const cd& u0 : poly_roots(zeta.numerator)) {
    const cd alpha = 1.0 / u0;
    if (std::abs(std::abs(alpha) - std::sqrt(double(data.q))) > 1e-6)
      throw std::invalid_argument("inconsistent point counts: |alpha| != sqrt(q)");
    zeta.alphas.push_back(alpha);
  }

  // Any extra supplied counts must agree with the recovered model, and
  // every closed-point count must come out a nonnegative integer.
  for (std::size_t l = 1; l <= data.counts.size(); ++l) {
    if (l > std::size_t(g) && extended_count(zeta, int(l)) != data.counts[l - 1])
      throw std::invalid_argument("inconsistent point counts at l = " + std::to_string(l));
    CountProvider provider{data, &zeta};
    closed_point_count_from(provider, int(l));
  }
  return zeta;
}

std::uint64_t extended_count(const CurveZeta& zeta, int l) {
  double corr = 0.0;
  for (const cd& a : zeta.alphas) corr -= std::pow(a, l).real();
  return qpow_int(zeta.q, l) + 1 + std::uint64_t(std::int64_t(std::llround(corr)));
}

CurveData count_hyperelliptic(const PolyFq& f, int l_max) {
  const int q = f.q;
  if (q == 2) throw std::invalid_argument("count_hyperelliptic: q must be odd");
  if (f.degree() < 1) throw std::invalid_argument("count_hyperelliptic: f must be nonconstant");
  if (fq_gcd(f, fq_derivative(f)).degree() != 0)
    throw std::invalid_argument("count_hyperelliptic: f must be squarefree");

  CurveData data;
  data.q = std::uint64_t(q);
  data.dim = 1;
  data.genus = (f.degree() - 1) / 2;

  for (int l = 1; l <= l_max; ++l) {
    // F_{q^l} = F_q[Y]/(m) for an irreducible m of degree l.
    const PolyFq m = l == 1 ? fq_poly(q, {0, 1}) : irreducibles_of_degree(q, l).front();
    std::uint64_t field_size = 1;
    for (int i = 0; i < l; ++i) field_size *= std::uint64_t(q);
    const std::uint64_t half = (field_size - 1) / 2;

    const PolyFq one = l == 1 ? fq_one(q) : fq_mod(fq_one(q), m);
    auto eta = [&](const PolyFq& a) -> int {  // quadratic character of F_{q^l}
      if (a.is_zero()) return 0;
      const PolyFq p = fq_powmod(a, half, m);
      return p == one ? 1 : -1;
    };

    long long sum = 0;
    for (std::uint64_t code = 0; code < field_size; ++code) {
      const PolyFq x = fq_decode(q, code);
      // f(x) in the extension field (coefficients of f lift from F_q)
      PolyFq v = fq_zero(q);
      for (int i = f.degree(); i >= 0; --i)
        v = fq_mod(fq_add(fq_mul(v, x), fq_poly(q, {f.c[i]})), m);
      sum += eta(v);
    }
    std::uint64_t count = std::uint64_t((long long)field_size + sum);
    // points at infinity of the smooth model
    if (f.degree() % 2 == 1)
      count += 1;
    else
      count += (eta(fq_mod(fq_poly(q, {f.leading()}), m)) == 1) ? 2 : 0;
    data.counts.push_back(count);
  }
  return data;
}

double theorem2_partial(const CurveData& data, int n) {
  CurveZeta zeta = zeta_from_counts(data);
  CountProvider provider{data, &zeta};
  const double sq = std::sqrt(double(data.q));
  double log_p = 0.0;
  for (int d = 1; d <= n; ++d) {
    const double b_d = double(closed_point_count_from(provider, d));
    log_p -= b_d * std::log1p(-std::pow(sq, -d));
    log_p -= std::pow(sq, d) / d;  // the exp(-sum q^{l/2}/l) compensator
  }
  return std::exp(log_p);
}

double theorem2_limit(const CurveData& data) {
  CurveZeta zeta = zeta_from_counts(data);
  const double sq = std::sqrt(double(data.q));
  return std::sqrt(2.0) * (sq - 1.0) * std::abs(zeta.value_at_half());
}

JacksonIdentity jackson_q_integral(std::uint64_t q, int n) {
  JacksonIdentity out;
  const double qd = double(q);
  for (int l = 1; l <= n; ++l) out.lhs += std::pow(qd, 0.5 * l) / l;
  // Jackson q-integral of 1/(sqrt(u) log u) over [1, q^n]
  double integral = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double u = std::pow(qd, l);
    integral += (u - u / qd) / (std::sqrt(u) * std::log(u));
  }
  out.rhs = std::log(qd) / (1.0 - 1.0 / qd) * integral;
  return out;
}

double zeta_residue(const CurveData& data) {
  const double qd = double(data.q);
  const double qmd = std::pow(qd, -data.dim);
  if (data.dim == 1 && data.alphas.empty() && data.betas.empty()) {
    CurveZeta zeta = zeta_from_counts(data);
    cd num = 1.0;
    for (const cd& a : zeta.alphas) num *= (1.0 - a * qmd);
    return (num / (1.0 - qmd)).real() / std::log(qd);
  }
  cd num = 1.0, den = 1.0;
  for (const cd& a : data.alphas) num *= (1.0 - a * qmd);
  for (const cd& b : data.betas) den *= (1.0 - b * qmd);
  return (num / den).real() / std::log(qd);
}

double theorem3_partial(const CurveData& data, int n) {
  CurveZeta zeta;
  CountProvider provider{data};
  if (data.dim == 1 && data.alphas.empty()) {
    zeta = zeta_from_counts(data);
    provider.zeta = &zeta;
  }
  double log_p = 0.0;
  for (int d = 1; d <= n; ++d) {
    const double b_d = double(closed_point_count_from(provider, d));
    log_p -= b_d * std::log1p(-std::pow(double(data.q), -double(data.dim) * d));
  }
  const double limit = zeta_residue(data) * std::exp(kEulerGamma) * n * std::log(double(data.q));
  return std::exp(log_p) / limit;
}

CurveData projective_line(std::uint64_t q, int l_max) {
  CurveData data;
  data.q = q;
  data.dim = 1;
  data.genus = 0;
  for (int l = 1; l <= l_max; ++l) {
    long double v = 1.0L;
    for (int i = 0; i < l; ++i) v *= (long double)q;
    data.counts.push_back(std::uint64_t(v + 1.0L));
  }
  return data;
}

CurveData read_counts(std::istream& is) {
  CurveData data;
  std::string line;
  bool have_header = false;
  auto parse_cd = [](const std::string& v) {
    const auto comma = v.find(',');
    if (comma == std::string::npos) return cd(std::stod(v), 0.0);
    return cd(std::stod(v.substr(0, comma)), std::stod(v.substr(comma + 1)));
  };
  std::vector<std::pair<int, std::uint64_t>> counts;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("counts file: cannot parse '" + tok + "'");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "q") {
        data.q = std::stoull(val);
        have_header = true;
      } else if (key == "dim") {
        data.dim = std::stoi(val);
      } else if (key == "genus") {
        data.genus = std::stoi(val);
      } else if (key == "l") {
        int l = std::stoi(val);
        std::string ctok;
        if (!(ls >> ctok) || ctok.rfind("count=", 0) != 0)
          throw std::invalid_argument("counts file: 'l=' line without 'count='");
        counts.push_back({l, std::stoull(ctok.substr(6))});
      } else if (key == "alpha") {
        data.alphas.push_back(parse_cd(val));
      } else if (key == "beta") {
        data.betas.push_back(parse_cd(val));
      } else {
        throw std::invalid_argument("counts file: unknown key '" + key + "'");
      }
    }
  }
  if (!have_header) throw std::invalid_argument("counts file: missing 'q=' header");
  int l_max = 0;
  for (auto& [l, c] : counts) l_max = std::max(l_max, l);
  data.counts.assign(l_max, 0);
  std::vector<bool> seen(l_max + 1, false);
  for (auto& [l, c] : counts) {
    data.counts[l - 1] = c;
    seen[l] = true;
  }
  for (int l = 1; l <= l_max; ++l)
    if (!seen[l])
      throw std::invalid_argument("counts file: missing l = " + std::to_string(l));
  return data;
}

void write_counts(std::ostream& os, const CurveData& data) {
  os << "q=" << data.q << " dim=" << data.dim << " genus=" << data.genus << "\n";
  for (std::size_t l = 1; l <= data.counts.size(); ++l)
    os << "l=" << l << " count=" << data.counts[l - 1] << "\n";
  for (const cd& a : data.alphas)
    os << "alpha=" << a.real() << "," << a.imag() << "\n";
  for (const cd& b : data.betas)
    os << "beta=" << b.real() << "," << b.imag() << "\n";
}

}  // namespace eulerx

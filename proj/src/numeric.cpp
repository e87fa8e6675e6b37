#include "wallcross/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace wallcross {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  mpq_class r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
  if (mpz_sgn(r.get_den().get_mpz_t()) == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_decimal(const Rational& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  mpq_class scaled = r * Rational(scale);
  mpz_class twice_num = scaled.get_num() * 2;
  mpz_class den = scaled.get_den();
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), twice_num.get_mpz_t(), (mpz_class(den * 2)).get_mpz_t());
  if (rem >= den) q += 1;
  bool neg = q < 0;
  mpz_class absq = abs(q);
  mpz_class intpart = absq / scale;
  mpz_class frac = absq % scale;
  std::string out = (neg && (intpart != 0 || frac != 0)) ? "-" : "";
  out += intpart.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(f.begin(), digits - static_cast<int>(f.size()), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

VectorQ to_vector_q(const VectorZ& v) {
  VectorQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = rat(v[i]);
  return out;
}

VectorZ to_vector_z(const VectorQ& v) {
  VectorZ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_int(v[i]);
  return out;
}

MatrixQ to_matrix_q(const MatrixZ& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = rat(m(i, j));
  return out;
}

VectorZ primitive_vector(const VectorQ& v, bool sign_normalize) {
  if (v.size() == 0) throw std::invalid_argument("primitive_vector: empty");
  mpz_class den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[i].get_den().get_mpz_t());
  std::vector<mpz_class> scaled(static_cast<size_t>(v.size()));
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[static_cast<size_t>(i)] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[static_cast<size_t>(i)].get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
  int flip = 1;
  if (sign_normalize) {
    for (const auto& z : scaled) {
      if (z != 0) {
        flip = (z < 0) ? -1 : 1;
        break;
      }
    }
  }
  VectorZ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class q = scaled[static_cast<size_t>(i)] / g * flip;
    if (!q.fits_slong_p()) throw std::overflow_error("primitive_vector: entry out of range");
    out[i] = static_cast<Int>(q.get_si());
  }
  return out;
}

VectorZ primitive_vector(const VectorZ& v, bool sign_normalize) {
  return primitive_vector(to_vector_q(v), sign_normalize);
}

int worker_count() {
  if (const char* env = std::getenv("WALLCROSS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(Int n, const std::function<void(Int)>& body) {
  if (n <= 0) return;
  int workers = std::min<Int>(worker_count(), n);
  if (workers <= 1) {
    for (Int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (Int i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t RationalSampler::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Int RationalSampler::next_int(Int lo, Int hi) {
  if (hi < lo) std::swap(lo, hi);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Int>(next_u64() % span);
}

Rational RationalSampler::next_rational(Int lo, Int hi, Int max_den) {
  Int den = next_int(1, max_den);
  Int num = next_int(lo * den, hi * den);
  return rat(num, den);
}

}  // namespace wallcross

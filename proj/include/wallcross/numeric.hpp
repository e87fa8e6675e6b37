#ifndef WALLCROSS_NUMERIC_HPP
#define WALLCROSS_NUMERIC_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Exact rational scalar for dense types. All pivoting comparisons are exact,
// so LU-based rank/kernel/solve are exact as well.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace wallcross {

using Int = std::int64_t;
using Rational = mpq_class;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VectorZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Rational rat(Int num, Int den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0; }

inline Int to_int(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_int: value " + r.get_str() + " is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_int: out of range");
  return static_cast<Int>(r.get_num().get_si());
}

inline Int floor_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor_int: out of range");
  return static_cast<Int>(q.get_si());
}

inline Int ceil_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceil_int: out of range");
  return static_cast<Int>(q.get_si());
}

inline int sign_of(const Rational& r) { return sgn(r); }

// "p/q" or "p"; whitespace not accepted.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// Fixed-point decimal with exact round-half-up, trailing zeros trimmed.
// Deterministic, used by the SVG emitter.
std::string format_decimal(const Rational& r, int digits);

VectorQ to_vector_q(const VectorZ& v);
VectorZ to_vector_z(const VectorQ& v);  // throws if any entry non-integral
MatrixQ to_matrix_q(const MatrixZ& m);

// Scales a nonzero rational vector to the integer vector with coprime entries,
// preserving direction. sign_normalize additionally flips so the first
// nonzero entry is positive.
VectorZ primitive_vector(const VectorQ& v, bool sign_normalize);
VectorZ primitive_vector(const VectorZ& v, bool sign_normalize);

struct VecZLess {
  bool operator()(const VectorZ& a, const VectorZ& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct VecQLess {
  bool operator()(const VectorQ& a, const VectorQ& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Worker cap: WALLCROSS_THREADS, else hardware concurrency.
int worker_count();

// Order-independent parallel map over [0, n); results land by index.
void parallel_for(Int n, const std::function<void(Int)>& body);

// Deterministic pseudo-random rationals for property tests and sweeps.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next_u64();
  Int next_int(Int lo, Int hi);                 // inclusive
  Rational next_rational(Int lo, Int hi, Int max_den);

 private:
  std::uint64_t state_;
};

}  // namespace wallcross

#endif  // WALLCROSS_NUMERIC_HPP

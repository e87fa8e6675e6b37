#ifndef WALLCROSS_LATTICE_HPP
#define WALLCROSS_LATTICE_HPP

#include "wallcross/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace wallcross {

// Free lattice of finite rank with a symmetric integer Gram matrix.
struct IntegralLattice {
  MatrixZ gram;
  std::vector<std::string> labels;  // optional basis names

  Int rank() const { return static_cast<Int>(gram.rows()); }
  bool is_symmetric() const;
  bool is_even() const;
  void validate(bool require_even = false) const;
};

struct Signature {
  Int positive = 0;
  Int negative = 0;
  Int null = 0;
  bool operator==(const Signature&) const = default;
};

// Evaluates the Gram form. Templated so Eigen expressions flow through.
template <typename DX, typename DY>
Rational pairing(const IntegralLattice& L, const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != L.rank() || y.size() != L.rank())
    throw std::invalid_argument("pairing: dimension mismatch");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < L.gram.rows(); ++i)
    for (Eigen::Index j = 0; j < L.gram.cols(); ++j)
      if (L.gram(i, j) != 0) acc += Rational(x[i]) * rat(L.gram(i, j)) * Rational(y[j]);
  return acc;
}

template <typename DX>
Rational norm2(const IntegralLattice& L, const Eigen::MatrixBase<DX>& x) {
  return pairing(L, x, x);
}

// Exact Sylvester signature via symmetric rational diagonalization.
Signature signature(const IntegralLattice& L);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

// Catalogue: "U", "K3", finite ADE ("A1".."A9","D4".."D9","E6","E7","E8",
// with optional "-cartan" suffix), affine ADE ("affine-A1", ...), and the
// elliptic K3 Picard lattices "elliptic", "elliptic-I2", "elliptic-I3".
IntegralLattice standard_lattice(const std::string& name);

// r_alpha(x) = x - (2 (x,alpha) / (alpha,alpha)) alpha. Throws on isotropic alpha.
VectorQ reflect(const IntegralLattice& L, const VectorQ& alpha, const VectorQ& x);

// Surface data: NS lattice with a set of named irreducible -2 curves and
// named contractible sub-collections. Curves pair to 0 or 1 pairwise.
struct SurfaceConfig {
  IntegralLattice ns;
  std::vector<std::string> curve_names;
  std::map<std::string, VectorZ, std::less<>> curves;
  std::map<std::string, std::vector<std::string>, std::less<>> collections;

  Int rank() const { return ns.rank(); }
  void validate() const;

  // Intersection form and its negation; the negated form is the Kac-Moody
  // side convention and is never mixed implicitly with the other.
  Rational intersect(const VectorQ& x, const VectorQ& y) const { return pairing(ns, x, y); }
  Rational km_pair(const VectorQ& x, const VectorQ& y) const { return -pairing(ns, x, y); }

  const VectorZ& curve(const std::string& name) const;
  std::vector<VectorZ> collection_classes(const std::string& name) const;
  // Gram matrix of a collection under the intersection form.
  MatrixZ collection_gram(const std::string& name) const;
};

// Built-in surfaces mirroring the lattice catalogue: "elliptic" (section S0,
// fiber F), "elliptic-I2", "elliptic-I3".
SurfaceConfig standard_surface(const std::string& name);

// (r, c1, s) with c1 in the NS basis of the ambient SurfaceConfig.
struct MukaiVector {
  Int r = 0;
  VectorZ c1;
  Int s = 0;

  bool operator==(const MukaiVector&) const = default;
};

// Rational-coefficient variant used by interior computations (central
// charges, the ell-map representative).
struct MukaiQ {
  Rational r = 0;
  VectorQ c1;
  Rational s = 0;
};

MukaiQ to_mukai_q(const MukaiVector& v);
MukaiVector mukai(Int r, const VectorZ& c1, Int s);
MukaiVector mukai_zero_c1(const SurfaceConfig& S, Int r, Int s);

// ((r,c,s),(r',c',s')) = c.c' - r s' - r' s
Int mukai_pairing(const SurfaceConfig& S, const MukaiVector& v, const MukaiVector& w);
Rational mukai_pairing_q(const SurfaceConfig& S, const MukaiQ& v, const MukaiQ& w);

MukaiVector mukai_add(const MukaiVector& a, const MukaiVector& b);
MukaiVector mukai_scale(Int k, const MukaiVector& a);

enum class MukaiClass { Spherical, Isotropic, Positive, Other };
MukaiClass classify(const SurfaceConfig& S, const MukaiVector& v);
std::string to_string(MukaiClass c);

}  // namespace wallcross

#endif  // WALLCROSS_LATTICE_HPP

#pragma once

// Exact su(N) representation theory: Dynkin labels, Young diagrams, Casimir
// eigenvalues and the decomposition of the mixed tensor representation
// U^{(x)k} (x) conj(U)^{(x)k}. All arithmetic is exact.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <nlohmann/json.hpp>
#include <vector>

namespace slh::rep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Highest weight of an su(N) irrep in the fundamental-weight basis.
class DynkinLabel {
 public:
  DynkinLabel(int n, std::vector<int> entries);
  static DynkinLabel trivial(int n);
  static DynkinLabel fundamental(int n);
  static DynkinLabel antifundamental(int n);
  static DynkinLabel adjoint(int n);

  int rank_plus_one() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  bool is_trivial() const;
  /// Label of the complex-conjugate representation (entries reversed).
  DynkinLabel conjugate() const;
  /// Number of boxes of the reduced Young diagram.
  int box_count() const;

  auto operator<=>(const DynkinLabel&) const = default;

 private:
  int n_;
  std::vector<int> entries_;
};

/// Young diagram with full columns of N boxes removed.
class YoungDiagram {
 public:
  YoungDiagram(int n, std::vector<int> row_lengths);
  static YoungDiagram from_label(const DynkinLabel& label);

  int rank_plus_one() const { return n_; }
  const std::vector<int>& rows() const { return rows_; }
  int box_count() const;
  DynkinLabel label() const;

 private:
  int n_;
  std::vector<int> rows_;
};

/// Irrep -> multiplicity. Only positive multiplicities are stored.
class IrrepMultiset {
 public:
  using Map = std::map<DynkinLabel, Integer>;

  void add(const DynkinLabel& label, const Integer& mult = 1);
  /// Removes `mult` copies; throws DecompositionError if not enough are present.
  void remove(const DynkinLabel& label, const Integer& mult = 1);
  Integer multiplicity(const DynkinLabel& label) const;
  Integer total_dimension() const;
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool operator==(const IrrepMultiset&) const = default;

 private:
  Map entries_;
};

/// (A^{-1})_{ij} = i(N-j)/N for i <= j (1-based), symmetric.
std::vector<std::vector<Rational>> inverse_cartan(int n);

/// Quadratic Casimir in the Killing normalization; the adjoint gives 1.
Rational casimir_eigenvalue(const DynkinLabel& label);

/// Weyl dimension formula.
Integer weyl_dimension(const DynkinLabel& label);

IrrepMultiset tensor_with_fundamental(const DynkinLabel& label);
IrrepMultiset tensor_with_antifundamental(const DynkinLabel& label);
IrrepMultiset tensor_with_adjoint(const DynkinLabel& label);
/// multiset (x) adjoint, term by term.
IrrepMultiset tensor_with_adjoint(const IrrepMultiset& m);

inline constexpr int kMaxTensorPower = 8;
/// Budget on k (N^2 - 1), the number of adjoint boxes; N = 6, k = 8 sits on the edge.
inline constexpr int kMaxAdjointBoxes = 280;

/// Decomposition of (trivial + adjoint)^{(x)k}. Throws GuardError beyond
/// k <= kMaxTensorPower or k (N^2 - 1) <= kMaxAdjointBoxes.
IrrepMultiset decompose_pi_kk(int k, int n);

struct SpectrumReport {
  int k;
  int n;
  IrrepMultiset irreps;
  std::map<Rational, Integer> eigenvalues;  // c2 -> total multiplicity (mult * dim)
  Rational gap;                             // smallest positive c2
  bool divisibility_ok;
};

SpectrumReport casimir_spectrum_report(int k, int n);

std::string to_string(const Rational& r);
nlohmann::ordered_json to_json(const SpectrumReport& report);

}  // namespace slh::rep

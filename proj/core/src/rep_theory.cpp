#include "slh/rep_theory.hpp"

#include <algorithm>
#include <string>

#include "slh/errors.hpp"

namespace slh::rep {

namespace {

void check_rank(int n) {
  if (n < 2) throw InvalidArgument("su(N) rank: N must be >= 2, got " + std::to_string(n));
}

}  // namespace

DynkinLabel::DynkinLabel(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  check_rank(n);
  if (static_cast<int>(entries_.size()) != n - 1) {
    throw InvalidArgument("Dynkin label for su(" + std::to_string(n) + ") needs " + std::to_string(n - 1) + " entries");
  }
  for (int e : entries_) {
    if (e < 0) throw InvalidArgument("Dynkin label entries must be nonnegative");
  }
}

DynkinLabel DynkinLabel::trivial(int n) {
  check_rank(n);
  return DynkinLabel(n, std::vector<int>(n - 1, 0));
}

DynkinLabel DynkinLabel::fundamental(int n) {
  auto l = trivial(n);
  l.entries_.front() = 1;
  return l;
}

DynkinLabel DynkinLabel::antifundamental(int n) {
  auto l = trivial(n);
  l.entries_.back() = 1;
  return l;
}

DynkinLabel DynkinLabel::adjoint(int n) {
  auto l = trivial(n);
  l.entries_.front() += 1;
  l.entries_.back() += 1;
  return l;
}

bool DynkinLabel::is_trivial() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

DynkinLabel DynkinLabel::conjugate() const {
  return DynkinLabel(n_, std::vector<int>(entries_.rbegin(), entries_.rend()));
}

int DynkinLabel::box_count() const {
  int boxes = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) boxes += static_cast<int>(i + 1) * entries_[i];
  return boxes;
}

YoungDiagram::YoungDiagram(int n, std::vector<int> row_lengths) : n_(n), rows_(std::move(row_lengths)) {
  check_rank(n);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw InvalidArgument("Young diagram rows must be nonnegative");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InvalidArgument("Young diagram rows must be non-increasing");
  }
  if (static_cast<int>(rows_.size()) > n) throw InvalidArgument("Young diagram has more than N rows");
  // delete full columns
  if (static_cast<int>(rows_.size()) == n) {
    const int full = rows_.back();
    for (int& r : rows_) r -= full;
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

YoungDiagram YoungDiagram::from_label(const DynkinLabel& label) {
  const auto& e = label.entries();
  std::vector<int> rows(e.size(), 0);
  int acc = 0;
  for (std::size_t i = e.size(); i-- > 0;) {
    acc += e[i];
    rows[i] = acc;
  }
  return YoungDiagram(label.rank_plus_one(), std::move(rows));
}

int YoungDiagram::box_count() const {
  int boxes = 0;
  for (int r : rows_) boxes += r;
  return boxes;
}

DynkinLabel YoungDiagram::label() const {
  std::vector<int> e(static_cast<std::size_t>(n_ - 1), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int here = i < rows_.size() ? rows_[i] : 0;
    const int next = i + 1 < rows_.size() ? rows_[i + 1] : 0;
    e[i] = here - next;
  }
  return DynkinLabel(n_, std::move(e));
}

void IrrepMultiset::add(const DynkinLabel& label, const Integer& mult) {
  if (mult < 0) throw DecompositionError("negative multiplicity added");
  if (mult == 0) return;
  entries_[label] += mult;
}

void IrrepMultiset::remove(const DynkinLabel& label, const Integer& mult) {
  auto it = entries_.find(label);
  const Integer have = it == entries_.end() ? Integer(0) : it->second;
  if (have < mult) {
    throw DecompositionError("multiset subtraction would leave a negative multiplicity");
  }
  if (have == mult) {
    if (it != entries_.end()) entries_.erase(it);
  } else {
    it->second -= mult;
  }
}

Integer IrrepMultiset::multiplicity(const DynkinLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer IrrepMultiset::total_dimension() const {
  Integer total = 0;
  for (const auto& [label, mult] : entries_) total += mult * weyl_dimension(label);
  return total;
}

std::vector<std::vector<Rational>> inverse_cartan(int n) {
  check_rank(n);
  const int r = n - 1;
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const int lo = std::min(i, j), hi = std::max(i, j);
      a[i - 1][j - 1] = Rational(lo * (n - hi), n);
    }
  }
  return a;
}

Rational casimir_eigenvalue(const DynkinLabel& label) {
  const int n = label.rank_plus_one();
  const auto a = inverse_cartan(n);
  const auto& e = label.entries();
  Rational sum = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      sum += (e[i] + 2) * a[i][j] * e[j];
    }
  }
  return sum / (2 * n);
}

Integer weyl_dimension(const DynkinLabel& label) {
  const int n = label.rank_plus_one();
  const auto& e = label.entries();
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    int partial = 0;
    for (int j = i + 1; j < n; ++j) {
      partial += e[j - 1] + 1;
      num *= partial;
      den *= (j - i);
    }
  }
  return num / den;
}

IrrepMultiset tensor_with_fundamental(const DynkinLabel& label) {
  const int n = label.rank_plus_one();
  const auto& e = label.entries();
  IrrepMultiset out;
  // Box in row i (1-based). Row i > 1 is legal only if row i-1 is strictly longer.
  for (int row = 1; row <= n; ++row) {
    std::vector<int> next = e;
    if (row > 1) {
      if (e[row - 2] == 0) continue;
      next[row - 2] -= 1;
    }
    if (row < n) next[row - 1] += 1;
    out.add(DynkinLabel(n, std::move(next)));
  }
  return out;
}

IrrepMultiset tensor_with_antifundamental(const DynkinLabel& label) {
  IrrepMultiset out;
  const auto conj = tensor_with_fundamental(label.conjugate());
  for (const auto& [l, m] : conj.entries()) out.add(l.conjugate(), m);
  return out;
}

IrrepMultiset tensor_with_adjoint(const DynkinLabel& label) {
  IrrepMultiset out;
  const auto up = tensor_with_fundamental(label);
  for (const auto& [l, m] : up.entries()) {
    const auto down = tensor_with_antifundamental(l);
    for (const auto& [l2, m2] : down.entries()) out.add(l2, m * m2);
  }
  // fundamental (x) antifundamental = trivial + adjoint
  out.remove(label);
  return out;
}

IrrepMultiset tensor_with_adjoint(const IrrepMultiset& m) {
  IrrepMultiset out;
  for (const auto& [l, mult] : m.entries()) {
    const auto product = tensor_with_adjoint(l);
    for (const auto& [l2, m2] : product.entries()) out.add(l2, mult * m2);
  }
  return out;
}

IrrepMultiset decompose_pi_kk(int k, int n) {
  check_rank(n);
  if (k < 1) throw InvalidArgument("tensor power k must be >= 1");
  if (k > kMaxTensorPower || static_cast<long>(k) * (static_cast<long>(n) * n - 1) > kMaxAdjointBoxes) {
    throw GuardError("decomposition limited to k <= " + std::to_string(kMaxTensorPower) + " and k (N^2 - 1) <= " +
                     std::to_string(kMaxAdjointBoxes));
  }
  IrrepMultiset cur;
  cur.add(DynkinLabel::trivial(n));
  for (int step = 0; step < k; ++step) {
    IrrepMultiset next = tensor_with_adjoint(cur);
    for (const auto& [l, m] : cur.entries()) next.add(l, m);
    cur = std::move(next);
  }
  return cur;
}

SpectrumReport casimir_spectrum_report(int k, int n) {
  SpectrumReport rep{k, n, decompose_pi_kk(k, n), {}, Rational(0), true};
  bool have_gap = false;
  for (const auto& [label, mult] : rep.irreps.entries()) {
    const Rational c2 = casimir_eigenvalue(label);
    rep.eigenvalues[c2] += mult * weyl_dimension(label);
    if (label.box_count() % n != 0) rep.divisibility_ok = false;
    if (c2 > 0 && (!have_gap || c2 < rep.gap)) {
      rep.gap = c2;
      have_gap = true;
    }
  }
  return rep;
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

nlohmann::ordered_json to_json(const SpectrumReport& report) {
  nlohmann::ordered_json j;
  j["N"] = report.n;
  j["k"] = report.k;
  auto irreps = nlohmann::ordered_json::array();
  for (const auto& [label, mult] : report.irreps.entries()) {
    nlohmann::ordered_json e;
    e["dynkin"] = label.entries();
    e["mult"] = integer_json(mult);
    e["dim"] = integer_json(weyl_dimension(label));
    e["c2"] = to_string(casimir_eigenvalue(label));
    irreps.push_back(std::move(e));
  }
  j["irreps"] = std::move(irreps);
  auto spec = nlohmann::ordered_json::array();
  for (const auto& [c2, mult] : report.eigenvalues) {
    spec.push_back({{"c2", to_string(c2)}, {"mult", integer_json(mult)}});
  }
  j["eigenvalues"] = std::move(spec);
  j["gap"] = to_string(report.gap);
  j["divisibility_ok"] = report.divisibility_ok;
  return j;
}

}  // namespace slh::rep

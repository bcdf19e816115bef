#include "ncgb/envelope.hpp"

#include <omp.h>

#include <algorithm>
#include <array>

#include <atomic>
#include <limits>
#include <random>

namespace ncgb {

bool AlgElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!o.coords_[k].is_zero()) coords_[k] += o.coords_[k];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!o.coords_[k].is_zero()) coords_[k] -= o.coords_[k];
  return *this;
}

AlgElement& AlgElement::operator*=(const Scalar& c) {
  for (auto& x : coords_)
    if (!x.is_zero()) x *= c;
  return *this;
}

EnvelopeAlgebra EnvelopeAlgebra::build(int n, const EnvelopeOptions& opts) { return build(matrix_ajts(n), opts); }

EnvelopeAlgebra EnvelopeAlgebra::build(const TripleSystem& t, const EnvelopeOptions& opts) {
  EnvelopeRelations rel = envelope_relations(t, opts.mode);
  std::size_t bound = opts.max_degree > 0 ? opts.max_degree : default_max_degree(rel.generators);
  CompletionResult res = complete(rel.generators, bound, opts.progress);
  if (!res.ok())
    throw DegreeBoundExceeded("completion needs compositions of degree " + std::to_string(res.offending_degree) +
                                  " > bound " + std::to_string(bound),
                              std::move(res));
  NormalWordReport words = normal_words(res.system, rel.alphabet.size(), bound);
  if (!words.finite) throw InfiniteQuotient("quotient is infinite-dimensional", std::move(words));

  EnvelopeAlgebra a;
  a.alphabet_ = rel.alphabet;
  a.gb_ = std::move(res.system);
  a.stats_ = res.stats;
  a.basis_ = std::move(words.basis);
  for (std::size_t k = 0; k < a.basis_.size(); ++k) a.index_.emplace(a.basis_[k], k);
  const std::size_t cells = a.basis_.size() * a.basis_.size();
  a.table_ = std::make_unique<SparseRow[]>(cells);
  a.filled_ = std::make_unique<std::once_flag[]>(cells);
  a.ready_ = std::make_unique<std::atomic<bool>[]>(cells);
  for (std::size_t c = 0; c < cells; ++c) a.ready_[c].store(false);
  return a;
}

std::optional<std::size_t> EnvelopeAlgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlgElement EnvelopeAlgebra::unit() const {
  auto k = index_of(Word{});
  return k ? basis_element(*k) : zero();  // zero algebra: 1 = 0
}

AlgElement EnvelopeAlgebra::basis_element(std::size_t k) const {
  AlgElement x = zero();
  x[k] = Scalar(1);
  return x;
}

AlgElement EnvelopeAlgebra::generator(int i, int j) const {
  return from_poly(NcPoly::monomial(Word{alphabet_.matrix_symbol(i, j)}));
}

EnvelopeAlgebra::SparseRow EnvelopeAlgebra::to_row(const NcPoly& nf) const {
  SparseRow row;
  row.reserve(nf.num_terms());
  for (const auto& t : nf.terms()) {
    auto k = index_of(t.word);
    if (!k) throw std::logic_error("normal form left the basis");
    row.emplace_back(static_cast<std::uint32_t>(*k), t.coeff);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

AlgElement EnvelopeAlgebra::from_poly(const NcPoly& f) const {
  AlgElement x = zero();
  for (const auto& [k, c] : to_row(normal_form(f, gb_))) x[k] = c;
  return x;
}

NcPoly EnvelopeAlgebra::to_poly(const AlgElement& x) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (!x[k].is_zero()) terms.push_back({basis_[k], x[k]});
  return NcPoly::from_terms(std::move(terms));
}

EnvelopeAlgebra::SparseRow EnvelopeAlgebra::compute_entry(std::size_t i, std::size_t j) const {
  return to_row(normal_form(NcPoly::monomial(basis_[i] * basis_[j]), gb_));
}

const EnvelopeAlgebra::SparseRow& EnvelopeAlgebra::entry(std::size_t i, std::size_t j) const {
  const std::size_t cell = i * dim() + j;
  std::call_once(filled_[cell], [&] {
    table_[cell] = compute_entry(i, j);
    ready_[cell].store(true, std::memory_order_release);
  });
  return table_[cell];
}

AlgElement EnvelopeAlgebra::entry_element(std::size_t i, std::size_t j) const {
  AlgElement x = zero();
  for (const auto& [k, c] : entry(i, j)) x[k] = c;
  return x;
}

AlgElement EnvelopeAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
  AlgElement out = zero();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : entry(i, j)) out[k] += c * v;
    }
  }
  return out;
}

AlgElement EnvelopeAlgebra::commutator(const AlgElement& x, const AlgElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

void EnvelopeAlgebra::fill_table(Exec exec) const {
  const auto cells = static_cast<std::int64_t>(dim() * dim());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t c = 0; c < cells; ++c) (void)entry(static_cast<std::size_t>(c) / dim(), static_cast<std::size_t>(c) % dim());
  } else {
    for (std::int64_t c = 0; c < cells; ++c) (void)entry(static_cast<std::size_t>(c) / dim(), static_cast<std::size_t>(c) % dim());
  }
}

std::size_t EnvelopeAlgebra::filled_entries() const {
  std::size_t count = 0;
  for (std::size_t c = 0; c < dim() * dim(); ++c) count += ready_[c].load(std::memory_order_acquire) ? 1 : 0;
  return count;
}

void EnvelopeAlgebra::override_entry(std::size_t i, std::size_t j, const AlgElement& value) {
  (void)entry(i, j);
  SparseRow row;
  for (std::size_t k = 0; k < value.dim(); ++k)
    if (!value[k].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), value[k]);
  table_[i * dim() + j] = std::move(row);
}

namespace {

// (b_i b_j) b_k and b_i (b_j b_k).
std::pair<AlgElement, AlgElement> both_sides(const EnvelopeAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  AlgElement left = a.zero(), right = a.zero();
  for (const auto& [l, c] : a.entry(i, j))
    for (const auto& [m, v] : a.entry(l, k)) left[m] += c * v;
  for (const auto& [l, c] : a.entry(j, k))
    for (const auto& [m, v] : a.entry(i, l)) right[m] += c * v;
  return {std::move(left), std::move(right)};
}

}  // namespace

AssociativityReport check_associativity(const EnvelopeAlgebra& a, std::size_t samples, std::uint64_t seed, Exec exec) {
  AssociativityReport report;
  const std::size_t d = a.dim();
  std::vector<std::array<std::size_t, 3>> triples;
  if (samples == 0) {
    triples.reserve(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) triples.push_back({i, j, k});
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    triples.resize(samples);
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
  }
  report.triples_checked = triples.size();

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t first = kNone;
  const auto count = static_cast<std::int64_t>(triples.size());
  if (exec == Exec::parallel) {
    a.fill_table(Exec::parallel);
    std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t q = 0; q < count; ++q) {
      auto uq = static_cast<std::size_t>(q);
      if (uq > best.load(std::memory_order_relaxed)) continue;
      auto [i, j, k] = triples[uq];
      auto [l, r] = both_sides(a, i, j, k);
      if (l == r) continue;
      std::size_t cur = best.load();
      while (uq < cur && !best.compare_exchange_weak(cur, uq)) {
      }
    }
    first = best.load();
  } else {
    for (std::size_t q = 0; q < triples.size(); ++q) {
      auto [i, j, k] = triples[q];
      auto [l, r] = both_sides(a, i, j, k);
      if (l != r) {
        first = q;
        break;
      }
    }
  }
  if (first != kNone) {
    auto [i, j, k] = triples[first];
    auto [l, r] = both_sides(a, i, j, k);
    report.failure = AssociativityFailure{i, j, k, std::move(l), std::move(r)};
  }
  return report;
}

}  // namespace ncgb

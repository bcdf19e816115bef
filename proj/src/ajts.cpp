#include "ncgb/ajts.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>

namespace ncgb {

namespace {

TripleVec to_vec(const std::map<int, Scalar>& acc) {
  TripleVec out;
  out.reserve(acc.size());
  for (const auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, c);
  return out;
}

void add_into(std::map<int, Scalar>& acc, const TripleVec& v, const Scalar& c) {
  for (const auto& [k, x] : v) acc[k] += c * x;
}

}  // namespace

TripleVec vec_add(const TripleVec& x, const TripleVec& y, const Scalar& c) {
  std::map<int, Scalar> acc;
  add_into(acc, x, Scalar(1));
  add_into(acc, y, c);
  return to_vec(acc);
}

TripleVec vec_unit(int index) { return {{index, Scalar(1)}}; }

TripleSystem::TripleSystem(int dim, std::vector<std::string> labels) : dim_(dim), labels_(std::move(labels)) {
  if (dim < 0) throw std::invalid_argument("triple system dimension must be non-negative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
    throw std::invalid_argument("label count does not match dimension");
}

Alphabet TripleSystem::alphabet() const {
  return matrix_n_ > 0 ? Alphabet::matrix(matrix_n_) : Alphabet::generic(dim_, labels_);
}

void TripleSystem::set(int a, int b, int c, int d, const Scalar& value) {
  for (int x : {a, b, c, d})
    if (x < 0 || x >= dim_) throw std::out_of_range("triple system index out of range");
  TripleVec& v = table_[{a, b, c}];
  auto it = std::lower_bound(v.begin(), v.end(), d, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == d) {
    if (value.is_zero()) v.erase(it);
    else it->second = value;
  } else if (!value.is_zero()) {
    v.insert(it, {d, value});
  }
  if (v.empty()) table_.erase({a, b, c});
}

Scalar TripleSystem::gamma(int a, int b, int c, int d) const {
  for (const auto& [k, x] : product(a, b, c))
    if (k == d) return x;
  return Scalar(0);
}

const TripleVec& TripleSystem::product(int a, int b, int c) const {
  static const TripleVec kZero;
  auto it = table_.find({a, b, c});
  return it == table_.end() ? kZero : it->second;
}

TripleVec TripleSystem::product(const TripleVec& x, const TripleVec& y, const TripleVec& z) const {
  std::map<int, Scalar> acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Scalar cab = ca * cb;
      for (const auto& [c, cc] : z) add_into(acc, product(a, b, c), cab * cc);
    }
  return to_vec(acc);
}

std::vector<std::pair<std::array<int, 4>, Scalar>> TripleSystem::entries() const {
  std::vector<std::pair<std::array<int, 4>, Scalar>> out;
  for (const auto& [abc, v] : table_)
    for (const auto& [d, x] : v) out.push_back({{abc[0], abc[1], abc[2], d}, x});
  return out;
}

TripleSystem matrix_ajts(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  TripleSystem t(n * n);
  t.matrix_n_ = n;
  auto idx = [n](int i, int j) { return i * n + j; };
  // <E_ij, E_kl, E_mt> = d_jk d_lm E_it - d_tk d_li E_mj
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m)
            for (int s = 0; s < n; ++s) {
              std::map<int, Scalar> acc;
              if (j == k && l == m) acc[idx(i, s)] += Scalar(1);
              if (s == k && l == i) acc[idx(m, j)] -= Scalar(1);
              for (const auto& [d, c] : acc)
                if (!c.is_zero()) t.set(idx(i, j), idx(k, l), idx(m, s), d, c);
            }
  return t;
}

TripleSystem triple_system_from_json(const nlohmann::json& j) {
  try {
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    TripleSystem t(dim, labels);
    if (j.contains("gamma")) {
      for (const auto& e : j.at("gamma")) {
        if (!e.is_array() || e.size() != 5) throw ParseError("gamma entries must be [a,b,c,d,\"scalar\"]");
        std::array<int, 4> idx{};
        for (int k = 0; k < 4; ++k) {
          idx[k] = e[k].get<int>() - 1;
          if (idx[k] < 0 || idx[k] >= dim) throw ParseError("gamma index out of range");
        }
        Scalar value = e[4].is_string() ? Scalar::parse(e[4].get<std::string>()) : Scalar(e[4].get<long>());
        if (!t.gamma(idx[0], idx[1], idx[2], idx[3]).is_zero())
          throw ParseError("duplicate gamma entry");
        t.set(idx[0], idx[1], idx[2], idx[3], value);
      }
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed triple system: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("malformed triple system: ") + ex.what());
  }
}

nlohmann::json triple_system_to_json(const TripleSystem& t) {
  nlohmann::json j;
  j["dim"] = t.dim();
  j["labels"] = t.labels();
  auto gamma = nlohmann::json::array();
  for (const auto& [idx, x] : t.entries())
    gamma.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1, x.str()});
  j["gamma"] = gamma;
  return j;
}

namespace {

using Tuple5 = std::array<int, 5>;

Tuple5 decode(std::uint64_t flat, int m) {
  Tuple5 t{};
  for (int k = 4; k >= 0; --k) {
    t[k] = static_cast<int>(flat % static_cast<std::uint64_t>(m));
    flat /= static_cast<std::uint64_t>(m);
  }
  return t;
}

// <ab<cde>> versus <<abc>de> + <c<bad>e> + <cd<abe>>.
std::pair<TripleVec, TripleVec> identity_sides(const TripleSystem& t, const Tuple5& q) {
  auto [a, b, c, d, e] = q;
  TripleVec ua = vec_unit(a), ub = vec_unit(b), uc = vec_unit(c), ud = vec_unit(d), ue = vec_unit(e);
  TripleVec lhs = t.product(ua, ub, t.product(c, d, e));
  TripleVec rhs = t.product(t.product(a, b, c), ud, ue);
  rhs = vec_add(rhs, t.product(uc, t.product(b, a, d), ue));
  rhs = vec_add(rhs, t.product(uc, ud, t.product(a, b, e)));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

AxiomReport check_axioms(const TripleSystem& t, Exec exec, std::size_t threshold, std::uint64_t seed) {
  AxiomReport report;
  report.threshold = threshold;
  const int m = t.dim();
  if (m == 0) return report;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        ++report.triples_checked;
        TripleVec lhs = t.product(a, b, c);
        TripleVec rhs = vec_add({}, t.product(c, b, a), Scalar(-1));
        if (lhs != rhs) {
          report.violation = AxiomViolation{AxiomViolation::Kind::antisymmetry, {a, b, c}, lhs, rhs};
          return report;
        }
      }

  const std::uint64_t total = static_cast<std::uint64_t>(m) * m * m * m * m;
  std::vector<std::uint64_t> tuples;
  if (total > threshold) {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    tuples.resize(threshold);
    for (auto& q : tuples) q = pick(rng);
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  }
  const std::uint64_t count = report.sampled ? tuples.size() : total;
  report.quintuples_checked = count;
  auto flat_at = [&](std::uint64_t k) { return report.sampled ? tuples[k] : k; };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t first = kNone;
  if (exec == Exec::parallel) {
    std::atomic<std::uint64_t> best{kNone};
    const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t k = 0; k < signed_count; ++k) {
      auto uk = static_cast<std::uint64_t>(k);
      if (uk > best.load(std::memory_order_relaxed)) continue;
      auto [lhs, rhs] = identity_sides(t, decode(flat_at(uk), m));
      if (lhs == rhs) continue;
      std::uint64_t cur = best.load();
      while (uk < cur && !best.compare_exchange_weak(cur, uk)) {
      }
    }
    first = best.load();
  } else {
    for (std::uint64_t k = 0; k < count; ++k) {
      auto [lhs, rhs] = identity_sides(t, decode(flat_at(k), m));
      if (lhs != rhs) {
        first = k;
        break;
      }
    }
  }
  if (first != kNone) {
    Tuple5 q = decode(flat_at(first), m);
    auto [lhs, rhs] = identity_sides(t, q);
    report.violation =
        AxiomViolation{AxiomViolation::Kind::identity, {q.begin(), q.end()}, std::move(lhs), std::move(rhs)};
  }
  return report;
}

NcPoly embed(const TripleVec& v) {
  std::vector<Term> terms;
  for (const auto& [k, c] : v) terms.push_back({Word{static_cast<Symbol>(k)}, c});
  return NcPoly::from_terms(std::move(terms));
}

namespace {

NcPoly word_poly(std::initializer_list<Symbol> w) { return NcPoly::monomial(Word(w)); }

std::vector<NcPoly> indexed_relations(int n) {
  std::vector<NcPoly> out;
  auto e = [n](int i, int j) { return static_cast<Symbol>((i - 1) * n + (j - 1)); };
  auto swap3 = [&](Symbol x, Symbol y, Symbol z) { return word_poly({x, y, z}) - word_poly({z, y, x}); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t)
          if (k < i) out.push_back(swap3(e(i, j), e(j, k), e(k, t)) - word_poly({e(i, t)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int t = 1; t <= n; ++t)
        if (t < j) out.push_back(swap3(e(i, j), e(j, i), e(i, t)) - word_poly({e(i, t)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t)
          if (t < i) out.push_back(swap3(e(i, j), e(k, i), e(t, k)) + word_poly({e(t, j)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (k < j) out.push_back(swap3(e(i, j), e(k, i), e(i, k)) + word_poly({e(i, j)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
              if (r < i && (j != k || t != r) && (s != k || t != i)) out.push_back(swap3(e(i, j), e(k, t), e(r, s)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t)
          for (int s = 1; s <= n; ++s)
            if (s < j && (j != k || t != i) && (s != k || t != i)) out.push_back(swap3(e(i, j), e(k, t), e(i, s)));
  return out;
}

}  // namespace

EnvelopeRelations envelope_relations(const TripleSystem& t, RelationMode mode) {
  EnvelopeRelations rel{t.alphabet(), mode, {}};
  if (mode == RelationMode::indexed) {
    if (t.matrix_n() == 0) throw std::invalid_argument("indexed relations need the matrix triple system");
    rel.generators = indexed_relations(t.matrix_n());
    return rel;
  }
  const int m = t.dim();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = a; c < m; ++c) {
        auto sa = static_cast<Symbol>(a), sb = static_cast<Symbol>(b), sc = static_cast<Symbol>(c);
        NcPoly r = NcPoly::monomial(Word{sa, sb, sc}) - NcPoly::monomial(Word{sc, sb, sa}) - embed(t.product(a, b, c));
        if (!r.is_zero()) rel.generators.push_back(std::move(r));
      }
  return rel;
}

SymbolMap eta_symbol_map(int n) {
  SymbolMap sigma(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sigma[static_cast<std::size_t>(i * n + j)] = static_cast<Symbol>(j * n + i);
  return sigma;
}

}  // namespace ncgb

#include "ncgb/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace ncgb {

RewriteSystem::RewriteSystem(const std::vector<NcPoly>& monic_elements) {
  for (const auto& p : monic_elements) insert(p);
}

void RewriteSystem::insert(NcPoly monic) {
  if (!monic.is_monic()) throw std::invalid_argument("rewrite rules must be monic");
  Word lm = monic.leading_word();
  auto [it, inserted] = rules_.try_emplace(lm, std::move(monic));
  if (!inserted) throw std::invalid_argument("duplicate leading word in rewrite system");
  index_.emplace(lm, &it->second);
  ++length_count_[lm.size()];
}

bool RewriteSystem::erase(const Word& lm) {
  auto it = rules_.find(lm);
  if (it == rules_.end()) return false;
  index_.erase(lm);
  if (--length_count_[lm.size()] == 0) length_count_.erase(lm.size());
  rules_.erase(it);
  return true;
}

std::vector<NcPoly> RewriteSystem::elements() const {
  std::vector<NcPoly> out;
  out.reserve(rules_.size());
  for (const auto& [lm, p] : rules_) out.push_back(p);
  return out;
}

std::vector<Word> RewriteSystem::obstructions() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const auto& [lm, p] : rules_) out.push_back(lm);
  return out;
}

std::size_t RewriteSystem::max_obstruction_length() const {
  return length_count_.empty() ? 0 : length_count_.rbegin()->first;
}

bool RewriteSystem::is_unit_ideal() const { return find_exact(Word{}) != nullptr; }

const NcPoly* RewriteSystem::find_exact(const Word& lm) const {
  auto it = index_.find(lm);
  return it == index_.end() ? nullptr : it->second;
}

std::optional<RewriteSystem::Match> RewriteSystem::find_reducer(const Word& w) const {
  // Shorter words are deglex-smaller, so the first length with a hit wins.
  for (const auto& [len, count] : length_count_) {
    if (len > w.size()) break;
    std::optional<Match> best;
    for (std::size_t p = 0; p + len <= w.size(); ++p) {
      const NcPoly* hit = find_exact(w.sub(p, len));
      if (hit == nullptr) continue;
      if (!best || deglex_cmp(hit->leading_word(), best->element->leading_word()) < 0) best = Match{hit, p};
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::vector<RewriteSystem::Match> RewriteSystem::all_matches(const Word& w) const {
  std::vector<Match> out;
  for (const auto& [len, count] : length_count_) {
    if (len > w.size()) break;
    for (std::size_t p = 0; p + len <= w.size(); ++p)
      if (const NcPoly* hit = find_exact(w.sub(p, len))) out.push_back({hit, p});
  }
  return out;
}

bool RewriteSystem::has_obstruction_suffix(const Word& w) const {
  for (const auto& [len, count] : length_count_) {
    if (len > w.size()) break;
    if (find_exact(w.suffix(len)) != nullptr) return true;
  }
  return false;
}

bool RewriteSystem::is_self_reduced() const {
  for (const auto& [lm, p] : rules_) {
    if (!p.is_monic()) return false;
    for (const auto& m : all_matches(lm))
      if (m.element != &p) return false;
    for (std::size_t k = 1; k < p.terms().size(); ++k)
      if (!is_normal(p.terms()[k].word)) return false;
  }
  return true;
}

namespace {

using WorkMap = std::map<Word, Scalar, DeglexGreater>;

void accumulate(WorkMap& work, Word w, const Scalar& c) {
  auto [it, inserted] = work.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  }
}

// Replaces c*left*LM(g)*right in `work` by -c*left*tail(g)*right.
void rewrite(WorkMap& work, const Scalar& c, const Word& left, const NcPoly& g, const Word& right) {
  const auto& terms = g.terms();
  for (std::size_t k = 1; k < terms.size(); ++k) accumulate(work, concat(left, terms[k].word, right), -(c * terms[k].coeff));
}

WorkMap to_work(const NcPoly& f) {
  WorkMap work;
  for (const auto& t : f.terms()) work.emplace(t.word, t.coeff);
  return work;
}

}  // namespace

NcPoly normal_form(const NcPoly& f, const RewriteSystem& g, ReductionCertificate* cert) {
  WorkMap work = to_work(f);
  std::vector<Term> out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto m = g.find_reducer(w);
    if (!m) {
      out.push_back({w, c});
      continue;
    }
    const Word& lm = m->element->leading_word();
    Word left = w.prefix(m->position);
    Word right = w.suffix(w.size() - m->position - lm.size());
    rewrite(work, c, left, *m->element, right);
    if (cert != nullptr) cert->steps.push_back({c, std::move(left), lm, std::move(right)});
  }
  return NcPoly::from_sorted_terms(std::move(out));
}

NcPoly normal_form_randomized(const NcPoly& f, const RewriteSystem& g, std::mt19937_64& rng) {
  WorkMap work = to_work(f);
  for (;;) {
    std::vector<Word> reducible;
    for (const auto& [w, c] : work)
      if (!g.is_normal(w)) reducible.push_back(w);
    if (reducible.empty()) break;
    std::uniform_int_distribution<std::size_t> pick_word(0, reducible.size() - 1);
    Word w = reducible[pick_word(rng)];
    auto matches = g.all_matches(w);
    std::uniform_int_distribution<std::size_t> pick_match(0, matches.size() - 1);
    const auto& m = matches[pick_match(rng)];
    const Word& lm = m.element->leading_word();
    Scalar c = work.at(w);
    work.erase(w);
    rewrite(work, c, w.prefix(m.position), *m.element, w.suffix(w.size() - m.position - lm.size()));
  }
  std::vector<Term> out;
  out.reserve(work.size());
  for (auto& [w, c] : work) out.push_back({w, c});
  return NcPoly::from_sorted_terms(std::move(out));
}

bool verify_certificate(const NcPoly& f, const NcPoly& nf, const RewriteSystem& g,
                        const ReductionCertificate& cert) {
  std::vector<Term> terms;
  for (const auto& s : cert.steps) {
    const NcPoly* e = g.find_exact(s.element);
    if (e == nullptr) return false;
    for (const auto& t : e->terms()) terms.push_back({concat(s.left, t.word, s.right), s.coeff * t.coeff});
  }
  NcPoly combo = NcPoly::from_terms(std::move(terms));
  if (combo != f - nf) return false;
  for (const auto& t : nf.terms())
    if (!g.is_normal(t.word)) return false;
  return true;
}

std::vector<Overlap> overlaps(const Word& lm_g, const Word& lm_h) {
  std::vector<Overlap> out;
  std::size_t limit = std::min(lm_g.size(), lm_h.size());
  for (std::size_t k = 1; k < limit; ++k) {
    if (!std::equal(lm_g.begin() + static_cast<std::ptrdiff_t>(lm_g.size() - k), lm_g.end(), lm_h.begin())) continue;
    Overlap o;
    o.length = k;
    o.u = lm_h.suffix(lm_h.size() - k);
    o.v = lm_g.prefix(lm_g.size() - k);
    o.word = lm_g * o.u;
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

NcPoly composition(const NcPoly& g, const NcPoly& h, const Overlap& o) {
  return sandwich(Scalar(1), Word{}, g, o.u) - sandwich(Scalar(1), o.v, h, Word{});
}

}  // namespace

std::vector<NcPoly> compositions(const NcPoly& g, const NcPoly& h) {
  std::vector<NcPoly> out;
  for (const auto& o : overlaps(g.leading_word(), h.leading_word())) out.push_back(composition(g, h, o));
  return out;
}

namespace {

RewriteSystem unit_system() { return RewriteSystem({NcPoly::constant(Scalar(1))}); }

struct ByLeadingWord {
  bool operator()(const NcPoly& a, const NcPoly& b) const {
    return deglex_cmp(a.leading_word(), b.leading_word()) > 0;
  }
};

}  // namespace

RewriteSystem self_reduce(const std::vector<NcPoly>& generators) {
  std::priority_queue<NcPoly, std::vector<NcPoly>, ByLeadingWord> work;
  for (const auto& g : generators)
    if (!g.is_zero()) work.push(g);
  RewriteSystem r;
  while (!work.empty()) {
    NcPoly p = normal_form(work.top(), r);
    work.pop();
    if (p.is_zero()) continue;
    p = p.monic();
    if (p.degree() == 0) return unit_system();
    const Word& lm = p.leading_word();
    std::vector<Word> displaced;
    for (const auto& [w, q] : r.rules())
      if (w.contains(lm)) displaced.push_back(w);
    for (const auto& w : displaced) {
      work.push(*r.find_exact(w));
      r.erase(w);
    }
    r.insert(std::move(p));
  }
  // Leading words are now mutually irreducible; reduce the tails.
  std::vector<NcPoly> reduced;
  reduced.reserve(r.size());
  for (const auto& [lm, p] : r.rules()) {
    std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
    NcPoly rest = normal_form(NcPoly::from_sorted_terms(std::move(tail)), r);
    reduced.push_back(NcPoly::monomial(lm) + rest);
  }
  return RewriteSystem(reduced);
}

std::size_t default_max_degree(const std::vector<NcPoly>& generators) {
  std::size_t d = 1;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return 3 * d;
}

namespace {

struct PendingPair {
  Word word;
  Word g_lm;
  Word h_lm;
  std::size_t length;
};

struct PendingLess {
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    if (auto c = deglex_cmp(a.word, b.word); c != 0) return c < 0;
    if (auto c = deglex_cmp(a.g_lm, b.g_lm); c != 0) return c < 0;
    if (auto c = deglex_cmp(a.h_lm, b.h_lm); c != 0) return c < 0;
    return a.length < b.length;
  }
};

class Completion {
 public:
  Completion(std::size_t max_degree, const ProgressFn& progress) : max_degree_(max_degree), progress_(progress) {}

  CompletionResult run(const std::vector<NcPoly>& generators) {
    sys_ = self_reduce(generators);
    if (sys_.is_unit_ideal()) return finish();
    for (const auto& [lm, p] : sys_.rules()) queue_pairs(lm);

    std::size_t batch_degree = 0;
    bool dirty = false;
    for (;;) {
      drop_stale();
      if (pending_.empty() || pending_.begin()->word.size() != batch_degree) {
        if (dirty) {
          dirty = false;
          if (!interreduce()) return finish();
          continue;
        }
        if (pending_.empty()) {
          if (!absorb_violations()) break;
          if (sys_.is_unit_ideal()) return finish();
          dirty = true;
          continue;
        }
        batch_degree = pending_.begin()->word.size();
        report("degree " + std::to_string(batch_degree) + ": " + std::to_string(pending_.size()) +
               " pending, " + std::to_string(sys_.size()) + " elements");
      }
      PendingPair pair = pending_.extract(pending_.begin()).value();
      NcPoly comp = build(pair);
      ++result_.stats.compositions;
      NcPoly r = normal_form(comp, sys_);
      if (r.is_zero()) {
        ++result_.stats.zero_reductions;
        continue;
      }
      if (batch_degree > max_degree_) {
        result_.status = CompletionResult::Status::degree_bound_exceeded;
        result_.offending = std::move(comp);
        result_.offending_degree = batch_degree;
        return finish();
      }
      if (!add(std::move(r))) return finish();
      dirty = true;
    }
    return finish();
  }

 private:
  CompletionResult finish() {
    result_.system = std::move(sys_);
    return std::move(result_);
  }

  void report(const std::string& msg) const {
    if (progress_) progress_(msg);
  }

  void queue_pairs(const Word& lm) {
    for (const auto& [other, p] : sys_.rules()) {
      for (const auto& o : overlaps(lm, other)) pending_.insert({o.word, lm, other, o.length});
      if (other == lm) continue;
      for (const auto& o : overlaps(other, lm)) pending_.insert({o.word, other, lm, o.length});
    }
  }

  void drop_stale() {
    while (!pending_.empty()) {
      const auto& front = *pending_.begin();
      if (sys_.find_exact(front.g_lm) != nullptr && sys_.find_exact(front.h_lm) != nullptr) return;
      pending_.erase(pending_.begin());
    }
  }

  NcPoly build(const PendingPair& pair) const {
    Overlap o;
    o.length = pair.length;
    o.u = pair.h_lm.suffix(pair.h_lm.size() - pair.length);
    o.v = pair.g_lm.prefix(pair.g_lm.size() - pair.length);
    return composition(*sys_.find_exact(pair.g_lm), *sys_.find_exact(pair.h_lm), o);
  }

  // Returns false once the ideal is the whole algebra.
  bool add(NcPoly r) {
    r = r.monic();
    if (r.degree() == 0) {
      sys_ = unit_system();
      return false;
    }
    Word lm = r.leading_word();
    sys_.insert(std::move(r));
    ++result_.stats.additions;
    queue_pairs(lm);
    return true;
  }

  bool interreduce() {
    std::unordered_set<Word, WordHash> before;
    for (const auto& [lm, p] : sys_.rules()) before.insert(lm);
    sys_ = self_reduce(sys_.elements());
    ++result_.stats.interreductions;
    if (sys_.is_unit_ideal()) return false;
    for (const auto& [lm, p] : sys_.rules())
      if (!before.count(lm)) queue_pairs(lm);
    return true;
  }

  // Final closure audit; returns true if anything had to be added.
  bool absorb_violations() {
    auto violations = closure_violations(sys_);
    bool added = false;
    for (auto& v : violations) {
      NcPoly r = normal_form(v, sys_);
      if (r.is_zero()) continue;
      added = true;
      if (!add(std::move(r))) return true;
    }
    return added;
  }

  std::size_t max_degree_;
  const ProgressFn& progress_;
  RewriteSystem sys_;
  std::set<PendingPair, PendingLess> pending_;
  CompletionResult result_;
};

}  // namespace

CompletionResult complete(const std::vector<NcPoly>& generators, std::size_t max_degree, const ProgressFn& progress) {
  return Completion(max_degree, progress).run(generators);
}

std::vector<NcPoly> closure_violations(const RewriteSystem& g) {
  std::vector<NcPoly> out;
  for (const auto& [lm_a, a] : g.rules()) {
    for (const auto& [lm_b, b] : g.rules()) {
      for (const auto& o : overlaps(lm_a, lm_b)) {
        NcPoly r = normal_form(composition(a, b, o), g);
        if (!r.is_zero()) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

bool same_ideal(const std::vector<NcPoly>& a, const RewriteSystem& gb_a, const std::vector<NcPoly>& b,
                const RewriteSystem& gb_b) {
  auto reduces = [](const std::vector<NcPoly>& gens, const RewriteSystem& gb) {
    return std::all_of(gens.begin(), gens.end(), [&](const NcPoly& f) { return normal_form(f, gb).is_zero(); });
  };
  return reduces(a, gb_b) && reduces(b, gb_a);
}

std::size_t NormalWordReport::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

namespace {

// Normal words of degree d+1 from those of degree d, in ascending deglex.
std::vector<Word> extend(const std::vector<Word>& level, const RewriteSystem& g, int alphabet_size) {
  std::vector<Word> next;
  for (const auto& w : level) {
    for (int s = 0; s < alphabet_size; ++s) {
      Word x = w;
      x.push_back(static_cast<Symbol>(s));
      if (!g.has_obstruction_suffix(x)) next.push_back(std::move(x));
    }
  }
  return next;
}

}  // namespace

AvoidanceGraph avoidance_graph(const RewriteSystem& g, int alphabet_size) {
  AvoidanceGraph graph;
  if (g.is_unit_ideal()) return graph;
  std::size_t span = g.max_obstruction_length();
  std::size_t vertex_len = span > 0 ? span - 1 : 0;
  std::vector<Word> level{Word{}};
  for (std::size_t d = 0; d < vertex_len && !level.empty(); ++d) level = extend(level, g, alphabet_size);
  graph.vertices = level;
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) index.emplace(graph.vertices[k], k);
  graph.edges.resize(graph.vertices.size());
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    for (int s = 0; s < alphabet_size; ++s) {
      Word x = graph.vertices[k];
      x.push_back(static_cast<Symbol>(s));
      if (g.has_obstruction_suffix(x)) continue;
      auto it = index.find(x.suffix(vertex_len));
      if (it != index.end()) graph.edges[k].push_back(it->second);
    }
  }
  return graph;
}

bool AvoidanceGraph::has_cycle() const {
  enum class Mark : unsigned char { fresh, active, done };
  std::vector<Mark> mark(vertices.size(), Mark::fresh);
  for (std::size_t root = 0; root < vertices.size(); ++root) {
    if (mark[root] != Mark::fresh) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::active;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == edges[v].size()) {
        mark[v] = Mark::done;
        stack.pop_back();
        continue;
      }
      std::size_t w = edges[v][next++];
      if (mark[w] == Mark::active) return true;
      if (mark[w] == Mark::fresh) {
        mark[w] = Mark::active;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

NormalWordReport normal_words(const RewriteSystem& g, int alphabet_size, std::size_t max_degree) {
  NormalWordReport report;
  if (g.is_unit_ideal()) {
    report.finite = true;
    return report;
  }
  report.finite = !avoidance_graph(g, alphabet_size).has_cycle();
  std::vector<Word> level{Word{}};
  for (std::size_t d = 0; !level.empty(); ++d) {
    if (!report.finite && d > max_degree) break;
    report.counts.push_back(level.size());
    if (report.finite) report.basis.insert(report.basis.end(), level.begin(), level.end());
    level = extend(level, g, alphabet_size);
  }
  return report;
}

}  // namespace ncgb

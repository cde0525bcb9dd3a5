#include "su3cd/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "su3cd/congruence.hpp"

namespace su3cd {

namespace {

ElemKey key_of(const MonomialMatrix& m) {
  return ElemKey{perm_code(m.perm()), m.phases()};
}

bool key_less(const MonomialMatrix& a, const MonomialMatrix& b) {
  return key_of(a) < key_of(b);
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<MonomialMatrix> elements,
                                     std::vector<MonomialMatrix> generators,
                                     std::uint32_t modulus)
    : elements_(std::move(elements)), generators_(std::move(generators)), modulus_(modulus) {
  std::sort(elements_.begin(), elements_.end(), key_less);
  index_.reserve(elements_.size() * 2);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(key_of(elements_[i]), i);
  }
}

std::optional<std::uint32_t> FiniteMatrixGroup::index_of(const MonomialMatrix& m) const {
  const MonomialMatrix* probe = &m;
  MonomialMatrix adjusted = m;
  if (m.modulus() != modulus_) {
    adjusted = m.reduced();
    if (modulus_ % adjusted.modulus() != 0) return std::nullopt;
    adjusted = adjusted.rescaled(modulus_);
    probe = &adjusted;
  }
  const auto it = index_.find(key_of(*probe));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteMatrixGroup::same_element_set(const FiniteMatrixGroup& other) const {
  if (order() != other.order()) return false;
  if (modulus_ == other.modulus_) {
    for (std::uint64_t i = 0; i < order(); ++i) {
      if (key_of(elements_[i]) != key_of(other.elements_[i])) return false;
    }
    return true;
  }
  for (const auto& e : other.elements_) {
    if (!contains(e)) return false;
  }
  return true;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!(generators_[i] * generators_[j]).same_matrix(generators_[j] * generators_[i])) {
        return false;
      }
    }
  }
  return true;
}

FiniteMatrixGroup closure(std::vector<MonomialMatrix> generators, std::uint64_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("closure: at least one generator required");
  }
  std::uint32_t modulus = 1;
  for (const auto& g : generators) modulus = lcm_modulus(modulus, g.modulus());
  for (auto& g : generators) g = g.rescaled(modulus);

  std::unordered_map<ElemKey, std::uint32_t, ElemKeyHash> index;
  std::vector<MonomialMatrix> elements;
  elements.push_back(MonomialMatrix::identity(modulus));
  index.emplace(key_of(elements[0]), 0);

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const std::uint32_t idx : frontier) {
      const MonomialMatrix base = elements[idx];
      for (const auto& g : generators) {
        MonomialMatrix prod = base * g;
        const ElemKey k = key_of(prod);
        if (index.contains(k)) continue;
        if (elements.size() >= cap) {
          throw CapExceededError("closure: element cap " + std::to_string(cap) +
                                 " exceeded; input is not desk-scale");
        }
        index.emplace(k, std::uint32_t(elements.size()));
        next.push_back(std::uint32_t(elements.size()));
        elements.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return FiniteMatrixGroup(std::move(elements), std::move(generators), modulus);
}

FiniteMatrixGroup diagonal_subgroup(const FiniteMatrixGroup& g) {
  std::vector<MonomialMatrix> diag;
  for (const auto& e : g.elements()) {
    if (e.is_diagonal()) diag.push_back(e);
  }
  return FiniteMatrixGroup(diag, diag, g.modulus());
}

FiniteMatrixGroup conjugated(const FiniteMatrixGroup& g, const MonomialMatrix& x) {
  const std::uint32_t modulus = lcm_modulus(g.modulus(), x.modulus());
  const MonomialMatrix xs = x.rescaled(modulus);
  const MonomialMatrix xi = xs.inverse();
  std::vector<MonomialMatrix> elements;
  elements.reserve(g.order());
  for (const auto& e : g.elements()) elements.push_back(xs * e.rescaled(modulus) * xi);
  std::vector<MonomialMatrix> generators;
  for (const auto& e : g.generators()) generators.push_back(xs * e.rescaled(modulus) * xi);
  return FiniteMatrixGroup(std::move(elements), std::move(generators), modulus);
}

std::vector<MonomialMatrix> small_generating_set(const FiniteMatrixGroup& g) {
  if (g.order() == 1) return {MonomialMatrix::identity(g.modulus())};
  std::vector<MonomialMatrix> gens;
  std::optional<FiniteMatrixGroup> span;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    if (span && span->contains(e)) continue;
    gens.push_back(e);
    span = closure(gens, g.order());
    if (span->order() == g.order()) break;
  }
  return gens;
}

GroupTable group_table(const FiniteMatrixGroup& g, std::uint64_t cap) {
  if (g.order() > cap) {
    throw CapExceededError("group_table: order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(cap));
  }
  const std::uint32_t n = std::uint32_t(g.order());
  GroupTable t;
  t.size = n;
  t.product.resize(std::size_t(n) * n);
  t.inverse.resize(n);
  const auto& elems = g.elements();
  const auto id = g.index_of(MonomialMatrix::identity(g.modulus()));
  if (!id) throw VerificationError("group_table: identity missing from element set");
  t.identity = *id;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto idx = g.index_of(elems[a] * elems[b]);
      if (!idx) throw VerificationError("group_table: set not closed under product");
      t.product[std::size_t(a) * n + b] = *idx;
    }
    const auto inv = g.index_of(elems[a].inverse());
    if (!inv) throw VerificationError("group_table: set not closed under inverse");
    t.inverse[a] = *inv;
  }
  return t;
}

namespace {

std::vector<std::uint64_t> element_orders(const GroupTable& t) {
  std::vector<std::uint64_t> ord(t.size, 1);
  for (std::uint32_t i = 0; i < t.size; ++i) {
    std::uint32_t x = i;
    std::uint64_t o = 1;
    while (x != t.identity) {
      x = t.mul(x, i);
      ++o;
    }
    ord[i] = o;
  }
  return ord;
}

// class_of[i] = id of the conjugacy class of i; returns class sizes by id.
std::vector<std::uint64_t> conjugacy_classes(const GroupTable& t,
                                             std::vector<std::uint32_t>& class_of) {
  class_of.assign(t.size, 0);
  std::vector<bool> seen(t.size, false);
  std::vector<std::uint64_t> sizes;
  for (std::uint32_t i = 0; i < t.size; ++i) {
    if (seen[i]) continue;
    const std::uint32_t cls = std::uint32_t(sizes.size());
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < t.size; ++x) {
      const std::uint32_t c = t.mul(t.mul(x, i), t.inverse[x]);
      if (!seen[c]) {
        seen[c] = true;
        class_of[c] = cls;
        ++count;
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

// Membership list of the subgroup generated by all commutators.
std::vector<std::uint32_t> derived_subgroup(const GroupTable& t) {
  std::vector<bool> is_comm(t.size, false);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (std::uint32_t b = 0; b < t.size; ++b) {
      const std::uint32_t c = t.mul(t.mul(t.inverse[a], t.inverse[b]), t.mul(a, b));
      if (!is_comm[c]) {
        is_comm[c] = true;
        gens.push_back(c);
      }
    }
  }
  std::vector<bool> in_sub(t.size, false);
  std::vector<std::uint32_t> members{t.identity};
  in_sub[t.identity] = true;
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    for (const std::uint32_t g : gens) {
      const std::uint32_t y = t.mul(members[qi], g);
      if (!in_sub[y]) {
        in_sub[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

GroupTable quotient_table(const GroupTable& t, const std::vector<std::uint32_t>& normal) {
  std::vector<std::uint32_t> rep(t.size);
  for (std::uint32_t x = 0; x < t.size; ++x) {
    std::uint32_t best = t.size;
    for (const std::uint32_t d : normal) best = std::min(best, t.mul(x, d));
    rep[x] = best;
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < t.size; ++x) {
    if (rep[x] == x) reps.push_back(x);
  }
  std::vector<std::uint32_t> compact(t.size, 0);
  for (std::uint32_t i = 0; i < reps.size(); ++i) compact[reps[i]] = i;

  GroupTable q;
  q.size = std::uint32_t(reps.size());
  q.identity = compact[rep[t.identity]];
  q.product.resize(std::size_t(q.size) * q.size);
  q.inverse.resize(q.size);
  for (std::uint32_t a = 0; a < q.size; ++a) {
    for (std::uint32_t b = 0; b < q.size; ++b) {
      q.product[std::size_t(a) * q.size + b] = compact[rep[t.mul(reps[a], reps[b])]];
    }
    q.inverse[a] = compact[rep[t.inverse[reps[a]]]];
  }
  return q;
}

// Invariant factors d1 | d2 | ... of an abelian group given by its table.
// The partition of each Sylow part is recovered from the counts
// N_j = #{x : ord(x) | p^j} via the conjugate-partition identity
// N_j / N_{j-1} = p^(#parts >= j).
std::vector<std::uint64_t> abelian_invariants(const GroupTable& q) {
  if (q.size <= 1) return {};
  const std::vector<std::uint64_t> ords = element_orders(q);

  std::vector<std::vector<std::uint64_t>> per_prime;
  for (const auto& [p, e_total] : factorize(q.size)) {
    (void)e_total;
    std::vector<std::uint64_t> counts{1};
    std::uint64_t pj = 1;
    for (;;) {
      pj *= p;
      std::uint64_t c = 0;
      for (auto o : ords) {
        if (pj % o == 0) ++c;
      }
      if (c == counts.back()) break;
      counts.push_back(c);
    }
    std::vector<std::uint64_t> conj;  // conj[j-1] = #parts >= j
    for (std::size_t j = 1; j < counts.size(); ++j) {
      std::uint64_t ratio = counts[j] / counts[j - 1];
      std::uint64_t e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      conj.push_back(e);
    }
    std::vector<std::uint64_t> factors;  // p^lambda_i, descending
    for (std::uint64_t i = 1; i <= (conj.empty() ? 0 : conj[0]); ++i) {
      std::uint64_t exp = 0;  // lambda_i = #{j : conj_j >= i}
      for (auto c : conj) {
        if (c >= i) ++exp;
      }
      std::uint64_t pe = 1;
      for (std::uint64_t x = 0; x < exp; ++x) pe *= p;
      factors.push_back(pe);
    }
    per_prime.push_back(std::move(factors));
  }

  std::size_t width = 0;
  for (const auto& f : per_prime) width = std::max(width, f.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto& f : per_prime) {
    for (std::size_t i = 0; i < f.size(); ++i) invariants[i] *= f[i];
  }
  std::reverse(invariants.begin(), invariants.end());  // ascending divisibility
  return invariants;
}

}  // namespace

Fingerprint fingerprint(const GroupTable& t) {
  Fingerprint f;
  f.order = t.size;
  for (auto o : element_orders(t)) ++f.order_histogram[o];

  for (std::uint32_t i = 0; i < t.size; ++i) {
    bool central = true;
    for (std::uint32_t j = 0; j < t.size && central; ++j) {
      central = t.mul(i, j) == t.mul(j, i);
    }
    if (central) ++f.center_order;
  }

  std::vector<std::uint32_t> class_of;
  f.class_sizes = conjugacy_classes(t, class_of);
  std::sort(f.class_sizes.begin(), f.class_sizes.end());

  const std::vector<std::uint32_t> derived = derived_subgroup(t);
  f.derived_order = derived.size();
  f.abelian_invariants = abelian_invariants(quotient_table(t, derived));
  return f;
}

Fingerprint fingerprint(const FiniteMatrixGroup& g, std::uint64_t cap) {
  return fingerprint(group_table(g, cap));
}

namespace {

struct ElemInvariant {
  std::uint64_t order;
  std::uint64_t class_size;
  bool central;
  friend bool operator==(const ElemInvariant&, const ElemInvariant&) = default;
  friend auto operator<=>(const ElemInvariant&, const ElemInvariant&) = default;
};

std::vector<ElemInvariant> element_invariants(const GroupTable& t) {
  const auto ords = element_orders(t);
  std::vector<std::uint32_t> class_of;
  const auto sizes = conjugacy_classes(t, class_of);
  std::vector<ElemInvariant> out(t.size);
  for (std::uint32_t i = 0; i < t.size; ++i) {
    out[i] = {ords[i], sizes[class_of[i]], sizes[class_of[i]] == 1};
  }
  return out;
}

// Subgroup of table elements generated by gens (right-multiplication walk).
std::uint64_t span_size(const GroupTable& t, const std::vector<std::uint32_t>& gens,
                        std::vector<bool>& in_span) {
  in_span.assign(t.size, false);
  std::vector<std::uint32_t> members{t.identity};
  in_span[t.identity] = true;
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    for (const std::uint32_t g : gens) {
      const std::uint32_t y = t.mul(members[qi], g);
      if (!in_span[y]) {
        in_span[y] = true;
        members.push_back(y);
      }
    }
  }
  return members.size();
}

// Backtracking state for the generator-image search.
struct IsoSearch {
  const GroupTable& a;
  const GroupTable& b;
  std::vector<std::int64_t> phi;   // a-index -> b-index or -1
  std::vector<std::int64_t> used;  // b-index -> a-index or -1
  std::vector<std::uint32_t> known;
  std::vector<std::uint32_t> gens;
  std::vector<std::vector<std::uint32_t>> candidates;

  IsoSearch(const GroupTable& a_, const GroupTable& b_)
      : a(a_), b(b_), phi(a_.size, -1), used(b_.size, -1) {}

  bool assign(std::uint32_t x, std::uint32_t y, std::vector<std::uint32_t>& trail) {
    if (phi[x] != -1) return phi[x] == y;
    if (used[y] != -1) return false;
    phi[x] = y;
    used[y] = x;
    known.push_back(x);
    trail.push_back(x);
    return true;
  }

  // Propagate phi(x*s) = phi(x)*phi(s) to a fixpoint over the assigned
  // generators; any conflict or image collision disproves the branch.
  bool propagate(std::size_t depth, std::vector<std::uint32_t>& trail) {
    for (std::size_t qi = 0; qi < known.size(); ++qi) {
      const std::uint32_t x = known[qi];
      for (std::size_t gi = 0; gi <= depth; ++gi) {
        const std::uint32_t s = gens[gi];
        if (!assign(a.mul(x, s), b.mul(std::uint32_t(phi[x]), std::uint32_t(phi[s])), trail)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<std::uint32_t>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      used[std::size_t(phi[*it])] = -1;
      phi[*it] = -1;
      known.pop_back();
    }
  }

  bool search(std::size_t depth) {
    if (depth == gens.size()) return known.size() == a.size;
    const std::uint32_t s = gens[depth];
    for (const std::uint32_t cand : candidates[depth]) {
      if (used[cand] != -1) continue;
      std::vector<std::uint32_t> trail;
      if (assign(s, cand, trail) && propagate(depth, trail) && search(depth + 1)) {
        return true;
      }
      undo(trail);
    }
    return false;
  }
};

}  // namespace

std::optional<TableIso> table_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.size != b.size) return std::nullopt;
  if (a.size == 1) return TableIso{{0}, {}};

  const auto inv_a = element_invariants(a);
  const auto inv_b = element_invariants(b);
  {
    auto sa = inv_a;
    auto sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  IsoSearch search(a, b);

  // Greedy generating set of a.
  std::vector<bool> in_span;
  std::vector<std::uint32_t> gens;
  std::uint64_t span = span_size(a, gens, in_span);
  for (std::uint32_t i = 0; i < a.size && span < a.size; ++i) {
    if (in_span[i]) continue;
    gens.push_back(i);
    span = span_size(a, gens, in_span);
  }
  search.gens = gens;
  for (const std::uint32_t g : gens) {
    std::vector<std::uint32_t> cand;
    for (std::uint32_t j = 0; j < b.size; ++j) {
      if (inv_b[j] == inv_a[g]) cand.push_back(j);
    }
    search.candidates.push_back(std::move(cand));
  }

  std::vector<std::uint32_t> seed_trail;
  if (!search.assign(a.identity, b.identity, seed_trail)) return std::nullopt;
  if (!search.search(0)) return std::nullopt;

  TableIso iso;
  iso.generators = gens;
  iso.map.resize(a.size);
  for (std::uint32_t i = 0; i < a.size; ++i) iso.map[i] = std::uint32_t(search.phi[i]);
  return iso;
}

std::optional<IsoWitness> brute_force_isomorphism(const FiniteMatrixGroup& g1,
                                                  const FiniteMatrixGroup& g2,
                                                  std::uint64_t cap) {
  if (g1.order() > cap || g2.order() > cap) {
    throw CapExceededError("brute_force_isomorphism: order exceeds cap " +
                           std::to_string(cap) + "; refusing to guess");
  }
  if (g1.order() != g2.order()) return std::nullopt;
  const GroupTable t1 = group_table(g1, cap);
  const GroupTable t2 = group_table(g2, cap);
  const auto iso = table_isomorphism(t1, t2);
  if (!iso) return std::nullopt;
  IsoWitness w;
  for (const std::uint32_t gi : iso->generators) {
    w.generator_images.emplace_back(g1.elements()[gi], g2.elements()[iso->map[gi]]);
  }
  return w;
}

std::optional<Z3Decomposition> central_z3_decomposition(const FiniteMatrixGroup& g) {
  if (g.modulus() % 3 != 0 || g.order() % 3 != 0) return std::nullopt;
  const MonomialMatrix omega = make_omega_identity(g.modulus());
  if (!g.contains(omega)) return std::nullopt;

  std::vector<MonomialMatrix> gens = g.generators();
  if (gens.size() > 6) gens = small_generating_set(g);

  const MonomialMatrix omega2 = omega * omega;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= 3;
  for (std::uint64_t twist = 0; twist < combos; ++twist) {
    std::vector<MonomialMatrix> twisted;
    std::uint64_t code = twist;
    for (const auto& gen : gens) {
      switch (code % 3) {
        case 0: twisted.push_back(gen); break;
        case 1: twisted.push_back(gen * omega); break;
        default: twisted.push_back(gen * omega2); break;
      }
      code /= 3;
    }
    FiniteMatrixGroup h = closure(twisted, g.order());
    if (h.order() * 3 == g.order() && !h.contains(omega)) {
      return Z3Decomposition{
          {MonomialMatrix::identity(g.modulus()), omega, omega2}, std::move(h)};
    }
  }
  return std::nullopt;
}

}  // namespace su3cd

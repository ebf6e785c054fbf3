#include <algorithm>
#include <deque>
#include <list>

#include "lm/ideal.hpp"

namespace lm {

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder ord) : ord_(ord), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("zero generator rejected");
    if (!ring_)
      ring_ = g.ring();
    else if (!(*ring_ == *g.ring()))
      throw std::invalid_argument("generators from different rings");
  }
  for (auto& g : gens_)
    if (!(g.order() == ord_)) g = g.resorted(ord_);
  if (gens_.empty()) throw std::invalid_argument("empty generator list (use zero_ideal)");
}

Ideal Ideal::zero_ideal(RingPtr ring, MonomialOrder ord) {
  Ideal z;
  z.ring_ = std::move(ring);
  z.ord_ = ord;
  z.basis_ = std::vector<Polynomial>{};
  return z;
}

const std::vector<Polynomial>& Ideal::basis() const {
  if (!basis_) throw std::logic_error("no cached basis");
  return *basis_;
}

namespace {

// Tail-reducing division; tracks the "sugar" (phantom homogenized degree)
// of the result when requested.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G, MonomialOrder ord,
                       const std::vector<int>* sugars, int* out_sugar) {
  Polynomial p = (f.order() == ord) ? f : f.resorted(ord);
  Polynomial r(p.ring(), ord);
  int sug = out_sugar ? *out_sugar : 0;
  while (!p.is_zero()) {
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      const Polynomial& g = G[k];
      if (g.is_zero()) continue;
      if (g.lt().m.divides(p.lt().m)) {
        Term t{p.lt().m / g.lt().m, p.lt().c / g.lt().c};
        if (sugars) sug = std::max(sug, (*sugars)[k] + t.m.deg());
        p = p - g.term_mul(t);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Polynomial(p.ring(), ord, {p.lt()});
      p = p - Polynomial(p.ring(), ord, {p.lt()});
    }
  }
  if (out_sugar) *out_sugar = sug;
  return r;
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  int sugar;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> G, MonomialOrder ord) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<bool> keep(G.size(), true);
  for (size_t i = 0; i < G.size(); ++i) {
    if (!keep[i]) continue;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (G[j].lt().m.divides(G[i].lt().m) &&
          !(i < j && G[i].lt().m == G[j].lt().m)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> H;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) H.push_back(G[i]);
  // tail-reduce each element against the others
  std::vector<Polynomial> R;
  for (size_t i = 0; i < H.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < H.size(); ++j)
      if (j != i) others.push_back(H[j]);
    Polynomial red = reduce_full(H[i], others, ord, nullptr, nullptr);
    if (!red.is_zero()) R.push_back(red.monic());
  }
  std::sort(R.begin(), R.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.lt().m, b.lt().m); });
  return R;
}

}  // namespace

const std::vector<Polynomial>& Ideal::groebner(const GBOptions& opt) const {
  if (basis_) return *basis_;
  MonomialOrder ord = ord_;
  std::vector<Polynomial> G;
  std::vector<int> sugar;
  std::list<Pair> pairs;

  auto add_elem = [&](const Polynomial& h, int hsug) {
    size_t t = G.size();
    // Gebauer-Moeller update of the pair set
    std::vector<Pair> cand;
    for (size_t i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(G[i].lt().m, h.lt().m);
      int s = std::max(sugar[i] + (l / G[i].lt().m).deg(), hsug + (l / h.lt().m).deg());
      cand.push_back({i, t, l, s});
    }
    std::vector<Pair> D;
    std::deque<Pair> C(cand.begin(), cand.end());
    while (!C.empty()) {
      Pair pr = C.front();
      C.pop_front();
      bool coprime = G[pr.i].lt().m.coprime(h.lt().m);
      auto dominated = [&](const Pair& q) {
        return !(q.lcm == pr.lcm) && q.lcm.divides(pr.lcm);
      };
      bool dom = std::any_of(C.begin(), C.end(), dominated) ||
                 std::any_of(D.begin(), D.end(), dominated);
      if (coprime || !dom) D.push_back(pr);
    }
    // criterion B on old pairs
    pairs.remove_if([&](const Pair& pr) {
      Monomial l = pr.lcm;
      if (!h.lt().m.divides(l)) return false;
      Monomial li = Monomial::lcm(G[pr.i].lt().m, h.lt().m);
      Monomial lj = Monomial::lcm(G[pr.j].lt().m, h.lt().m);
      return !(li == l) && !(lj == l);
    });
    for (auto& pr : D)
      if (!G[pr.i].lt().m.coprime(h.lt().m)) pairs.push_back(pr);
    G.push_back(h);
    sugar.push_back(hsug);
  };

  for (auto& g : gens_) {
    Polynomial h = g.monic();
    add_elem(h, h.total_deg());
  }

  size_t processed = 0;
  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (it->sugar != best->sugar ? it->sugar < best->sugar
                                   : ord.less(it->lcm, best->lcm))
        best = it;
    }
    Pair pr = *best;
    pairs.erase(best);
    if (++processed > opt.max_pairs)
      throw BudgetExhausted("budget exhausted: S-pair limit " + std::to_string(opt.max_pairs));
    if (pr.lcm.deg() > opt.max_degree)
      throw BudgetExhausted("budget exhausted: S-pair degree " + std::to_string(pr.lcm.deg()) +
                            " exceeds cap " + std::to_string(opt.max_degree));
    const Polynomial &f = G[pr.i], &g = G[pr.j];
    Term tf{pr.lcm / f.lt().m, FieldElem(ring_->field, 1)};
    Term tg{pr.lcm / g.lt().m, f.lt().c / g.lt().c};
    Polynomial s = f.term_mul(tf) - g.term_mul(tg);
    int sug = std::max(sugar[pr.i] + tf.m.deg(), sugar[pr.j] + tg.m.deg());
    Polynomial h = reduce_full(s, G, ord, &sugar, &sug);
    if (!h.is_zero()) add_elem(h.monic(), sug);
  }

  basis_ = interreduce(std::move(G), ord);
  return *basis_;
}

bool Ideal::contains(const Polynomial& f, const GBOptions& opt) const {
  return normal_form(f, *this, opt).is_zero();
}

bool Ideal::is_unit_ideal(const GBOptions& opt) const {
  const auto& B = groebner(opt);
  return B.size() == 1 && B[0].lt().m.deg() == 0;
}

bool Ideal::same_ideal(const Ideal& other, const GBOptions& opt) const {
  for (auto& g : other.gens())
    if (!contains(g, opt)) return false;
  for (auto& g : gens())
    if (!other.contains(g, opt)) return false;
  return true;
}

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder ord) {
  return reduce_full(f, basis, ord, nullptr, nullptr);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const GBOptions& opt) {
  if (!(*f.ring() == *I.ring())) throw std::invalid_argument("ring mismatch");
  return reduce_by(f, I.groebner(opt), I.order());
}

}  // namespace lm

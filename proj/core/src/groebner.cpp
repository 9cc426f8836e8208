#include "spherotrop/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace spherotrop {

namespace {

void check_ring(const QPolynomial& f, const TermOrder& ord) {
  if (f.nvars() != ord.nvars()) throw RankMismatch("polynomial and term order have different ranks");
  for (const auto& [e, c] : f.terms())
    for (long v : e)
      if (v < 0) throw InvalidArgument("Groebner routines need nonnegative exponents; saturate Laurent input first");
}

bool leading_term_is_top_degree(const QPolynomial& g, const TermOrder& ord) {
  return total_degree(leading_term(g, ord).first) == g.max_degree();
}

QPolynomial monic(const QPolynomial& f, const TermOrder& ord) {
  return f.scaled(leading_term(f, ord).second.inverse());
}

struct Reducer {
  const std::vector<QPolynomial>& divisors;
  std::vector<std::pair<Exponent, Rational>> leads;

  Reducer(const std::vector<QPolynomial>& d, const TermOrder& ord) : divisors(d) {
    leads.reserve(d.size());
    for (const auto& g : d) leads.push_back(leading_term(g, ord));
  }

  DivisionResult run(const QPolynomial& f, const TermOrder& ord, bool track_quotients) const {
    DivisionResult res;
    if (track_quotients)
      res.quotients.assign(divisors.size(), QPolynomial(f.nvars(), f.mode()));
    res.remainder = QPolynomial(f.nvars(), f.mode());
    QPolynomial p = f;
    while (!p.is_zero()) {
      auto [e, c] = leading_term(p, ord);
      bool reduced = false;
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (!divides(leads[i].first, e)) continue;
        Exponent shift = e - leads[i].first;
        Rational coef = c / leads[i].second;
        if (track_quotients) res.quotients[i].add_term(shift, coef);
        p -= divisors[i].times_term(shift, coef);
        reduced = true;
        break;
      }
      if (!reduced) {
        res.remainder.add_term(e, c);
        p.add_term(e, -c);
      }
    }
    return res;
  }
};

void guard_division(const std::vector<QPolynomial>& divisors, const TermOrder& ord) {
  if (ord.is_max_well_ordered()) return;
  for (const auto& g : divisors) {
    if (!leading_term_is_top_degree(g, ord))
      throw OrderNotWellFounded("order " + ord.describe() +
                                " has infinite increasing chains and a divisor's leading term is not of top degree");
  }
}

}  // namespace

DivisionResult poly_divide(const QPolynomial& f, const std::vector<QPolynomial>& divisors, const TermOrder& ord) {
  check_ring(f, ord);
  for (const auto& g : divisors) {
    check_ring(g, ord);
    if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  }
  guard_division(divisors, ord);
  return Reducer(divisors, ord).run(f, ord, true);
}

QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g, const TermOrder& ord) {
  auto [ef, cf] = leading_term(f, ord);
  auto [eg, cg] = leading_term(g, ord);
  Exponent l = lcm(ef, eg);
  return f.times_term(l - ef, cf.inverse()) - g.times_term(l - eg, cg.inverse());
}

std::vector<QPolynomial> buchberger_reduced(const std::vector<QPolynomial>& gens, const TermOrder& ord) {
  std::vector<QPolynomial> basis;
  bool homogeneous = true;
  for (const auto& g : gens) {
    check_ring(g, ord);
    if (g.is_zero()) continue;
    homogeneous = homogeneous && g.is_homogeneous();
    basis.push_back(monic(g.with_mode(RingMode::Polynomial), ord));
  }
  if (basis.empty()) throw ZeroPolynomial("Groebner basis of the zero ideal");
  if (!homogeneous && !ord.is_max_well_ordered())
    throw OrderNotWellFounded("order " + ord.describe() + " is not max-well-ordered and the input is not homogeneous");

  std::vector<Exponent> leads;
  for (const auto& g : basis) leads.push_back(leading_term(g, ord).first);

  // Normal selection strategy: smallest lcm degree first, then the term
  // order, then pair indices.
  using Pair = std::pair<std::size_t, std::size_t>;
  std::vector<Pair> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_key_less = [&](const Pair& a, const Pair& b) {
    Exponent la = lcm(leads[a.first], leads[a.second]);
    Exponent lb = lcm(leads[b.first], leads[b.second]);
    long da = total_degree(la), db = total_degree(lb);
    if (da != db) return da < db;
    int c = ord.compare(la, lb);
    if (c != 0) return c < 0;
    return a < b;
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_key_less);
    Pair p = *best;
    pairs.erase(best);
    const Exponent& a = leads[p.first];
    const Exponent& b = leads[p.second];
    bool coprime = true;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[v] > 0 && b[v] > 0) coprime = false;
    if (coprime) continue;
    QPolynomial s = s_polynomial(basis[p.first], basis[p.second], ord);
    QPolynomial r = Reducer(basis, ord).run(s, ord, false).remainder;
    if (r.is_zero()) continue;
    r = monic(r, ord);
    basis.push_back(r);
    leads.push_back(leading_term(r, ord).first);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) pairs.emplace_back(i, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    int c = ord.compare(leads[i], leads[j]);
    return c != 0 ? c < 0 : i < j;
  });
  std::vector<QPolynomial> minimal;
  std::vector<Exponent> minimal_leads;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    std::size_t i = order[idx];
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || !divides(leads[j], leads[i])) continue;
      // equal leading monomials: keep the earliest in sorted order
      if (leads[j] == leads[i]) {
        auto pos_j = std::find(order.begin(), order.end(), j) - order.begin();
        redundant = static_cast<std::size_t>(pos_j) < idx;
      } else {
        redundant = true;
      }
    }
    if (!redundant) {
      minimal.push_back(basis[i]);
      minimal_leads.push_back(leads[i]);
    }
  }

  // Interreduce tails.
  std::vector<QPolynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < reduced.size() ? reduced[j] : minimal[j]);
    QPolynomial head = QPolynomial::monomial(minimal_leads[i], Rational(1));
    QPolynomial tail = minimal[i] - head;
    QPolynomial g = head;
    if (!others.empty()) {
      g += Reducer(others, ord).run(tail, ord, false).remainder;
    } else {
      g += tail;
    }
    reduced.push_back(g);
  }
  return reduced;
}

bool ideal_member(const QPolynomial& f, const std::vector<QPolynomial>& gb, const TermOrder& ord) {
  if (f.is_zero()) return true;
  return poly_divide(f, gb, ord).remainder.is_zero();
}

bool is_groebner_basis(const std::vector<QPolynomial>& basis, const TermOrder& ord) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      QPolynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!poly_divide(s, basis, ord).remainder.is_zero()) return false;
    }
  }
  return true;
}

std::string fingerprint(const std::vector<QPolynomial>& basis) {
  std::vector<std::string> parts;
  for (const auto& g : basis) {
    std::ostringstream os;
    for (const auto& [e, c] : g.terms()) {
      os << "[";
      for (long v : e) os << v << ",";
      os << "]" << c << ";";
    }
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + "|";
  return out;
}

QPolynomial homogenize(const QPolynomial& f) {
  QPolynomial h(f.nvars() + 1, RingMode::Polynomial);
  if (f.is_zero()) return h;
  long d = f.max_degree();
  for (const auto& [e, c] : f.terms()) {
    Exponent he = e;
    he.push_back(d - total_degree(e));
    h.add_term(std::move(he), c);
  }
  return h;
}

QPolynomial dehomogenize(const QPolynomial& f) {
  if (f.nvars() == 0) throw RankMismatch("cannot dehomogenize a polynomial in zero variables");
  QPolynomial d(f.nvars() - 1, f.mode());
  for (const auto& [e, c] : f.terms()) d.add_term(Exponent(e.begin(), e.end() - 1), c);
  return d;
}

std::vector<QPolynomial> homogenize_ideal(const std::vector<QPolynomial>& gens) {
  if (gens.empty()) throw ZeroPolynomial("empty generator list");
  TermOrder ord = TermOrder::degree_descending(gens.front().nvars());
  std::vector<QPolynomial> out;
  for (const auto& g : buchberger_reduced(gens, ord)) out.push_back(homogenize(g));
  return out;
}

QPolynomial clear_denominators(const QPolynomial& f) {
  Exponent shift(f.nvars(), 0);
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i) shift[i] = std::max(shift[i], -e[i]);
  QPolynomial p(f.nvars(), RingMode::Polynomial);
  for (const auto& [e, c] : f.terms()) p.add_term(e + shift, c);
  return p;
}

QPolynomial extend_ring(const QPolynomial& f, std::size_t extra_vars) {
  QPolynomial p(f.nvars() + extra_vars, f.mode());
  for (const auto& [e, c] : f.terms()) {
    Exponent x = e;
    x.resize(e.size() + extra_vars, 0);
    p.add_term(std::move(x), c);
  }
  return p;
}

}  // namespace spherotrop

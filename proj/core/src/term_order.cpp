#include "spherotrop/term_order.hpp"

#include <numeric>
#include <sstream>

#include "spherotrop/error.hpp"

namespace spherotrop {

Rational dot(const WeightVector& w, const Exponent& e) {
  if (w.size() != e.size()) throw RankMismatch("weight vector length does not match exponent");
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (e[i] != 0) s += w[i] * Rational(e[i]);
  return s;
}

namespace {

std::vector<std::size_t> checked_priority(std::size_t nvars, std::vector<std::size_t> priority) {
  if (priority.empty()) {
    priority.resize(nvars);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    return priority;
  }
  if (priority.size() != nvars) throw RankMismatch("variable priority has the wrong length");
  std::vector<bool> seen(nvars, false);
  for (std::size_t p : priority) {
    if (p >= nvars || seen[p]) throw InvalidArgument("variable priority is not a permutation");
    seen[p] = true;
  }
  return priority;
}

int lex_compare(const std::vector<std::size_t>& priority, const Exponent& a, const Exponent& b) {
  for (std::size_t v : priority) {
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::lex(std::size_t nvars, std::vector<std::size_t> priority) {
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  o.priority_ = checked_priority(nvars, std::move(priority));
  return o;
}

TermOrder TermOrder::grlex(std::size_t nvars, std::vector<std::size_t> priority) {
  TermOrder o = lex(nvars, std::move(priority));
  o.kind_ = Kind::Grlex;
  return o;
}

TermOrder TermOrder::grevlex(std::size_t nvars, std::vector<std::size_t> priority) {
  TermOrder o = lex(nvars, std::move(priority));
  o.kind_ = Kind::Grevlex;
  return o;
}

TermOrder TermOrder::weight_refined(WeightVector w, const TermOrder& tiebreak) {
  if (w.size() != tiebreak.nvars()) throw RankMismatch("weight vector length does not match tiebreak order");
  TermOrder o;
  o.kind_ = Kind::WeightRefined;
  o.nvars_ = tiebreak.nvars();
  o.weight_ = std::move(w);
  o.tiebreak_ = std::make_shared<const TermOrder>(tiebreak);
  return o;
}

TermOrder TermOrder::degree_descending(std::size_t nvars) {
  return weight_refined(WeightVector(nvars, Rational(-1)), grevlex(nvars));
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != nvars_ || b.size() != nvars_) throw RankMismatch("exponent length does not match term order");
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(priority_, a, b);
    case Kind::Grlex: {
      long da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      return lex_compare(priority_, a, b);
    }
    case Kind::Grevlex: {
      long da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      // a > b iff the least significant differing variable has a smaller exponent in a.
      for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
      }
      return 0;
    }
    case Kind::WeightRefined: {
      Rational wa = dot(weight_, a), wb = dot(weight_, b);
      if (wa != wb) return wa < wb ? -1 : 1;
      return tiebreak_->compare(a, b);
    }
  }
  return 0;
}

void TermOrder::collect_coverage(std::vector<bool>& negative, bool& nonpositive, bool& base_ok) const {
  if (kind_ != Kind::WeightRefined) {
    base_ok = nvars_ == 0;
    return;
  }
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    if (weight_[i].sign() > 0) nonpositive = false;
    if (weight_[i].sign() < 0) negative[i] = true;
  }
  tiebreak_->collect_coverage(negative, nonpositive, base_ok);
}

bool TermOrder::is_max_well_ordered() const {
  std::vector<bool> negative(nvars_, false);
  bool nonpositive = true;
  bool base_ok = false;
  collect_coverage(negative, nonpositive, base_ok);
  if (!nonpositive) return false;
  if (base_ok) return true;
  return std::all_of(negative.begin(), negative.end(), [](bool b) { return b; });
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Lex: os << "lex"; break;
    case Kind::Grlex: os << "grlex"; break;
    case Kind::Grevlex: os << "grevlex"; break;
    case Kind::WeightRefined: {
      os << "weight(";
      for (std::size_t i = 0; i < weight_.size(); ++i) os << (i ? "," : "") << weight_[i];
      os << ";" << tiebreak_->describe() << ")";
      return os.str();
    }
  }
  return os.str();
}

}  // namespace spherotrop

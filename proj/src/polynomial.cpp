#include "ainf/polynomial.hpp"

#include <sstream>

namespace ainf {

Polynomial Polynomial::constant(const RingConfig& cfg, const Rat& c) {
  Polynomial p(cfg);
  p.add_term(Monomial::unit(cfg.n), c);
  return p;
}

Polynomial Polynomial::variable(const RingConfig& cfg, int i) {
  if (i < 1 || i > cfg.n) throw std::out_of_range("variable index");
  Polynomial p(cfg);
  p.add_term(Monomial::var(cfg.n, i), Rat(1));
  return p;
}

Polynomial Polynomial::monomial(const RingConfig& cfg, const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.e.size()) != cfg.n) throw std::invalid_argument("monomial arity");
  Polynomial p(cfg);
  p.add_term(m, c);
  return p;
}

int Polynomial::filtration_order() const {
  if (terms_.empty()) return kInfiniteOrder;
  return terms_.begin()->first.degree();
}

int Polynomial::top_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (ainf::is_zero(c)) return;
  if (m.degree() > cfg_.truncation_order) {
    truncated_ = true;
    return;
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (ainf::is_zero(it->second)) terms_.erase(it);
  }
}

Rat Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (cfg_.n != o.cfg_.n) throw std::invalid_argument("mismatched variable count");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  r.truncated_ = truncated_ || o.truncated_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(cfg_);
  r.truncated_ = truncated_ || o.truncated_;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r(cfg_);
  r.truncated_ = truncated_;
  if (ainf::is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 1 || i > cfg_.n) throw std::out_of_range("variable index");
  Polynomial r(cfg_);
  for (const auto& [m, c] : terms_) {
    if (m.e[i - 1] == 0) continue;
    Monomial d = m;
    int k = d.e[i - 1]--;
    r.add_term(d, c * k);
  }
  return r;
}

Polynomial Polynomial::graded_part(int d) const {
  Polynomial r(cfg_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::truncate_below(int d) const {
  Polynomial r(cfg_);
  for (const auto& [m, c] : terms_)
    if (m.degree() >= d) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::truncate_to(int order) const {
  Polynomial r(cfg_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < order) r.terms_.emplace(m, c);
  return r;
}

std::optional<Weight> Polynomial::weight() const {
  if (!cfg_.genus) throw std::logic_error("weight requires genus");
  if (cfg_.n != 3) throw std::logic_error("weight requires n = 3");
  int m = cfg_.group_order();
  std::optional<Weight> w;
  for (const auto& [mono, c] : terms_) {
    (void)c;
    Weight t{0, 0};
    for (int k = 1; k <= 3; ++k) {
      Weight vk = var_weight(k, m);
      t = weight_reduce(t.a + vk.a * mono.e[k - 1], t.b + vk.b * mono.e[k - 1], m);
    }
    if (!w) {
      w = t;
    } else if (!(*w == t)) {
      return std::nullopt;
    }
  }
  return w ? w : std::optional<Weight>(Weight{0, 0});
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = rat_to_string(c);
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    if (first && cs[0] == '-') os << "-";
    first = false;
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    bool any_var = m.degree() > 0;
    if (mag != "1" || !any_var) os << mag;
    bool star = mag != "1" && any_var;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (star) os << "*";
      os << "z" << (i + 1);
      if (m.e[i] > 1) os << "^" << m.e[i];
      star = true;
    }
  }
  return os.str();
}

Polynomial superpotential(const RingConfig& cfg) {
  if (cfg.n != 3 || !cfg.genus) throw std::invalid_argument("superpotential needs n=3 and genus");
  int g = *cfg.genus;
  Polynomial w(cfg);
  Monomial cube = Monomial::unit(3);
  cube.e = {1, 1, 1};
  w.add_term(cube, Rat(-1));
  for (int k = 1; k <= 3; ++k) w.add_term(Monomial::var(3, k, 2 * g + 1), Rat(1));
  return w;
}

}  // namespace ainf

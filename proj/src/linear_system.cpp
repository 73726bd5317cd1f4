#include "cellstrat/linear_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace cellstrat {

Rational AffineForm::operator()(std::span<const Rational> x) const {
  if (x.size() != coefficients.size()) throw std::invalid_argument("AffineForm: point has the wrong dimension");
  Rational value = constant;
  for (std::size_t i = 0; i < x.size(); ++i) value += coefficients[i] * x[i];
  return value;
}

AffineForm AffineForm::operator-() const {
  AffineForm out = *this;
  for (auto& a : out.coefficients) a = -a;
  out.constant = -out.constant;
  return out;
}

bool AffineForm::is_constant() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& a) { return a == 0; });
}

void LinearSystem::add(AffineForm form, Relation relation) {
  if (form.dimension() != dimension_) throw std::invalid_argument("LinearSystem: form has the wrong dimension");
  constraints_.push_back({std::move(form), relation});
}

namespace {

// Row-reduces `rows` (each row: coefficients then constant) in place and
// returns the pivot column of each surviving row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct Inequality {
  std::vector<Rational> a;  // over the free variables
  Rational c;
  bool strict;

  bool operator<(const Inequality& o) const {
    if (a != o.a) return a < o.a;
    if (c != o.c) return c < o.c;
    return strict < o.strict;
  }
};

// Scales so that the last nonzero coefficient has absolute value one.
void normalize(Inequality& q) {
  for (std::size_t i = q.a.size(); i-- > 0;) {
    if (q.a[i] != 0) {
      const Rational s = abs(q.a[i]);
      for (auto& v : q.a) v /= s;
      q.c /= s;
      return;
    }
  }
}

bool holds(const Rational& value, bool strict) { return strict ? value > 0 : value >= 0; }

Rational random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 15);
  return Rational(num(rng), 16);
}

}  // namespace

std::optional<std::vector<Rational>> LinearSystem::solve(std::mt19937_64* rng) const {
  const std::size_t n = dimension_;

  std::vector<std::vector<Rational>> eq;
  for (const auto& k : constraints_) {
    if (k.relation != Relation::Zero) continue;
    auto row = k.form.coefficients;
    row.push_back(k.form.constant);
    eq.push_back(std::move(row));
  }
  const auto pivots = row_reduce(eq, n);
  for (std::size_t i = pivots.size(); i < eq.size(); ++i) {
    if (eq[i][n] != 0) return std::nullopt;  // 0 = nonzero constant
  }
  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_vars.push_back(c);
  }
  const std::size_t m = free_vars.size();

  // x_pivot = -(constant + Σ_free a_f y_f) for each reduced row.
  auto substitute = [&](const AffineForm& form) {
    Inequality q{std::vector<Rational>(m), form.constant, false};
    for (std::size_t j = 0; j < m; ++j) q.a[j] = form.coefficients[free_vars[j]];
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rational& coeff = form.coefficients[pivots[r]];
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < m; ++j) q.a[j] -= coeff * eq[r][free_vars[j]];
      q.c -= coeff * eq[r][n];
    }
    return q;
  };

  // stages[k] holds the constraints in the first k free variables.
  std::vector<std::vector<Inequality>> stages(m + 1);
  {
    std::set<Inequality> initial;
    for (const auto& k : constraints_) {
      if (k.relation == Relation::Zero) continue;
      Inequality q = substitute(k.form);
      q.strict = (k.relation == Relation::Positive);
      normalize(q);
      initial.insert(std::move(q));
    }
    stages[m].assign(initial.begin(), initial.end());
  }

  for (std::size_t k = m; k-- > 0;) {
    std::vector<const Inequality*> lower;
    std::vector<const Inequality*> upper;
    std::set<Inequality> next;
    for (const auto& q : stages[k + 1]) {
      if (q.a[k] > 0) {
        lower.push_back(&q);
      } else if (q.a[k] < 0) {
        upper.push_back(&q);
      } else {
        next.insert(q);
      }
    }
    for (const Inequality* lo : lower) {
      for (const Inequality* hi : upper) {
        // Both are normalized so a_k = ±1 here; adding cancels x_k.
        Inequality q{std::vector<Rational>(m), lo->c + hi->c, lo->strict || hi->strict};
        for (std::size_t j = 0; j < m; ++j) q.a[j] = lo->a[j] + hi->a[j];
        normalize(q);
        next.insert(std::move(q));
      }
    }
    stages[k].assign(next.begin(), next.end());
  }
  for (const auto& q : stages[0]) {
    if (!holds(q.c, q.strict)) return std::nullopt;
  }

  // Back-substitution, one free variable at a time.
  std::vector<Rational> y(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& q : stages[k + 1]) {
      if (q.a[k] == 0) continue;
      Rational rest = q.c;
      for (std::size_t j = 0; j < k; ++j) rest += q.a[j] * y[j];
      Rational bound = -rest / q.a[k];
      if (q.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rational value;
    if (lo && hi) {
      value = (*lo == *hi) ? *lo : *lo + (*hi - *lo) * (rng ? random_fraction(*rng) : Rational(1, 2));
    } else if (lo) {
      value = *lo + (rng ? Rational(std::uniform_int_distribution<int>(1, 8)(*rng)) : Rational(1));
    } else if (hi) {
      value = *hi - (rng ? Rational(std::uniform_int_distribution<int>(1, 8)(*rng)) : Rational(1));
    } else {
      value = rng ? Rational(std::uniform_int_distribution<int>(-4, 4)(*rng)) : Rational(0);
    }
    y[k] = value;
  }

  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < m; ++j) x[free_vars[j]] = y[j];
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational v = -eq[r][n];
    for (std::size_t j = 0; j < m; ++j) v -= eq[r][free_vars[j]] * y[j];
    x[pivots[r]] = v;
  }
  return x;
}

bool feasible(std::span<const AffineForm> equalities, std::span<const AffineForm> strict_positive,
              std::size_t dimension) {
  LinearSystem system(dimension);
  for (const auto& f : equalities) system.add_zero(f);
  for (const auto& f : strict_positive) system.add_positive(f);
  return system.feasible();
}

std::size_t linear_rank(std::span<const AffineForm> forms) {
  if (forms.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) rows.push_back(f.coefficients);
  return row_reduce(rows, forms.front().dimension()).size();
}

}  // namespace cellstrat

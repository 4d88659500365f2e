#include "rrtrop/linalg.hpp"

#include <algorithm>

#include "rrtrop/error.hpp"

namespace rrtrop::linalg {

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) && sgn(b[i])) s += a[i] * b[i];
  return s;
}

QVec to_qvec(const Exponent& a) {
  QVec v;
  v.reserve(a.size());
  for (int e : a) v.emplace_back(e);
  return v;
}

QVec to_qvec(const std::vector<Integer>& a) {
  QVec v;
  v.reserve(a.size());
  for (const auto& e : a) v.emplace_back(e);
  return v;
}

QMat row_basis(QMat rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(const QMat& rows) { return row_basis(rows).size(); }

QMat nullspace(const QMat& rows, std::size_t ncols) {
  QMat rref = row_basis(rows);
  std::vector<int> pivot_of_col(ncols, -1);
  for (std::size_t i = 0; i < rref.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j)
      if (sgn(rref[i][j])) {
        pivot_of_col[j] = static_cast<int>(i);
        break;
      }
  }
  QMat basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    QVec v(ncols, 0);
    v[free] = 1;
    for (std::size_t j = 0; j < ncols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -rref[pivot_of_col[j]][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive(const QVec& v) {
  Integer l = 1, g = 0;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    Integer x = e.get_num() * (l / e.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

namespace {

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational ceil_q(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

struct Bound {
  Rational value;
  bool strict;
};

bool satisfies_lower(const Rational& x, const std::optional<Bound>& lo) {
  return !lo || (lo->strict ? x > lo->value : x >= lo->value);
}

bool satisfies_upper(const Rational& x, const std::optional<Bound>& hi) {
  return !hi || (hi->strict ? x < hi->value : x <= hi->value);
}

std::optional<Rational> pick_value(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  auto ok = [&](const Rational& x) { return satisfies_lower(x, lo) && satisfies_upper(x, hi); };
  if (ok(Rational(0))) return Rational(0);
  if (lo) {
    if (!lo->strict && ok(lo->value)) return lo->value;
    Rational c = floor_q(lo->value) + 1;
    if (ok(c)) return c;
  }
  if (hi) {
    if (!hi->strict && ok(hi->value)) return hi->value;
    Rational c = ceil_q(hi->value) - 1;
    if (ok(c)) return c;
  }
  if (lo && hi) {
    Rational mid = (lo->value + hi->value) / 2;
    if (ok(mid)) return mid;
  }
  return std::nullopt;
}

}  // namespace

std::optional<QVec> solve_inequalities(const std::vector<Inequality>& system, std::size_t nvars) {
  for (const auto& ineq : system)
    if (ineq.coeffs.size() != nvars) throw PreconditionError("inequality dimension mismatch");

  // stages[k] is the system over variables 0..k-1.
  std::vector<std::vector<Inequality>> stages(nvars + 1);
  stages[nvars] = system;
  for (std::size_t k = nvars; k-- > 0;) {
    const auto& cur = stages[k + 1];
    std::vector<Inequality> next;
    std::vector<const Inequality*> pos, neg;
    for (const auto& ineq : cur) {
      int s = sgn(ineq.coeffs[k]);
      if (s > 0)
        pos.push_back(&ineq);
      else if (s < 0)
        neg.push_back(&ineq);
      else
        next.push_back(ineq);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        Rational a = p->coeffs[k], b = -q->coeffs[k];
        Inequality c{QVec(nvars, 0), p->rhs / a + q->rhs / b, p->strict || q->strict};
        for (std::size_t j = 0; j < nvars; ++j) c.coeffs[j] = p->coeffs[j] / a + q->coeffs[j] / b;
        c.coeffs[k] = 0;
        bool duplicate = std::any_of(next.begin(), next.end(), [&](const Inequality& o) {
          return o.coeffs == c.coeffs && o.rhs == c.rhs && o.strict == c.strict;
        });
        if (!duplicate) next.push_back(std::move(c));
      }
    }
    stages[k] = std::move(next);
  }
  for (const auto& ineq : stages[0]) {
    if (ineq.strict ? !(sgn(ineq.rhs) > 0) : sgn(ineq.rhs) < 0) return std::nullopt;
  }

  QVec y(nvars, 0);
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Bound> lo, hi;
    for (const auto& ineq : stages[k + 1]) {
      const Rational& a = ineq.coeffs[k];
      if (sgn(a) == 0) continue;
      Rational rest = ineq.rhs;
      for (std::size_t j = 0; j < k; ++j) rest -= ineq.coeffs[j] * y[j];
      Rational bound = rest / a;
      if (sgn(a) > 0) {
        if (!hi || bound < hi->value || (bound == hi->value && ineq.strict)) hi = Bound{bound, ineq.strict};
      } else {
        if (!lo || bound > lo->value || (bound == lo->value && ineq.strict)) lo = Bound{bound, ineq.strict};
      }
    }
    auto v = pick_value(lo, hi);
    if (!v) return std::nullopt;  // cannot happen for a feasible projection
    y[k] = *v;
  }
  return y;
}

}  // namespace rrtrop::linalg

#include "logcy/cubic_form.hpp"

#include <algorithm>

namespace logcy {

CubicForm CubicForm::toric(const ToricVariety& t) {
  const auto& basis = t.pic_basis_rays();
  CubicForm f(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      for (std::size_t k = j; k < basis.size(); ++k)
        f.set(i, j, k, BigInt(static_cast<long>(t.triple(basis[i], basis[j], basis[k]))));
  return f;
}

void CubicForm::set(std::size_t i, std::size_t j, std::size_t k, const BigInt& v) {
  auto put = [&](std::size_t a, std::size_t b, std::size_t c) { t_[(a * n_ + b) * n_ + c] = v; };
  put(i, j, k);
  put(i, k, j);
  put(j, i, k);
  put(j, k, i);
  put(k, i, j);
  put(k, j, i);
}

BigInt CubicForm::evaluate(const IntVector& a, const IntVector& b, const IntVector& c) const {
  if (a.size() != n_ || b.size() != n_ || c.size() != n_) throw BasisMismatch("cubic form: vector of wrong length");
  BigInt s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(b[j]) == 0) continue;
      BigInt ab = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(c[k]) != 0) s += ab * c[k] * (*this)(i, j, k);
    }
  }
  return s;
}

CubicForm CubicForm::extended(const IntVector& a_dot_e2, const BigInt& e_cube) const {
  if (a_dot_e2.size() != n_) throw BasisMismatch("blowup data of wrong length");
  CubicForm g(n_ + 1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = j; k < n_; ++k) g.set(i, j, k, (*this)(i, j, k));
  for (std::size_t i = 0; i < n_; ++i) g.set(i, n_, n_, a_dot_e2[i]);
  g.set(n_, n_, n_, e_cube);
  return g;
}

namespace {

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

bool in_target(const std::vector<int>& target, int u) { return std::find(target.begin(), target.end(), u) != target.end(); }

}  // namespace

CubicForm blowup_formula_cubic(const ToricVariety& t, const std::vector<int>& target) {
  const std::size_t n = t.pic_basis_rays().size();
  CubicForm base = CubicForm::toric(t);
  IntVector a_dot_e2(n);
  if (target.size() == 3) return base.extended(a_dot_e2, 1);
  if (target.size() != 2) throw DomainError("blowup center must be a wall or a max cone");
  const int i = target[0], j = target[1];
  if (!t.complex().find_edge(i, j)) throw DomainError("blowup center is not a torus-invariant curve");
  const std::size_t rays = static_cast<std::size_t>(t.ray_count());
  const IntVector di = unit_vector(rays, i), dj = unit_vector(rays, j);
  for (std::size_t b = 0; b < n; ++b) a_dot_e2[b] = -t.triple(t.to_ray_divisor(unit_vector(n, b)), di, dj);
  // K.C = -sum_u D_u.C, and E^3 = K.C + 2 for a smooth rational center.
  const BigInt k_dot_c = -t.triple(t.anticanonical(), di, dj);
  return base.extended(a_dot_e2, k_dot_c + 2);
}

CubicForm subdivision_cubic(const ToricVariety& t, const std::vector<int>& target) {
  ToricVariety s(star_subdivide(t.fan(), target));
  const std::size_t n = t.pic_basis_rays().size();
  const std::size_t rays = static_cast<std::size_t>(t.ray_count());
  std::vector<IntVector> basis;
  for (std::size_t b = 0; b < n; ++b) {
    IntVector x = t.to_ray_divisor(unit_vector(n, b));
    BigInt extra = 0;
    for (std::size_t u = 0; u < rays; ++u)
      if (in_target(target, static_cast<int>(u))) extra += x[u];
    x.push_back(extra);
    basis.push_back(std::move(x));
  }
  basis.push_back(unit_vector(rays + 1, rays));
  CubicForm f(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) f.set(i, j, k, s.triple(basis[i], basis[j], basis[k]));
  return f;
}

}  // namespace logcy

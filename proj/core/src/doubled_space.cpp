#include "ccrfock/doubled_space.hpp"

namespace ccrfock {

Matrix DoubledSpace::swap() const {
  Matrix j = Matrix::Zero(dim(), dim());
  j.block(0, m_, m_, m_).setIdentity();
  j.block(m_, 0, m_, m_).setIdentity();
  return j;
}

Matrix DoubledSpace::charge() const {
  Matrix c = Matrix::Identity(dim(), dim());
  c.block(m_, m_, m_, m_) = -Matrix::Identity(m_, m_);
  return c;
}

Matrix DoubledSpace::p1() const {
  Matrix p = Matrix::Zero(dim(), dim());
  p.block(0, 0, m_, m_).setIdentity();
  return p;
}

Matrix DoubledSpace::p2() const {
  Matrix p = Matrix::Zero(dim(), dim());
  p.block(m_, m_, m_, m_).setIdentity();
  return p;
}

KVector basis_vector(const DoubledSpace& space, int j) {
  if (j < 0 || j >= space.half_dim()) throw ShapeError("basis_vector: index out of range");
  Vector v = Vector::Zero(space.dim());
  v(j) = 1.0;
  return KVector(space, std::move(v));
}

KVector conjugate_basis_vector(const DoubledSpace& space, int j) {
  if (j < 0 || j >= space.half_dim())
    throw ShapeError("conjugate_basis_vector: index out of range");
  Vector v = Vector::Zero(space.dim());
  v(space.half_dim() + j) = 1.0;
  return KVector(space, std::move(v));
}

KVector conjugate_vector(const KVector& f) {
  const int m = f.space.half_dim();
  Vector out(f.space.dim());
  out.head(m) = f.coords.tail(m).conjugate();
  out.tail(m) = f.coords.head(m).conjugate();
  return KVector(f.space, std::move(out));
}

Complex gamma_form(const KVector& f, const KVector& g) {
  if (!(f.space == g.space)) throw ShapeError("gamma_form: spaces differ");
  const int m = f.space.half_dim();
  return f.coords.head(m).dot(g.coords.head(m)) -
         f.coords.tail(m).dot(g.coords.tail(m));
}

Complex inner_product(const KVector& f, const KVector& g) {
  if (!(f.space == g.space)) throw ShapeError("inner_product: spaces differ");
  return f.coords.dot(g.coords);
}

Vector upper(const KVector& f) { return f.coords.head(f.space.half_dim()); }

Vector lower(const KVector& f) { return f.coords.tail(f.space.half_dim()); }

KOperator gamma_adjoint(const KOperator& a) {
  Matrix adj = a.domain.charge() * a.matrix.adjoint() * a.codomain.charge();
  return KOperator(a.codomain, a.domain, std::move(adj));
}

KOperator bar_operator(const KOperator& a) {
  Matrix bar = a.codomain.swap() * a.matrix.conjugate() * a.domain.swap();
  return KOperator(a.domain, a.codomain, std::move(bar));
}

Matrix component(const KOperator& a, int row, int col) {
  if (row < 1 || row > 2 || col < 1 || col > 2)
    throw ShapeError("component: block indices must be 1 or 2");
  const int m = a.domain.half_dim();
  const int M = a.codomain.half_dim();
  return a.matrix.block((row - 1) * M, (col - 1) * m, M, m);
}

KOperator from_blocks(const DoubledSpace& dom, const DoubledSpace& cod,
                      const Matrix& a11, const Matrix& a12, const Matrix& a21,
                      const Matrix& a22) {
  const int m = dom.half_dim();
  const int M = cod.half_dim();
  for (const Matrix* b : {&a11, &a12, &a21, &a22})
    if (b->rows() != M || b->cols() != m)
      throw ShapeError("from_blocks: every block must be M x m");
  Matrix a(2 * M, 2 * m);
  a.block(0, 0, M, m) = a11;
  a.block(0, m, M, m) = a12;
  a.block(M, 0, M, m) = a21;
  a.block(M, m, M, m) = a22;
  return KOperator(dom, cod, std::move(a));
}

double conjugation_residual(const KOperator& a) {
  return (bar_operator(a).matrix - a.matrix).norm();
}

}  // namespace ccrfock

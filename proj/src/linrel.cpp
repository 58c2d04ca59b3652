#include "bondsem/linrel.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace bondsem {

namespace {

std::string dims(int a, int b) { return std::to_string(a) + "->" + std::to_string(b); }

// Interleaves one relation acting on the even coordinates (efforts) with an
// independent one of the same shape acting on the odd coordinates (flows).
LinearRelation interleave(const LinearRelation& even, const LinearRelation& odd) {
  const int dom = even.dom_dim(), cod = even.cod_dim();
  Mat rows;
  auto spread = [&](const LinearRelation& part, int offset) {
    for (const Vec& u : part.space().basis()) {
      Vec v(2 * (dom + cod), Rat(0));
      for (int i = 0; i < dom; ++i) v[2 * i + offset] = u[i];
      for (int j = 0; j < cod; ++j) v[2 * dom + 2 * j + offset] = u[dom + j];
      rows.push_back(std::move(v));
    }
  };
  spread(even, 0);
  spread(odd, 1);
  return LinearRelation::from_span(2 * dom, 2 * cod, std::move(rows));
}

}  // namespace

LinearRelation::LinearRelation(int dom_dim, int cod_dim, Subspace space)
    : dom_(dom_dim), cod_(cod_dim), space_(std::move(space)) {
  if (dom_ < 0 || cod_ < 0) throw std::invalid_argument("relation: negative dimension");
  if (space_.ambient_dim() != dom_ + cod_)
    throw std::invalid_argument("relation: ambient dimension != dom+cod");
}

LinearRelation LinearRelation::identity(int dim) {
  Mat rows;
  for (int i = 0; i < dim; ++i) {
    Vec v(2 * dim, Rat(0));
    v[i] = 1;
    v[dim + i] = 1;
    rows.push_back(std::move(v));
  }
  return from_span(dim, dim, std::move(rows));
}

LinearRelation LinearRelation::from_span(int dom_dim, int cod_dim, Mat rows) {
  return LinearRelation(dom_dim, cod_dim, Subspace::span(dom_dim + cod_dim, std::move(rows)));
}

LinearRelation LinearRelation::from_constraints(int dom_dim, int cod_dim,
                                                const Mat& constraint_rows) {
  return LinearRelation(dom_dim, cod_dim,
                        Subspace::from_constraints(dom_dim + cod_dim, constraint_rows));
}

LinearRelation LinearRelation::permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat rows;
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n) throw std::invalid_argument("permutation: index out of range");
    Vec v(2 * n, Rat(0));
    v[i] = 1;
    v[n + perm[i]] = 1;
    rows.push_back(std::move(v));
  }
  return from_span(n, n, std::move(rows));
}

LinearRelation LinearRelation::scalar_generator(std::string_view name) {
  auto sp = [](int d, int c, Mat rows) { return from_span(d, c, std::move(rows)); };
  if (name == "dup")  // x |-> (x, x)
    return sp(1, 2, {{1, 1, 1}});
  if (name == "del")  // x |-> (), any x
    return sp(1, 0, {{1}});
  if (name == "codup")  // (x, x) |-> x
    return sp(2, 1, {{1, 1, 1}});
  if (name == "codel")  // () |-> x, any x
    return sp(0, 1, {{1}});
  if (name == "add")  // (x, y) |-> x + y
    return sp(2, 1, {{1, 0, 1}, {0, 1, 1}});
  if (name == "zero")  // () |-> 0
    return sp(0, 1, {});
  if (name == "coadd")  // x + y |-> (x, y)
    return sp(1, 2, {{1, 1, 0}, {1, 0, 1}});
  if (name == "cozero")  // 0 |-> ()
    return sp(1, 0, {});
  throw std::invalid_argument("unknown scalar generator: " + std::string(name));
}

LinearRelation LinearRelation::pair_generator(std::string_view name) {
  if (name == "M") return interleave(scalar_generator("add"), scalar_generator("codup"));
  if (name == "I") return interleave(scalar_generator("zero"), scalar_generator("codel"));
  if (name == "D") return interleave(scalar_generator("coadd"), scalar_generator("dup"));
  if (name == "E") return interleave(scalar_generator("cozero"), scalar_generator("del"));
  if (name == "Mp") return interleave(scalar_generator("codup"), scalar_generator("add"));
  if (name == "Ip") return interleave(scalar_generator("codel"), scalar_generator("zero"));
  if (name == "Dp") return interleave(scalar_generator("dup"), scalar_generator("coadd"));
  if (name == "Ep") return interleave(scalar_generator("del"), scalar_generator("cozero"));
  if (name == "braid") return permutation({2, 3, 0, 1});
  throw std::invalid_argument("unknown pair generator: " + std::string(name));
}

LinearRelation LinearRelation::dagger() const {
  Mat rows;
  for (const Vec& u : space_.basis()) {
    Vec v(dom_ + cod_, Rat(0));
    for (int j = 0; j < cod_; ++j) v[j] = u[dom_ + j];
    for (int i = 0; i < dom_; ++i) v[cod_ + i] = u[i];
    rows.push_back(std::move(v));
  }
  return from_span(cod_, dom_, std::move(rows));
}

bool LinearRelation::is_lagrangian() const {
  if (dom_ % 2 != 0 || cod_ % 2 != 0)
    throw std::invalid_argument("is_lagrangian: odd dimension " + dims(dom_, cod_));
  const int pairs = (dom_ + cod_) / 2;
  if (space_.dim() != pairs) return false;
  std::vector<int> signs(pairs, 1);
  for (int j = 0; j < dom_ / 2; ++j) signs[j] = -1;
  const Mat& b = space_.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (symplectic_eval(b[i], b[j], signs) != 0) return false;
  return true;
}

LinearRelation rel_compose(const LinearRelation& s, const LinearRelation& r) {
  if (r.cod_dim() != s.dom_dim())
    throw std::invalid_argument("rel_compose: arity mismatch, first factor is " +
                                dims(r.dom_dim(), r.cod_dim()) + " but second is " +
                                dims(s.dom_dim(), s.cod_dim()));
  const int a = r.dom_dim(), b = r.cod_dim(), c = s.cod_dim();
  const Mat& R = r.space().basis();
  const Mat& S = s.space().basis();
  const int p = static_cast<int>(R.size()), q = static_cast<int>(S.size());

  // Parameterize r by lambda over R and s by mu over S; the composite is the
  // image of { (lambda, mu) : lambda.R and mu.S agree on the middle block }.
  Mat middle(b, Vec(p + q, Rat(0)));
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < p; ++j) middle[i][j] = R[j][a + i];
    for (int j = 0; j < q; ++j) middle[i][p + j] = -S[j][i];
  }
  Mat params = nullspace(std::move(middle), p + q);

  Mat rows;
  rows.reserve(params.size());
  for (const Vec& pm : params) {
    Vec v(a + c, Rat(0));
    for (int j = 0; j < p; ++j) {
      if (pm[j] == 0) continue;
      for (int i = 0; i < a; ++i) v[i] += pm[j] * R[j][i];
    }
    for (int j = 0; j < q; ++j) {
      if (pm[p + j] == 0) continue;
      for (int i = 0; i < c; ++i) v[a + i] += pm[p + j] * S[j][b + i];
    }
    rows.push_back(std::move(v));
  }
  return LinearRelation::from_span(a, c, std::move(rows));
}

LinearRelation rel_tensor(const LinearRelation& r, const LinearRelation& s) {
  const int a = r.dom_dim(), b = r.cod_dim(), c = s.dom_dim(), d = s.cod_dim();
  Mat rows;
  for (const Vec& u : r.space().basis()) {
    Vec v(a + c + b + d, Rat(0));
    for (int i = 0; i < a; ++i) v[i] = u[i];
    for (int j = 0; j < b; ++j) v[a + c + j] = u[a + j];
    rows.push_back(std::move(v));
  }
  for (const Vec& u : s.space().basis()) {
    Vec v(a + c + b + d, Rat(0));
    for (int i = 0; i < c; ++i) v[a + i] = u[i];
    for (int j = 0; j < d; ++j) v[a + c + b + j] = u[c + j];
    rows.push_back(std::move(v));
  }
  return LinearRelation::from_span(a + c, b + d, std::move(rows));
}

Mat symplectic_form(int pair_count, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != pair_count)
    throw std::invalid_argument("symplectic_form: one sign per pair required");
  Mat form(2 * pair_count, Vec(2 * pair_count, Rat(0)));
  for (int j = 0; j < pair_count; ++j) {
    // omega((u,v),(u',v')) = u'v - uv' on pair j, negated on conjugate pairs.
    form[2 * j + 1][2 * j] = signs[j];
    form[2 * j][2 * j + 1] = -signs[j];
  }
  return form;
}

Rat symplectic_eval(const Vec& u, const Vec& v, const std::vector<int>& signs) {
  if (u.size() != v.size() || u.size() != 2 * signs.size())
    throw std::invalid_argument("symplectic_eval: length mismatch");
  Rat total = 0;
  for (size_t j = 0; j < signs.size(); ++j) {
    Rat term = v[2 * j] * u[2 * j + 1] - u[2 * j] * v[2 * j + 1];
    total += signs[j] * term;
  }
  return total;
}

}  // namespace bondsem

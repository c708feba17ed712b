#include "uaw/onsager.hpp"

#include <stdexcept>

namespace uaw {

namespace {
RatFuncQ qp(int e) { return RatFuncQ::q_power(e); }
}

MatN MatN::identity(int n) {
  MatN m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFuncQ(1);
  return m;
}

bool MatN::is_zero() const {
  for (const RatFuncQ& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

void MatN::require_same_dim(const MatN& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
}

MatN& MatN::operator+=(const MatN& o) {
  require_same_dim(o);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

MatN& MatN::operator-=(const MatN& o) {
  require_same_dim(o);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

MatN& MatN::operator*=(const MatN& o) {
  require_same_dim(o);
  MatN prod(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const RatFuncQ& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const RatFuncQ& g = o.at(k, j);
        if (!g.is_zero()) prod.at(i, j) += f * g;
      }
    }
  *this = std::move(prod);
  return *this;
}

MatN MatN::operator-() const {
  MatN r(n_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

MatN operator+(MatN a, const MatN& b) { return a += b; }
MatN operator-(MatN a, const MatN& b) { return a -= b; }
MatN operator*(MatN a, const MatN& b) { return a *= b; }

MatN operator*(const RatFuncQ& c, MatN m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) m.at(i, j) *= c;
  return m;
}

std::string MatN::str() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

std::pair<MatN, MatN> vidar_module() {
  auto theta = [](int i) { return qp(2 * i) + qp(-2 * i); };
  RatFuncQ vt = (qp(4) - qp(-4)) * (qp(2) - qp(-2)) * (qp(1) - qp(-1)) * (qp(1) - qp(-1));

  MatN x(4), y(4);
  x.at(0, 0) = theta(0);
  x.at(1, 1) = theta(1);
  x.at(2, 2) = theta(1);
  x.at(3, 3) = theta(2);
  x.at(1, 0) = RatFuncQ(1);
  x.at(3, 1) = RatFuncQ(1);

  y.at(0, 0) = theta(0);
  y.at(1, 1) = theta(1);
  y.at(2, 2) = theta(1);
  y.at(3, 3) = theta(2);
  y.at(0, 1) = vt;
  y.at(0, 2) = qp(1);
  y.at(2, 3) = RatFuncQ(1);

  return {std::move(x), std::move(y)};
}

RatFuncQ xi_commutator_entry() {
  auto [x, y] = vidar_module();
  MatN x1 = xi1(x, y);
  MatN x2 = xi2(x, y);
  MatN m = x1 * x * x2 - x2 * x * x1;
  return m.at(3, 2);
}

DeltaElement xi1_delta() { return commutator(DeltaElement::A(), DeltaElement::B()); }

DeltaElement xi2_delta() { return xi2(DeltaElement::A(), DeltaElement::B()); }

bool xi_commute_in_delta() { return commutator(xi1_delta(), xi2_delta()).is_zero(); }

bool xi_kernel_vanishes() {
  DeltaElement x1 = xi1_delta();
  DeltaElement x2 = xi2_delta();
  for (const DeltaElement& z : {DeltaElement::A(), DeltaElement::B()})
    if (!(x1 * z * x2 - x2 * z * x1).is_zero()) return false;
  return true;
}

}  // namespace uaw

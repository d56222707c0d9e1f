#include "bvdouble/bvcomplex.hpp"

namespace bvdouble {

namespace {

bool has_section(int degree) { return degree == 1 || degree == 2; }
bool in_range(int degree) { return degree >= 0 && degree <= 3; }

const GaussRational kHalf(Rational(1, 2));

}  // namespace

BVElement BVElement::zero(int degree, int dim) {
  BVElement e;
  e.degree_ = degree;
  e.dim_ = dim;
  e.s_ = FourierScalar(dim);
  if (has_section(degree)) e.sec_ = GenSection(dim);
  return e;
}

BVElement BVElement::deg0(FourierScalar u) {
  BVElement e = zero(0, u.dim());
  e.s_ = std::move(u);
  return e;
}

BVElement BVElement::deg1(GenSection a, FourierScalar v) {
  if (a.dim() != v.dim()) throw Error("slot dimension mismatch");
  BVElement e = zero(1, v.dim());
  e.sec_ = std::move(a);
  e.s_ = std::move(v);
  return e;
}

BVElement BVElement::deg2(GenSection at, FourierScalar vt) {
  if (at.dim() != vt.dim()) throw Error("slot dimension mismatch");
  BVElement e = zero(2, vt.dim());
  e.sec_ = std::move(at);
  e.s_ = std::move(vt);
  return e;
}

BVElement BVElement::deg3(FourierScalar ut) {
  BVElement e = zero(3, ut.dim());
  e.s_ = std::move(ut);
  return e;
}

BVElement BVElement::section(GenSection a) {
  const int n = a.dim();
  return deg1(std::move(a), FourierScalar(n));
}

BVElement BVElement::vslot(FourierScalar v) {
  const int n = v.dim();
  return deg1(GenSection(n), std::move(v));
}

BVElement BVElement::vtslot(FourierScalar vt) {
  const int n = vt.dim();
  return deg2(GenSection(n), std::move(vt));
}

bool BVElement::is_zero() const {
  if (!in_range(degree_)) return true;
  return s_.is_zero() && (!has_section(degree_) || sec_.is_zero());
}

BVElement& BVElement::operator+=(const BVElement& o) {
  if (dim_ != o.dim_) throw Error("element dimension mismatch");
  if (degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw Error("adding elements of degrees " + std::to_string(degree_) + " and " +
                std::to_string(o.degree_));
  }
  if (!in_range(degree_)) return *this;
  s_ += o.s_;
  if (has_section(degree_)) sec_ += o.sec_;
  return *this;
}

BVElement& BVElement::operator-=(const BVElement& o) { return *this += -o; }

BVElement BVElement::operator-() const {
  BVElement r = *this;
  r.s_ = -r.s_;
  if (has_section(degree_)) r.sec_ = -r.sec_;
  return r;
}

BVElement operator*(BVElement a, const GaussRational& c) {
  a.s_ *= c;
  if (has_section(a.degree_)) a.sec_ = a.sec_ * c;
  return a;
}

bool operator==(const BVElement& a, const BVElement& b) {
  if (a.is_zero() && b.is_zero()) return a.dim_ == b.dim_;
  return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.s_ == b.s_ &&
         (!has_section(a.degree_) || a.sec_ == b.sec_);
}

nlohmann::json BVElement::to_json() const {
  nlohmann::json j = {{"degree", degree_}};
  switch (degree_) {
    case 0:
      j["u"] = s_.to_json();
      break;
    case 1:
      j["A"] = sec_.to_json();
      j["v"] = s_.to_json();
      break;
    case 2:
      j["At"] = sec_.to_json();
      j["vt"] = s_.to_json();
      break;
    case 3:
      j["ut"] = s_.to_json();
      break;
    default:
      break;
  }
  return j;
}

BVElement random_element(int degree, int dim, int cutoff, Rng& rng, int terms) {
  switch (degree) {
    case 0:
      return BVElement::deg0(random_scalar(dim, cutoff, rng, terms));
    case 1: {
      GenSection a = random_section(dim, cutoff, rng, terms);
      return BVElement::deg1(std::move(a), random_scalar(dim, cutoff, rng, terms));
    }
    case 2: {
      GenSection a = random_section(dim, cutoff, rng, terms);
      return BVElement::deg2(std::move(a), random_scalar(dim, cutoff, rng, terms));
    }
    case 3:
      return BVElement::deg3(random_scalar(dim, cutoff, rng, terms));
    default:
      throw Error("random_element: degree out of range");
  }
}

BVElement Q(const BVElement& x) {
  const int n = x.dim();
  switch (x.degree()) {
    case 0:
      return BVElement::deg1(exterior_d(x.scalar()), FourierScalar(n));
    case 1:
      return BVElement::deg2(exterior_d(x.scalar()), divergence(x.sec()) * kHalf + x.scalar());
    case 2:
      return BVElement::deg3(divergence(x.sec()) * -kHalf);
    default:
      return BVElement::zero(x.degree() + 1, n);
  }
}

BVElement b_op(const BVElement& x) {
  const int n = x.dim();
  switch (x.degree()) {
    case 1:
      return BVElement::deg0(x.scalar());
    case 2:
      return BVElement::section(-x.sec());
    case 3:
      return BVElement::vtslot(-x.scalar());
    default:
      return BVElement::zero(x.degree() - 1, n);
  }
}

BVElement c_op(const BVElement& x) {
  const int n = x.dim();
  switch (x.degree()) {
    case 0:
      return BVElement::vslot(x.scalar());
    case 1:
      return BVElement::deg2(-x.sec(), FourierScalar(n));
    case 2:
      return BVElement::deg3(-x.scalar());
    default:
      return BVElement::zero(x.degree() + 1, n);
  }
}

BVElement d_part(const BVElement& x) {
  const int n = x.dim();
  switch (x.degree()) {
    case 0:
      return BVElement::section(exterior_d(x.scalar()));
    case 1:
      return BVElement::deg2(exterior_d(x.scalar()), FourierScalar(n));
    default:
      return BVElement::zero(x.degree() + 1, n);
  }
}

FourierScalar dstar(const BVElement& x) {
  switch (x.degree()) {
    case 1:
      return divergence(x.sec()) * kHalf;
    case 2:
      return divergence(x.sec()) * -kHalf;
    default:
      throw Error("dstar: degree must be 1 or 2");
  }
}

BVElement dstar_part(const BVElement& x) {
  switch (x.degree()) {
    case 1:
      return BVElement::vtslot(dstar(x));
    case 2:
      return BVElement::deg3(dstar(x));
    default:
      return BVElement::zero(x.degree() + 1, x.dim());
  }
}

FourierScalar dtilde(const FourierScalar& v) { return v; }
FourierScalar dtilde_inverse(const FourierScalar& vt) { return vt; }

BVElement qtilde_part(const BVElement& x) {
  if (x.degree() == 1) return BVElement::vtslot(dtilde(x.scalar()));
  return BVElement::zero(x.degree() + 1, x.dim());
}

BVElement project_Fc(const BVElement& x) {
  if (x.degree() == 1) return BVElement::deg1(x.sec(), -dtilde_inverse(dstar(x)));
  if (x.degree() == 2) {
    return BVElement::deg2(x.sec() - exterior_d(dtilde_inverse(x.scalar())), FourierScalar(x.dim()));
  }
  return x;
}

bool in_Fc(const BVElement& x) { return project_Fc(x) == x; }

GaussRational odd_pairing(const BVElement& x, const BVElement& y) {
  if (x.degree() + y.degree() != 3 || !in_range(x.degree()) || !in_range(y.degree())) {
    return GaussRational();
  }
  if (x.degree() == 0 || x.degree() == 3) {
    return integrate(x.scalar() * y.scalar()) * GaussRational(-2);
  }
  return integrate(pairing(x.sec(), y.sec()) - x.scalar() * y.scalar() * GaussRational(2));
}

}  // namespace bvdouble

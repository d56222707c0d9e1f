#include "bvdouble/deform.hpp"

namespace bvdouble {

namespace {

const GaussRational kHalf(Rational(1, 2));

template <class F>
void for_metric(const Metric& eta, F&& f) {
  for (int i = 0; i < eta.dim(); ++i) {
    for (int j = 0; j < eta.dim(); ++j) {
      if (sgn(eta.up(i, j)) != 0) f(i, j, GaussRational(eta.up(i, j)));
    }
  }
}

OneForm component_laplacian(const OneForm& b, const Metric& eta) {
  OneForm r;
  for (const auto& x : b) r.push_back(laplacian(x, eta));
  return r;
}

BVElement pure(const BVElement& a) { return BVElement::section(a.sec()); }

}  // namespace

std::vector<BVElement> flat_sections(const Metric& eta) {
  const int dim = eta.dim();
  std::vector<BVElement> fs;
  for (int i = 0; i < dim; ++i) {
    GenSection s(dim);
    s.vec[i] = FourierScalar::constant(dim, GaussRational(1));
    fs.push_back(BVElement::section(std::move(s)));
  }
  return fs;
}

VectorField hat_d(const FourierScalar& u, const Metric& eta) {
  VectorField r = zero_components(u.dim());
  for_metric(eta, [&](int i, int j, const GaussRational& e) { r[j] += partial(u, i) * e; });
  return r;
}

FourierScalar hat_div(const OneForm& b, const Metric& eta) {
  FourierScalar r(eta.dim());
  for_metric(eta, [&](int i, int j, const GaussRational& e) { r += partial(b[j], i) * e; });
  return r;
}

VectorField raise(const OneForm& b, const Metric& eta) {
  VectorField r = zero_components(eta.dim());
  for_metric(eta, [&](int i, int j, const GaussRational& e) { r[i] += b[j] * e; });
  return r;
}

OneForm lower(const VectorField& a, const Metric& eta) {
  const int dim = eta.dim();
  OneForm r = zero_components(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (sgn(eta.down(i, j)) != 0) r[i] += a[j] * GaussRational(eta.down(i, j));
    }
  }
  return r;
}

BVElement R_eta(const BVElement& x, const Metric& eta) {
  const auto fs = flat_sections(eta);
  BVElement r = BVElement::zero(x.degree() + 1, x.dim());
  for_metric(eta, [&](int i, int j, const GaussRational& e) {
    r += mu(fs[i], bracket(fs[j], x)) * e;
  });
  return r;
}

BVElement R_eta_diagram(const BVElement& x, const Metric& eta) {
  const int dim = x.dim();
  switch (x.degree()) {
    case 0:
      return BVElement::deg1(GenSection(hat_d(x.scalar(), eta), zero_components(dim)),
                             -laplacian(x.scalar(), eta));
    case 1: {
      GenSection xt(add(component_laplacian(x.sec().vec, eta), hat_d(x.scalar(), eta)),
                    component_laplacian(x.sec().form, eta));
      return BVElement::deg2(std::move(xt), hat_div(x.sec().form, eta) * kHalf);
    }
    case 2:
      return BVElement::deg3(laplacian(x.scalar(), eta) - hat_div(x.sec().form, eta) * kHalf);
    default:
      return BVElement::zero(x.degree() + 1, dim);
  }
}

BVElement Q_eta(const BVElement& x, const Metric& eta) { return Q(x) + R_eta(x, eta); }

BVElement mu_bar_eta(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  const auto fs = flat_sections(eta);
  BVElement r = BVElement::zero(a1.degree() + a2.degree(), a1.dim());
  for_metric(eta, [&](int i, int j, const GaussRational& e) {
    r += (nu(fs[i], bracket(fs[j], a1), a2) - mu(m(fs[i], a1), bracket(fs[j], a2))) * e;
  });
  return r;
}

BVElement mu_bar_eta_table(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  const auto fs = flat_sections(eta);
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  BVElement r = BVElement::zero(d1 + d2, a1.dim());
  if (d1 == 1 && d2 == 0) {
    BVElement x1 = pure(a1);
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      r -= mu(m(fs[i], x1), bracket(fs[j], a2)) * e;
    });
  } else if (d1 == 1 && d2 == 1) {
    BVElement x1 = pure(a1), x2 = pure(a2);
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      r += (mu(m(fs[i], x2), bracket(fs[j], x1)) - mu(m(fs[i], x1), bracket(fs[j], x2)) -
            mu(m(bracket(fs[j], x1), x2), fs[i])) *
           e;
    });
  } else if (d1 == 2 && d2 == 1) {
    BVElement vt1 = BVElement::vtslot(a1.scalar()), x2 = pure(a2);
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      r -= mu(m(fs[i], x2), bracket(fs[j], vt1)) * e;
    });
  } else if (d1 == 1 && d2 == 2) {
    BVElement x1 = pure(a1), vt2 = BVElement::vtslot(a2.scalar());
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      r -= mu(m(fs[i], x1), bracket(fs[j], vt2)) * e;
    });
  }
  return r;
}

BVElement mu_bar_eta_explicit(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  const int dim = a1.dim();
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  if (d1 == 1 && d2 == 0) {
    FourierScalar v(dim);
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      v -= a1.sec().form[i] * partial(a2.scalar(), j) * e;
    });
    return BVElement::vslot(std::move(v));
  }
  if (d1 == 1 && d2 == 1) {
    const GenSection& x1 = a1.sec();
    const GenSection& x2 = a2.sec();
    GenSection xt(dim);
    for_metric(eta, [&](int i, int j, const GaussRational& e) {
      for (int k = 0; k < dim; ++k) {
        xt.vec[k] += (x1.form[i] * partial(x2.vec[k], j) - x2.form[i] * partial(x1.vec[k], j)) * e;
        xt.form[k] += (x1.form[i] * partial(x2.form[k], j) - x2.form[i] * partial(x1.form[k], j)) * e;
      }
      FourierScalar pr(dim);
      for (int k = 0; k < dim; ++k) {
        pr += partial(x1.vec[k], j) * x2.form[k] + partial(x1.form[k], j) * x2.vec[k];
      }
      xt.vec[i] += pr * e;
    });
    return BVElement::deg2(std::move(xt), FourierScalar(dim));
  }
  if ((d1 == 2 && d2 == 1) || (d1 == 1 && d2 == 2)) {
    const OneForm& b = (d1 == 1 ? a1 : a2).sec().form;
    const FourierScalar& vt = (d1 == 2 ? a1 : a2).scalar();
    FourierScalar ut(dim);
    for_metric(eta, [&](int i, int j, const GaussRational& e) { ut += b[i] * partial(vt, j) * e; });
    return BVElement::deg3(std::move(ut));
  }
  return BVElement::zero(d1 + d2, dim);
}

BVElement mu_eta(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  return mu(a1, a2) + mu_bar_eta(a1, a2, eta);
}

BVElement mu_eta_sym(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  return (mu_eta(a1, a2, eta) + mu_eta(a2, a1, eta) * sign(a1.degree() * a2.degree())) * kHalf;
}

BVElement bracket_eta(const BVElement& a1, const BVElement& a2, const Metric& eta) {
  const int d1 = a1.degree();
  return (b_op(mu_eta(a1, a2, eta)) - mu_eta(b_op(a1), a2, eta) -
          mu_eta(a1, b_op(a2), eta) * sign(d1)) *
         sign(d1);
}

BVElement jacobi_eta_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3,
                              const Metric& eta) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  return bracket_eta(bracket_eta(a1, a2, eta), a3, eta) - bracket_eta(a1, bracket_eta(a2, a3, eta), eta) +
         bracket_eta(a2, bracket_eta(a1, a3, eta), eta) * sign((d1 - 1) * (d2 - 1));
}

FnOps deformed_ops(const Metric& eta) {
  FnOps o;
  o.Q = [eta](const BVElement& x) { return Q_eta(x, eta); };
  o.mu = [eta](const BVElement& a, const BVElement& b) { return mu_eta(a, b, eta); };
  o.m = [](const BVElement& a, const BVElement& b) { return m(a, b); };
  o.nu = [](const BVElement& a, const BVElement& b, const BVElement& c) { return nu(a, b, c); };
  return o;
}

FnOps deformed_sym_ops(const Metric& eta) {
  FnOps o = deformed_ops(eta);
  o.mu = [eta](const BVElement& a, const BVElement& b) { return mu_eta_sym(a, b, eta); };
  o.nu = [](const BVElement& a, const BVElement& b, const BVElement& c) { return nu_sym(a, b, c); };
  return o;
}

BVElement ym_embed(YmMap kind, const YmArg& arg, const Metric& eta) {
  const bool wants_form = kind != YmMap::f3 && kind != YmMap::g3;
  if (wants_form != std::holds_alternative<OneForm>(arg)) throw Error("ym_embed: slot mismatch");
  if (!wants_form) {
    const auto& s = std::get<FourierScalar>(arg);
    if (kind == YmMap::f3) return BVElement::vslot(s);
    OneForm ds = zero_components(s.dim());
    for (int i = 0; i < s.dim(); ++i) ds[i] = partial(s, i);
    return BVElement::deg2(GenSection(hat_d(s, eta), std::move(ds)), s);
  }
  const auto& b = std::get<OneForm>(arg);
  const int dim = eta.dim();
  if (static_cast<int>(b.size()) != dim) throw Error("ym_embed: dimension mismatch");
  switch (kind) {
    case YmMap::f1:
      return BVElement::deg1(GenSection(raise(b, eta), b), -hat_div(b, eta));
    case YmMap::g1:
      return BVElement::deg2(GenSection(raise(b, eta), b), FourierScalar(dim));
    case YmMap::f2:
      return BVElement::deg1(GenSection(scale(raise(b, eta), -1), b), FourierScalar(dim));
    default:
      return BVElement::deg2(GenSection(scale(raise(b, eta), -1), b), FourierScalar(dim));
  }
}

OneForm g1_d0(const FourierScalar& u) { return exterior_d(u).form; }

OneForm g1_d1(const OneForm& b, const Metric& eta) {
  const int dim = eta.dim();
  OneForm r = zero_components(dim);
  for_metric(eta, [&](int i, int j, const GaussRational& e) {
    for (int k = 0; k < dim; ++k) {
      r[k] += partial(partial(b[k], j) - partial(b[j], k), i) * e;
    }
  });
  return r;
}

FourierScalar g1_d2(const OneForm& bt, const Metric& eta) { return -hat_div(bt, eta); }

OneForm g2_d(const OneForm& b, const Metric& eta) { return component_laplacian(b, eta); }

}  // namespace bvdouble

#ifndef KZMODP_DERHAM_HPP
#define KZMODP_DERHAM_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kzmodp/errors.hpp"
#include "kzmodp/field.hpp"
#include "kzmodp/kz_system.hpp"
#include "kzmodp/matrix.hpp"
#include "kzmodp/unipoly.hpp"

namespace kzmodp {

// An ordered tuple of positive integers with a fixed sum.
struct Composition {
  std::vector<int> parts;

  int sum() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Visits the 2^{M-1} compositions of M in descending lexicographic order,
// starting from (M) and ending at (1, ..., 1). Stops early if fn returns false.
void for_each_composition(int M, const std::function<bool(const Composition&)>& fn);
std::vector<Composition> compositions(int M);

// Coefficients in the basis {Phi} u {Phi/(x - z_j)^m : 1 <= j <= n, 1 <= m <= M}
// of polynomials of degree <= Mn. poles[j][m - 1] holds the Phi/(x - z_{j+1})^m
// coefficient.
template <Field F>
struct TwistedForm {
  using Element = typename F::Element;
  Element phi;
  std::vector<std::vector<Element>> poles;

  static TwistedForm zero(const F& field, std::size_t n, std::size_t M) {
    return TwistedForm{field.zero(), std::vector<std::vector<Element>>(n, std::vector<Element>(M, field.zero()))};
  }
  Element& pole(std::size_t j, std::size_t m) { return poles[j][m - 1]; }
  const Element& pole(std::size_t j, std::size_t m) const { return poles[j][m - 1]; }

  bool is_zero() const {
    if (!phi.is_zero()) return false;
    for (const auto& row : poles) {
      for (const auto& c : row) {
        if (!c.is_zero()) return false;
      }
    }
    return true;
  }
  // Support only in Phi/(x - z_j), i.e. the form lies in the logarithmic span.
  bool is_logarithmic() const {
    if (!phi.is_zero()) return false;
    for (const auto& row : poles) {
      for (std::size_t m = 1; m < row.size(); ++m) {
        if (!row[m].is_zero()) return false;
      }
    }
    return true;
  }

  TwistedForm& add_scaled(const TwistedForm& o, const Element& s) {
    phi = phi + o.phi * s;
    for (std::size_t j = 0; j < poles.size(); ++j) {
      for (std::size_t m = 0; m < poles[j].size(); ++m) poles[j][m] = poles[j][m] + o.poles[j][m] * s;
    }
    return *this;
  }

  friend bool operator==(const TwistedForm& a, const TwistedForm& b) {
    if (!(a.phi == b.phi) || a.poles.size() != b.poles.size()) return false;
    for (std::size_t j = 0; j < a.poles.size(); ++j) {
      for (std::size_t m = 0; m < a.poles[j].size(); ++m) {
        if (!(a.poles[j][m] == b.poles[j][m])) return false;
      }
    }
    return true;
  }
};

// c[j] is the coefficient of Phi/(x - z_{j+1}).
template <Field F>
struct LogForm {
  std::vector<typename F::Element> c;

  friend bool operator==(const LogForm& a, const LogForm& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t j = 0; j < a.c.size(); ++j) {
      if (!(a.c[j] == b.c[j])) return false;
    }
    return true;
  }
};

// Q_i = Phi/(x - z_i)^M + sum_{m < M} A_{i,m} Phi/(x - z_i)^m.
template <Field F>
struct QPolynomial {
  int i;  // 1-based
  std::vector<typename F::Element> A;  // A[m - 1] = A_{i,m}, m = 1..M-1
  TwistedForm<F> form;
};

struct Spectrum {
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
};

// The x-derivative on polynomials of degree <= Mn, written in the twisted
// basis, together with the Q_i polynomials and the decomposition they give.
// Indices i, j are 1-based as in the formulas; m runs over 1..M.
template <Field F>
class DeRham {
 public:
  using Element = typename F::Element;
  using Poly = UniPoly<F>;

  DeRham(const KzParams& params, Context<F> ctx)
      : params_(params), ctx_(std::move(ctx)), n_(ctx_.z.size()), M_(params.M) {
    const F& K = ctx_.field;
    inv_int_.push_back(K.zero());
    for (std::size_t m = 1; m <= std::max<std::size_t>(M_, 1); ++m) inv_int_.push_back(inverse_of_int(K, static_cast<long long>(m)));
    // w[i][j] = 1/(z_j - z_i)
    w_.assign(n_, std::vector<Element>(n_, K.zero()));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j) w_[i][j] = (ctx_.z[j] - ctx_.z[i]).inv();
      }
    }
    const Element Mk = K.from_int(M_);
    c_.assign(n_, std::vector<Element>(M_ + 1, K.zero()));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        Element pw = K.one();
        for (std::size_t m = 1; m <= M_; ++m) {
          pw = pw * w_[i][j];
          c_[i][m] = c_[i][m] + Mk * pw;
        }
      }
    }
  }

  const KzParams& params() const { return params_; }
  const Context<F>& context() const { return ctx_; }
  const F& field() const { return ctx_.field; }
  std::size_t n() const { return n_; }

  // C_{i,m} = sum_{j != i} M / (z_j - z_i)^m
  Element c_coeff(int i, int m) const {
    check_index(i);
    if (m < 1) throw IndexOutOfRange("pole order must be positive");
    if (static_cast<std::size_t>(m) <= M_) return c_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m)];
    Element s = field().zero();
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != static_cast<std::size_t>(i - 1)) s = s + field().from_int(M_) * inv_diff_pow(i, static_cast<int>(j) + 1, m);
    }
    return s;
  }

  // 1/(z_j - z_i)^m
  Element inv_diff_pow(int i, int j, int m) const {
    Element r = field().one();
    for (int k = 0; k < m; ++k) r = r * w_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return r;
  }

  Element inv_int(int m) const { return inv_int_.at(static_cast<std::size_t>(m)); }

  // D_{i,m}: coefficient M/(z_j - z_i)^m on Phi/(x - z_j), j != i.
  LogForm<F> d_log_form(int i, int m) const {
    check_index(i);
    LogForm<F> r{std::vector<Element>(n_, field().zero())};
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != static_cast<std::size_t>(i - 1)) r.c[j] = field().from_int(M_) * inv_diff_pow(i, static_cast<int>(j) + 1, m);
    }
    return r;
  }

  Poly master() const { return master_poly(params_, ctx_); }

  // Phi / (x - z_j)^M = prod_{l != j} (x - z_l)^M
  Poly cofactor(int j) const {
    Poly h = Poly::constant(field(), field().one());
    for (std::size_t l = 0; l < n_; ++l) {
      if (l != static_cast<std::size_t>(j - 1)) h *= Poly::linear_root(field(), ctx_.z[l]).pow(M_);
    }
    return h;
  }

  // Phi / (x - z_j)^m
  Poly basis_poly(int j, int m) const {
    return cofactor(j) * Poly::linear_root(field(), ctx_.z[static_cast<std::size_t>(j - 1)]).pow(M_ - static_cast<unsigned>(m));
  }

  TwistedForm<F> zero_form() const { return TwistedForm<F>::zero(field(), n_, M_); }

  // Partial fractions of (f - c Phi)/Phi, read off from the Taylor expansion
  // of (f - c Phi)/cofactor_j at x = z_j.
  TwistedForm<F> to_twisted_basis(const Poly& f) const {
    const long top = static_cast<long>(params_.degree());
    if (f.degree() > top) throw DegreeTooHigh("polynomial degree exceeds Mn");
    TwistedForm<F> form = zero_form();
    form.phi = f.coeff(static_cast<std::size_t>(top));
    const Poly rest = f - master().scaled(form.phi);
    if (rest.is_zero()) return form;
    for (std::size_t j = 0; j < n_; ++j) {
      const Poly shifted = rest.taylor_shift(ctx_.z[j]);
      // cofactor_j(z_j + t) mod t^M, as a product of (t + (z_j - z_l))^M.
      std::vector<Element> h(M_, field().zero());
      h[0] = field().one();
      for (std::size_t l = 0; l < n_; ++l) {
        if (l == j) continue;
        const Element d = ctx_.z[j] - ctx_.z[l];
        for (std::size_t rep = 0; rep < M_; ++rep) {
          for (std::size_t k = M_; k-- > 0;) h[k] = h[k] * d + (k ? h[k - 1] : field().zero());
        }
      }
      // Series quotient r = shifted / h mod t^M.
      const Element h0inv = h[0].inv();
      std::vector<Element> r(M_, field().zero());
      for (std::size_t k = 0; k < M_; ++k) {
        Element acc = shifted.coeff(k);
        for (std::size_t s = 1; s <= k; ++s) acc = acc - h[s] * r[k - s];
        r[k] = acc * h0inv;
      }
      for (std::size_t m = 1; m <= M_; ++m) form.pole(j, m) = r[M_ - m];
    }
    return form;
  }

  Poly from_twisted_basis(const TwistedForm<F>& form) const {
    Poly out = master().scaled(form.phi);
    for (std::size_t j = 0; j < n_; ++j) {
      // sum_m c_{j,m} (x - z_j)^{M-m}, built in t = x - z_j and shifted back.
      std::vector<Element> g(M_, field().zero());
      bool any = false;
      for (std::size_t m = 1; m <= M_; ++m) {
        g[M_ - m] = form.pole(j, m);
        any = any || !g[M_ - m].is_zero();
      }
      if (!any) continue;
      const Poly local = Poly(field(), std::move(g)).taylor_shift(-ctx_.z[j]);
      out += local * cofactor(static_cast<int>(j) + 1);
    }
    return out;
  }

  // The x-derivative in the twisted basis:
  //   d Phi = M sum_j Phi/(x - z_j)
  //   d Phi/(x - z_i)^m = (M - m) Phi/(x - z_i)^{m+1}
  //                       - sum_{l=1}^m C_{i,l} Phi/(x - z_i)^{m+1-l}
  //                       + sum_{j != i} M/(z_j - z_i)^m Phi/(x - z_j)
  TwistedForm<F> d_twisted(const TwistedForm<F>& form) const {
    const F& K = field();
    TwistedForm<F> out = zero_form();
    const Element Mk = K.from_int(M_);
    if (!form.phi.is_zero()) {
      for (std::size_t j = 0; j < n_; ++j) out.pole(j, 1) = out.pole(j, 1) + Mk * form.phi;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t m = 1; m <= M_; ++m) {
        const Element& c = form.pole(i, m);
        if (c.is_zero()) continue;
        if (m < M_) out.pole(i, m + 1) = out.pole(i, m + 1) + K.from_int(static_cast<long long>(M_ - m)) * c;
        for (std::size_t l = 1; l <= m; ++l) out.pole(i, m + 1 - l) = out.pole(i, m + 1 - l) - c_[i][l] * c;
        for (std::size_t j = 0; j < n_; ++j) {
          if (j != i) out.pole(j, 1) = out.pole(j, 1) + Mk * inv_diff_pow(static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(m)) * c;
        }
      }
    }
    return out;
  }

  // Elimination from the top pole down: with a_M = 1, the coefficient of
  // Phi/(x - z_i)^m in dQ_i is
  //   (M - m + 1) a_{m-1} - sum_{m' = m}^{M} a_{m'} C_{i, m'+1-m},
  // and forcing it to zero for m = M..2 fixes a_{M-1}, ..., a_1 in turn.
  QPolynomial<F> q_poly_recursive(int i) const {
    check_index(i);
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    std::vector<Element> a(M_ + 1, field().zero());
    a[M_] = field().one();
    for (std::size_t m = M_; m >= 2; --m) {
      Element s = field().zero();
      for (std::size_t mp = m; mp <= M_; ++mp) s = s + a[mp] * c_[ii][mp + 1 - m];
      a[m - 1] = s * inv_int_[M_ - m + 1];
    }
    return make_q(i, a);
  }

  // Q_i = sum over compositions (l_0, ..., l_r) of M of
  //   Phi/(x - z_i)^{l_0} prod_{t=1}^r C_{i,l_t} / (l_1 + ... + l_t)
  QPolynomial<F> q_poly_closed(int i) const {
    check_index(i);
    std::vector<Element> a(M_ + 1, field().zero());
    for_each_composition(static_cast<int>(M_), [&](const Composition& comp) {
      a[static_cast<std::size_t>(comp.parts[0])] = a[static_cast<std::size_t>(comp.parts[0])] + composition_weight(i, comp);
      return true;
    });
    return make_q(i, a);
  }

  // prod_{t=1}^r C_{i,l_t} / (l_1 + ... + l_t)
  Element composition_weight(int i, const Composition& comp) const {
    Element w = field().one();
    int partial = 0;
    for (std::size_t t = 1; t < comp.parts.size(); ++t) {
      partial += comp.parts[t];
      w = w * c_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(comp.parts[t])] * inv_int_[static_cast<std::size_t>(partial)];
    }
    return w;
  }

  // dQ_i/dx = sum over compositions of (D_{i,l_0} - C_{i,l_0} Phi/(x - z_i)) times the weight.
  LogForm<F> q_derivative_logform(int i) const {
    check_index(i);
    LogForm<F> out{std::vector<Element>(n_, field().zero())};
    for_each_composition(static_cast<int>(M_), [&](const Composition& comp) {
      const Element w = composition_weight(i, comp);
      const LogForm<F> d = d_log_form(i, comp.parts[0]);
      for (std::size_t j = 0; j < n_; ++j) out.c[j] = out.c[j] + d.c[j] * w;
      auto& self = out.c[static_cast<std::size_t>(i - 1)];
      self = self - c_coeff(i, comp.parts[0]) * w;
      return true;
    });
    return out;
  }

  LogForm<F> logarithmic_part(const TwistedForm<F>& form) const {
    LogForm<F> r{std::vector<Element>(n_, field().zero())};
    for (std::size_t j = 0; j < n_; ++j) r.c[j] = form.pole(j, 1);
    return r;
  }

  // F = D_0 Phi + sum_j D_j Q_j; returns (D_0, ..., D_n). Throws NotInCriterion
  // when dF/dx is not logarithmic.
  std::vector<Element> decompose_in_Q(const Poly& f) const {
    const TwistedForm<F> form = to_twisted_basis(f);
    if (!d_twisted(form).is_logarithmic()) throw NotInCriterion();
    std::vector<Element> D(n_ + 1, field().zero());
    TwistedForm<F> rest = form;
    for (std::size_t j = 0; j < n_; ++j) {
      D[j + 1] = form.pole(j, M_);
      if (!D[j + 1].is_zero()) rest.add_scaled(q_poly_recursive(static_cast<int>(j) + 1).form, -D[j + 1]);
    }
    for (const auto& row : rest.poles) {
      for (const auto& c : row) {
        if (!c.is_zero()) throw std::logic_error("remainder after removing Q_j is not a multiple of Phi");
      }
    }
    D[0] = rest.phi;
    return D;
  }

  // Kernel and image of d restricted to span{Phi, Q_1, ..., Q_n}, the image
  // taken inside the logarithmic span.
  Spectrum q_space_spectrum() const {
    Matrix<F> m(field(), n_, n_ + 1);
    TwistedForm<F> phi = zero_form();
    phi.phi = field().one();
    const auto dphi = logarithmic_part(d_twisted(phi));
    for (std::size_t j = 0; j < n_; ++j) m(j, 0) = dphi.c[j];
    for (std::size_t i = 0; i < n_; ++i) {
      const auto dq = d_twisted(q_poly_recursive(static_cast<int>(i) + 1).form);
      if (!dq.is_logarithmic()) throw std::logic_error("dQ_i is not logarithmic");
      const auto lf = logarithmic_part(dq);
      for (std::size_t j = 0; j < n_; ++j) m(j, i + 1) = lf.c[j];
    }
    const std::size_t rank = m.rank();
    return Spectrum{n_ + 1 - rank, rank};
  }

 private:
  void check_index(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > n_) throw IndexOutOfRange("index must be in 1..n");
  }

  QPolynomial<F> make_q(int i, const std::vector<Element>& a) const {
    QPolynomial<F> q{i, {}, zero_form()};
    for (std::size_t m = 1; m < M_; ++m) q.A.push_back(a[m]);
    for (std::size_t m = 1; m <= M_; ++m) q.form.pole(static_cast<std::size_t>(i - 1), m) = a[m];
    return q;
  }

  KzParams params_;
  Context<F> ctx_;
  std::size_t n_;
  std::size_t M_;
  std::vector<Element> inv_int_;            // inv_int_[m] = 1/m, m = 1..M
  std::vector<std::vector<Element>> w_;     // 1/(z_j - z_i)
  std::vector<std::vector<Element>> c_;     // c_[i][m] = C_{i+1,m}
};

}  // namespace kzmodp

#endif  // KZMODP_DERHAM_HPP

#include "edss/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edss/kernels.hpp"

namespace edss {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  const double defect = h.hermiticity_defect();
  if (defect > tol::kValidity) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
}

// Reduces a Hermitian matrix to real symmetric tridiagonal form with the same
// spectrum. diag gets n entries, offdiag n entries with offdiag[i] coupling
// i and i+1 and offdiag[n-1] = 0.
void tridiagonalize(ComplexMatrix a, std::vector<double>& diag, std::vector<double>& offdiag) {
  const std::size_t n = a.rows();
  diag.assign(n, 0.0);
  offdiag.assign(n, 0.0);
  std::vector<Complex> u, uc, p, q, qc;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    diag[k] = a(k, k).real();
    const std::size_t m = n - k - 1;
    u.resize(m);
    for (std::size_t j = 0; j < m; ++j) u[j] = a(k + 1 + j, k);

    double tail = 0.0;
    for (std::size_t j = 1; j < m; ++j) tail += std::norm(u[j]);
    const double head = std::abs(u[0]);
    if (tail == 0.0) {
      // Column already has a single entry: the phase does not affect the spectrum.
      offdiag[k] = head;
      continue;
    }
    const double sigma = std::sqrt(tail + head * head);
    const Complex phase = head == 0.0 ? Complex{1.0} : u[0] / head;
    u[0] = phase * (head + sigma);
    const double tau = 1.0 / (sigma * (sigma + head));

    p.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      p[i] = tau * kernels::dotu(a.row(k + 1 + i).subspan(k + 1, m), u);
    }
    const double half_k = 0.5 * tau * kernels::dotc(u, p).real();
    q.resize(m);
    qc.resize(m);
    uc.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      q[i] = p[i] - half_k * u[i];
      qc[i] = std::conj(q[i]);
      uc[i] = std::conj(u[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      auto row = a.row(k + 1 + i).subspan(k + 1, m);
      kernels::axpy(-u[i], qc, row);
      kernels::axpy(-q[i], uc, row);
    }
    offdiag[k] = sigma;
  }
  if (n > 0) diag[n - 1] = a(n - 1, n - 1).real();
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 200) throw std::runtime_error("tridiagonal_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

std::vector<double> householder_ql_eigenvalues(const ComplexMatrix& h) {
  std::vector<double> d, e;
  tridiagonalize(h, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

EigenSystem jacobi(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix vt = ComplexMatrix::identity(n);  // row k holds eigenvector k

  double frob = 0.0;
  for (Complex z : a.data()) frob += std::norm(z);
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        const double scale = std::abs(a(p, p).real()) + std::abs(a(q, q).real());
        if (mag <= 1e-2 * kEps * scale || mag <= 1e-3 * kEps * kEps * frob) continue;
        ++rotations;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;

        kernels::rotate(cs, -sn * phase, sn, cs * phase, a.row(p), a.row(q));
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = std::conj(a(p, i));
          a(i, q) = std::conj(a(q, i));
        }
        kernels::rotate(cs, -sn * std::conj(phase), sn, cs * std::conj(phase), vt.row(p),
                        vt.row(q));
      }
    }
    if (rotations == 0) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt(order[k], i);
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, EigenMethod method) {
  require_hermitian(h);
  if (h.rows() == 0) return {};
  if (h.rows() == 1) return {h(0, 0).real()};
  switch (method) {
    case EigenMethod::jacobi:
      return jacobi(h).values;
    case EigenMethod::householder_ql:
      break;
  }
  return householder_ql_eigenvalues(h);
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
  require_hermitian(h);
  return jacobi(h);
}

double trace_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(h)) sum += std::abs(v);
  return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const EigenSystem es = hermitian_eigensystem(h);
  const std::size_t n = h.rows();
  ComplexMatrix scaled = es.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(es.values[k], 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= root;
  }
  return scaled * es.vectors.adjoint();
}

}  // namespace edss

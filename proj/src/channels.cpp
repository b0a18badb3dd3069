#include "edss/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "edss/eigen.hpp"

namespace edss {
namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(x));
  }
}

void require_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("channel dimension must be at least 2");
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::canonical:
      return "canonical";
    case ChannelKind::depolarizing:
      return "depolarizing";
    case ChannelKind::amplitude_damping:
      return "amplitude_damping";
    case ChannelKind::kraus:
      return "kraus";
  }
  return "unknown";
}

ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "canonical") return ChannelKind::canonical;
  if (name == "depolarizing") return ChannelKind::depolarizing;
  if (name == "amplitude_damping") return ChannelKind::amplitude_damping;
  if (name == "kraus") return ChannelKind::kraus;
  throw std::invalid_argument("unknown channel kind '" + std::string(name) + "'");
}

ComplexMatrix superoperator_from_kraus(std::span<const ComplexMatrix> ops, std::size_t d) {
  ComplexMatrix s(d * d, d * d);
  for (const auto& k : ops) {
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        for (std::size_t m = 0; m < d; ++m) {
          const Complex kpm = k(p, m);
          if (kpm == Complex{}) continue;
          for (std::size_t n = 0; n < d; ++n) s(p * d + q, m * d + n) += kpm * std::conj(k(q, n));
        }
      }
    }
  }
  return s;
}

QuditChannel canonical_channel(double l1, double l2, double l3, double t3) {
  // Columns of S are E(|m><n|) flattened row-major.
  const Complex i{0.0, 1.0};
  ComplexMatrix s(4, 4);
  for (std::size_t m = 0; m < 2; ++m) {
    const double sign = m == 0 ? 1.0 : -1.0;
    // E(|m><m|) = (I + (t3 + sign l3) Z) / 2
    const double z = t3 + sign * l3;
    s(0, m * 3) = 0.5 * (1.0 + z);
    s(3, m * 3) = 0.5 * (1.0 - z);
    // E(|m><n|), n != m: (l1 X + i sign l2 Y) / 2
    const std::size_t col = m * 2 + (1 - m);
    s(1, col) = 0.5 * (l1 + i * sign * l2 * Complex{0.0, -1.0});
    s(2, col) = 0.5 * (l1 + i * sign * l2 * Complex{0.0, 1.0});
  }
  QuditChannel ch(ChannelKind::canonical, 2, std::move(s));
  ch.canonical_ = CanonicalQubitChannel{l1, l2, l3, t3};
  return ch;
}

QuditChannel canonical_channel(const CanonicalQubitChannel& c) {
  return canonical_channel(c.lambda1, c.lambda2, c.lambda3, c.t3);
}

QuditChannel depolarizing(std::size_t d, double p) {
  require_dim(d);
  require_unit_interval(p, "depolarizing parameter p");
  ComplexMatrix s(d * d, d * d);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) s(m * d + n, m * d + n) = 1.0 - p;
    for (std::size_t q = 0; q < d; ++q) s(q * d + q, m * d + m) += p / static_cast<double>(d);
  }
  QuditChannel ch(ChannelKind::depolarizing, d, std::move(s));
  ch.noise_ = p;
  if (d == 2) ch.canonical_ = CanonicalQubitChannel{1.0 - p, 1.0 - p, 1.0 - p, 0.0};
  return ch;
}

QuditChannel amplitude_damping(std::size_t d, double gamma) {
  require_dim(d);
  require_unit_interval(gamma, "amplitude damping parameter gamma");
  KrausChannel k{d, {}};
  ComplexMatrix e0(d, d);
  e0(0, 0) = 1.0;
  for (std::size_t i = 1; i < d; ++i) e0(i, i) = std::sqrt(1.0 - gamma);
  k.kraus_ops.push_back(std::move(e0));
  for (std::size_t m = 1; m < d; ++m) {
    ComplexMatrix em(d, d);
    em(0, m) = std::sqrt(gamma);
    k.kraus_ops.push_back(std::move(em));
  }
  QuditChannel ch(ChannelKind::amplitude_damping, d, superoperator_from_kraus(k.kraus_ops, d));
  ch.noise_ = gamma;
  ch.kraus_ = std::move(k);
  if (d == 2) {
    const double l = std::sqrt(1.0 - gamma);
    ch.canonical_ = CanonicalQubitChannel{l, l, 1.0 - gamma, gamma};
  }
  return ch;
}

QuditChannel kraus_channel(KrausChannel k) {
  require_dim(k.input_dim);
  if (k.kraus_ops.empty()) throw std::invalid_argument("kraus_channel: empty Kraus set");
  for (const auto& op : k.kraus_ops) {
    if (op.rows() != k.input_dim || op.cols() != k.input_dim) {
      throw std::invalid_argument("kraus_channel: operator shape does not match input_dim");
    }
  }
  const std::size_t d = k.input_dim;
  QuditChannel ch(ChannelKind::kraus, d, superoperator_from_kraus(k.kraus_ops, d));
  ch.kraus_ = std::move(k);
  return ch;
}

ComplexMatrix QuditChannel::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw std::invalid_argument("QuditChannel::apply: operator shape does not match channel");
  }
  const auto out = super_ * std::span<const Complex>(x.data());
  return ComplexMatrix(dim_, dim_, out);
}

std::string QuditChannel::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(d=" << dim_;
  if (noise_) os << (kind_ == ChannelKind::amplitude_damping ? ", gamma=" : ", p=") << *noise_;
  if (kind_ == ChannelKind::canonical && canonical_) {
    os << ", lambda=(" << canonical_->lambda1 << ", " << canonical_->lambda2 << ", "
       << canonical_->lambda3 << "), t3=" << canonical_->t3;
  }
  os << ")";
  return os.str();
}

DensityOperator apply_to_subsystem(const QuditChannel& ch, const DensityOperator& rho,
                                   std::size_t target) {
  const auto& dims = rho.dims();
  if (target >= dims.size()) throw std::out_of_range("apply_to_subsystem: target out of range");
  const std::size_t d = ch.dim();
  if (dims[target] != d) {
    throw std::invalid_argument("apply_to_subsystem: channel dimension " + std::to_string(d) +
                                " does not match subsystem dimension " +
                                std::to_string(dims[target]));
  }
  const auto strides = strides_of(dims);
  const std::size_t stride = strides[target];
  const std::size_t n = rho.dim();

  // Flat offsets of every index with the target digit zeroed.
  std::vector<std::size_t> others;
  others.reserve(n / d);
  for (std::size_t x = 0; x < n; ++x) {
    if ((x / stride) % d == 0) others.push_back(x);
  }

  const ComplexMatrix& s = ch.superoperator();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(n, n);
  std::vector<Complex> block(d * d), mapped(d * d);
  for (std::size_t r : others) {
    for (std::size_t c : others) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) block[i * d + j] = m(r + i * stride, c + j * stride);
      }
      for (std::size_t k = 0; k < d * d; ++k) {
        Complex acc = 0.0;
        const auto srow = s.row(k);
        for (std::size_t l = 0; l < d * d; ++l) acc += srow[l] * block[l];
        mapped[k] = acc;
      }
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out(r + i * stride, c + j * stride) = mapped[i * d + j];
      }
    }
  }
  return DensityOperator(std::move(out), dims);
}

ComplexMatrix choi_matrix(const QuditChannel& ch) {
  const std::size_t d = ch.dim();
  const ComplexMatrix& s = ch.superoperator();
  ComplexMatrix c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) c(i * d + p, j * d + q) = s(p * d + q, i * d + j);
      }
    }
  }
  return c;
}

CptReport is_cpt(const QuditChannel& ch, double tol) {
  const std::size_t d = ch.dim();
  const ComplexMatrix c = choi_matrix(ch);
  CptReport r;
  const double herm = c.hermiticity_defect();
  if (herm > tol) {
    // Not Hermiticity preserving, hence not CP.
    r.min_choi_eigenvalue = -herm;
  } else {
    ComplexMatrix sym = c;
    for (std::size_t i = 0; i < sym.rows(); ++i) {
      for (std::size_t j = i + 1; j < sym.cols(); ++j) {
        const Complex avg = 0.5 * (sym(i, j) + std::conj(sym(j, i)));
        sym(i, j) = avg;
        sym(j, i) = std::conj(avg);
      }
      sym(i, i) = sym(i, i).real();
    }
    r.min_choi_eigenvalue = hermitian_eigenvalues(sym).front();
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex t = 0.0;
      for (std::size_t p = 0; p < d; ++p) t += c(i * d + p, j * d + p);
      const Complex expect = i == j ? 1.0 : 0.0;
      r.trace_preservation_defect = std::max(r.trace_preservation_defect, std::abs(t - expect));
    }
  }
  r.cpt = herm <= tol && r.min_choi_eigenvalue >= -tol && r.trace_preservation_defect <= tol;
  return r;
}

bool is_extreme_point(const CanonicalQubitChannel& ch, double tol) {
  const double plus = (ch.lambda1 + ch.lambda2) * (ch.lambda1 + ch.lambda2) -
                      ((1.0 + ch.lambda3) * (1.0 + ch.lambda3) - ch.t3 * ch.t3);
  const double minus = (ch.lambda1 - ch.lambda2) * (ch.lambda1 - ch.lambda2) -
                       ((1.0 - ch.lambda3) * (1.0 - ch.lambda3) - ch.t3 * ch.t3);
  return std::abs(plus) <= tol && std::abs(minus) <= tol;
}

bool same_action(const QuditChannel& a, const QuditChannel& b, double tol) {
  return a.dim() == b.dim() && approx_equal(a.superoperator(), b.superoperator(), tol);
}

}  // namespace edss

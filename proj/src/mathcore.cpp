#include "dtdd/mathcore.hpp"

#include <cmath>

namespace dtdd::mathcore {

namespace {

bool all_finite(const CMatrix& a) {
  return a.allFinite();
}

Eigen::SelfAdjointEigenSolver<CMatrix> eig(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Hermitian eigendecomposition failed");
  return solver;
}

}  // namespace

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols() || a.rows() < 1) return false;
  if (!all_finite(a)) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_hermitian(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw std::invalid_argument(std::string(what) + ": matrix must be square, dim >= 1");
  if (!all_finite(a))
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  if (!is_hermitian(a))
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
}

double spectral_norm(const CMatrix& a) {
  require_hermitian(a, "spectral_norm");
  const auto ev = eig(a).eigenvalues();
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

double min_eigenvalue(const CMatrix& a) {
  require_hermitian(a, "min_eigenvalue");
  return eig(a).eigenvalues().minCoeff();
}

CMatrix psd_sqrt_factor(const CMatrix& a) {
  require_hermitian(a, "psd_sqrt_factor");
  const auto solver = eig(a);
  Eigen::VectorXd ev = solver.eigenvalues();
  const double floor = -kPsdTolerance * std::max(1.0, std::abs(ev.maxCoeff()));
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < floor)
      throw NotPsdError("psd_sqrt_factor: matrix is not positive semidefinite (min eig " +
                        std::to_string(ev(i)) + ")");
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
}

CMatrix regularized_gram_inverse(const CMatrix& columns, const CMatrix& f, double phi,
                                 GramScale scale) {
  if (!(phi > 0.0))
    throw std::invalid_argument("regularized_gram_inverse: phi must be > 0");
  if (columns.size() > 0 && !all_finite(columns))
    throw std::invalid_argument("regularized_gram_inverse: non-finite columns");
  const Eigen::Index m = columns.size() > 0 ? columns.rows() : f.rows();
  if (m < 1)
    throw std::invalid_argument("regularized_gram_inverse: cannot infer dimension");
  const double md = static_cast<double>(m);

  CMatrix pre = CMatrix::Zero(m, m);
  if (columns.size() > 0) pre.noalias() = columns * columns.adjoint();
  if (f.size() > 0) {
    require_hermitian(f, "regularized_gram_inverse: f");
    pre += f;
  }
  if (scale == GramScale::kPerAntenna) {
    pre /= md;
    pre.diagonal().array() += phi;
  } else {
    pre.diagonal().array() += md * phi;
  }
  // pre is Hermitian positive definite thanks to the ridge.
  Eigen::LLT<CMatrix> llt(pre);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("regularized_gram_inverse: factorization failed");
  return llt.solve(CMatrix::Identity(m, m));
}

CMatrix pseudo_inverse_psd(const CMatrix& a, double rel_tol) {
  require_hermitian(a, "pseudo_inverse_psd");
  const auto solver = eig(a);
  Eigen::VectorXd ev = solver.eigenvalues();
  const double cutoff = rel_tol * std::max(0.0, ev.maxCoeff());
  for (int i = 0; i < ev.size(); ++i) ev(i) = ev(i) > cutoff ? 1.0 / ev(i) : 0.0;
  return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
}

double pairwise_sum(const std::vector<double>& x) {
  // Recursion keeps the reduction tree fixed for any producer order.
  struct Impl {
    static double run(const double* p, std::size_t n) {
      if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += p[i];
        return s;
      }
      const std::size_t half = n / 2;
      return run(p, half) + run(p + half, n - half);
    }
  };
  return Impl::run(x.data(), x.size());
}

MeanStderr mean_stderr(const std::vector<double>& x) {
  MeanStderr out;
  const std::size_t n = x.size();
  if (n == 0) return out;
  out.mean = pairwise_sum(x) / static_cast<double>(n);
  if (n < 2) return out;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  out.stderr_ = std::sqrt(var / static_cast<double>(n));
  return out;
}

}  // namespace dtdd::mathcore

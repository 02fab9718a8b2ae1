#ifndef VIBRON_COEFFICIENTS_HPP
#define VIBRON_COEFFICIENTS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vibron {

// Real expansion coefficients c_{n,m} of an N-boson state over the
// basis |N; n, l> with l = n - 2m, i.e. m counts quanta in the
// negative-circulation component (0 <= m <= n <= N). Storage is
// triangular, row n beginning at n(n+1)/2.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  explicit CoefficientTable(int N)
      : N_(N), amp_((N + 1) * (N + 2) / 2, 0.0) {
    if (N < 0) throw std::domain_error("CoefficientTable: negative N");
  }

  int N() const { return N_; }

  double& at(int n, int m) { return amp_[index(n, m)]; }
  double at(int n, int m) const { return amp_[index(n, m)]; }

  double norm_squared() const {
    double s = 0.0;
    for (double a : amp_) s += a * a;
    return s;
  }

  void normalize() {
    const double nrm = std::sqrt(norm_squared());
    if (nrm <= 0.0) throw std::domain_error("CoefficientTable: cannot normalize the zero table");
    for (double& a : amp_) a /= nrm;
  }

 private:
  std::size_t index(int n, int m) const {
    if (n < 0 || n > N_ || m < 0 || m > n)
      throw std::domain_error("CoefficientTable: need 0 <= m <= n <= N");
    return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
  }

  int N_ = 0;
  std::vector<double> amp_;
};

}  // namespace vibron

#endif

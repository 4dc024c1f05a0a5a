#include "stratalab/complex.hpp"

#include <stdexcept>

namespace stratalab {

ComplexOfSpaces::ComplexOfSpaces(int lo, std::vector<std::int64_t> dims)
    : lo_(lo), dims_(std::move(dims)) {
  for (auto d : dims_)
    if (d < 0) throw std::invalid_argument("negative term dimension");
  d_.reserve(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    std::int64_t next = k + 1 < dims_.size() ? dims_[k + 1] : 0;
    d_.emplace_back(next, dims_[k]);
  }
}

std::int64_t ComplexOfSpaces::dim(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

RationalMatrix ComplexOfSpaces::differential(int n) const {
  if (n < lo_ || n > hi()) return RationalMatrix(dim(n + 1), dim(n));
  return d_[static_cast<std::size_t>(n - lo_)];
}

void ComplexOfSpaces::set_differential(int n, RationalMatrix d) {
  if (n < lo_ || n > hi()) throw std::out_of_range("differential degree outside range");
  if (d.cols() != dim(n) || d.rows() != dim(n + 1))
    throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
  d_[static_cast<std::size_t>(n - lo_)] = std::move(d);
}

std::vector<std::string> ComplexOfSpaces::validate() const {
  std::vector<std::string> errs;
  for (int n = lo_; n <= hi(); ++n) {
    const auto& d = d_[static_cast<std::size_t>(n - lo_)];
    if (d.cols() != dim(n) || d.rows() != dim(n + 1))
      errs.push_back("differential shape mismatch at degree " + std::to_string(n));
  }
  if (!errs.empty()) return errs;
  for (int n = lo_; n < hi(); ++n) {
    if (!(differential(n + 1) * differential(n)).is_zero())
      errs.push_back("d∘d ≠ 0 at degree " + std::to_string(n));
  }
  return errs;
}

void ComplexOfSpaces::ensure_valid() const {
  auto errs = validate();
  if (!errs.empty()) throw std::invalid_argument("invalid complex: " + errs.front());
}

std::map<int, std::int64_t> ComplexOfSpaces::cohomology_dims() const {
  ensure_valid();
  std::map<int, std::int64_t> h;
  for (int n = lo_; n <= hi(); ++n) {
    std::int64_t rk_out = rank(differential(n));
    std::int64_t rk_in = n > lo_ ? rank(differential(n - 1)) : 0;
    h[n] = dim(n) - rk_out - rk_in;
  }
  return h;
}

Subquotient ComplexOfSpaces::cohomology_at(int n) const {
  ensure_valid();
  if (n < lo_ || n > hi()) {
    Subquotient sq;
    sq.ambient_dim = 0;
    sq.denominators = RationalMatrix(0, 0);
    sq.representatives = RationalMatrix(0, 0);
    return sq;
  }
  auto z = kernel_basis(differential(n));
  auto b = n > lo_ ? image_basis(differential(n - 1)) : RationalMatrix(dim(n), 0);
  return make_subquotient(z, b);
}

}  // namespace stratalab

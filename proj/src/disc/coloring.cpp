#include <cmath>
#include <limits>

#include "common/format.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"

namespace disclab {

Norm Norm::lp(double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorKind::InvalidArgument, "p must be a real >= 1");
  if (std::isinf(p)) return inf();
  if (p == 1.0) return one();
  return {Kind::P, p};
}

std::string to_string(const Norm& n) {
  switch (n.kind) {
    case Norm::Kind::Inf: return "inf";
    case Norm::Kind::One: return "one";
    case Norm::Kind::P: return "p=" + detail::format_double(n.p);
  }
  return "?";
}

void validate(const Coloring& x, const IntMatrix& a) {
  if (x.size() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "colouring has " + std::to_string(x.size()) + " entries, matrix has " +
                                                  std::to_string(a.cols()) + " columns");
  }
  for (auto v : x.values)
    if (v != 1 && v != -1) throw Error(ErrorKind::InvalidArgument, "colouring entries must be +1 or -1");
}

std::string to_string(const DiscValue& v) {
  if (auto b = std::get_if<BigInt>(&v)) return to_string(*b);
  if (auto r = std::get_if<BigRational>(&v)) return r->to_string();
  return detail::format_double(std::get<double>(v));
}

double to_double(const DiscValue& v) {
  if (auto b = std::get_if<BigInt>(&v)) return b->get_d();
  if (auto r = std::get_if<BigRational>(&v)) return r->to_double();
  return std::get<double>(v);
}

DiscValue disc_of_coloring(const IntMatrix& a, const Coloring& x, Norm norm) {
  validate(x, a);
  BigInt best = 0, total = 0;
  double powsum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (x.values[j] > 0)
        s += a(i, j);
      else
        s -= a(i, j);
    }
    s = abs(s);
    switch (norm.kind) {
      case Norm::Kind::Inf:
        if (s > best) best = s;
        break;
      case Norm::Kind::One: total += s; break;
      case Norm::Kind::P: powsum += std::pow(s.get_d(), norm.p); break;
    }
  }
  const auto m = static_cast<double>(a.rows());
  switch (norm.kind) {
    case Norm::Kind::Inf: return best;
    case Norm::Kind::One: return BigRational(total, BigInt(static_cast<unsigned long>(a.rows())));
    case Norm::Kind::P: return std::pow(powsum / m, 1.0 / norm.p);
  }
  return best;
}

}  // namespace disclab

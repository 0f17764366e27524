#include <algorithm>
#include <bit>
#include <cmath>

#include "disclab/constructions.hpp"
#include "disclab/detlb.hpp"
#include "disclab/error.hpp"
#include "disclab/vcdim.hpp"

namespace disclab {

HadamardCertificate hadamard_detlb_certificate(const IntMatrix& a, const Limits& limits) {
  if (!a.is_binary()) throw Error(ErrorKind::NotBinary, "Hadamard certificate expects a 0/1 matrix");
  const auto vc = vc_dimension(a, limits);
  if (vc.d == 0) throw Error(ErrorKind::NoShatteredSet, "no column is shattered");

  HadamardCertificate out;
  out.d = vc.d;
  out.d_prime = std::bit_floor(vc.d);
  out.bound = std::sqrt(static_cast<double>(out.d_prime)) / 2.0;

  const std::size_t dp = out.d_prime;
  const IntMatrix h = hadamard01(dp, limits);
  // Pattern bits follow the witness column order; the unused shattered columns
  // are set to 0.
  std::vector<std::size_t> rows;
  rows.reserve(dp);
  for (std::size_t i = 0; i < dp; ++i) {
    std::size_t p = 0;
    for (std::size_t t = 0; t < dp; ++t)
      if (h(i, t) != 0) p |= std::size_t{1} << t;
    rows.push_back(vc.witness.pattern_rows.at(p));
  }
  std::sort(rows.begin(), rows.end());
  out.witness.rows = rows;
  out.witness.cols.assign(vc.witness.cols.begin(), vc.witness.cols.begin() + static_cast<std::ptrdiff_t>(dp));
  out.det = det_exact(submatrix(a, out.witness));
  if (cmpabs(out.det, hadamard01_abs_det(dp)) != 0) {
    throw Error(ErrorKind::InvalidArgument, "located submatrix does not match hadamard01(" + std::to_string(dp) + ")");
  }
  return out;
}

}  // namespace disclab

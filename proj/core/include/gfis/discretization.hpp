#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfis/field_model.hpp"
#include "gfis/rng.hpp"

namespace gfis {

/// Distances in this module use the L1 norm |x| = sum_k |x_k|. Using the
/// Euclidean norm instead silently changes the grid pitch by a factor of d.
double l1_distance(std::span<const double> a, std::span<const double> b);

/// Axis-aligned product lattice bookkeeping, kept so regularity can be
/// verified by exact per-cell geometry and so lattices can be decimated into
/// nested sublattices.
struct LatticeInfo {
  std::vector<int> counts;       // points per axis
  std::vector<double> pitch;     // spacing per axis
  std::vector<double> offset;    // first coordinate per axis
  double theta = 0.0;
};

/// Ordered list of M >= 1 points inside a domain, with provenance.
class PointSet {
public:
  enum class provenance { explicit_list, uniform_random, theta_regular };

  static PointSet from_list(const Domain& domain, const std::vector<std::vector<double>>& pts);

  int size() const { return m_; }
  int dimension() const { return d_; }
  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(d_),
            static_cast<std::size_t>(d_)};
  }
  double coord(int i, int k) const {
    return coords_[static_cast<std::size_t>(i) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(k)];
  }

  provenance source() const { return provenance_; }
  const std::optional<LatticeInfo>& lattice() const { return lattice_; }
  std::uint64_t seed() const { return seed_; }

private:
  PointSet(int d, std::vector<double> coords, provenance source)
      : d_(d), m_(static_cast<int>(coords.size()) / d), coords_(std::move(coords)), provenance_(source) {}

  int d_;
  int m_;
  std::vector<double> coords_;  // row-major, M x d
  provenance provenance_;
  std::optional<LatticeInfo> lattice_;
  std::uint64_t seed_ = 0;

  friend PointSet uniform_points(const Domain&, int, RandomStream&);
  friend PointSet regular_grid(const Domain&, double);
  friend PointSet decimate_lattice(const PointSet&, int);
};

/// M i.i.d. uniform points over the hyperrectangle.
PointSet uniform_points(const Domain& domain, int M, RandomStream& rng);

/// Cell-center lattice satisfying both theta-regularity clauses in the L1
/// norm: pairwise separation >= theta and covering distance <= 2*theta.
/// Per-axis pitch is 2*theta/d (d <= 2) or theta (d in {3, 4}); no
/// cell-center lattice is theta-regular in L1 beyond d = 4.
PointSet regular_grid(const Domain& domain, double theta);

/// Every stride-th lattice point per axis; nested inside the input, so
/// coarse-grid maxima are dominated by fine-grid maxima pathwise.
PointSet decimate_lattice(const PointSet& lattice, int stride);

struct RegularityReport {
  bool ok = true;
  std::string violation;         // empty when ok
  std::vector<double> witness;   // offending point (or midpoint of a pair)
};

/// Checks min pairwise L1 distance >= theta exactly, and the 2*theta covering
/// clause via exact per-axis geometry for lattice provenance or a probe grid
/// of pitch theta/10 otherwise.
RegularityReport verify_theta_regular(const PointSet& pts, const Domain& domain, double theta);

}  // namespace gfis

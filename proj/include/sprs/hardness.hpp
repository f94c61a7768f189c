#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sprs/graph.hpp"
#include "sprs/rational.hpp"
#include "sprs/report.hpp"

namespace sprs {

/// A two-variable time bound m^alpha * n^beta.
struct TimeBound {
  Rational alpha;
  Rational beta;

  Rational degree() const { return alpha + beta; }
  std::string str() const;

  /// "alpha,beta", each a rational such as 3/2 or 1.5.
  static TimeBound parse(std::string_view text);

  friend bool operator==(const TimeBound&, const TimeBound&) = default;
};

enum class BoundComparison { Smaller, WeaklySmaller, NotComparableBySufficientCondition };

std::string_view to_string(BoundComparison c);

/// alpha + beta < 2. Throws InvalidBound on a negative exponent.
bool is_sub_mn(const TimeBound& b);

/// Whether b1 is a smaller bound than b2 on sparse graphs: Smaller if b2 has
/// the larger total degree, WeaklySmaller if the degrees tie and b2 puts more
/// weight on m. Only these sufficient conditions are decided; exponents may
/// be negative (e.g. m^3 / n^2).
BoundComparison compare_bounds(const TimeBound& b1, const TimeBound& b2);

/// Size-r subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Vertex>> lexicographic_subsets(std::size_t n, std::size_t r);

/// V1 = size-k/2 subsets (ids by lexicographic rank), V2 = V at offset
/// |V1|. A subset is joined to every vertex it fails to dominate; V2 is a
/// clique. Unit weights. Throws KOdd or KOutOfRange.
GadgetGraph build_kds_diameter_even(const Graph& g, std::size_t k);

/// k = 2r + 1 >= 3: V1 = size-r subsets, V2 = V minus the closed
/// neighbourhood of x, same edge rule. Throws KEven or KOutOfRange.
GadgetGraph build_kds_diameter_odd(const Graph& g, std::size_t k, Vertex x);

struct KdsResult {
  bool exists = false;
  std::vector<Distance> diameters;  // one per oracle call
  ReductionReport report;
};

/// Decides whether g has a dominating set of size k via Diameter calls:
/// one gadget for even k, one per vertex for odd k >= 3. k = 1 and k > n
/// are answered directly.
KdsResult k_dominating_via_diameter(const Graph& g, std::size_t k,
                                    const DiameterOracle& diameter_oracle = oracle::diameter());

}  // namespace sprs

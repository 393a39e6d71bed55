#ifndef ATLAS_STATES_HPP
#define ATLAS_STATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "atlas/lattice.hpp"

namespace atlas {

// One maximal strictly semistable state: reduced dominant weight vector, its
// support halfspace, the wall, and the recorded family dimension.
struct State {
  int k = 0;
  Weight r{};
  MonomialSet support;
  MonomialSet wall;
  int dim_phi = 0;
};

struct GoldenState {
  int k;
  Weight r;
  int support_size;
  int dim_phi;
};

// Step 1-3 of the finite search: primitive zero-sum normals of hyperplanes
// spanned by three lattice points together with the barycenter, restricted to
// the dominant chamber.  Deduplicated and sorted.
std::vector<Weight> candidate_normals();

// The full enumeration: candidate supports, inclusion-maximality modulo the
// permutation action, barycenter condition, and matching against the golden
// table that fixes the published indexing.  Throws on any count mismatch.
std::vector<State> enumerate_maximal_supports(
    const std::vector<GoldenState>& golden);

// Raw enumeration output before index matching: dominant representatives of
// the maximal strictly semistable support classes, sorted by (support size,
// weight vector).
struct EnumeratedClass {
  std::vector<Weight> normals;  // dominant reduced normals yielding the support
  MonomialSet support;
};
std::vector<EnumeratedClass> enumerate_support_classes();

}  // namespace atlas

#endif

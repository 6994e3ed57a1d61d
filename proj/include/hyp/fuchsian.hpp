#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyp/pants.hpp"

namespace hyp {

struct SurfaceGroup {
  std::string label;
  int genus = 2;
  std::vector<GroupElement> gens;  // real, hyperbolic
  std::string relator;             // letters a.. for gens, capitals for inverses
  double covering_radius = 0;      // max distance from i to the orbit

  // letters sorted by canonical key, so ball order does not depend on generator order
  std::vector<GroupElement> letters() const;
  GroupElement word(const std::string& w) const;
  double relator_residual() const;
  double step() const;  // max d(s i, i) over letters
};

SurfaceGroup bolza();
SurfaceGroup load_surface(const std::string& path);
void save_surface(const SurfaceGroup& G, const std::string& path);
// "bolza" or a preset path
SurfaceGroup surface_from_name(const std::string& name);

using Key = std::array<std::int64_t, 4>;
// entries rounded at 1e-7; ordering key for deterministic output
Key element_key(const GroupElement& g);
bool key_less(const GroupElement& g, const GroupElement& h);

// lookup of real elements up to 1e-8 relative entry error
class TolerantIndex {
 public:
  int find(const GroupElement& g) const;
  // returns existing id or inserts with the given id
  int insert(const GroupElement& g, int id);
  std::size_t size() const { return items_.size(); }

 private:
  struct CellHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
      return std::hash<std::int64_t>()(c.first * 1000003 ^ c.second);
    }
  };
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<int>, CellHash> cells_;
  std::vector<std::pair<GroupElement, int>> items_;
};

struct BallOptions {
  double cap = 14;
  double margin_steps = 1;  // pruning margin in generator steps
  bool parallel = true;
};

struct Ball {
  double radius = 0;
  std::vector<GroupElement> elements;  // d(g i, i) <= radius, sorted by key
  std::vector<double> disp;
  std::size_t visited = 0;
  double min_separation = 0;  // smallest Frobenius distance between distinct elements
};
Ball ball(const SurfaceGroup& G, double R, const BallOptions& opt = {});

struct Fold {
  GroupElement c;  // c z lies in the Dirichlet domain at i
  cplx z;
  int steps = 0;
};
// greedy walk by side pairings towards i
Fold fold_point(const SurfaceGroup& G, cplx z);

struct GeodesicClass {
  int id = 0;
  GroupElement rep, primitive;
  double length = 0, primitive_length = 0;
  int multiplicity = 1;
  int orientation = 1;  // +1 if id < inverse_id
  int inverse_id = -1;
  int members = 0;      // conjugates with axis within the covering radius of i
};

struct CensusOptions {
  double cap = 14;
  bool parallel = true;
  double sample_step = 0.05;  // axis sampling for conjugacy detection
  double margin_steps = 1;
};

struct Census {
  double L = 0, l1 = 0, l2 = 0;
  double ball_radius = 0;
  std::vector<GeodesicClass> classes;  // sorted by (length, rep key)
  std::vector<GroupElement> candidates;
  std::vector<int> candidate_class;
  TolerantIndex index;  // candidates
  double min_separation = 0;
  int fold_misses = 0;
  // class of a hyperbolic element with length in the window, -1 if none
  int class_of(const SurfaceGroup& G, const GroupElement& h) const;
};
Census census(const SurfaceGroup& G, double L, double l1, double l2, const CensusOptions& opt = {});

struct GHit {
  double t = 0;
  GroupElement g, m;
  std::array<double, 3> F{};
};
struct GSearchOptions {
  double L0 = 10;          // t_max = L0 e^{-L/2} when t_max < 0
  double t_max = -1;
  double t_step = -1;      // t_max / 1000 when negative
  bool unique = true;
  double eps_unique = 0.2;
  double cap = 14;
  bool parallel = true;
};
std::vector<GHit> g_search(const SurfaceGroup& G, const Frame& w, double L, double eps,
                           const GSearchOptions& opt = {});

struct PantsHit {
  PantsPair pp;
  GroupElement h_ind, k_ind;  // second and third boundary, oriented with g
  double foot = 0;            // foot of the seam on axis(g), relative to the projection of i
  int pants_id = 0;
};
struct PantsCensusOptions {
  double cap = 14;
  bool parallel = true;
};
struct PantsCensus {
  std::vector<PantsHit> pairs;
  int pants_count = 0;  // pairs sharing a pants (h and the third boundary) merged
  double M_plus = 0;
  int tiles = 0;
  double ball_radius = 0;
};
PantsCensus pants_census(const SurfaceGroup& G, const GeodesicClass& gamma, double r1, double r2,
                         double r3, double L, double eps, const PantsCensusOptions& opt = {});

struct Clothesline {
  bool found = false;
  std::vector<int> geodesics;  // class ids in the census
  std::vector<PantsHit> pants;
  int explored = 0;
};
Clothesline clothesline_search(const SurfaceGroup& G, const Census& C, int from, int to, double L,
                               double eps, int n_max, const PantsCensusOptions& opt = {});

}  // namespace hyp

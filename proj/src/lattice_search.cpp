#include "tilekit/lattice_search.hpp"

#include "tilekit/errors.hpp"

#include <algorithm>
#include <set>

namespace tilekit {

LatticeSearchResult find_tiling_lattice(const CSPolygon& p, const Integer& k) {
  if (k < 1) throw Error(ErrorKind::BadInput, "k must be >= 1");
  LatticeSearchResult result;
  Rational target_det = p.area() / Rational(k);

  int m = p.m();
  std::set<std::string> seen;
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    ++result.subsets_tried;
    std::vector<Vec2> gens;
    for (int i = 0; i < m; ++i) {
      if (subset & (1u << i))
        gens.push_back(Vec2(Rational(2) * p.midpoint(i)));
      else
        gens.push_back(p.edge(i));
    }
    auto base = lattice_from_generators(gens);
    if (!base) {
      ++result.rank_deficient_subsets;
      continue;
    }
    Rational n = base->det() / target_det;
    if (!is_integer(n) || n < 1) continue;
    for (const auto& lam : superlattices(*base, Integer(n.get_num()))) {
      if (!seen.insert(lam.canonical_key()).second) continue;
      BolleResult res = bolle_check(p, lam);
      if (res.passed() && res.certificate->k == k) result.lattices.push_back(lam);
    }
  }
  std::sort(result.lattices.begin(), result.lattices.end(),
            [](const Lattice& a, const Lattice& b) {
              return a.canonical_key() < b.canonical_key();
            });
  if (result.lattices.empty() && result.rank_deficient_subsets == result.subsets_tried)
    throw Error(ErrorKind::RankDeficientGenerators,
                "every generator subset was collinear");
  return result;
}

}  // namespace tilekit

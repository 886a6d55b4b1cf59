#include "dtdd/detequiv.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace dtdd::detequiv {

namespace {

// Distinct pointers in r_list, with multiplicity and member indices.
struct DedupedList {
  std::vector<const CMatrix*> unique;
  std::vector<int> count;
  std::vector<int> group_of;  // r_list index -> unique index

  explicit DedupedList(const std::vector<const CMatrix*>& r_list) {
    std::map<const CMatrix*, int> idx;
    group_of.reserve(r_list.size());
    for (const CMatrix* r : r_list) {
      auto [it, inserted] = idx.try_emplace(r, static_cast<int>(unique.size()));
      if (inserted) {
        unique.push_back(r);
        count.push_back(0);
      }
      ++count[it->second];
      group_of.push_back(it->second);
    }
  }
};

CMatrix resolvent_argument(const DedupedList& ded, const std::vector<double>& delta_by_group,
                           const CMatrix& s, double rho, int n_dim,
                           const std::vector<int>& group_of) {
  const double nd = static_cast<double>(n_dim);
  CMatrix a = CMatrix::Zero(n_dim, n_dim);
  if (s.size() > 0) a = s;
  for (std::size_t g = 0; g < ded.unique.size(); ++g) {
    double w = 0.0;
    for (std::size_t i = 0; i < group_of.size(); ++i)
      if (group_of[i] == static_cast<int>(g)) w += 1.0 / (1.0 + delta_by_group_at(delta_by_group, i));
    (void)w;
    a += *ded.unique[g] * 0.0;  // replaced below
  }
  return a;
}

double delta_by_group_at(const std::vector<double>&, std::size_t);  // unused

}  // namespace

}  // namespace dtdd::detequiv

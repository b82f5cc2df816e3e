#include "ringmatch/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ringmatch/constructions.hpp"

namespace ringmatch {

namespace {

int variant_shift(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument(
        "variant operators need an odd vertex count, got " +
        std::to_string(n));
  }
  const int k = n / 8;
  return (n % 8 == 1 || n % 8 == 3) ? 2 * k : 2 * k + 2;
}

}  // namespace

Matching f_op(const Matching& m) { return rotate(m, -variant_shift(m.n())); }

Matching g_op(const Matching& m) {
  return rotate(reverse(m), variant_shift(m.n()));
}

std::vector<Edge> xi3_embed(int n, const Matching& m) {
  const int base = ars_embed_base(n);
  const int sub_n = 2 * (n / 8) + 1;
  if (m.n() != sub_n) {
    throw std::invalid_argument("embedding into " + std::to_string(n) +
                                " vertices needs a matching on " +
                                std::to_string(sub_n) + " vertices, got " +
                                std::to_string(m.n()));
  }
  if (auto why = cuttable_failure(m)) {
    throw std::invalid_argument("embedding needs a cuttable matching: " +
                                *why);
  }
  std::vector<Edge> es;
  es.reserve(m.edges().size());
  for (const Edge& e : m.edges()) {
    es.push_back({base + 2 * e.first, base + 2 * e.second});
  }
  return es;
}

RpmFamily family(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("family needs an odd vertex count, got " +
                                std::to_string(n));
  }
  if (n == 1) return RpmFamily{1, {Matching(1)}};

  const RpmFamily sub = family(2 * (n / 8) + 1);
  std::vector<Edge> fixed = ars_arch(n);
  {
    std::vector<Edge> slide = ars_slide(n);
    fixed.insert(fixed.end(), slide.begin(), slide.end());
  }

  std::vector<Matching> members;
  members.reserve(sub.members.size() * 4);
  for (const Matching& m : sub.members) {
    for (const Matching& variant : {m, f_op(m), reverse(m), g_op(m)}) {
      std::vector<Edge> es = fixed;
      std::vector<Edge> embedded = xi3_embed(n, variant);
      es.insert(es.end(), embedded.begin(), embedded.end());
      members.emplace_back(n, std::move(es));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return RpmFamily{n, std::move(members)};
}

}  // namespace ringmatch

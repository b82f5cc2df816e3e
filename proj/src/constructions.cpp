#include "ringmatch/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ringmatch {

namespace {

void require_odd(int n, const char* what) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                " needs an odd vertex count, got " +
                                std::to_string(n));
  }
}

void append(std::vector<Edge>& dst, const std::vector<Edge>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

Matching kirkman(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(n / 2));
  for (int i = 0; i < n / 2; ++i) es.push_back({i, n - 1 - i});
  return Matching(n, std::move(es));
}

std::pair<Matching, Matching> cuttable_kirkman_rotations(int n) {
  if (n != 2 && (n < 0 || n % 2 == 0)) {
    throw std::invalid_argument(
        "kirkman(" + std::to_string(n) +
        ") is not rainbow; cuttable rotations exist only for n odd or n = 2");
  }
  Matching kir = kirkman(n);
  int shift = (n + 1) / 4;
  return {rotate(kir, shift), rotate(kir, -shift)};
}

TMatchingParts t_matching_parts(int n) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("t_matching needs an even vertex count, got " +
                                std::to_string(n));
  }
  int r = n % 8;
  if (r == 4 || r == 6) {
    throw std::invalid_argument(
        "no rainbow perfect matching exists on " + std::to_string(n) +
        " vertices (vertex counts of the form 8k+4 or 8k+6 have none)");
  }
  TMatchingParts p;
  if (n == 0) return p;
  if (n == 2) {
    p.filler.push_back({0, 1});
    return p;
  }
  const int k = n / 8;
  if (r == 0) {
    for (int i = 0; i <= 2 * k - 3; ++i) p.outer_arcs.push_back({1 + i, 8 * k - 2 - i});
    for (int i = 0; i <= k - 1; ++i) p.cross_chords.push_back({2 * k + i, 6 * k - i});
    for (int i = 0; i <= k - 2; ++i) p.inner_arcs.push_back({3 * k + i, 5 * k - 2 - i});
    p.filler = {{0, 4 * k - 1}, {2 * k - 1, 8 * k - 1}, {5 * k - 1, 5 * k}};
  } else {
    for (int i = 0; i <= 2 * k - 2; ++i) p.outer_arcs.push_back({1 + i, 8 * k - i});
    for (int i = 0; i <= k - 1; ++i) p.cross_chords.push_back({2 * k + 1 + i, 6 * k + 1 - i});
    for (int i = 0; i <= k - 2; ++i) p.inner_arcs.push_back({3 * k + 1 + i, 5 * k - 1 - i});
    p.filler = {{0, 2 * k}, {4 * k, 8 * k + 1}, {5 * k, 5 * k + 1}};
  }
  return p;
}

Matching t_matching(int n) {
  TMatchingParts p = t_matching_parts(n);
  std::vector<Edge> es;
  append(es, p.outer_arcs);
  append(es, p.cross_chords);
  append(es, p.inner_arcs);
  append(es, p.filler);
  return Matching(n, std::move(es));
}

std::vector<Edge> ars_arch(int n) {
  require_odd(n, "ars");
  std::vector<Edge> es;
  if (n == 1) return es;
  const int k = n / 8;
  if (n % 8 == 1 || n % 8 == 3) {
    for (int i = 0; i <= k - 1; ++i) es.push_back({i, 2 * k - 1 - i});
  } else {
    for (int i = 0; i <= k; ++i) es.push_back({i, 2 * k + 1 - i});
  }
  return es;
}

std::vector<Edge> ars_slide(int n) {
  require_odd(n, "ars");
  std::vector<Edge> es;
  if (n == 1) return es;
  const int k = n / 8;
  switch (n % 8) {
    case 1:
      for (int i = 0; i <= 2 * k - 1; ++i) es.push_back({2 * k + i, 4 * k + 1 + 2 * i});
      break;
    case 3:
      for (int i = 0; i <= 2 * k; ++i) es.push_back({2 * k + i, 4 * k + 1 + 2 * i});
      break;
    case 5:
      for (int i = 0; i <= 2 * k; ++i) es.push_back({2 * k + 2 + i, 4 * k + 4 + 2 * i});
      break;
    default:  // 7
      for (int i = 0; i <= 2 * k + 1; ++i) es.push_back({2 * k + 2 + i, 4 * k + 4 + 2 * i});
      break;
  }
  return es;
}

int ars_embed_base(int n) {
  require_odd(n, "ars");
  if (n < 3) {
    throw std::invalid_argument("no embedded block exists for n < 3");
  }
  const int k = n / 8;
  switch (n % 8) {
    case 1: return 4 * k;
    case 3: return 4 * k + 2;
    case 5: return 4 * k + 3;
    default: return 4 * k + 5;
  }
}

Matching ars(int n) {
  require_odd(n, "ars");
  if (n == 1) return Matching(1);
  std::vector<Edge> es = ars_arch(n);
  append(es, ars_slide(n));
  const int base = ars_embed_base(n);
  Matching sub = ars(2 * (n / 8) + 1);
  for (const Edge& e : sub.edges()) {
    es.push_back({base + 2 * e.first, base + 2 * e.second});
  }
  return Matching(n, std::move(es));
}

}  // namespace ringmatch

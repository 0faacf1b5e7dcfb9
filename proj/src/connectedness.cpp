#include "tit/connectedness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "tit/errors.hpp"
#include "tit/predicates.hpp"

namespace tit::connectedness {

char status_symbol(Status s) {
  switch (s) {
    case Status::Isolated: return '0';
    case Status::Border: return '1';
    case Status::Open: return '<';
    case Status::Middle: return 'x';
    case Status::Close: return '>';
  }
  return '?';
}

std::vector<std::pair<int, int>> blocks_of(std::uint32_t coloring, int k) {
  std::vector<std::pair<int, int>> out;
  int x = 0;
  while (x < k) {
    if (!(coloring >> x & 1)) {
      ++x;
      continue;
    }
    const int start = x;
    while (x < k && (coloring >> x & 1)) ++x;
    out.emplace_back(start, x - 1);
  }
  return out;
}

namespace {

std::optional<std::vector<std::pair<int, int>>> graph_from_status(const StatusVector& status) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stack;
  for (int j = 0; j < static_cast<int>(status.size()); ++j) {
    switch (status[j]) {
      case Status::Isolated: break;
      case Status::Border:
        if (!stack.empty()) return std::nullopt;
        break;
      case Status::Open: stack.push_back(j); break;
      case Status::Middle:
        if (stack.empty()) return std::nullopt;
        stack.push_back(j);
        break;
      case Status::Close: {
        while (true) {
          if (stack.empty()) return std::nullopt;
          const int p = stack.back();
          stack.pop_back();
          edges.emplace_back(p, j);
          if (status[p] == Status::Open) break;
        }
        break;
      }
    }
  }
  // An unmatched opener describes no realisable component.
  if (!stack.empty()) return std::nullopt;
  return edges;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::optional<StatusVector> next_status(const std::vector<std::pair<int, int>>& oldBlocks,
                                        const StatusVector& status,
                                        const std::vector<std::pair<int, int>>& newBlocks, int k,
                                        bool nextIsLast) {
  const auto edges = graph_from_status(status);
  if (!edges) return std::nullopt;
  const int n1 = static_cast<int>(oldBlocks.size());
  const int n2 = static_cast<int>(newBlocks.size());
  UnionFind uf(n1 + n2);
  for (const auto& [a, b] : *edges) uf.unite(a, b);
  // Vertical contact between overlapping column ranges.
  for (int a = 0, b = 0; a < n1 && b < n2;) {
    if (oldBlocks[a].first <= newBlocks[b].second && newBlocks[b].first <= oldBlocks[a].second)
      uf.unite(a, n1 + b);
    if (oldBlocks[a].second < newBlocks[b].second) ++a;
    else ++b;
  }
  std::vector<char> border(n1 + n2, 0), reachesNew(n1 + n2, 0);
  for (int a = 0; a < n1; ++a)
    if (status[a] == Status::Border) border[uf.find(a)] = 1;
  for (int b = 0; b < n2; ++b) {
    const int root = uf.find(n1 + b);
    reachesNew[root] = 1;
    if (nextIsLast || newBlocks[b].first == 0 || newBlocks[b].second == k - 1) border[root] = 1;
  }
  for (int a = 0; a < n1; ++a)
    if (status[a] != Status::Border && !reachesNew[uf.find(a)]) return std::nullopt;

  StatusVector out(n2, Status::Isolated);
  std::vector<int> count(n1 + n2, 0), seen(n1 + n2, 0);
  for (int b = 0; b < n2; ++b) ++count[uf.find(n1 + b)];
  for (int b = 0; b < n2; ++b) {
    const int root = uf.find(n1 + b);
    if (border[root]) {
      out[b] = Status::Border;
    } else if (count[root] == 1) {
      out[b] = Status::Isolated;
    } else {
      const int rank = seen[root]++;
      out[b] = rank == 0 ? Status::Open : (rank == count[root] - 1 ? Status::Close : Status::Middle);
    }
  }
  return out;
}

void check_row_width(int k) {
  if (k < 1 || k > 31) throw ParameterError("row width must lie in [1, 31]");
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> construct_graph(std::uint32_t coloring, int k,
                                                                 const StatusVector& status) {
  check_row_width(k);
  if (blocks_of(coloring, k).size() != status.size())
    throw ParameterError("status vector length must equal the number of 1-blocks");
  return graph_from_status(status);
}

std::optional<StatusVector> compute_status(std::uint32_t coloring, const StatusVector& status,
                                           std::uint32_t nextColoring, int k, bool nextIsLast) {
  check_row_width(k);
  const auto oldBlocks = blocks_of(coloring, k);
  if (oldBlocks.size() != status.size())
    throw ParameterError("status vector length must equal the number of 1-blocks");
  return next_status(oldBlocks, status, blocks_of(nextColoring, k), k, nextIsLast);
}

namespace {

// Packs (coloring, statuses) into one key: coloring in the low 32 bits,
// three bits per status above it. At most 16 blocks fit for k <= 31.
std::uint64_t pack(std::uint32_t coloring, const StatusVector& st) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < st.size(); ++i) code |= static_cast<std::uint64_t>(st[i]) << (3 * i);
  return (code << 32) | coloring;
}

StatusVector unpack_status(std::uint64_t key, std::size_t blocks) {
  StatusVector st(blocks);
  const std::uint64_t code = key >> 32;
  for (std::size_t i = 0; i < blocks; ++i) st[i] = static_cast<Status>((code >> (3 * i)) & 7);
  return st;
}

}  // namespace

BorderDpResult border_connectedness_dp(const BinaryImage& s, int sideCap) {
  const int k = s.n();
  if (k > sideCap)
    throw ResourceError("square side " + std::to_string(k) + " exceeds the border-connectedness DP cap of " +
                        std::to_string(sideCap) + "; use a larger delta");
  BorderDpResult out;
  if (k == 0) return out;
  // Status codes must fit beside the coloring in one 64-bit key.
  if (k > 20) throw ResourceError("border-connectedness DP supports square sides up to 20");
  const std::uint32_t colorings = 1u << k;
  std::vector<std::vector<std::pair<int, int>>> blocks(colorings);
  for (std::uint32_t c = 0; c < colorings; ++c) blocks[c] = blocks_of(c, k);
  std::vector<std::uint32_t> rows(k, 0);
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x)
      if (s.get(x, y)) rows[y] |= 1u << x;

  // Absent keys stand for configurations no recoloring can reach.
  std::unordered_map<std::uint64_t, long> cur, next;
  for (std::uint32_t c = 0; c < colorings; ++c) {
    const StatusVector st(blocks[c].size(), Status::Border);
    cur[pack(c, st)] = std::popcount(c ^ rows[0]);
  }
  const auto record = [&](const std::unordered_map<std::uint64_t, long>& table) {
    long best = -1;
    for (const auto& [key, cost] : table) best = best < 0 ? cost : std::min(best, cost);
    out.statesPerRow.push_back(table.size());
    out.minCostPerRow.push_back(best);
  };
  record(cur);
  for (int i = 1; i < k; ++i) {
    next.clear();
    const bool last = i == k - 1;
    for (const auto& [key, cost] : cur) {
      const auto c = static_cast<std::uint32_t>(key & 0xffffffffu);
      const StatusVector st = unpack_status(key, blocks[c].size());
      for (std::uint32_t c2 = 0; c2 < colorings; ++c2) {
        const auto st2 = next_status(blocks[c], st, blocks[c2], k, last);
        if (!st2) continue;
        const long total = cost + std::popcount(c2 ^ rows[i]);
        const auto [it, inserted] = next.try_emplace(pack(c2, *st2), total);
        if (!inserted && total < it->second) it->second = total;
      }
    }
    std::swap(cur, next);
    record(cur);
  }
  out.cost = out.minCostPerRow.back();
  out.distance = static_cast<double>(out.cost) / (static_cast<double>(k) * k);
  return out;
}

double border_connectedness_distance(const BinaryImage& s, int sideCap) {
  return border_connectedness_dp(s, sideCap).distance;
}

SquarePartition pad_and_partition(int n, double delta) {
  if (!(delta > 0.0 && delta <= 0.5))
    throw ParameterError("delta must lie in (0, 1/2] for the connectedness estimator, got " +
                         std::to_string(delta));
  if (n < 1) throw ParameterError("image side must be at least 1");
  SquarePartition p;
  p.r = static_cast<int>(std::lround(4.0 / delta));
  p.originalN = n;
  p.paddedN = n + ((1 - n) % p.r + p.r) % p.r;
  p.squaresPerSide = (p.paddedN - 1) / p.r;
  p.squareSide = p.r - 1;
  p.delta = delta;
  p.deltaPrime = delta * (static_cast<double>(n) * n) / (static_cast<double>(p.paddedN) * p.paddedN);
  const long lines = (p.paddedN + p.r - 1) / p.r;
  p.gridPixelCount = 2 * lines * p.paddedN - lines * lines;
  return p;
}

BinaryImage extract_square(const BinaryImage& m, const SquarePartition& part, int sx, int sy) {
  if (sx < 0 || sy < 0 || sx >= part.squaresPerSide || sy >= part.squaresPerSide)
    throw ParameterError("square index out of range");
  const int k = part.squareSide;
  BinaryImage sq(k);
  for (int v = 0; v < k; ++v)
    for (int u = 0; u < k; ++u) {
      const int x = sx * part.r + 1 + u;
      const int y = sy * part.r + 1 + v;
      // Padding pixels beyond the original image are white.
      if (x < m.n() && y < m.n() && m.get(x, y)) sq.set(u, v, true);
    }
  return sq;
}

std::size_t square_sample_count(double delta) {
  return static_cast<std::size_t>(std::ceil(4.0 / (delta * delta) - 1e-9));
}

namespace {

double scaling_factor(const SquarePartition& p) {
  const double d = 4.0 / p.r;
  const double f = (1.0 - d / 4.0) * (1.0 - 1.0 / p.paddedN);
  return f * f;
}

// Relative to the padded image; rescaled so the result is relative to n^2.
double finish(double meanSquares, const SquarePartition& p, double* scalingOut) {
  const double scaling = scaling_factor(p);
  if (scalingOut) *scalingOut = scaling;
  const double padded = scaling * meanSquares;
  const double ratio = (static_cast<double>(p.paddedN) * p.paddedN) / (static_cast<double>(p.originalN) * p.originalN);
  return std::clamp(padded * ratio, 0.0, 0.5);
}

// Flip counts per distinct square content. Sums stay integral so the mean
// is one correctly rounded division.
class SquareCostCache {
 public:
  explicit SquareCostCache(int cap) : cap_(cap) {}
  long operator()(const BinaryImage& sq) {
    const auto [it, inserted] = memo_.try_emplace(sq.bits(), 0L);
    // A square that is already border-connected costs nothing; the DP (and its
    // side cap) is only needed for the others.
    if (inserted) it->second = is_border_connected(sq) ? 0 : border_connectedness_dp(sq, cap_).cost;
    return it->second;
  }

 private:
  int cap_;
  std::map<std::vector<std::uint8_t>, long> memo_;
};

}  // namespace

ConnectednessEstimate estimate_connectedness_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                                      ConnectednessOptions options) {
  ConnectednessEstimate out;
  out.partition = pad_and_partition(m.n(), delta);
  const auto& p = out.partition;
  out.squareSamples = square_sample_count(delta);
  if (p.paddedN != m.n())
    out.warnings.push_back("image padded to side " + std::to_string(p.paddedN) + "; effective delta " +
                           std::to_string(p.deltaPrime));
  if (p.squaresPerSide == 0) {
    out.scaling = scaling_factor(p);
    out.warnings.push_back("image too small to contain a square");
    return out;
  }
  Rng rng(seed);
  std::uniform_int_distribution<int> pick(0, p.squaresPerSide - 1);
  SquareCostCache cache(options.sideCap);
  const double area = static_cast<double>(p.squareSide) * p.squareSide;
  long total = 0;
  for (std::size_t t = 0; t < out.squareSamples; ++t) {
    const int sx = pick(rng);
    const int sy = pick(rng);
    const long cost = cache(extract_square(m, p, sx, sy));
    out.perSquareDistances.push_back(static_cast<double>(cost) / area);
    total += cost;
  }
  out.dhat = finish(static_cast<double>(total) / (static_cast<double>(out.squareSamples) * area), p, &out.scaling);
  return out;
}

double connectedness_full_average(const BinaryImage& m, double delta, ConnectednessOptions options) {
  const auto p = pad_and_partition(m.n(), delta);
  if (p.squaresPerSide == 0) return 0.0;
  SquareCostCache cache(options.sideCap);
  long total = 0;
  for (int sy = 0; sy < p.squaresPerSide; ++sy)
    for (int sx = 0; sx < p.squaresPerSide; ++sx) total += cache(extract_square(m, p, sx, sy));
  const double squares = static_cast<double>(p.squaresPerSide) * p.squaresPerSide;
  return finish(static_cast<double>(total) / (squares * p.squareSide * p.squareSide), p, nullptr);
}

}  // namespace tit::connectedness

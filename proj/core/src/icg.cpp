#include "atomsum/icg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "atomsum/atoms.hpp"
#include "atomsum/decompose.hpp"
#include "atomsum/numtheory.hpp"
#include "atomsum/repcount.hpp"

namespace atomsum::icg {

namespace {

constexpr i64 kMaxExportN = 10'000;

}  // namespace

ICGraph build(i64 n, std::vector<i64> d) {
  if (n < 1) throw std::invalid_argument("build: n must be positive");
  if (d.empty()) throw std::invalid_argument("build: divisor set must be nonempty");
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) {
    throw std::invalid_argument("build: duplicate divisor");
  }
  for (i64 di : d) {
    if (di < 1 || n % di != 0) throw std::invalid_argument("build: not a divisor of n");
    if (di == n) throw std::invalid_argument("build: d = n would create loops");
  }
  return ICGraph{n, std::move(d)};
}

bool adjacency(const ICGraph& g, i64 x, i64 y) {
  if (x < 0 || x >= g.n || y < 0 || y >= g.n) {
    throw std::invalid_argument("adjacency: vertex out of range");
  }
  const i64 diff = (x - y + g.n) % g.n;
  if (diff == 0) return false;
  return std::binary_search(g.divisor_set.begin(), g.divisor_set.end(),
                            std::gcd(diff, g.n));
}

i64 degree(const ICGraph& g) {
  i64 deg = 0;
  for (i64 d : g.divisor_set) deg += euler_phi(g.n / d);
  return deg;
}

std::vector<i64> symbol(const ICGraph& g) {
  std::vector<i64> s;
  for (i64 d : g.divisor_set) {
    const AtomSet a = atom(g.n, d % g.n);
    s.insert(s.end(), a.elements.begin(), a.elements.end());
  }
  std::sort(s.begin(), s.end());
  return s;
}

LevelReport distance_levels(const ICGraph& g) {
  LevelReport report;
  report.n = g.n;
  report.divisor_set = g.divisor_set;

  std::set<i64> discovered{g.n};
  report.levels.push_back(Level{0, {g.n}, {{g.n, 1}}, {}});
  std::vector<i64> frontier{g.n};

  while (!frontier.empty()) {
    Level next;
    next.index = report.levels.back().index + 1;
    std::set<std::pair<i64, i64>> seen_sumsets;
    for (i64 u : frontier) {
      for (i64 s : g.divisor_set) {
        // atom(u) + atom(s) is one sumset regardless of orientation; a
        // repeated {u, s} pair must not inflate the discovery counts.
        const bool fresh = seen_sumsets.insert(std::minmax(u, s)).second;
        const AtomDecomposition dec = sumset_decompose(g.n, u, s);
        for (i64 t : dec.leaders) {
          if (fresh) ++next.multiplicities[t];
          next.edge_counts[t] += rep_count(g.n, u, s, t % g.n).count;
        }
      }
    }
    frontier.clear();
    for (const auto& [t, mult] : next.multiplicities) {
      if (discovered.insert(t).second) frontier.push_back(t);
    }
    if (frontier.empty()) break;  // expansion reached nothing new
    next.leaders = frontier;
    report.levels.push_back(std::move(next));
  }

  for (i64 d : divisors(factorize(g.n))) {
    if (!discovered.contains(d)) report.unreachable.push_back(d);
  }
  return report;
}

DistancePower distance_power(const ICGraph& g, i64 r) {
  if (r < 1) throw std::invalid_argument("distance_power: r must be >= 1");
  const LevelReport report = distance_levels(g);
  DistancePower power;
  const i64 last = report.levels.back().index;
  for (i64 k = 1; k <= std::min(r, last); ++k) {
    const auto& leaders = report.levels[static_cast<std::size_t>(k)].leaders;
    power.cumulative.insert(power.cumulative.end(), leaders.begin(), leaders.end());
  }
  std::sort(power.cumulative.begin(), power.cumulative.end());
  if (r <= last) {
    power.level_exact = report.levels[static_cast<std::size_t>(r)].leaders;
  }
  power.graph = build(g.n, power.cumulative);
  return power;
}

std::string export_graph(const ICGraph& g, ExportFormat format) {
  std::ostringstream out;
  if (format == ExportFormat::summary) {
    out << "{\"D\":[";
    for (std::size_t i = 0; i < g.divisor_set.size(); ++i) {
      if (i > 0) out << ',';
      out << g.divisor_set[i];
    }
    out << "],\"degree\":" << degree(g) << ",\"n\":" << g.n << "}\n";
    return out.str();
  }

  if (g.n > kMaxExportN) {
    throw resource_limit_error("export_graph: n exceeds edge-format cap");
  }
  const std::vector<i64> sym = symbol(g);
  auto each_edge = [&](auto&& emit) {
    std::vector<i64> nbrs;
    for (i64 u = 0; u < g.n; ++u) {
      nbrs.clear();
      for (i64 s : sym) {
        const i64 v = (u + s) % g.n;
        if (v > u) nbrs.push_back(v);
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (i64 v : nbrs) emit(u, v);
    }
  };

  if (format == ExportFormat::edge_list) {
    each_edge([&](i64 u, i64 v) { out << u << ' ' << v << '\n'; });
  } else {
    out << "graph icg {\n";
    for (i64 v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    each_edge([&](i64 u, i64 v) { out << "  " << u << " -- " << v << ";\n"; });
    out << "}\n";
  }
  return out.str();
}

}  // namespace atomsum::icg

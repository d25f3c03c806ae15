#include "atomsum/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace atomsum::oracle {

namespace {

constexpr i64 kMaxOracleN = 1'000'000;

void check_query(i64 n, i64 a, i64 b) {
  if (n < 1) throw std::invalid_argument("oracle: n must be positive");
  if (a < 1 || n % a != 0) throw std::invalid_argument("oracle: a must divide n");
  if (b < 1 || n % b != 0) throw std::invalid_argument("oracle: b must divide n");
  if (n > kMaxOracleN) throw resource_limit_error("oracle: n exceeds brute-force cap");
}

std::vector<i64> coprime_residues(i64 bound) {
  std::vector<i64> xs;
  for (i64 x = 1; x <= bound; ++x) {
    if (std::gcd(x, bound) == 1) xs.push_back(x);
  }
  return xs;
}

}  // namespace

std::vector<RepPair> brute_force_pairs(i64 n, i64 a, i64 b, i64 c) {
  check_query(n, a, b);
  if (c < 0 || c >= n) throw std::invalid_argument("oracle: c out of range");
  const std::vector<i64> xs = coprime_residues(n / a);
  const std::vector<i64> ys = coprime_residues(n / b);
  std::vector<RepPair> pairs;
  for (i64 x : xs) {
    const i64 u = a * x % n;
    for (i64 y : ys) {
      const i64 v = b * y % n;
      if ((u + v) % n == c) pairs.push_back(RepPair{u, v});
    }
  }
  return pairs;
}

std::vector<i64> brute_force_counts(i64 n, i64 a, i64 b) {
  check_query(n, a, b);
  const std::vector<i64> xs = coprime_residues(n / a);
  const std::vector<i64> ys = coprime_residues(n / b);
  std::vector<i64> counts(n, 0);
  for (i64 x : xs) {
    const i64 u = a * x % n;
    for (i64 y : ys) ++counts[(u + b * y) % n];
  }
  return counts;
}

std::vector<i64> brute_force_sumset(i64 n, i64 a, i64 b) {
  check_query(n, a, b);
  const std::vector<i64> xs = coprime_residues(n / a);
  const std::vector<i64> ys = coprime_residues(n / b);
  std::vector<char> seen(n, 0);
  for (i64 x : xs) {
    const i64 u = a * x % n;
    for (i64 y : ys) seen[(u + b * y) % n] = 1;
  }
  std::vector<i64> sums;
  for (i64 c = 0; c < n; ++c) {
    if (seen[c]) sums.push_back(c);
  }
  return sums;
}

std::vector<i64> vertex_bfs_distances(i64 n, const std::vector<i64>& d) {
  if (n < 1) throw std::invalid_argument("oracle: n must be positive");
  if (n > kMaxOracleN) throw resource_limit_error("oracle: n exceeds brute-force cap");
  std::vector<i64> symbol;
  for (i64 x = 1; x < n; ++x) {
    if (std::find(d.begin(), d.end(), std::gcd(x, n)) != d.end()) symbol.push_back(x);
  }
  std::vector<i64> dist(n, -1);
  dist[0] = 0;
  std::queue<i64> queue;
  queue.push(0);
  while (!queue.empty()) {
    const i64 v = queue.front();
    queue.pop();
    for (i64 s : symbol) {
      const i64 w = (v + s) % n;
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace atomsum::oracle

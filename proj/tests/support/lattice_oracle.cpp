#include "lattice_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace oracle {

namespace {

enum class Rel { Less, Greater, Apart };

bool transitive_through(const Matrix& leq, std::size_t k) {
  const std::size_t n = k + 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c] && (a == k || b == k || c == k)) return false;
      }
    }
  }
  return true;
}

void grow(Matrix& leq, std::size_t n, std::size_t k, std::size_t i,
          std::vector<Matrix>& out) {
  if (k == n) {
    out.push_back(leq);
    return;
  }
  if (i == k) {
    if (transitive_through(leq, k)) grow(leq, n, k + 1, 0, out);
    return;
  }
  for (Rel r : {Rel::Less, Rel::Greater, Rel::Apart}) {
    leq[i][k] = r == Rel::Less;
    leq[k][i] = r == Rel::Greater;
    grow(leq, n, k, i + 1, out);
  }
  leq[i][k] = leq[k][i] = false;
}

std::vector<Matrix> labeled_posets(std::size_t n) {
  Matrix leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  std::vector<Matrix> out;
  grow(leq, n, 0, 0, out);
  return out;
}

std::optional<std::size_t> least_upper(const Matrix& leq, std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!leq[a][u] || !leq[b][u]) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v) {
      if (leq[a][v] && leq[b][v]) least = leq[u][v];
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<std::size_t> greatest_lower(const Matrix& leq, std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!leq[u][a] || !leq[u][b]) continue;
    bool greatest = true;
    for (std::size_t v = 0; v < n && greatest; ++v) {
      if (leq[v][a] && leq[v][b]) greatest = leq[v][u];
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

}  // namespace

bool is_lattice(const Matrix& leq) {
  const std::size_t n = leq.size();
  if (n == 0) return false;
  std::size_t bottoms = 0;
  std::size_t tops = 0;
  for (std::size_t x = 0; x < n; ++x) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t y = 0; y < n; ++y) {
      below_all = below_all && leq[x][y];
      above_all = above_all && leq[y][x];
    }
    bottoms += below_all;
    tops += above_all;
  }
  if (bottoms != 1 || tops != 1) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!least_upper(leq, a, b) || !greatest_lower(leq, a, b)) return false;
    }
  }
  return true;
}

bool is_distributive(const Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = *least_upper(leq, b, c);
        const std::size_t lhs = *greatest_lower(leq, a, bc);
        const std::size_t rhs =
            *least_upper(leq, *greatest_lower(leq, a, b), *greatest_lower(leq, a, c));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Matrix canonical(const Matrix& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Matrix best;
  do {
    Matrix m(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = leq[perm[i]][perm[j]];
    }
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::set<Matrix> lattice_classes(std::size_t n) {
  std::set<Matrix> out;
  for (const Matrix& m : labeled_posets(n)) {
    if (is_lattice(m)) out.insert(canonical(m));
  }
  return out;
}

std::set<Matrix> distributive_classes(std::size_t n) {
  std::set<Matrix> out;
  for (const Matrix& m : lattice_classes(n)) {
    if (is_distributive(m)) out.insert(m);
  }
  return out;
}

}  // namespace oracle

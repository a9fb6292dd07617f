#include "oracles.h"

#include <algorithm>
#include <cmath>

namespace oracle {

// mpmath, mp.dps = 40: 1 - 1/(1 + exp(n)).
const double kSd1 = 0.7310585786300048792511592418218362743651;
const double kSd3 = 0.9525741268224332191211518482282477986138;

std::size_t EditDistance(const std::string &a, const std::string &b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

namespace {

std::string Fold(std::string s) {
  for (char &c : s) {
    if (c == '_') c = ' ';
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + ('a' - 'A'));
  }
  return s;
}

}  // namespace

bool Removed(const std::string &target, const std::string &candidate) {
  const std::string t = Fold(target);
  const std::string c = Fold(candidate);
  if (t.empty()) return false;
  if (c.find(t) != std::string::npos) return true;
  std::size_t prefix = 0;
  while (prefix < t.size() && prefix < c.size() && t[prefix] == c[prefix]) ++prefix;
  return prefix >= 3 && EditDistance(t, c) < 3;
}

int Depth(const Graph &g, std::size_t s) {
  if (g.parents[s].empty()) return 1;
  int best = 1 << 30;
  for (std::size_t p : g.parents[s]) best = std::min(best, Depth(g, p) + 1);
  return best;
}

bool IsAncestor(const Graph &g, std::size_t ancestor, std::size_t s) {
  if (ancestor == s) return true;
  for (std::size_t p : g.parents[s]) {
    if (IsAncestor(g, ancestor, p)) return true;
  }
  return false;
}

std::optional<double> Wup(const Graph &g, const std::string &a, const std::string &b) {
  auto has = [&](std::size_t s, const std::string &w) {
    return std::find(g.lemmas[s].begin(), g.lemmas[s].end(), w) != g.lemmas[s].end();
  };
  std::optional<double> best;
  const std::size_t n = g.parents.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!has(x, a)) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (!has(y, b)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!IsAncestor(g, z, x) || !IsAncestor(g, z, y)) continue;
        double score = std::min(1.0, 2.0 * Depth(g, z) / (Depth(g, x) + Depth(g, y)));
        if (!best || score > *best) best = score;
      }
    }
  }
  return best;
}

std::vector<Scored> Neighborhood(const std::vector<std::string> &words,
                                 const std::vector<std::vector<float>> &rows,
                                 std::size_t target, double lo, double hi) {
  auto dot = [](const std::vector<float> &u, const std::vector<float> &v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += double(u[i]) * double(v[i]);
    return s;
  };
  const double nt = std::sqrt(dot(rows[target], rows[target]));
  std::vector<Scored> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == target) continue;
    double sim = dot(rows[i], rows[target]) / (std::sqrt(dot(rows[i], rows[i])) * nt);
    sim = std::max(-1.0, std::min(1.0, sim));
    if (lo <= sim && sim <= hi) out.push_back({words[i], sim});
  }
  std::stable_sort(out.begin(), out.end(), [](const Scored &p, const Scored &q) {
    return p.similarity > q.similarity || (p.similarity == q.similarity && p.word < q.word);
  });
  return out;
}

}  // namespace oracle

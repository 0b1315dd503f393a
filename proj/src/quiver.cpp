#include "qcat/quiver.hpp"

#include <algorithm>
#include <queue>

namespace qcat {

IntMatrix inverse_unitriangular(const IntMatrix& m) {
  int n = m.n;
  for (int i = 0; i < n; ++i)
    if (m.at(i, i) != 1) throw InternalError("matrix is not unitriangular");
  // Solve M X = I column by column; works for upper or lower triangular.
  bool upper = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) upper = false;
  IntMatrix x(n);
  if (upper) {
    for (int c = 0; c < n; ++c)
      for (int i = n - 1; i >= 0; --i) {
        i64 v = (i == c ? 1 : 0);
        for (int k = i + 1; k < n; ++k) v -= m.at(i, k) * x.at(k, c);
        x.at(i, c) = v;
      }
  } else {
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < n; ++i) {
        i64 v = (i == c ? 1 : 0);
        for (int k = 0; k < i; ++k) v -= m.at(i, k) * x.at(k, c);
        x.at(i, c) = v;
      }
  }
  return x;
}

namespace {

bool has_oriented_cycle(int n, const std::vector<Arrow>& arrows) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& [s, t] : arrows) {
    out[s].push_back(t);
    ++indeg[t];
  }
  std::queue<int> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  return seen != n;
}

bool connected(int n, const std::vector<Arrow>& arrows) {
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [s, t] : arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> vis(n + 1, 0);
  std::queue<int> q;
  q.push(1);
  vis[1] = 1;
  int seen = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++seen;
        q.push(w);
      }
  }
  return seen == n;
}

// A/D/E recognition on the underlying simple graph.
void classify_dynkin(Quiver& q) {
  q.dynkin = false;
  q.dynkin_label.clear();
  int n = q.n;
  // multi-edges rule out simply-laced Dynkin type
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (q.edge_count(i, j) > 1) return;
  if (static_cast<int>(q.arrows.size()) != n - 1) return;  // not a tree
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [s, t] : q.arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  int deg3 = 0, branch = 0;
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() >= 4) return;
    if (adj[v].size() == 3) {
      ++deg3;
      branch = v;
    }
  }
  if (deg3 == 0) {
    q.dynkin = true;
    q.dynkin_label = "A" + std::to_string(n);
    return;
  }
  if (deg3 > 1) return;
  // lengths of the three branches from the unique degree-3 vertex
  std::vector<int> lens;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (adj[cur].size() == 3) return;  // would revisit the branch vertex
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) {
    q.dynkin = true;
    q.dynkin_label = "D" + std::to_string(n);
  } else if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
    q.dynkin = true;
    q.dynkin_label = "E" + std::to_string(n);
  }
}

}  // namespace

Quiver validate_quiver(int n, const std::vector<Arrow>& arrows,
                       const std::string& name) {
  if (n < 1) throw ParseError("quiver must have at least one vertex");
  for (const auto& [s, t] : arrows)
    if (s < 1 || s > n || t < 1 || t > n)
      throw ParseError("arrow endpoint out of range");
  if (has_oriented_cycle(n, arrows))
    throw CycleError("quiver has an oriented cycle");
  for (const auto& [s, t] : arrows)
    if (s >= t)
      throw NumberingError("arrow " + std::to_string(s) + "->" +
                           std::to_string(t) +
                           " violates the admissible numbering (need i<j)");
  if (!connected(n, arrows))
    throw DisconnectedError("underlying graph is not connected");
  Quiver q;
  q.n = n;
  q.arrows = arrows;
  q.name = name;
  classify_dynkin(q);
  return q;
}

std::vector<int> suggest_renumbering(int n, const std::vector<Arrow>& arrows) {
  if (has_oriented_cycle(n, arrows))
    throw CycleError("quiver has an oriented cycle; no renumbering exists");
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& [s, t] : arrows) {
    out[s].push_back(t);
    ++indeg[t];
  }
  // smallest-available topological order, so the result is deterministic
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) q.push(v);
  std::vector<int> newnum(n + 1, 0);
  int next = 1;
  while (!q.empty()) {
    int v = q.top();
    q.pop();
    newnum[v] = next++;
    for (int w : out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  return newnum;
}

IntMatrix cartan_matrix(const Quiver& q) {
  IntMatrix a(q.n);
  for (int i = 1; i <= q.n; ++i) a.at(i - 1, i - 1) = 2;
  for (const auto& [s, t] : q.arrows) {
    a.at(s - 1, t - 1) -= 1;
    a.at(t - 1, s - 1) -= 1;
  }
  return a;
}

IntMatrix euler_matrix(const Quiver& q) {
  IntMatrix e(q.n);
  for (int i = 1; i <= q.n; ++i) e.at(i - 1, i - 1) = 1;
  for (const auto& [s, t] : q.arrows) e.at(s - 1, t - 1) -= 1;
  return e;
}

Word coxeter_word(const Quiver& q) {
  Word w(q.n);
  for (int i = 0; i < q.n; ++i) w[i] = i + 1;
  return w;
}

DoubleQuiver double_quiver(const Quiver& q) {
  DoubleQuiver d;
  d.base = q;
  d.all_arrows = q.arrows;
  for (const auto& [s, t] : q.arrows) d.all_arrows.emplace_back(t, s);
  return d;
}

}  // namespace qcat

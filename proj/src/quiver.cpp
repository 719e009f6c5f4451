#include "smindy/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace smindy {

Int Quiver::arrow_count(int i, int j) const {
  Int c = 0;
  for (auto& [s, t] : arrows)
    if (s == i && t == j) ++c;
  return c;
}

namespace {

// Classifies one connected component (given as vertex list + undirected simple
// edges).  Returns "" if the component is not a simply-laced Dynkin diagram.
std::string classify_component(const std::vector<int>& verts,
                               const std::map<int, std::set<int>>& adj) {
  int nv = static_cast<int>(verts.size());
  int ne = 0;
  int branch = -1;
  for (int v : verts) {
    int d = static_cast<int>(adj.at(v).size());
    ne += d;
    if (d >= 4) return "";
    if (d == 3) {
      if (branch >= 0) return "";  // at most one branch vertex
      branch = v;
    }
  }
  ne /= 2;
  if (ne != nv - 1) return "";  // not a tree
  if (branch < 0) return "A" + std::to_string(nv);
  // leg lengths from the branch vertex
  std::vector<int> legs;
  for (int start : adj.at(branch)) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      auto& nb = adj.at(cur);
      int next = -1;
      for (int u : nb)
        if (u != prev) next = u;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(nv);
  if (legs == std::vector<int>{1, 2, 2}) return "E6";
  if (legs == std::vector<int>{1, 2, 3}) return "E7";
  if (legs == std::vector<int>{1, 2, 4}) return "E8";
  return "";
}

void classify(Quiver& q) {
  if (q.n == 0) {
    q.dynkin = true;
    q.type_name = "0";
    return;
  }
  // simple undirected graph; any parallel/multi edge breaks simply-lacedness
  std::map<int, std::set<int>> adj;
  for (int v = 0; v < q.n; ++v) adj[v];
  bool multi = false;
  std::set<std::pair<int, int>> seen;
  for (auto& [s, t] : q.arrows) {
    auto key = std::minmax(s, t);
    if (!seen.insert({key.first, key.second}).second) multi = true;
    adj[s].insert(t);
    adj[t].insert(s);
  }
  // connected components
  std::vector<int> comp(q.n, -1);
  int nc = 0;
  for (int v = 0; v < q.n; ++v) {
    if (comp[v] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(v);
    comp[v] = nc;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = nc;
          bfs.push(w);
        }
    }
    ++nc;
  }
  std::vector<std::string> names;
  bool ok = !multi;
  if (ok) {
    for (int c = 0; c < nc; ++c) {
      std::vector<int> verts;
      for (int v = 0; v < q.n; ++v)
        if (comp[v] == c) verts.push_back(v);
      std::string nm = classify_component(verts, adj);
      if (nm.empty()) {
        ok = false;
        break;
      }
      names.push_back(nm);
    }
  }
  if (ok) {
    q.dynkin = true;
    std::sort(names.begin(), names.end());
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) joined += "+";
      joined += names[i];
    }
    q.type_name = joined;
  } else {
    q.dynkin = false;
    if (q.n == 2 && q.arrows.size() == 2 && q.arrows[0] == q.arrows[1])
      q.type_name = "Kronecker";
    else
      q.type_name = "nonDynkin";
  }
}

}  // namespace

Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows,
                   std::vector<std::string> labels) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  for (auto& [s, t] : arrows)
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw InvalidInput("arrow endpoint out of range [1," + std::to_string(n) + "]");
  Quiver q;
  q.n = n;
  q.arrows = std::move(arrows);
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) q.labels.push_back(std::to_string(i + 1));
  } else {
    if (static_cast<int>(labels.size()) != n)
      throw InvalidInput("label count does not match vertex count");
    q.labels = std::move(labels);
  }
  // acyclicity via Kahn
  std::vector<int> indeg(q.n, 0);
  for (auto& [s, t] : q.arrows) indeg[t]++;
  std::queue<int> ready;
  for (int v = 0; v < q.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  int emitted = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++emitted;
    for (auto& [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) ready.push(t);
  }
  if (emitted != q.n) throw InvalidInput("quiver has an oriented cycle");
  classify(q);
  return q;
}

namespace {

Quiver parse_quiver_text(const std::string& in) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i]))) ++i; };
  auto expect_word = [&](const char* w) {
    skip_ws();
    std::size_t start = i;
    for (const char* p = w; *p; ++p, ++i)
      if (i >= in.size() || in[i] != *p)
        throw ParseError(std::string("expected keyword '") + w + "'", start);
  };
  auto read_int = [&]() -> Int {
    skip_ws();
    if (i >= in.size() || !std::isdigit(static_cast<unsigned char>(in[i])))
      throw ParseError("expected integer", i);
    Int x = 0;
    while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i])))
      x = x * 10 + (in[i++] - '0');
    return x;
  };

  expect_word("vertices");
  Int n = read_int();
  if (n <= 0) throw ParseError("vertex count must be positive", i);
  std::vector<std::pair<int, int>> arrows;
  skip_ws();
  if (i < in.size() && in[i] == ';') {
    ++i;
    skip_ws();
    if (i < in.size()) {
      expect_word("arrows");
      skip_ws();
      while (i < in.size()) {
        Int s = read_int();
        skip_ws();
        if (i + 1 >= in.size() || in[i] != '-' || in[i + 1] != '>')
          throw ParseError("expected '->'", i);
        i += 2;
        Int t = read_int();
        if (s < 1 || s > n || t < 1 || t > n)
          throw ParseError("arrow endpoint out of range [1," + std::to_string(n) + "]", i);
        arrows.emplace_back(static_cast<int>(s - 1), static_cast<int>(t - 1));
        skip_ws();
        if (i < in.size() && in[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      skip_ws();
      if (i != in.size()) throw ParseError("trailing characters after arrow list", i);
    }
  } else if (i != in.size()) {
    throw ParseError("expected ';' after vertex count", i);
  }
  return make_quiver(static_cast<int>(n), std::move(arrows));
}

Quiver parse_quiver_json(const std::string& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer())
    throw ParseError("json quiver needs an integer \"vertices\" field", 0);
  Int n = j["vertices"].get<Int>();
  if (n <= 0) throw ParseError("vertex count must be positive", 0);
  std::vector<std::pair<int, int>> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("\"arrows\" must be an array", 0);
    for (auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
        throw ParseError("each arrow must be a [source, target] pair", 0);
      Int s = a[0].get<Int>(), t = a[1].get<Int>();
      if (s < 1 || s > n || t < 1 || t > n)
        throw ParseError("arrow endpoint out of range [1," + std::to_string(n) + "]", 0);
      arrows.emplace_back(static_cast<int>(s - 1), static_cast<int>(t - 1));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ParseError("\"labels\" must be an array", 0);
    for (auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  return make_quiver(static_cast<int>(n), std::move(arrows), std::move(labels));
}

}  // namespace

Quiver parse_quiver(const std::string& input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  if (i >= input.size()) throw ParseError("empty quiver description", 0);
  if (input[i] == '{') return parse_quiver_json(input);
  return parse_quiver_text(input);
}

IntMatrix euler_matrix(const Quiver& q) {
  IntMatrix e = IntMatrix::identity(q.n);
  for (auto& [s, t] : q.arrows) e.at(s, t) -= 1;
  return e;
}

IntMatrix symmetric_form(const Quiver& q) {
  IntMatrix e = euler_matrix(q);
  IntMatrix et = e.transposed();
  IntMatrix c(q.n, q.n);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) c.at(i, j) = e.at(i, j) + et.at(i, j);
  return c;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  IntMatrix e = euler_matrix(q);
  return -(e.inverse_unimodular() * e.transposed());
}

std::vector<DimVector> positive_roots(const Quiver& q) {
  if (!q.dynkin)
    throw InvalidInput("positive roots require a Dynkin quiver; got " + q.type_name);
  if (q.n == 0) return {};
  IntMatrix c = symmetric_form(q);
  std::unordered_set<DimVector, VecHash> visited;
  std::vector<DimVector> queue;
  for (int i = 0; i < q.n; ++i) {
    DimVector e(q.n, 0);
    e[i] = 1;
    visited.insert(e);
    queue.push_back(std::move(e));
  }
  // reflection closure; the orbit of the simples is the full root system
  while (!queue.empty()) {
    DimVector v = std::move(queue.back());
    queue.pop_back();
    DimVector cv = c.apply(v);
    for (int i = 0; i < q.n; ++i) {
      DimVector u = v;
      u[i] -= cv[i];
      if (visited.insert(u).second) queue.push_back(std::move(u));
      if (visited.size() > 960)
        throw InternalError("root closure did not stabilise (non-Dynkin form?)");
    }
  }
  std::vector<DimVector> roots;
  for (auto& v : visited)
    if (all_nonnegative(v) && !is_zero(v)) roots.push_back(v);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<int> exceptional_vertex_order(const Quiver& q) {
  std::vector<int> indeg(q.n, 0);
  for (auto& [s, t] : q.arrows) indeg[t]++;
  std::vector<bool> done(q.n, false);
  std::vector<int> order;
  for (int step = 0; step < q.n; ++step) {
    int pick = -1;
    for (int v = 0; v < q.n; ++v)
      if (!done[v] && indeg[v] == 0) { pick = v; break; }  // ties: ascending index
    if (pick < 0) throw InternalError("topological sort failed on acyclic quiver");
    done[pick] = true;
    order.push_back(pick);
    for (auto& [s, t] : q.arrows)
      if (s == pick) indeg[t]--;
  }
  return order;
}

}  // namespace smindy

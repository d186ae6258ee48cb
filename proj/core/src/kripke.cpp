#include "modal/kripke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modal/errors.hpp"

namespace modal {

int PointedModel::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> PointedModel::successors(int s) const {
  std::vector<int> out;
  for (auto [a, b] : edges)
    if (a == s) out.push_back(b);
  return out;
}

namespace {

bool check_at(const PointedModel& m, const Formula& f, int s) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Var: return m.valuation[s].count(f.name()) != 0;
    case Kind::NegVar: return m.valuation[s].count(f.name()) == 0;
    case Kind::And: return check_at(m, f.left(), s) && check_at(m, f.right(), s);
    case Kind::Or: return check_at(m, f.left(), s) || check_at(m, f.right(), s);
    case Kind::Diamond:
      for (int b : m.successors(s))
        if (check_at(m, f.child(), b)) return true;
      return false;
    case Kind::Box:
      for (int b : m.successors(s))
        if (!check_at(m, f.child(), b)) return false;
      return true;
  }
  return false;
}

}  // namespace

bool check(const PointedModel& m, const Formula& f) { return check_at(m, f, m.point); }

std::set<int> reach(const PointedModel& m, int x) {
  std::set<int> seen{x};
  std::vector<int> work{x};
  while (!work.empty()) {
    int s = work.back();
    work.pop_back();
    for (int b : m.successors(s))
      if (seen.insert(b).second) work.push_back(b);
  }
  return seen;
}

PointedModel restrict_to_reachable(const PointedModel& m) {
  std::set<int> keep = reach(m, m.point);
  std::map<int, int> remap;
  PointedModel out;
  for (int s : keep) {
    remap[s] = static_cast<int>(out.state_names.size());
    out.state_names.push_back(m.state_names[s]);
    out.valuation.push_back(m.valuation[s]);
  }
  for (auto [a, b] : m.edges)
    if (keep.count(a) && keep.count(b)) out.edges.insert({remap[a], remap[b]});
  out.point = remap[m.point];
  return out;
}

bool is_frame_for(const PointedModel& m, const Logic& l) {
  return is_frame_for(m.num_states(), m.edges, l);
}

PointedModel parse_model(const std::string& text) {
  PointedModel m;
  bool saw_states = false, saw_point = false, saw_edges = false;
  std::set<std::string> val_seen;
  std::vector<std::pair<std::string, std::string>> pending_edges;
  std::string pending_point;

  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "states:") {
      if (saw_states) throw parse_error("duplicate states directive", line_start);
      saw_states = true;
      std::string s;
      while (ls >> s) {
        if (m.index_of(s) >= 0) throw parse_error("duplicate state " + s, line_start);
        m.state_names.push_back(s);
        m.valuation.emplace_back();
      }
      if (m.state_names.empty()) throw parse_error("empty states directive", line_start);
    } else if (head == "edges:") {
      if (saw_edges) throw parse_error("duplicate edges directive", line_start);
      saw_edges = true;
      std::string e;
      while (ls >> e) {
        auto arrow = e.find("->");
        if (arrow == std::string::npos)
          throw parse_error("malformed edge '" + e + "'", line_start);
        pending_edges.emplace_back(e.substr(0, arrow), e.substr(arrow + 2));
      }
    } else if (head == "val:") {
      std::string s;
      if (!(ls >> s)) throw parse_error("val directive without state", line_start);
      if (!val_seen.insert(s).second)
        throw parse_error("duplicate val directive for " + s, line_start);
      std::string v;
      VarSet vs;
      while (ls >> v) vs.insert(v);
      if (saw_states) {
        int i = m.index_of(s);
        if (i < 0) throw parse_error("unknown state " + s, line_start);
        m.valuation[i] = vs;
      } else {
        throw parse_error("val directive before states directive", line_start);
      }
    } else if (head == "point:") {
      if (saw_point) throw parse_error("duplicate point directive", line_start);
      saw_point = true;
      if (!(ls >> pending_point)) throw parse_error("point directive without state", line_start);
    } else {
      throw parse_error("unknown directive '" + head + "'", line_start);
    }
  }
  if (!saw_states) throw parse_error("missing states directive", 0);
  if (!saw_point) throw parse_error("missing point directive", 0);
  for (auto& [a, b] : pending_edges) {
    int ia = m.index_of(a), ib = m.index_of(b);
    if (ia < 0) throw parse_error("unknown state " + a + " in edge", 0);
    if (ib < 0) throw parse_error("unknown state " + b + " in edge", 0);
    m.edges.insert({ia, ib});
  }
  m.point = m.index_of(pending_point);
  if (m.point < 0) throw parse_error("unknown point state " + pending_point, 0);
  return m;
}

std::string to_text(const PointedModel& m) {
  std::ostringstream out;
  out << "states:";
  for (const auto& s : m.state_names) out << ' ' << s;
  out << '\n';
  if (!m.edges.empty()) {
    out << "edges:";
    for (auto [a, b] : m.edges) out << ' ' << m.state_names[a] << "->" << m.state_names[b];
    out << '\n';
  }
  for (std::size_t i = 0; i < m.state_names.size(); ++i) {
    if (m.valuation[i].empty()) continue;
    out << "val: " << m.state_names[i];
    for (const auto& v : m.valuation[i]) out << ' ' << v;
    out << '\n';
  }
  out << "point: " << m.state_names[m.point] << '\n';
  return out.str();
}

}  // namespace modal

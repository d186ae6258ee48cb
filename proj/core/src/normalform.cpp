#include "modal/normalform.hpp"

#include <algorithm>

#include "modal/cc.hpp"
#include "modal/errors.hpp"

namespace modal {

namespace {

// Number of forms at each depth grows as n_{k+1} = 2^|P| * 2^{n_k}; refuse
// anything whose final layer would be unreasonably large.
constexpr unsigned long kFormCountCap = 8192;

Formula valuation_formula(const VarSet& val, const VarSet& p) {
  std::vector<Formula> lits;
  for (const auto& v : p)
    lits.push_back(val.count(v) ? Formula::var(v) : Formula::nvar(v));
  return big_and(lits);
}

std::vector<VarSet> all_valuations(const VarSet& p) {
  std::vector<std::string> names(p.begin(), p.end());
  std::vector<VarSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << names.size()); ++mask) {
    VarSet v;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask & (std::size_t{1} << i)) v.insert(names[i]);
    out.push_back(std::move(v));
  }
  return out;
}

// Appends the tree for nf and returns the index of its root.
int append_tree(const NormalForm& nf, PointedModel& m) {
  int root = m.num_states();
  m.state_names.push_back("w" + std::to_string(root));
  m.valuation.push_back(nf.val);
  for (const NormalForm& c : nf.children) {
    int sub = append_tree(c, m);
    m.edges.insert({root, sub});
  }
  return root;
}

}  // namespace

std::vector<NormalForm> enumerate_forms(const VarSet& p, int d, int var_cap,
                                        int depth_cap) {
  if (static_cast<int>(p.size()) > var_cap || d > depth_cap)
    throw resource_limit_error("normalform",
                               "form enumeration limited to " +
                                   std::to_string(var_cap) + " variables and depth " +
                                   std::to_string(depth_cap));
  unsigned long count = 1ul << p.size();
  for (int k = 0; k < d; ++k) {
    if (count >= 63 || (1ul << p.size()) * (1ul << count) > kFormCountCap)
      throw resource_limit_error("normalform", "too many forms at depth " +
                                                   std::to_string(k + 1));
    count = (1ul << p.size()) * (1ul << count);
  }

  std::vector<NormalForm> layer;
  for (const VarSet& v : all_valuations(p)) layer.push_back({0, v, {}});
  std::sort(layer.begin(), layer.end());
  for (int depth = 1; depth <= d; ++depth) {
    std::vector<NormalForm> next;
    for (const VarSet& v : all_valuations(p)) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << layer.size()); ++mask) {
        NormalForm nf{depth, v, {}};
        for (std::size_t i = 0; i < layer.size(); ++i)
          if (mask & (std::size_t{1} << i)) nf.children.push_back(layer[i]);
        next.push_back(std::move(nf));
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return layer;
}

Formula to_formula(const NormalForm& nf, const VarSet& p) {
  Formula base = valuation_formula(nf.val, p);
  if (nf.depth == 0) return base;
  std::vector<Formula> parts{base};
  std::vector<Formula> child_formulas;
  for (const NormalForm& c : nf.children) {
    child_formulas.push_back(to_formula(c, p));
    parts.push_back(Formula::dia(child_formulas.back()));
  }
  parts.push_back(Formula::box(big_or(child_formulas)));
  return big_and(parts);
}

PointedModel denoted_tree(const NormalForm& nf, const VarSet& p) {
  PointedModel m;
  m.point = append_tree(nf, m);
  return m;
}

std::vector<NormalForm> normal_forms_of(const Formula& f, int var_cap, int depth_cap) {
  VarSet p = vars(f);
  int d = md(f);
  std::vector<NormalForm> out;
  for (const NormalForm& nf : enumerate_forms(p, d, var_cap, depth_cap))
    if (check(denoted_tree(nf, p), f)) out.push_back(nf);
  return out;
}

bool grounded(const NormalForm& nf) {
  if (nf.depth == 0) return false;
  if (nf.children.empty()) return true;
  return std::all_of(nf.children.begin(), nf.children.end(),
                     [](const NormalForm& c) { return grounded(c); });
}

bool complete_up_to_depth(const Formula& f) {
  try {
    return normal_forms_of(f).size() <= 1;
  } catch (const resource_limit_error&) {
    return complete_up_to_depth_via_cc(f);
  }
}

bool complete_up_to_depth_via_cc(const Formula& f) {
  Formula cutoff = Formula::bottom();
  for (int i = 0; i <= md(f); ++i) cutoff = Formula::box(cutoff);
  return cc_decide(*Logic::by_name("k"), Formula::conj(f, cutoff)).is_complete();
}

bool k_complete_via_grounded(const Formula& f) {
  std::vector<NormalForm> forms = normal_forms_of(f);
  if (forms.empty()) return true;
  return forms.size() == 1 && grounded(forms[0]);
}

}  // namespace modal

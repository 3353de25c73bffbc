#pragma once

#include <json.hpp>

#include "iwasawa/classify.hpp"
#include "iwasawa/degrees.hpp"

namespace iwasawa {

inline nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}};
}

inline nlohmann::ordered_json subgroup_ref_json(const SubgroupLattice& l, int index) {
  return {{"index", index}, {"order", l.order_of(index)}};
}

inline nlohmann::ordered_json schmidt_json(const SchmidtStructure& s, const SubgroupLattice& l) {
  nlohmann::ordered_json j;
  j["p"] = s.p;
  j["q"] = s.q;
  j["m"] = s.m;
  j["n"] = s.n;
  j["r"] = s.r;
  j["p_abelian"] = s.p_abelian;
  j["sylow_p"] = subgroup_ref_json(l, s.sylow_p);
  j["sylow_q"] = subgroup_ref_json(l, s.sylow_q);
  j["y"] = s.y;
  j["center"] = subgroup_ref_json(l, s.center);
  j["frattini_g"] = subgroup_ref_json(l, s.frattini_g);
  j["frattini_p"] = subgroup_ref_json(l, s.frattini_p);
  j["derived_g"] = subgroup_ref_json(l, s.derived_g);
  j["derived_p"] = subgroup_ref_json(l, s.derived_p);
  return j;
}

inline nlohmann::ordered_json classification_json(const ClassificationReport& r,
                                                  const SubgroupLattice& l) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["lattice_size"] = r.lattice_size;
  j["is_abelian"] = r.is_abelian;
  j["is_cyclic"] = r.is_cyclic;
  j["is_nilpotent"] = r.is_nilpotent;
  j["is_modular"] = r.is_modular;
  j["is_iwasawa"] = r.is_iwasawa;
  j["is_schmidt"] = r.is_schmidt;
  j["is_minimal_non_iwasawa"] = r.is_minimal_non_iwasawa;
  j["is_minimal_non_modular_p_group"] = r.is_minimal_non_modular_p_group;
  j["in_class_c"] = r.in_class_c;
  j["schmidt"] = r.schmidt ? schmidt_json(*r.schmidt, l) : nlohmann::ordered_json(nullptr);
  if (r.non_permuting) {
    j["non_permuting_pair"] = {{"h", subgroup_ref_json(l, r.non_permuting->h)},
                               {"k", subgroup_ref_json(l, r.non_permuting->k)}};
  } else {
    j["non_permuting_pair"] = nullptr;
  }
  if (r.pentagon) {
    j["pentagon"] = {{"x", subgroup_ref_json(l, r.pentagon->x)},
                     {"y", subgroup_ref_json(l, r.pentagon->y)},
                     {"z", subgroup_ref_json(l, r.pentagon->z)},
                     {"bottom", subgroup_ref_json(l, r.pentagon->bottom)},
                     {"top", subgroup_ref_json(l, r.pentagon->top)}};
  } else {
    j["pentagon"] = nullptr;
  }
  return j;
}

inline nlohmann::ordered_json degree_json(const DegreeReport& rep) {
  nlohmann::ordered_json j;
  j["sd"] = rational_json(rep.sd);
  j["lattice_size"] = rep.lattice_size;
  j["commuting_pairs"] = rep.commuting_pairs;
  j["c_counts"] = rep.c_counts;
  auto values = [](const std::vector<Rational>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rational& r : v) arr.push_back(r.str());
    return arr;
  };
  j["f_values"] = values(rep.f_values);
  j["g_values"] = values(rep.g_values);
  j["im_f"] = values(rep.f_image);
  j["im_g"] = values(rep.g_image);
  j["im_f_size"] = rep.f_image.size();
  j["im_g_size"] = rep.g_image.size();
  return j;
}

}  // namespace iwasawa

#include "tetra/export.hpp"

#include "tetra/stabilizer.hpp"

namespace tetra {

using nlohmann::ordered_json;

ordered_json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  ordered_json out = ordered_json::array();
  for (const auto& e : entries) {
    out.push_back({{"id", e.id},
                   {"symbol", e.symbol.entries},
                   {"geometry", std::string(to_string(e.geometry))},
                   {"ideal_vertices", e.ideal_vertices}});
  }
  return out;
}

ordered_json assignment_to_json(const Presentation& pres, const Assignment& a) {
  ordered_json out = ordered_json::object();
  for (int g = 0; g < a.generator_count(); ++g) {
    out[pres.generator_names()[g]] = a[g].to_cycles();
  }
  return out;
}

ordered_json classes_to_json(const Presentation& pres, int index,
                             const std::vector<SubgroupClass>& classes) {
  ordered_json list = ordered_json::array();
  for (const auto& cls : classes) {
    StabilizerGens gens = schreier_generators(pres, build_coset_table(cls.rep));
    ordered_json words = ordered_json::array();
    for (const Word& w : gens.simplified) words.push_back(pres.format(w));
    list.push_back({{"assignment", assignment_to_json(pres, cls.rep)},
                    {"image_type", cls.image_type},
                    {"labeled_orbit_size", cls.labeled_orbit_size},
                    {"stabilizer_generators", words}});
  }
  return {{"symbol", pres.symbol().to_string()},
          {"group", std::string(to_string(pres.kind()))},
          {"index", index},
          {"classes", list}};
}

ordered_json coloring_to_json(const Presentation& pres, const Coloring& coloring) {
  ordered_json words = ordered_json::array();
  for (const Word& w : coloring.coset_words) words.push_back(pres.format(w));
  return {{"index", coloring.n},
          {"coset_words", words},
          {"action", assignment_to_json(pres, coloring.action)}};
}

std::string coloring_to_csv(const Presentation& pres, const Coloring& coloring) {
  std::string out = "generator,color,image_color\n";
  for (int g = 0; g < coloring.action.generator_count(); ++g) {
    for (int c = 1; c <= coloring.n; ++c) {
      out += pres.generator_names()[g] + "," + std::to_string(c) + "," +
             std::to_string(coloring.action[g](c)) + "\n";
    }
  }
  return out;
}

}  // namespace tetra

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/coloring.hpp"
#include "tetra/enumerator.hpp"
#include "tetra/presentation.hpp"

namespace tetra {

nlohmann::ordered_json catalog_to_json(const std::vector<CatalogEntry>& entries);

/// {P: "(12)", ...} in generator order.
nlohmann::ordered_json assignment_to_json(const Presentation& pres, const Assignment& a);

/// {symbol, group, index, classes: [{assignment, image_type, labeled_orbit_size,
/// stabilizer_generators}]}. Stabilizer generators are the simplified Schreier words.
nlohmann::ordered_json classes_to_json(const Presentation& pres, int index,
                                       const std::vector<SubgroupClass>& classes);

/// {index, coset_words, action}.
nlohmann::ordered_json coloring_to_json(const Presentation& pres, const Coloring& coloring);

/// "generator,color,image_color" header, then one row per generator and color.
std::string coloring_to_csv(const Presentation& pres, const Coloring& coloring);

}  // namespace tetra

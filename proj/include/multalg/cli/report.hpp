#pragma once

#include <string>

#include <json.hpp>

#include "multalg/category.hpp"
#include "multalg/cli/structure_file.hpp"
#include "multalg/equivalence.hpp"
#include "multalg/hyperstructures.hpp"

namespace multalg::cli {

  using Json = nlohmann::ordered_json;

  Json to_json(StructureFile const& s);
  Json to_json(HyperoperationReport const& r);
  Json to_json(AxiomReport const& r);
  Json to_json(RingCheck const& r);

  // {"partition": "{{0,1},{2}}", "blocks": [["w0","w1"],["w2"]], "block_count": 2}
  Json partition_json(StructureFile const& s, EquivRelation const& rho);

  // Block names "[a|b]" in block order.
  std::vector<std::string> block_names(StructureFile const& s, EquivRelation const& rho);

  /// Indented "key: value" lines; arrays of scalars print inline, arrays
  /// of objects as numbered entries.
  std::string render_text(Json const& report);

}  // namespace multalg::cli

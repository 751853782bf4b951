#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "multalg/category.hpp"
#include "multalg/cli/structure_file.hpp"

namespace multalg::cli {

  struct DiagramFile {
    std::vector<StructureFile> objects;
    DirectedDiagram            diagram;
  };

  /// Line format, "#" starts a comment:
  ///
  ///   object 0 = k3.ma
  ///   object 1 = total2.ma
  ///   arrow 0<=1: w0->0, w1->0, w2->0
  ///
  /// Paths are relative to base_dir.  Objects are numbered 0..m-1; each arrow
  /// lists the image of every source element by name.  The resulting
  /// diagram is validated eagerly.
  DiagramFile parse_diagram(std::string_view             text,
                            std::filesystem::path const& base_dir,
                            std::string const&           source = "<input>");
  DiagramFile load_diagram(std::filesystem::path const& path);

}  // namespace multalg::cli

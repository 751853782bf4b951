#include "multalg/cli/diagram_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "multalg/errors.hpp"

namespace multalg::cli {

  namespace {

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::optional<std::size_t> number(std::string_view s) {
      s               = trim(s);
      std::size_t v   = 0;
      auto [p, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    }

    struct PendingArrow {
      std::size_t                                   line;
      std::size_t                                   from;
      std::size_t                                   to;
      std::vector<std::pair<std::string, std::string>> pairs;
    };

  }  // namespace

  DiagramFile parse_diagram(std::string_view             text,
                            std::filesystem::path const& base_dir,
                            std::string const&           source) {
    std::map<std::size_t, std::pair<std::size_t, StructureFile>> objects;
    std::vector<PendingArrow>                                    arrows;
    auto fail = [&](std::size_t line, std::string const& message) {
      throw FormatError(source, line, message);
    };

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto raw = text.substr(start, end - start);
      start    = end + 1;
      auto s   = trim(raw.substr(0, raw.find('#')));
      if (s.empty()) {
        continue;
      }
      if (s.starts_with("object ")) {
        auto const eq = s.find('=');
        if (eq == std::string_view::npos) {
          fail(line_no, "expected 'object i = path'");
        }
        auto const index = number(s.substr(7, eq - 7));
        if (!index) {
          fail(line_no, "invalid object index");
        }
        if (objects.contains(*index)) {
          fail(line_no, "duplicate object " + std::to_string(*index));
        }
        auto const path = std::string(trim(s.substr(eq + 1)));
        if (path.empty()) {
          fail(line_no, "missing object path");
        }
        objects.emplace(*index, std::pair{line_no, load_structure(base_dir / path)});
      } else if (s.starts_with("arrow ")) {
        auto const colon = s.find(':');
        auto const le    = s.find("<=");
        if (colon == std::string_view::npos || le == std::string_view::npos || le > colon) {
          fail(line_no, "expected 'arrow i<=j: a->b, ...'");
        }
        auto const from = number(s.substr(6, le - 6));
        auto const to   = number(s.substr(le + 2, colon - le - 2));
        if (!from || !to) {
          fail(line_no, "invalid arrow indices");
        }
        PendingArrow a{line_no, *from, *to, {}};
        auto         rest = s.substr(colon + 1);
        while (!trim(rest).empty()) {
          auto const comma = rest.find(',');
          auto const item  = trim(rest.substr(0, comma));
          auto const to_at = item.find("->");
          if (to_at == std::string_view::npos) {
            fail(line_no, "expected 'a->b' in arrow map");
          }
          a.pairs.emplace_back(trim(item.substr(0, to_at)), trim(item.substr(to_at + 2)));
          if (comma == std::string_view::npos) {
            break;
          }
          rest = rest.substr(comma + 1);
        }
        arrows.push_back(std::move(a));
      } else {
        fail(line_no, "unrecognised line");
      }
    }

    if (objects.empty()) {
      fail(0, "diagram has no objects");
    }
    std::vector<StructureFile> files;
    for (auto& [index, entry] : objects) {
      if (index != files.size()) {
        fail(entry.first, "objects must be numbered 0.." + std::to_string(objects.size() - 1));
      }
      files.push_back(std::move(entry.second));
    }

    std::vector<DirectedDiagram::Arrow> maps;
    for (auto const& a : arrows) {
      if (a.from >= files.size() || a.to >= files.size()) {
        fail(a.line, "arrow refers to an unknown object");
      }
      auto const&              src = files[a.from];
      auto const&              dst = files[a.to];
      std::vector<std::size_t> map(src.elements.size(), dst.elements.size());
      for (auto const& [x, y] : a.pairs) {
        std::size_t i = 0;
        std::size_t j = 0;
        try {
          i = src.element_index(x);
          j = dst.element_index(y);
        } catch (PreconditionError const& e) {
          fail(a.line, e.what());
        }
        if (map[i] != dst.elements.size()) {
          fail(a.line, "element '" + x + "' mapped twice");
        }
        map[i] = j;
      }
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] == dst.elements.size()) {
          fail(a.line, "element '" + src.elements[i] + "' has no image");
        }
      }
      maps.push_back({{a.from, a.to}, std::move(map)});
    }

    std::vector<Multialgebra> algebras;
    for (auto const& f : files) {
      algebras.push_back(f.algebra);
    }
    DirectedDiagram d(std::move(algebras), maps);
    return DiagramFile{std::move(files), std::move(d)};
  }

  DiagramFile load_diagram(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FormatError(path.string(), 0, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram(buffer.str(), path.parent_path(), path.string());
  }

}  // namespace multalg::cli

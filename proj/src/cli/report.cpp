#include "multalg/cli/report.hpp"

namespace multalg::cli {

  Json to_json(StructureFile const& s) {
    auto const& a = s.algebra;
    Json        ops = Json::array();
    std::vector<std::size_t> tuple;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const k = a.arity(op);
      Json       table = Json::array();
      tuple.resize(k);
      for (std::size_t t = 0; t < a.table(op).size(); ++t) {
        decode_tuple(t, a.size(), tuple);
        Json args = Json::array();
        for (auto x : tuple) {
          args.push_back(s.elements[x]);
        }
        Json out = Json::array();
        a.table(op)[t].for_each([&](std::size_t y) { out.push_back(s.elements[y]); });
        table.push_back(Json{{"args", args}, {"out", out}});
      }
      ops.push_back(Json{{"symbol", a.signature()[op].symbol}, {"arity", k}, {"table", table}});
    }
    return Json{{"name", s.name}, {"elements", s.elements}, {"operations", ops}};
  }

  Json to_json(HyperoperationReport const& r) {
    return Json{{"weak_associative", r.weak_associative},
                {"associative", r.associative},
                {"reproducible", r.reproducible},
                {"weak_commutative", r.weak_commutative},
                {"commutative", r.commutative},
                {"single_valued", r.single_valued},
                {"hv_group", r.hv_group()},
                {"hypergroup", r.hypergroup()}};
  }

  Json to_json(AxiomReport const& r) {
    return Json{{"weak_associative_plus", r.weak_associative_plus},
                {"associative_plus", r.associative_plus},
                {"reproducible_plus", r.reproducible_plus},
                {"weak_associative_times", r.weak_associative_times},
                {"associative_times", r.associative_times},
                {"weak_distributive", r.weak_distributive},
                {"distributive", r.distributive},
                {"hv_group_plus", r.hv_group_plus},
                {"hypergroup_plus", r.hypergroup_plus},
                {"hv_ring", r.hv_ring},
                {"hyperring", r.hyperring},
                {"plus_weak_commutative", r.plus_weak_commutative},
                {"times_weak_commutative", r.times_weak_commutative},
                {"plus_commutative", r.plus_commutative},
                {"times_commutative", r.times_commutative},
                {"times_single_valued", r.times_single_valued}};
  }

  Json to_json(RingCheck const& r) {
    return Json{{"single_valued", r.single_valued},
                {"plus_associative", r.plus_associative},
                {"plus_commutative", r.plus_commutative},
                {"times_associative", r.times_associative},
                {"times_commutative", r.times_commutative},
                {"distributive", r.distributive},
                {"zero", r.zero ? Json(*r.zero) : Json(nullptr)},
                {"additive_inverses", r.additive_inverses},
                {"commutative_ring", r.commutative_ring()}};
  }

  std::vector<std::string> block_names(StructureFile const& s, EquivRelation const& rho) {
    std::vector<std::string> names;
    for (auto const& block : rho.blocks()) {
      std::string name = "[";
      for (std::size_t i = 0; i < block.size(); ++i) {
        name += (i == 0 ? "" : "|") + s.elements[block[i]];
      }
      names.push_back(name + "]");
    }
    return names;
  }

  Json partition_json(StructureFile const& s, EquivRelation const& rho) {
    Json blocks = Json::array();
    for (auto const& block : rho.blocks()) {
      Json names = Json::array();
      for (auto x : block) {
        names.push_back(s.elements[x]);
      }
      blocks.push_back(names);
    }
    return Json{{"partition", rho.to_string()},
                {"blocks", blocks},
                {"block_count", rho.number_of_blocks()}};
  }

  namespace {

    std::string scalar(Json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "none";
      }
      if (v.is_boolean()) {
        return v.get<bool>() ? "yes" : "no";
      }
      return v.dump();
    }

    bool flat(Json const& v) {
      if (v.is_array()) {
        for (auto const& e : v) {
          if (!flat(e)) {
            return false;
          }
        }
        return true;
      }
      return !v.is_object();
    }

    std::string inline_array(Json const& v) {
      if (!v.is_array()) {
        return scalar(v);
      }
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ", ") + inline_array(v[i]);
      }
      return out + "]";
    }

    void render(Json const& v, std::string const& indent, std::string& out) {
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto const& value = it.value();
        if (flat(value)) {
          out += indent + it.key() + ": " + inline_array(value) + "\n";
        } else if (value.is_object()) {
          out += indent + it.key() + ":\n";
          render(value, indent + "  ", out);
        } else {
          out += indent + it.key() + ":\n";
          for (std::size_t i = 0; i < value.size(); ++i) {
            if (value[i].is_object()) {
              out += indent + "  [" + std::to_string(i) + "]\n";
              render(value[i], indent + "    ", out);
            } else {
              out += indent + "  [" + std::to_string(i) + "] " + inline_array(value[i]) + "\n";
            }
          }
        }
      }
    }

  }  // namespace

  std::string render_text(Json const& report) {
    std::string out;
    render(report, "", out);
    return out;
  }

}  // namespace multalg::cli

#include "disclab/json_io.hpp"

#include "disclab/error.hpp"

namespace disclab {

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (const auto& v : m.row(i)) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const SubmatrixIndex& idx) { return Json{{"rows", idx.rows}, {"cols", idx.cols}}; }

Json to_json(const Coloring& x) {
  Json out = Json::array();
  for (auto v : x.values) out.push_back(static_cast<int>(v));
  return out;
}

Json to_json(const DiscResult& r) {
  return Json{{"norm", to_string(r.norm)},
              {"value", to_string(r.value)},
              {"witness", to_json(r.witness)},
              {"nodes_explored", r.nodes_explored}};
}

Json to_json(const HerdiscResult& r) {
  return Json{{"value", to_string(r.value)},
              {"witness_cols", r.witness.cols},
              {"witness_coloring", to_json(r.witness_coloring)}};
}

Json to_json(const DetLbCertificate& c) {
  return Json{{"k", c.order},
              {"rows", c.index.rows},
              {"cols", c.index.cols},
              {"det", to_string(c.det)},
              {"value_float", c.value_float},
              {"partial", c.partial},
              {"determinants", c.determinants}};
}

Json to_json(const TumResult& r) {
  Json out{{"tum", r.tum}};
  if (r.counterexample) {
    out["counterexample"] = to_json(*r.counterexample);
    out["det"] = to_string(*r.det);
  } else {
    out["counterexample"] = nullptr;
  }
  out["determinants"] = r.determinants;
  return out;
}

Json to_json(const HadamardCertificate& c) {
  return Json{{"d", c.d},
              {"d_prime", c.d_prime},
              {"bound", c.bound},
              {"rows", c.witness.rows},
              {"cols", c.witness.cols},
              {"det", to_string(c.det)}};
}

Json to_json(const ShatterWitness& w) { return Json{{"cols", w.cols}, {"pattern_rows", w.pattern_rows}}; }

Json to_json(const VcResult& r) { return Json{{"d", r.d}, {"witness", to_json(r.witness)}}; }

Json to_json(const RandomColoringStats& s) {
  Json out;
  out["d"] = s.d ? Json(*s.d) : Json(nullptr);
  out["cols"] = s.vc_cols;
  out["trials"] = s.trials;
  out["seed"] = s.seed;
  out["mean"] = s.mean;
  out["max"] = to_string(s.max);
  out["stddev"] = s.stddev;
  out["normalized_ratio"] = s.normalized_ratio ? Json(*s.normalized_ratio) : Json(nullptr);
  out["constant_input"] = s.constant_input;
  return out;
}

Json to_json(const PathCertificate& c) {
  Json path = Json::array();
  for (const auto& s : c.path) path.push_back(Json::array({s.column, s.sign}));
  return Json{{"row_index", c.row_index},
              {"accumulated", c.accumulated},
              {"sq_norm", c.sq_norm},
              {"partial_sq_norm", c.partial_sq_norm},
              {"path", std::move(path)}};
}

Json to_json(const VolumeEstimate& e) {
  Json out{{"S", e.subset}, {"k", e.k}, {"bounded", e.bounded}};
  if (e.bounded) {
    out["volume"] = e.volume;
    out["stderr"] = e.std_error;
    out["box_volume"] = e.box_volume;
    out["accepted"] = e.accepted;
  } else {
    out["volume"] = nullptr;
    out["stderr"] = nullptr;
  }
  out["inv_root"] = e.inv_root;
  out["samples"] = e.samples;
  return out;
}

Json to_json(const VolLbResult& r) {
  Json table = Json::array();
  for (const auto& e : r.table) table.push_back(to_json(e));
  return Json{{"vollb", r.value}, {"argmax_S", r.argmax}, {"table", std::move(table)}};
}

Json to_json(const GapInstance& g) {
  return Json{{"branch", to_string(g.branch)},
              {"N", g.N},
              {"k", g.k},
              {"eps", g.eps},
              {"m", g.m},
              {"n", g.n},
              {"family", to_string(g.family)},
              {"disc_lower", g.disc_lower.to_fraction_string()},
              {"detlb_upper", g.detlb_upper},
              {"degenerate", g.degenerate}};
}

VectorAssignment assignment_from_json(const Json& j) {
  try {
    VectorAssignment va;
    va.dim = j.at("dim").get<std::size_t>();
    va.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
    return va;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("vector assignment: ") + e.what());
  }
}

}  // namespace disclab

#pragma once

#include <json.hpp>

#include "disclab/constructions.hpp"
#include "disclab/detlb.hpp"
#include "disclab/disc.hpp"
#include "disclab/vcdim.hpp"
#include "disclab/vecdisc.hpp"
#include "disclab/vollb.hpp"

namespace disclab {

using Json = nlohmann::ordered_json;

Json to_json(const IntMatrix& m);
Json to_json(const SubmatrixIndex& idx);
Json to_json(const Coloring& x);
Json to_json(const DiscResult& r);
Json to_json(const HerdiscResult& r);
Json to_json(const DetLbCertificate& c);
Json to_json(const TumResult& r);
Json to_json(const HadamardCertificate& c);
Json to_json(const ShatterWitness& w);
Json to_json(const VcResult& r);
Json to_json(const RandomColoringStats& s);
Json to_json(const PathCertificate& c);
Json to_json(const VolumeEstimate& e);
Json to_json(const VolLbResult& r);
// Sidecar form {branch, N, k, eps, m, n, family, disc_lower, detlb_upper, degenerate}.
Json to_json(const GapInstance& g);

// {dim, vectors: [[...], ...]} ordered by column; throws ParseError.
VectorAssignment assignment_from_json(const Json& j);

}  // namespace disclab

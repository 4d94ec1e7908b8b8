#ifndef MGH_CORPUS_HPP
#define MGH_CORPUS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mgh/groups.hpp"
#include "mgh/metric_space.hpp"
#include "mgh/serialization.hpp"

namespace mgh {

using CorpusObject =
    std::variant<FiniteMetricSpace, FiniteMetricGroup, SystemDescription, GroupSystemInput,
                 GroupBondSystem>;

/// Deterministic builders for every desk-scale object the library ships:
/// the 3-4-5 triangle and its doubled union, truncated figure spaces,
/// height towers, the S3 metric family and its limit system, discretized
/// circle groups, the halving-map system on Z_{2^n}, and the discrete
/// segment system with its net-growth witness.
CorpusObject build_example(const std::string& name, const Json& params);

std::vector<std::string> corpus_names();

Json corpus_object_to_json(const CorpusObject& object);

/// Named metric spaces of the corpus (used corpus-wide by the test suites).
std::vector<std::pair<std::string, FiniteMetricSpace>> corpus_spaces();

/// Named metric groups of the corpus.
std::vector<std::pair<std::string, FiniteMetricGroup>> corpus_groups();

/// Verified non-expansive surjective homomorphisms between corpus groups.
std::vector<std::pair<std::string, GroupHom>> corpus_homs();

}  // namespace mgh

#endif

#ifndef DOMTREE_JSON_OUT_HPP
#define DOMTREE_JSON_OUT_HPP

#include <json.hpp>

#include "domtree/analysis.hpp"
#include "domtree/critical.hpp"
#include "domtree/dom_poly.hpp"
#include "domtree/reconfig.hpp"
#include "domtree/verify.hpp"

// JSON report builders. Big integers are emitted as decimal strings and
// rationals as {"num","den"} so every report stays exact; nlohmann keeps keys
// sorted, which makes repeated runs byte-identical.
namespace domtree {

nlohmann::json json_of(const mpz_class& z);
nlohmann::json json_of(const mpq_class& q);
nlohmann::json json_of(const DomPoly& p);
nlohmann::json json_of(const CriticalDecomposition& d);
nlohmann::json json_of(const MatchingReport& r);
nlohmann::json json_of(const ReconfigTrace& t);
nlohmann::json json_of(const SequenceReport& r);
nlohmann::json json_of(const SegmentCheck& c);
nlohmann::json json_of(const GapCheck& c);
nlohmann::json json_of(const AvdReport& r);
nlohmann::json json_of(const TkCertificate& c);
nlohmann::json json_of(const verify::SuiteResult& r);

}  // namespace domtree

#endif

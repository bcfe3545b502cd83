#pragma once
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "posrep/posrep.hpp"

namespace posrep {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "posrep/1";

struct SerializeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json phase_json(const Phase& p);
json scalar_json(const Scalar& c);
Scalar scalar_from_json(const json& j);
// terms in sorted monomial order; rationals as "n" or "n/d"
json expr_json(const Expr& x);
Expr expr_from_json(const json& j, const TablePtr& T);

json presentation_json(const Presentation& P);
// rebuilds the symbol table from type and word and checks it against the stored one
Presentation presentation_from_json(const json& j);

json report_json(const RelationReport& r, bool timings = false);

}  // namespace posrep

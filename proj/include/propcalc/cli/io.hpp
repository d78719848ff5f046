#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "propcalc/diagram/signature.hpp"
#include "propcalc/symgroup/group_algebra.hpp"
#include "propcalc/teval/eval.hpp"
#include "propcalc/teval/tensor.hpp"
#include "propcalc/wprop/prop_elt.hpp"
#include "propcalc/zideal/ideal.hpp"

namespace propcalc::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Malformed input files or JSON documents.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// Parses JSON given inline (first non-space character '{' or '[') or as a
/// path to a file holding it.
json load_json(const std::string& text_or_path);

/// {"zero":false,"f":"t-1","C":[[1,1],[4,2]]}; "zero" defaults to false and
/// "f" to "1".
zideal::IdealData ideal_from_json(const json& j);
ojson ideal_to_json(const zideal::IdealData& ideal);

/// {"dim":2,"type":[2,1],"entries":[{"up":[1,2],"down":[1],"val":"3/2"}]},
/// indices 1-based.
teval::RatTensor tensor_from_json(const json& j);
ojson tensor_to_json(const teval::RatTensor& t);
ojson tensor_to_json(const teval::PolyTensor& t);

/// One line per entry, "[1,2;1] 3/2", after a "dim n type (p,q)" header.
std::string tensor_to_text(const teval::RatTensor& t);
std::string tensor_to_text(const teval::PolyTensor& t);

/// A JSON object mapping generator names to tensor objects or to tensor file
/// paths (relative to the representation file).
teval::RatRep load_representation(const std::string& path, const diagram::Signature& sig);

ojson element_to_json(const wprop::PropElt& a);

/// True if the text uses group-algebra notation, i.e. has a bracket without
/// ';' such as "[e]" or "[(1 2)]".
bool is_group_algebra_text(const std::string& text);

/// Parses "(t-1)*[e] + 2*[(1 2)] - [312]". Permutations are "e", cycles or
/// one-line digits; the degree is n if positive, otherwise the largest
/// point mentioned (1 if none).
symgroup::GAElt parse_group_algebra(const std::string& text, int n = 0);

}  // namespace propcalc::cli

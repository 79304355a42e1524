#pragma once

#include <string>

#include "json.hpp"

#include "hk3/cubic.hpp"
#include "hk3/eisenstein.hpp"
#include "hk3/hermitian.hpp"
#include "hk3/lattice.hpp"
#include "hk3/period.hpp"
#include "hk3/tower.hpp"

namespace hk3::io {

using json = nlohmann::json;

/// Malformed input document; the message starts with the offending field path.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parses inline JSON, "@path" (a file) or "-" (stdin).
json read_document(const std::string& arg);

/// "p/q" or "p" strings; plain JSON integers are accepted too.
Rational parse_rational(const json& j, const std::string& path);
/// [a, b] meaning a + b w.
Eis parse_eis(const json& j, const std::string& path);
/// Four rational strings: a + b sqrt3 + c i + d sqrt3 i.
Tower parse_tower(const json& j, const std::string& path);

OrthMatrix parse_orth(const json& j, const std::string& path);
EisMat2 parse_eis2(const json& j, const std::string& path);
EisMat4 parse_eis4(const json& j, const std::string& path);
HermitianPoint parse_tau(const json& j, const std::string& path);
/// Six Tower coordinates, rescaled so that z1 = 1.
PeriodPoint parse_z(const json& j, const std::string& path);
Lambda parse_lambda(const json& j, const std::string& path);

json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const Eis& e);
json to_json(const Tower& t);
json to_json(const OrthMatrix& g);
json to_json(const EisMat2& m);
json to_json(const EisMat4& m);
json to_json(const HermitianPoint& tau);
json to_json(const PeriodPoint& z);

} // namespace hk3::io

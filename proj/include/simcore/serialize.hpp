#pragma once

#include <json.hpp>

#include "simcore/bipoly.hpp"
#include "simcore/partition.hpp"
#include "simcore/qpoly.hpp"

namespace simcore {

using Json = nlohmann::json;

/* JSON encodings.  Coefficients travel as decimal strings ("num", "den") so
 * values outside the 64-bit range survive the round trip. */

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

Json qwpoly_to_json(const QWPolynomial& p);
QWPolynomial qwpoly_from_json(const Json& j);

Json bipoly_to_json(const BivariatePolynomial& p);
BivariatePolynomial bipoly_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/* Cache files: one size generating polynomial per coprime pair, validated on
 * load against the closed-form core count binom(s+t,s)/(s+t). */
std::string cache_file_name(long long s, long long t);
void write_cached_polynomial(const std::string& dir, long long s, long long t,
                             const QPolynomial& poly);
/* Returns true and fills poly if a valid cache entry exists; throws
 * std::runtime_error if the entry exists but fails validation. */
bool read_cached_polynomial(const std::string& dir, long long s, long long t,
                            QPolynomial& poly);

}  // namespace simcore

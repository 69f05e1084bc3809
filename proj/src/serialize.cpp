#include "simcore/serialize.hpp"

#include <filesystem>
#include <fstream>

#include "simcore/cores.hpp"

namespace simcore {

Json rational_to_json(const Rational& r) {
    return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const Json& j) {
    return Rational(Integer(j.at("num").get<std::string>()),
                    Integer(j.at("den").get<std::string>()));
}

Json qpoly_to_json(const QPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e, c.numerator().get_str(), c.denominator().get_str()}));
    return Json{{"variable", "q"}, {"terms", terms}};
}

QPolynomial qpoly_from_json(const Json& j) {
    if (j.at("variable").get<std::string>() != "q")
        throw std::invalid_argument("polynomial JSON: expected variable \"q\"");
    QPolynomial p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("polynomial JSON: term must be [exp, num, den]");
        p.add_term(t[0].get<long long>(),
                   Rational(Integer(t[1].get<std::string>()),
                            Integer(t[2].get<std::string>())));
    }
    return p;
}

Json qwpoly_to_json(const QWPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(Json::array(
            {k.first, k.second, c.numerator().get_str(), c.denominator().get_str()}));
    return Json{{"variables", Json::array({"q", "w"})}, {"terms", terms}};
}

QWPolynomial qwpoly_from_json(const Json& j) {
    QWPolynomial p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("polynomial JSON: term must be [qe, we, num, den]");
        p.add_term(t[0].get<long long>(), t[1].get<long long>(),
                   Rational(Integer(t[2].get<std::string>()),
                            Integer(t[3].get<std::string>())));
    }
    return p;
}

Json bipoly_to_json(const BivariatePolynomial& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(Json::array(
            {k.first, k.second, c.numerator().get_str(), c.denominator().get_str()}));
    return Json{{"variables", Json::array({"s", "t"})}, {"terms", terms}};
}

BivariatePolynomial bipoly_from_json(const Json& j) {
    BivariatePolynomial p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("polynomial JSON: term must be [sd, td, num, den]");
        p.add_term(t[0].get<long long>(), t[1].get<long long>(),
                   Rational(Integer(t[2].get<std::string>()),
                            Integer(t[3].get<std::string>())));
    }
    return p;
}

Json partition_to_json(const Partition& p) {
    Json parts = Json::array();
    for (long long x : p.parts) parts.push_back(x);
    return parts;
}

Partition partition_from_json(const Json& j) {
    std::vector<long long> parts;
    for (const auto& x : j) parts.push_back(x.get<long long>());
    return Partition(parts);
}

std::string cache_file_name(long long s, long long t) {
    return "genpoly_" + std::to_string(s) + "_" + std::to_string(t) + ".json";
}

void write_cached_polynomial(const std::string& dir, long long s, long long t,
                             const QPolynomial& poly) {
    std::filesystem::create_directories(dir);
    Json j{{"s", s}, {"t", t}, {"polynomial", qpoly_to_json(poly)}};
    std::ofstream out(std::filesystem::path(dir) / cache_file_name(s, t));
    if (!out) throw std::runtime_error("cannot write cache file in " + dir);
    out << j.dump(2) << "\n";
}

bool read_cached_polynomial(const std::string& dir, long long s, long long t,
                            QPolynomial& poly) {
    auto path = std::filesystem::path(dir) / cache_file_name(s, t);
    std::ifstream in(path);
    if (!in) return false;
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw std::runtime_error("cache file " + path.string() + " is not valid JSON: " +
                                 e.what());
    }
    if (j.at("s").get<long long>() != s || j.at("t").get<long long>() != t)
        throw std::runtime_error("cache file " + path.string() + " labeled for a different pair");
    QPolynomial candidate = qpoly_from_json(j.at("polynomial"));
    Integer expected = anderson_count({s, t});
    if (candidate.evaluate(Rational(1)) != Rational(expected))
        throw std::runtime_error("cache file " + path.string() +
                                 " failed validation: coefficient sum != " + expected.get_str());
    poly = candidate;
    return true;
}

}  // namespace simcore

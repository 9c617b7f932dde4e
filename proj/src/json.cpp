#include "pcf/json.hpp"

#include "pcf/errors.hpp"

namespace pcf::json {

json from_sequence(const Sequence& seq) {
    json values = json::array();
    for (const auto& v : seq.values()) values.push_back(v.str());
    return {{"lo", seq.lo()}, {"hi", seq.hi()}, {"values", std::move(values)}};
}

Sequence to_sequence(const json& record) {
    const long lo = record.at("lo").get<long>();
    const long hi = record.at("hi").get<long>();
    std::vector<Rational> values;
    for (const auto& v : record.at("values")) values.push_back(Rational::parse(v.get<std::string>()));
    if (hi - lo + 1 != static_cast<long>(values.size()))
        throw MathError("sequence record: hi - lo + 1 != number of values");
    return Sequence(lo, std::move(values), Provenance::supplied);
}

json from_line(const cf::Line& line) {
    return {{"h", line.state.h},
            {"P", line.state.P.str()},
            {"Q", line.state.Q.str()},
            {"a", line.step.a.str()},
            {"normal", line.step.normal},
            {"reduced", line.step.reduced}};
}

cf::State to_state(const json& record) {
    return {record.at("h").get<long>(), Poly::parse(record.at("P").get<std::string>()),
            Poly::parse(record.at("Q").get<std::string>())};
}

json from_certificate(const cf::Certificate& cert) {
    return {{"f", cert.f.str()}, {"a", cert.a.str()}, {"b", cert.b.str()}, {"m", cert.m}, {"c", cert.c.str()}};
}

cf::Certificate to_certificate(const json& record) {
    return {Poly::parse(record.at("f").get<std::string>()), Poly::parse(record.at("a").get<std::string>()),
            Poly::parse(record.at("b").get<std::string>()), record.at("m").get<long>(),
            Rational::parse(record.at("c").get<std::string>())};
}

}  // namespace pcf::json

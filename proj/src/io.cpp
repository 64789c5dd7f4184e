#include "lctkit/io.hpp"

#include <fstream>
#include <sstream>

namespace lctkit {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j)
{
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(BigInt(std::to_string(j.get<long long>())));
    throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const RatVector& v)
{
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

RatVector rat_vector_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RatVector v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json to_json(const MonomialIdeal& ideal)
{
    Json j;
    j["format"] = kFormatTag;
    j["n"] = ideal.n();
    j["generators"] = ideal.generators();
    return j;
}

MonomialIdeal ideal_from_json(const Json& j, bool strict, bool* minimalized)
{
    if (!j.is_object()) throw ParseError("ideal JSON must be an object");
    if (j.contains("format") && j["format"] != kFormatTag) {
        throw ParseError("unsupported format tag " + j["format"].dump());
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0) {
        throw ParseError("ideal JSON needs a positive integer \"n\"");
    }
    if (!j.contains("generators") || !j["generators"].is_array()) {
        throw ParseError("ideal JSON needs a \"generators\" array");
    }
    const auto n = j["n"].get<std::size_t>();
    std::vector<Exponents> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_array()) throw ParseError("each generator must be an array of exponents");
        Exponents e;
        for (const auto& x : g) {
            if (!x.is_number_integer()) throw ParseError("exponents must be integers");
            e.push_back(x.get<std::int64_t>());
        }
        gens.push_back(std::move(e));
    }
    const auto count = gens.size();
    try {
        if (strict) return MonomialIdeal::from_minimal(n, std::move(gens));
        MonomialIdeal ideal(n, std::move(gens));
        if (minimalized) *minimalized = ideal.generators().size() != count;
        return ideal;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const PairSpec& pair)
{
    Json j = to_json(pair.ideal());
    j["b"] = to_json(pair.b());
    j["mu"] = to_json(pair.mu());
    return j;
}

PairSpec pair_from_json(const Json& j, bool strict, bool* minimalized)
{
    auto ideal = ideal_from_json(j, strict, minimalized);
    if (!j.contains("b") || !j.contains("mu")) throw ParseError("pair JSON needs \"b\" and \"mu\"");
    auto b = rat_vector_from_json(j["b"]);
    auto mu = rat_from_json(j["mu"]);
    try {
        return PairSpec(std::move(ideal), std::move(b), std::move(mu));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace lctkit

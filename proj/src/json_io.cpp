#include "antiflip/json_io.hpp"

#include "antiflip/errors.hpp"

namespace antiflip::json {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON: missing field '") + key + "'");
    return j.at(key);
}

const json& pair_array(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("JSON: expected a pair [x,y], got " + j.dump());
    return j;
}

std::vector<Integer> integer_list(const json& j) {
    if (!j.is_array()) throw DomainError("JSON: expected an array of integers, got " + j.dump());
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(decode_integer(x));
    return out;
}

}  // namespace

json encode(const Integer& x) {
    if (x.is_small()) return x.small_value();
    return x.str();
}

Integer decode_integer(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer::parse(j.get<std::string>());
    throw DomainError("JSON: expected an integer, got " + j.dump());
}

json encode(const WahlPair& w) { return json::array({encode(w.m()), encode(w.a())}); }

WahlPair decode_wahl(const json& j) {
    const json& p = pair_array(j);
    return WahlPair(decode_integer(p[0]), decode_integer(p[1]));
}

json encode(const Fraction& f) { return json::array({encode(f.num()), encode(f.den())}); }

Fraction decode_fraction(const json& j) {
    const json& p = pair_array(j);
    return Fraction(decode_integer(p[0]), decode_integer(p[1]));
}

json encode(const CFrac& c) {
    json out = json::array();
    for (const auto& x : c.entries()) out.push_back(encode(x));
    return out;
}

CFrac decode_cfrac(const json& j) { return CFrac(integer_list(j)); }

json encode(const ExtremalNbhd& e) {
    return {{"pairs", json::array({encode(e.w1()), encode(e.w2())})},
            {"delta", encode(e.delta())},
            {"kind", kind_name(classify(e))},
            {"display", display(e)}};
}

ExtremalNbhd decode_nbhd(const json& j) {
    const json& pairs = pair_array(field(j, "pairs"));
    return ExtremalNbhd::member(decode_wahl(pairs[0]), decode_wahl(pairs[1]));
}

json encode(const PResolution& p) {
    return {{"w1p", encode(p.w1p())},
            {"w2p", encode(p.w2p())},
            {"c", encode(p.c())},
            {"delta", encode(p.delta())},
            {"display", display(p)}};
}

PResolution decode_presolution(const json& j) {
    return PResolution(decode_wahl(field(j, "w1p")), decode_wahl(field(j, "w2p")), decode_integer(field(j, "c")));
}

json encode(const EmbeddingStep& s) {
    return {{"i", s.step.index},
            {"family", s.family},
            {"pair1", encode(s.step.nbhd.w1())},
            {"pair2", encode(s.step.nbhd.w2())},
            {"canonical1", encode(s.canonical1)},
            {"canonical2", encode(s.canonical2)},
            {"display", display(s.step.nbhd)}};
}

EmbeddingStep decode_step(const json& j) {
    ExtremalNbhd e = ExtremalNbhd::member(decode_wahl(field(j, "pair1")), decode_wahl(field(j, "pair2")));
    const json& i = field(j, "i");
    const json& family = field(j, "family");
    if (!i.is_number_unsigned() || !family.is_number_unsigned()) throw DomainError("JSON: step index must be a count");
    MoriStep step{i.get<std::size_t>(), e};
    return make_embedding_step(family.get<std::size_t>(), std::move(step));
}

json encode(const Target& t) {
    struct Visitor {
        json operator()(const ChainNbhd& v) const { return {{"kind", "chain"}, {"gamma", encode(v.gamma)}}; }
        json operator()(const BlownUpBall& v) const { return {{"kind", "blowup"}, {"wahl", encode(v.w)}}; }
        json operator()(const MilnorFiber& v) const {
            return {{"kind", "milnor"}, {"presolution", encode(v.p)}, {"q_type", encode(v.q_type)}};
        }
    };
    json out = std::visit(Visitor{}, t);
    out["display"] = describe(t);
    return out;
}

Target decode_target(const json& j) {
    const json& kind = field(j, "kind");
    if (kind == "chain") return ChainNbhd{decode_cfrac(field(j, "gamma"))};
    if (kind == "blowup") return BlownUpBall{decode_wahl(field(j, "wahl"))};
    if (kind == "milnor") {
        PResolution p = decode_presolution(field(j, "presolution"));
        Fraction q = decode_fraction(field(j, "q_type"));
        if (q != presolution_target(p)) throw DomainError("JSON: q_type does not match the P-resolution");
        return MilnorFiber{std::move(p), std::move(q)};
    }
    throw DomainError("JSON: unknown target kind " + kind.dump());
}

json encode(const EmbeddingReport& r) {
    json out = {{"target", encode(r.target)},
                {"delta", r.delta ? encode(*r.delta) : json(nullptr)},
                {"infinite", r.infinite},
                {"simplicity", simplicity_name(r.simplicity)},
                {"steps", json::array()}};
    for (const auto& s : r.steps) out["steps"].push_back(encode(s));
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (const auto* m = std::get_if<MilnorFiber>(&r.target)) out["q_type"] = encode(m->q_type);
    return out;
}

EmbeddingReport decode_report(const json& j) {
    EmbeddingReport r{decode_target(field(j, "target")), std::nullopt, false, Simplicity::none, {}, {}};
    const json& delta = field(j, "delta");
    if (!delta.is_null()) r.delta = decode_integer(delta);
    const json& infinite = field(j, "infinite");
    if (!infinite.is_boolean()) throw DomainError("JSON: 'infinite' must be a boolean");
    r.infinite = infinite.get<bool>();
    const json& simplicity = field(j, "simplicity");
    if (!simplicity.is_string()) throw DomainError("JSON: 'simplicity' must be a string");
    r.simplicity = parse_simplicity(simplicity.get<std::string>());
    const json& steps = field(j, "steps");
    if (!steps.is_array()) throw DomainError("JSON: 'steps' must be an array");
    for (const auto& s : steps) r.steps.push_back(decode_step(s));
    if (j.contains("reason")) r.reason = field(j, "reason").get<std::string>();
    return r;
}

}  // namespace antiflip::json

#include "decforge/json_io.hpp"

#include "decforge/errors.hpp"

namespace decforge {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

// run a library parse under ParseError semantics
template <class F> auto parsing(F&& f) {
    try {
        return std::forward<F>(f)();
    } catch (const DomainError& e) { bad(e.what()); } catch (const json::exception& e) {
        bad(e.what());
    }
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !j.is_object())
        bad(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string(key) + " must be an integer");
    return v.get<std::int64_t>();
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad(std::string(key) + " must be a string");
    return v.get<std::string>();
}

BaseField base_field(const json& j) {
    return parsing([&] { return parse_base(str_field(j, "base")); });
}

const char* base_token(BaseField b) {
    return b == BaseField::Q ? "Q" : "Qi";
}

} // namespace

json group_to_json(const FinAbGroup& g) {
    return json{{"factors", g.factors()}};
}

json place_to_json(const Place& q) {
    if (q.kind == PlaceKind::Real) return json{{"arch", "real"}};
    if (q.kind == PlaceKind::Complex) return json{{"arch", "complex"}};
    if (q.base == BaseField::Q) return json{{"p", q.p}};
    return json{{"p", q.p}, {"pi", q.pi.str()}};
}

Place place_from_json(BaseField base, const json& j) {
    if (!j.is_object()) bad("place must be an object");
    if (j.contains("arch")) {
        std::string a = str_field(j, "arch");
        if (a == "real" && base == BaseField::Q) return Place::real_place();
        if (a == "complex" && base == BaseField::Qi)
            return Place::complex_place();
        bad("no archimedean place \"" + a + "\" over " + base_name(base));
    }
    if (base == BaseField::Q) return parsing([&] {
            return Place::rational(int_field(j, "p"));
        });
    GaussInt pi = parsing(
        [&] { return GaussInt::parse(str_field(j, "pi")); });
    Place q = parsing([&] { return Place::gaussian(pi); });
    if (j.contains("p") && int_field(j, "p") != q.p)
        bad("place " + q.pi.str() + " does not lie over " +
            std::to_string(int_field(j, "p")));
    return q;
}

json extension_to_json(const KummerExtension& k) {
    json gens = json::array();
    for (const KummerGen& g : k.gens())
        gens.push_back(json::array({g.a.str(), g.n}));
    return json{{"base", base_token(k.base())}, {"gens", gens}};
}

KummerExtension extension_from_json(const json& j) {
    BaseField base = base_field(j);
    const json& gens = field(j, "gens");
    if (!gens.is_array() || gens.empty()) bad("gens must be a nonempty array");
    std::vector<KummerGen> out;
    for (const json& g : gens) {
        if (!g.is_array() || g.size() != 2 || !g[0].is_string() ||
            !g[1].is_number_integer())
            bad("each generator must be [\"element\", order]");
        FieldElem a = parsing(
            [&] { return FieldElem::parse(base, g[0].get<std::string>()); });
        out.push_back({a, g[1].get<std::int64_t>()});
    }
    return KummerExtension(base, out);
}

KummerExtension extension_from_inline(const std::vector<std::string>& tokens) {
    std::string base_s, gens_s;
    for (const std::string& t : tokens) {
        if (t.rfind("base=", 0) == 0) base_s = t.substr(5);
        else if (t.rfind("gens=", 0) == 0) gens_s = t.substr(5);
        else bad("unrecognized token \"" + t + "\"");
    }
    if (base_s.empty() || gens_s.empty())
        bad("an extension needs base=... and gens=...");
    BaseField base = parsing([&] { return parse_base(base_s); });
    std::vector<KummerGen> gens;
    std::size_t pos = 0;
    while (pos <= gens_s.size()) {
        std::size_t comma = gens_s.find(',', pos);
        std::string item = gens_s.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t caret = item.rfind('^');
        if (item.empty() || caret == std::string::npos || caret + 1 >= item.size())
            bad("generator \"" + item + "\" is not of the form a^n");
        FieldElem a = parsing(
            [&] { return FieldElem::parse(base, item.substr(0, caret)); });
        std::int64_t n = 0;
        try {
            n = std::stoll(item.substr(caret + 1));
        } catch (const std::logic_error&) {
            bad("bad order in \"" + item + "\"");
        }
        gens.push_back({a, n});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return KummerExtension(base, gens);
}

json class_to_json(const BrauerClass& c) {
    json inv = json::array();
    for (const auto& [q, v] : c.invariants())
        inv.push_back(json{{"place", place_to_json(q)}, {"val", v.str()}});
    return json{{"base", base_token(c.base())}, {"inv", inv}};
}

BrauerClass class_from_json(const json& j) {
    BaseField base = base_field(j);
    const json& inv = field(j, "inv");
    if (!inv.is_array()) bad("inv must be an array");
    std::map<Place, QZ> entries;
    for (const json& e : inv) {
        Place q = place_from_json(base, field(e, "place"));
        QZ v = parsing([&] { return QZ::parse(str_field(e, "val")); });
        if (entries.count(q)) bad("duplicate place " + q.str());
        entries.emplace(q, v);
    }
    return BrauerClass::from_invariants(base, entries);
}

json symbol_to_json(const SymbolAlgebra& s) {
    return json{{"base", base_token(s.a.base())},
                {"a", s.a.str()},
                {"b", s.b.str()},
                {"n", s.n}};
}

SymbolAlgebra symbol_from_json(const json& j) {
    std::int64_t n = int_field(j, "n");
    BaseField base = j.contains("base")
                         ? base_field(j)
                         : (n == 4 ? BaseField::Qi : BaseField::Q);
    FieldElem a = parsing(
        [&] { return FieldElem::parse(base, str_field(j, "a")); });
    FieldElem b = parsing(
        [&] { return FieldElem::parse(base, str_field(j, "b")); });
    return {a, b, n};
}

json laurent_to_json(const LaurentSymbol& s) {
    auto slot = [](const LaurentMonomial& m) {
        return json{{"u", m.u.str()}, {"x", m.xe}, {"y", m.ye}};
    };
    return json{{"n", s.n}, {"a", slot(s.a)}, {"b", slot(s.b)}};
}

LaurentSymbol laurent_from_json(const json& j) {
    auto slot = [&](const json& m) {
        FieldElem u = parsing([&] {
            return FieldElem::parse(BaseField::Qi, str_field(m, "u"));
        });
        return LaurentMonomial{u, int_field(m, "x"), int_field(m, "y")};
    };
    return {int_field(j, "n"), slot(field(j, "a")), slot(field(j, "b"))};
}

} // namespace decforge

#include "weiljets/session.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "weiljets/a_points.hpp"
#include "weiljets/error.hpp"
#include "weiljets/jet.hpp"
#include "weiljets/poly_text.hpp"
#include "weiljets/weil_algebra.hpp"

namespace weiljets {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// parsing

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    fail(ErrorKind::SchemaViolation, where + ": " + what);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) schema(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) schema(where, "unexpected key \"" + key + "\"");
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) schema(where, std::string("missing \"") + key + "\"");
    return obj.at(key);
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) schema(where, std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::size_t get_count(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_unsigned()) schema(where, std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational get_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    schema(where, "rationals are integers or strings such as \"3/2\"");
}

Vector get_vector(const json& v, const std::string& where) {
    if (!v.is_array()) schema(where, "expected an array of rationals");
    Vector out;
    for (const auto& x : v) out.push_back(get_rational(x, where));
    return out;
}

std::vector<Vector> get_matrix(const json& v, const std::string& where) {
    if (!v.is_array()) schema(where, "expected an array of arrays");
    std::vector<Vector> out;
    for (const auto& row : v) out.push_back(get_vector(row, where));
    return out;
}

Polynomial get_poly(const json& v, const std::vector<std::string>& names, const std::string& where) {
    if (!v.is_string()) schema(where, "polynomials are given as strings");
    return parse_polynomial(v.get<std::string>(), names);
}

std::vector<Polynomial> get_polys(const json& v, const std::vector<std::string>& names, const std::string& where) {
    if (!v.is_array()) schema(where, "expected an array of polynomial strings");
    std::vector<Polynomial> out;
    for (const auto& p : v) out.push_back(get_poly(p, names, where));
    return out;
}

const char* kind_name(BindingKind k) {
    switch (k) {
    case BindingKind::Algebra: return "algebra";
    case BindingKind::Jet: return "jet";
    case BindingKind::Point: return "point";
    case BindingKind::Group: return "group";
    }
    return "binding";
}

struct Symbol {
    BindingKind kind;
    std::size_t vars;
};

class Parser {
public:
    Session run(const json& doc) {
        check_keys(doc, {"bind", "run"}, "session");
        if (doc.contains("bind")) {
            const json& b = doc.at("bind");
            if (!b.is_array()) schema("session", "\"bind\" must be an array");
            for (std::size_t i = 0; i < b.size(); ++i) session_.bindings.push_back(binding(b[i], "bind[" + std::to_string(i) + "]"));
        }
        if (doc.contains("run")) {
            const json& r = doc.at("run");
            if (!r.is_array()) schema("session", "\"run\" must be an array");
            for (std::size_t i = 0; i < r.size(); ++i) session_.commands.push_back(command(r[i], i));
        }
        return session_;
    }

private:
    void declare(const std::string& name, BindingKind kind, std::size_t vars, const std::string& where) {
        if (name.empty()) schema(where, "names must be non-empty");
        if (symbols_.count(name)) schema(where, "name \"" + name + "\" is already bound");
        symbols_.emplace(name, Symbol{kind, vars});
    }

    const Symbol& lookup(const std::string& name, std::optional<BindingKind> kind, const std::string& where) {
        auto it = symbols_.find(name);
        if (it == symbols_.end()) fail(ErrorKind::UnknownName, where + ": unknown name \"" + name + "\"");
        if (kind && it->second.kind != *kind)
            schema(where, "\"" + name + "\" is a " + kind_name(it->second.kind) + ", expected a " + kind_name(*kind));
        return it->second;
    }

    std::string ref(const json& obj, const char* key, BindingKind kind, const std::string& where) {
        const std::string name = get_string(obj, key, where);
        lookup(name, kind, where);
        return name;
    }

    Binding binding(const json& b, const std::string& where) {
        if (!b.is_object()) schema(where, "expected an object");
        Binding out;
        if (b.contains("apoint")) {
            check_keys(b, {"apoint", "algebra", "images"}, where);
            out.kind = BindingKind::Point;
            out.name = get_string(b, "apoint", where);
            out.algebra = ref(b, "algebra", BindingKind::Algebra, where);
            out.images = get_matrix(field(b, "images", where), where);
            if (out.images.empty()) schema(where, "a point needs at least one image");
            out.vars = out.images.size();
        } else if (b.contains("jet")) {
            check_keys(b, {"jet", "vars", "point", "generators", "order_hint"}, where);
            out.kind = BindingKind::Jet;
            out.name = get_string(b, "jet", where);
            out.vars = get_count(b, "vars", where);
            if (out.vars == 0) schema(where, "\"vars\" must be positive");
            out.point = b.contains("point") ? get_vector(b.at("point"), where) : Vector(out.vars);
            if (out.point.size() != out.vars) schema(where, "\"point\" needs one coordinate per variable");
            if (b.contains("generators")) out.generators = get_polys(b.at("generators"), default_variable_names(out.vars), where);
            out.order_hint = static_cast<unsigned>(get_count(b, "order_hint", where));
        } else if (b.contains("group")) {
            check_keys(b, {"group", "dim", "law", "identity", "inverse"}, where);
            out.kind = BindingKind::Group;
            out.name = get_string(b, "group", where);
            out.vars = get_count(b, "dim", where);
            if (out.vars == 0) schema(where, "\"dim\" must be positive");
            out.law = get_polys(field(b, "law", where), pair_variable_names(out.vars), where);
            out.identity = get_vector(field(b, "identity", where), where);
            out.inverse = get_polys(field(b, "inverse", where), default_variable_names(out.vars), where);
            if (out.law.size() != out.vars || out.identity.size() != out.vars || out.inverse.size() != out.vars)
                schema(where, "law, identity and inverse need one entry per coordinate");
        } else if (b.contains("algebra")) {
            out.kind = BindingKind::Algebra;
            out.name = get_string(b, "algebra", where);
            if (b.contains("tensor")) {
                check_keys(b, {"algebra", "tensor"}, where);
                const json& t = b.at("tensor");
                if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
                    schema(where, "\"tensor\" lists two algebra names");
                for (const auto& n : t) {
                    out.tensor.push_back(n.get<std::string>());
                    out.vars += lookup(out.tensor.back(), BindingKind::Algebra, where).vars;
                }
            } else {
                check_keys(b, {"algebra", "vars", "relations", "order"}, where);
                out.vars = get_count(b, "vars", where);
                if (out.vars == 0) schema(where, "\"vars\" must be positive");
                if (b.contains("relations")) out.relations = get_polys(b.at("relations"), default_variable_names(out.vars), where);
                if (b.contains("order")) out.order = static_cast<unsigned>(get_count(b, "order", where));
                if (!out.order && out.relations.empty()) schema(where, "an algebra without relations needs \"order\"");
            }
        } else {
            schema(where, "a binding names one of algebra, jet, apoint, group");
        }
        declare(out.name, out.kind, out.vars, where);
        return out;
    }

    Command command(const json& c, std::size_t index) {
        const std::string where = "run[" + std::to_string(index) + "]";
        Command out;
        out.index = index;
        out.op = get_string(c, "op", where);
        const std::string& op = out.op;
        auto names = [](std::size_t n) { return default_variable_names(n); };
        auto polys = [&](const char* key, std::size_t n) { out.polys[key] = get_polys(field(c, key, where), names(n), where); };
        auto poly1 = [&](const char* key, std::size_t n) { out.polys[key] = {get_poly(field(c, key, where), names(n), where)}; };
        auto name_list = [&](const char* key, BindingKind kind, std::size_t count) {
            const json& v = field(c, key, where);
            if (!v.is_array() || v.size() != count) schema(where, "\"" + std::string(key) + "\" lists " + std::to_string(count) + " names");
            for (const auto& n : v) {
                if (!n.is_string()) schema(where, "names are strings");
                lookup(n.get<std::string>(), kind, where);
                out.refs.push_back(n.get<std::string>());
            }
        };

        static const std::set<std::string> jet_ops{"hat", "tangent", "cotangent", "fields", "normal_form", "derive", "contact", "taylor"};
        if (op == "info") {
            check_keys(c, {"op", "of"}, where);
            out.refs.push_back(get_string(c, "of", where));
            lookup(out.refs.back(), std::nullopt, where);
        } else if (op == "basis" || op == "derivations") {
            check_keys(c, {"op", "of"}, where);
            out.refs.push_back(ref(c, "of", BindingKind::Algebra, where));
        } else if (op == "multiply") {
            check_keys(c, {"op", "in", "a", "b"}, where);
            out.refs.push_back(ref(c, "in", BindingKind::Algebra, where));
            const std::size_t n = symbols_.at(out.refs[0]).vars;
            poly1("a", n);
            poly1("b", n);
        } else if (jet_ops.count(op)) {
            check_keys(c, {"op", "of"}, where);
            out.refs.push_back(ref(c, "of", BindingKind::Jet, where));
        } else if (op == "pushforward" || op == "tangent_map") {
            if (op == "pushforward") check_keys(c, {"op", "of", "map", "as"}, where);
            else check_keys(c, {"op", "of", "map"}, where);
            out.refs.push_back(ref(c, "of", BindingKind::Jet, where));
            polys("map", symbols_.at(out.refs[0]).vars);
            if (out.polys["map"].empty()) schema(where, "\"map\" needs at least one component");
            if (c.contains("as")) {
                out.as = get_string(c, "as", where);
                declare(*out.as, BindingKind::Jet, out.polys["map"].size(), where);
            }
        } else if (op == "differential") {
            check_keys(c, {"op", "of", "f", "tangent"}, where);
            out.refs.push_back(ref(c, "of", BindingKind::Jet, where));
            poly1("f", symbols_.at(out.refs[0]).vars);
            out.vectors["tangent"] = {get_vector(field(c, "tangent", where), where)};
        } else if (op == "evaluate") {
            check_keys(c, {"op", "at", "f"}, where);
            out.refs.push_back(ref(c, "at", BindingKind::Point, where));
            poly1("f", symbols_.at(out.refs[0]).vars);
        } else if (op == "regularity") {
            check_keys(c, {"op", "of"}, where);
            out.refs.push_back(ref(c, "of", BindingKind::Point, where));
        } else if (op == "product") {
            check_keys(c, {"op", "of", "as"}, where);
            name_list("of", BindingKind::Point, 2);
            if (c.contains("as")) {
                out.as = get_string(c, "as", where);
                declare(*out.as, BindingKind::Point, symbols_.at(out.refs[0]).vars + symbols_.at(out.refs[1]).vars, where);
            }
        } else if (op == "tangent_check") {
            check_keys(c, {"op", "at", "f", "field"}, where);
            out.refs.push_back(ref(c, "at", BindingKind::Point, where));
            const std::size_t n = symbols_.at(out.refs[0]).vars;
            poly1("f", n);
            polys("field", n);
        } else if (op == "prolong") {
            check_keys(c, {"op", "algebra", "vars", "generators"}, where);
            out.refs.push_back(ref(c, "algebra", BindingKind::Algebra, where));
            out.vars = get_count(c, "vars", where);
            if (out.vars == 0) schema(where, "\"vars\" must be positive");
            polys("generators", out.vars);
        } else if (op == "weil_iso") {
            check_keys(c, {"op", "algebras", "vars", "f", "images"}, where);
            name_list("algebras", BindingKind::Algebra, 2);
            out.vars = get_count(c, "vars", where);
            if (out.vars == 0) schema(where, "\"vars\" must be positive");
            poly1("f", out.vars);
            out.vectors["images"] = get_matrix(field(c, "images", where), where);
        } else if (op == "group_multiply" || op == "group_axioms" || op == "group_inverse") {
            check_keys(c, {"op", "group", "points"}, where);
            out.refs.push_back(ref(c, "group", BindingKind::Group, where));
            name_list("points", BindingKind::Point, op == "group_multiply" ? 2 : op == "group_axioms" ? 3 : 1);
        } else {
            schema(where, "unknown op \"" + op + "\"");
        }
        return out;
    }

    Session session_;
    std::map<std::string, Symbol> symbols_;
};

// ---------------------------------------------------------------------------
// execution

using Value = std::variant<WeilAlgebra, Jet, APoint, GroupLaw>;

json rational_json(const Rational& q) { return format_rational(q); }

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

json matrix_json(const std::vector<Vector>& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(vector_json(row));
    return out;
}

json polys_json(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(format_polynomial(p));
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Polynomial uncentre(const Polynomial& f, const Vector& base) {
    Vector minus(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) minus[i] = -base[i];
    return translate(f, minus);
}

json jet_json(const Jet& p) {
    return {{"point", vector_json(p.base_point())},
            {"order", p.order()},
            {"width", p.width()},
            {"dim", p.algebra().dimension()},
            {"classical", p.is_classical()},
            {"classical_dim", binomial(p.width() + p.order(), p.order())},
            {"generators", polys_json(p.generators_at_point())}};
}

json algebra_json(const WeilAlgebra& a) {
    const AlgebraInvariants inv = invariants(a);
    return {{"dim", inv.dimension}, {"order", inv.order}, {"width", inv.width}, {"der_dim", inv.derivation_dimension}};
}

WeilAlgebra algebra_with_detected_order(std::size_t vars, const std::vector<Polynomial>& relations) {
    unsigned top = 1;
    for (const auto& r : relations) top = std::max(top, r.degree());
    for (unsigned L = top; L <= 12; ++L) {
        WeilAlgebra a = WeilAlgebra::quotient(vars, relations, L);
        if (a.order() < L) return a;
    }
    fail(ErrorKind::SchemaViolation, "the relations do not bound the order below 12; give \"order\"");
}

class Executor {
public:
    explicit Executor(const RunOptions& options) : options_(options) {}

    Report run(const Session& s) {
        Report report;
        report.body = {{"bindings", json::array()}, {"results", json::array()}};
        for (const auto& b : s.bindings) {
            json entry = {{"name", b.name}, {"kind", kind_name(b.kind)}};
            try {
                bind(b);
                entry["status"] = "ok";
            } catch (const Error& e) {
                failed_.insert_or_assign(b.name, e);
                entry["error"] = error_json(e);
                report.has_errors = true;
            }
            report.body["bindings"].push_back(entry);
            if (report.has_errors && options_.fail_fast) return report;
        }
        for (const auto& c : s.commands) {
            json entry = {{"index", c.index}, {"op", c.op}};
            if (!c.refs.empty()) entry["target"] = c.refs.front();
            try {
                entry["result"] = dispatch(c);
            } catch (const Error& e) {
                entry["error"] = error_json(e);
                if (c.as) failed_.emplace(*c.as, e);
                report.has_errors = true;
            } catch (const std::exception& e) {
                entry["error"] = {{"kind", "Internal"}, {"message", e.what()}};
                report.has_errors = true;
            }
            report.body["results"].push_back(entry);
            if (report.has_errors && options_.fail_fast) break;
        }
        return report;
    }

private:
    static json error_json(const Error& e) { return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

    const Value& value(const std::string& name) const {
        auto f = failed_.find(name);
        if (f != failed_.end()) throw Error(f->second.kind(), "\"" + name + "\" is unavailable: " + f->second.what());
        return values_.at(name);
    }

    template <class T>
    const T& get(const std::string& name) const {
        const Value& v = value(name);
        if (!std::holds_alternative<T>(v)) fail(ErrorKind::SchemaViolation, "\"" + name + "\" has the wrong kind");
        return std::get<T>(v);
    }

    void bind(const Binding& b) {
        switch (b.kind) {
        case BindingKind::Algebra:
            if (!b.tensor.empty())
                values_.insert_or_assign(b.name, Value(tensor_product(get<WeilAlgebra>(b.tensor[0]), get<WeilAlgebra>(b.tensor[1])).algebra));
            else if (b.order)
                values_.insert_or_assign(b.name, Value(WeilAlgebra::quotient(b.vars, b.relations, *b.order)));
            else
                values_.insert_or_assign(b.name, Value(algebra_with_detected_order(b.vars, b.relations)));
            break;
        case BindingKind::Jet:
            values_.insert_or_assign(b.name, Value(jet_from_ideal(b.vars, b.point, b.generators, b.order_hint)));
            break;
        case BindingKind::Point:
            values_.insert_or_assign(b.name, Value(APoint(get<WeilAlgebra>(b.algebra), b.images)));
            break;
        case BindingKind::Group:
            values_.insert_or_assign(b.name, Value(GroupLaw(b.law, b.identity, b.inverse)));
            break;
        }
    }

    json contact_json(const ContactData& c) const {
        return {{"rank", c.rank},
                {"tangent_dimension", c.tangent_dimension},
                {"cartan_dimension", c.cartan_dimension},
                {"annihilator_identity", c.annihilator_identity},
                {"relations_projected", c.relations_projected},
                {"kernel_in_cartan", c.kernel_in_cartan}};
    }

    json dispatch(const Command& c) {
        const std::string& op = c.op;
        const auto& polys = [&](const char* k) -> const std::vector<Polynomial>& { return c.polys.at(k); };

        if (op == "info") {
            const Value& v = value(c.refs[0]);
            if (auto* a = std::get_if<WeilAlgebra>(&v)) return algebra_json(*a);
            if (auto* p = std::get_if<Jet>(&v)) return jet_json(*p);
            if (auto* q = std::get_if<APoint>(&v))
                return {{"base_point", vector_json(q->base_point())},
                        {"algebra_dim", q->algebra().dimension()},
                        {"regular", regularity_and_kernel(*q).regular}};
            const auto& g = std::get<GroupLaw>(v);
            return {{"dim", g.dimension()}, {"identity", vector_json(g.identity())}};
        }
        if (op == "basis") {
            const WeilAlgebra& a = get<WeilAlgebra>(c.refs[0]);
            json basis = json::array(), monomials = json::array(), structure = json::array();
            for (const auto& m : a.basis()) {
                basis.push_back(m.exponents());
                monomials.push_back(format_polynomial(Polynomial::monomial(a.window(), m)));
            }
            for (std::size_t i = 0; i < a.dimension(); ++i)
                for (std::size_t j = 0; j < a.dimension(); ++j)
                    for (const auto& [k, c] : a.product(i, j)) structure.push_back({i, j, k, format_rational(c)});
            return {{"basis", basis}, {"monomials", monomials}, {"structure", structure}, {"filtration", a.filtration()}};
        }
        if (op == "derivations") {
            const WeilAlgebra& a = get<WeilAlgebra>(c.refs[0]);
            const DerivationSpace d = derivation_space(a);
            return {{"dimension", d.tuples.dimension()}, {"tuples", matrix_json(d.tuples.basis())}};
        }
        if (op == "multiply") {
            const WeilAlgebra& a = get<WeilAlgebra>(c.refs[0]);
            const Vector prod = a.multiply(a.reduce(polys("a")[0]), a.reduce(polys("b")[0]));
            return {{"product", format_polynomial(a.lift(prod).truncated(a.order()))}, {"coordinates", vector_json(prod)}};
        }

        if (op == "hat") return jet_json(hat_ideal(get<Jet>(c.refs[0])));
        if (op == "tangent") {
            const TangentModule t = tangent_module(get<Jet>(c.refs[0]));
            return {{"ambient_dimension", t.ambient_dimension}, {"relations_dimension", t.relations.dimension()}, {"dimension", t.dimension}};
        }
        if (op == "cotangent") {
            const Jet& p = get<Jet>(c.refs[0]);
            const CotangentModule m = cotangent_module(p);
            std::vector<Polynomial> basis;
            for (const auto& f : m.basis) basis.push_back(uncentre(f, p.base_point()));
            return {{"dimension", m.dimension}, {"basis", polys_json(basis)}};
        }
        if (op == "fields") return {{"dimension", jet_fields(get<Jet>(c.refs[0])).dimension()}};
        if (op == "normal_form") {
            const Jet& p = get<Jet>(c.refs[0]);
            const NormalForm nf = normal_form(p);
            const auto names = default_variable_names(p.ambient_dimension());
            json ys = json::array(), xs = json::array();
            for (auto y : nf.y_variables) ys.push_back(names[y]);
            for (auto x : nf.x_variables) xs.push_back(names[x]);
            return {{"y_variables", ys}, {"x_variables", xs}, {"sigma", polys_json(nf.sigma)}, {"tau", polys_json(nf.tau)}, {"q", polys_json(nf.q_list)}};
        }
        if (op == "derive") {
            const Jet& p = get<Jet>(c.refs[0]);
            const ContactData contact = contact_and_cartan(p);
            const TaylorData t = taylor_map(p, contact);
            json out = {{"derived", jet_json(contact.derived)},
                        {"taylor_condition", t.taylor_condition},
                        {"contact_rank", contact.rank},
                        {"tangent_dimension", contact.tangent_dimension},
                        {"cartan_dimension", contact.cartan_dimension}};
            if (options_.verify_oracles) {
                out["oracle_agrees"] = cartan_generation_oracle(p) == contact.derived;
                out["fields_preserved"] = fields_preserve(jet_fields(p), p.ambient_dimension(), p.order(), contact.derived);
            }
            return out;
        }
        if (op == "contact") {
            const Jet& p = get<Jet>(c.refs[0]);
            json out = contact_json(contact_and_cartan(p));
            if (options_.verify_oracles) out["oracle_agrees"] = cartan_generation_oracle(p) == derived_jet(p);
            return out;
        }
        if (op == "taylor") {
            const TaylorData t = taylor_map(get<Jet>(c.refs[0]));
            return {{"derived", jet_json(t.derived)},
                    {"image_dimension", t.image_dimension},
                    {"taylor_condition", t.taylor_condition},
                    {"image", matrix_json(t.image.basis())}};
        }
        if (op == "pushforward") {
            const Jet q = pushforward(get<Jet>(c.refs[0]), polys("map"));
            if (c.as) values_.insert_or_assign(*c.as, Value(q));
            return jet_json(q);
        }
        if (op == "tangent_map") {
            const TangentMap t = tangent_map(get<Jet>(c.refs[0]), polys("map"));
            json out = {{"exists", t.exists}, {"regular", t.regular}, {"image", jet_json(t.image_jet)}};
            if (t.exists) out["matrix"] = matrix_json(t.matrix);
            return out;
        }
        if (op == "differential") {
            const Jet& p = get<Jet>(c.refs[0]);
            const Polynomial f = translate(polys("f")[0], p.base_point());
            return {{"value", vector_json(differential(p, f, c.vectors.at("tangent")[0]))}};
        }

        if (op == "evaluate") {
            const APoint& p = get<APoint>(c.refs[0]);
            const Vector v = evaluate(polys("f")[0], p);
            return {{"components", vector_json(v)}};
        }
        if (op == "regularity") {
            const Regularity r = regularity_and_kernel(get<APoint>(c.refs[0]));
            return {{"regular", r.regular}, {"kernel", jet_json(r.kernel)}};
        }
        if (op == "product") {
            const APoint p = cartesian_product(get<APoint>(c.refs[0]), get<APoint>(c.refs[1]));
            if (c.as) values_.insert_or_assign(*c.as, Value(p));
            return {{"images", matrix_json(p.images())}};
        }
        if (op == "tangent_check") {
            const TangentCorrespondence t = tangent_correspondence_check(polys("f")[0], get<APoint>(c.refs[0]), polys("field"));
            return {{"equal", t.equal}, {"direct", vector_json(t.direct)}, {"induced", vector_json(t.induced)}};
        }
        if (op == "prolong") {
            const WeilAlgebra& a = get<WeilAlgebra>(c.refs[0]);
            const auto names = component_names(c.vars, a.dimension());
            json comps = json::array();
            for (const auto& p : prolong_ideal(polys("generators"), a)) comps.push_back(format_polynomial(p, names));
            return {{"variables", names}, {"components", comps}};
        }
        if (op == "weil_iso") {
            const WeilIsoReport r = weil_iso_check(polys("f")[0], get<WeilAlgebra>(c.refs[0]), get<WeilAlgebra>(c.refs[1]), c.vectors.at("images"));
            return {{"equal", r.equal}, {"one_stage", vector_json(r.one_stage)}, {"two_stage", vector_json(r.two_stage)}};
        }
        if (op == "group_multiply" || op == "group_inverse" || op == "group_axioms") {
            const GroupLaw& law = get<GroupLaw>(c.refs[0]);
            const APoint& first = get<APoint>(c.refs[1]);
            const ProlongedGroup g = prolong_group(law, first.algebra());
            if (op == "group_inverse") return {{"images", matrix_json(g.inverse(first).images())}};
            if (op == "group_multiply") return {{"images", matrix_json(g.multiply(first, get<APoint>(c.refs[2])).images())}};
            return {{"holds", g.axioms_hold(first, get<APoint>(c.refs[2]), get<APoint>(c.refs[3]))}};
        }
        fail(ErrorKind::SchemaViolation, "unknown op \"" + op + "\"");
    }

    RunOptions options_;
    std::map<std::string, Value> values_;
    std::map<std::string, Error> failed_;
};

// ---------------------------------------------------------------------------
// text rendering

std::string text_of(const json& v);

std::string jet_text(const json& j) {
    std::ostringstream s;
    s << "order " << j.at("order").get<unsigned>() << ", width " << j.at("width").get<std::size_t>() << ", ";
    if (j.at("classical").get<bool>()) s << "classical (dim " << j.at("dim").get<std::size_t>() << ")";
    else s << "NOT classical (dim " << j.at("dim").get<std::size_t>() << " != " << j.at("classical_dim").get<std::size_t>() << ")";
    s << ", at " << text_of(j.at("point")) << ", generators " << text_of(j.at("generators"));
    return s.str();
}

bool is_jet(const json& v) { return v.is_object() && v.contains("classical") && v.contains("generators"); }

std::string text_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number()) return v.dump();
    if (is_jet(v)) return "{" + jet_text(v) + "}";
    std::string out;
    if (v.is_array()) {
        out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + text_of(v[i]);
        return out + "]";
    }
    out = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
        out += (first ? "" : "; ") + k + " " + text_of(x);
        first = false;
    }
    return out + "}";
}

}  // namespace

Session parse_session(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    return Parser().run(doc);
}

Report execute(const Session& session, const RunOptions& options) { return Executor(options).run(session); }

std::string render_json(const Report& report) { return report.body.dump(2) + "\n"; }

std::string render_text(const Report& report) {
    std::ostringstream s;
    for (const auto& b : report.body.at("bindings"))
        if (b.contains("error"))
            s << "binding " << b.at("name").get<std::string>() << ": error " << b.at("error").at("kind").get<std::string>() << ": "
              << b.at("error").at("message").get<std::string>() << "\n";
    for (const auto& r : report.body.at("results")) {
        const std::string op = r.at("op").get<std::string>();
        const std::string target = r.contains("target") ? r.at("target").get<std::string>() : "";
        s << "[" << r.at("index").get<std::size_t>() << "] " << op;
        if (r.contains("result") && is_jet(r.at("result"))) {
            s << ": jet " << target << ": " << jet_text(r.at("result")) << "\n";
            continue;
        }
        if (!target.empty()) s << " " << target;
        if (r.contains("error")) {
            s << ": error " << r.at("error").at("kind").get<std::string>() << ": " << r.at("error").at("message").get<std::string>() << "\n";
            continue;
        }
        const json& res = r.at("result");
        s << ":";
        for (const auto& [k, v] : res.items()) s << "\n    " << k << ": " << text_of(v);
        s << "\n";
    }
    return s.str();
}

int run_session_text(const std::string& text, const std::string& format, const RunOptions& options, std::string& out,
                     std::string& err) {
    Session session;
    try {
        session = parse_session(text);
    } catch (const Error& e) {
        err = std::string(to_string(e.kind())) + ": " + e.what() + "\n";
        return 2;
    }
    const Report report = execute(session, options);
    out = format == "text" ? render_text(report) : render_json(report);
    return report.has_errors ? 1 : 0;
}

}  // namespace weiljets

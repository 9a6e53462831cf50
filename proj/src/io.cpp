#include "gbk/io.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gbk/character.hpp"
#include "gbk/errors.hpp"

namespace gbk {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

void require_object(const Json& o, const std::string& where) {
    if (!o.is_object()) bad(where, "expected an object");
}

// Strict schema walk: every present key must be declared, every required key
// must be present.
void check_fields(const Json& o, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
    require_object(o, where);
    for (const auto& item : o.items()) {
        const std::string& k = item.key();
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) bad(where, "unknown field \"" + k + "\"");
    }
    for (const auto& k : required)
        if (!o.contains(k)) bad(where, "missing field \"" + k + "\"");
}

std::string str_at(const Json& o, const std::string& key, const std::string& where) {
    const Json& v = o.at(key);
    if (!v.is_string()) bad(where, "field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::string int_literal(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    bad(where, "expected an integer (number or decimal string)");
}

} // namespace

std::string int_str(long v) { return std::to_string(v); }

long int_from_json(const Json& j, const std::string& where) {
    std::string s = int_literal(j, where);
    if (s.empty()) bad(where, "empty integer literal");
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) bad(where, "bad integer literal: " + s);
    for (size_t p = i; p < s.size(); ++p)
        if (s[p] < '0' || s[p] > '9') bad(where, "bad integer literal: " + s);
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        bad(where, "integer out of range: " + s);
    }
}

Json scalar_to_json(const Cyclotomic& c) {
    Rational r;
    if (c.is_rational(&r)) return Json(rat_str(r));
    Json coeffs = Json::array();
    for (const Rational& q : c.coeffs()) {
        Json pair = Json::array();
        pair.push_back(q.get_num().get_str());
        pair.push_back(q.get_den().get_str());
        coeffs.push_back(pair);
    }
    Json o = Json::object();
    o["coeffs"] = coeffs;
    o["order"] = int_str(c.order());
    return o;
}

Cyclotomic scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer())
        return Cyclotomic(rat_of(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.rfind("zeta(", 0) == 0) {
            if (s.back() != ')') bad(where, "bad root-of-unity literal: " + s);
            std::string inner = s.substr(5, s.size() - 6);
            auto comma = inner.find(',');
            if (comma == std::string::npos) bad(where, "bad root-of-unity literal: " + s);
            long n = int_from_json(Json(inner.substr(0, comma)), where);
            long k = int_from_json(Json(inner.substr(comma + 1)), where);
            if (n < 1) bad(where, "root-of-unity order must be positive");
            return Cyclotomic::root_of_unity(n, k);
        }
        return Cyclotomic(rat_parse(s));
    }
    if (j.is_object()) {
        check_fields(j, {"coeffs", "order"}, {}, where);
        long order = int_from_json(j.at("order"), where + ".order");
        if (order < 1) bad(where, "cyclotomic order must be positive");
        const Json& ca = j.at("coeffs");
        if (!ca.is_array()) bad(where, "coeffs must be an array");
        std::vector<Rational> coeffs;
        for (const Json& e : ca) {
            if (!e.is_array() || e.size() != 2)
                bad(where, "each coefficient must be a [num, den] pair");
            std::string num = int_literal(e.at(0), where + ".coeffs");
            std::string den = int_literal(e.at(1), where + ".coeffs");
            coeffs.push_back(rat_parse(num + "/" + den));
        }
        return Cyclotomic::from_coeffs(order, std::move(coeffs));
    }
    bad(where, "expected a scalar (integer, string, or {order, coeffs} object)");
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Cyclotomic& c : v) a.push_back(scalar_to_json(c));
    return a;
}

Vec vec_from_json(const Json& j, long dim, const std::string& where) {
    if (!j.is_array()) bad(where, "expected a coordinate array");
    if ((long)j.size() != dim)
        bad(where, "expected " + int_str(dim) + " coordinates, got " + int_str((long)j.size()));
    Vec v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(scalar_from_json(e, where));
    return v;
}

namespace {

std::string pair_key(const AbelianGroup& g, long x, long y) {
    return "(" + g.element_str(x) + "," + g.element_str(y) + ")";
}

std::pair<long, long> parse_pair_key(const AbelianGroup& g, const std::string& key,
                                     const std::string& where) {
    if (key.size() < 3 || key.front() != '(' || key.back() != ')')
        bad(where, "bad element pair key: " + key);
    std::string inner = key.substr(1, key.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
        bad(where, "bad element pair key: " + key);
    long x = g.parse_element(inner.substr(0, comma));
    long y = g.parse_element(inner.substr(comma + 1));
    return {x, y};
}

} // namespace

Cocycle cocycle_from_json(const Json& block, const std::string& where) {
    check_fields(block, {"group", "values"}, {}, where);
    AbelianGroup g = AbelianGroup::parse(str_at(block, "group", where));
    const Json& values = block.at("values");
    require_object(values, where + ".values");
    long n = g.order();
    Cyclotomic one(1);
    std::vector<Cyclotomic> table((size_t)(n * n), one);
    for (const auto& item : values.items()) {
        auto [x, y] = parse_pair_key(g, item.key(), where + ".values");
        table[(size_t)(x * n + y)] = scalar_from_json(item.value(), where + ".values[" + item.key() + "]");
    }
    return Cocycle(g, std::move(table));
}

Json cocycle_to_json(const Cocycle& c) {
    const AbelianGroup& g = c.group();
    Cyclotomic one(1);
    Json values = Json::object();
    for (long x = 0; x < g.order(); ++x)
        for (long y = 0; y < g.order(); ++y) {
            const Cyclotomic& v = c.value(x, y);
            if (!(v == one)) values[pair_key(g, x, y)] = scalar_to_json(v);
        }
    Json o = Json::object();
    o["group"] = g.str();
    o["values"] = values;
    return o;
}

namespace {

struct ParsedAlgebra {
    Json canon;
    AlgPtr alg;
};

Json embedding_images_json(const SubgroupEmbedding& emb) {
    const AbelianGroup& h = emb.sub();
    const AbelianGroup& g = emb.ambient();
    Json images = Json::array();
    for (size_t f = 0; f < h.factors().size(); ++f) {
        std::vector<long> coords(h.factors().size(), 0);
        coords[f] = 1 % h.factors()[f];
        images.push_back(g.element_str(emb.map(h.index(coords))));
    }
    return images;
}

ParsedAlgebra algebra_from_json(const Json& b, const std::string& where, long max_dim) {
    require_object(b, where);
    if (!b.contains("kind")) bad(where, "missing field \"kind\"");
    std::string kind = str_at(b, "kind", where);

    if (kind == "twisted_group") {
        check_fields(b, {"H", "kind", "sigma"}, {}, where);
        AbelianGroup h = AbelianGroup::parse(str_at(b, "H", where));
        Cocycle sigma = cocycle_from_json(b.at("sigma"), where + ".sigma");
        if (!(sigma.group() == h)) bad(where, "sigma is defined over a different group than H");
        if (h.order() > max_dim)
            bad(where, "dimension " + int_str(h.order()) + " exceeds --max-dim " + int_str(max_dim));
        AlgPtr a = twisted_group_algebra(h, sigma);
        Json canon = Json::object();
        canon["H"] = h.str();
        canon["kind"] = "twisted_group";
        canon["sigma"] = cocycle_to_json(sigma);
        return {canon, a};
    }

    if (kind == "matrix_twisted") {
        check_fields(b, {"H", "grading_group", "kind", "n", "sigma", "tuple"}, {"H_map"}, where);
        long n = int_from_json(b.at("n"), where + ".n");
        if (n < 1) bad(where, "n must be positive");
        AbelianGroup g = AbelianGroup::parse(str_at(b, "grading_group", where));
        AbelianGroup h = AbelianGroup::parse(str_at(b, "H", where));
        Cocycle sigma = cocycle_from_json(b.at("sigma"), where + ".sigma");
        if (!(sigma.group() == h)) bad(where, "sigma is defined over a different group than H");
        SubgroupEmbedding emb = SubgroupEmbedding::identity(g);
        if (b.contains("H_map")) {
            const Json& hm = b.at("H_map");
            if (!hm.is_array() || hm.size() != h.factors().size())
                bad(where, "H_map needs one ambient image per cyclic factor of H");
            std::vector<long> images;
            for (const Json& e : hm) {
                if (!e.is_string()) bad(where, "H_map entries must be element literals");
                images.push_back(g.parse_element(e.get<std::string>()));
            }
            emb = SubgroupEmbedding::from_generator_images(h, g, images);
        } else if (!(h == g)) {
            bad(where, "H differs from grading_group, so H_map is required");
        }
        const Json& tj = b.at("tuple");
        if (!tj.is_array() || (long)tj.size() != n)
            bad(where, "tuple must list exactly n ambient elements");
        std::vector<long> tuple;
        for (const Json& e : tj) {
            if (!e.is_string()) bad(where, "tuple entries must be element literals");
            tuple.push_back(g.parse_element(e.get<std::string>()));
        }
        long dim = n * n * h.order();
        if (dim > max_dim)
            bad(where, "dimension " + int_str(dim) + " exceeds --max-dim " + int_str(max_dim));
        AlgPtr a = matrix_twisted(n, emb, sigma, tuple);
        Json canon = Json::object();
        canon["H"] = h.str();
        bool identity_map = (h == g) && emb == SubgroupEmbedding::identity(g);
        if (!identity_map) canon["H_map"] = embedding_images_json(emb);
        canon["grading_group"] = g.str();
        canon["kind"] = "matrix_twisted";
        canon["n"] = int_str(n);
        canon["sigma"] = cocycle_to_json(sigma);
        Json tuple_json = Json::array();
        for (long t : tuple) tuple_json.push_back(g.element_str(t));
        canon["tuple"] = tuple_json;
        return {canon, a};
    }

    if (kind == "raw") {
        check_fields(b, {"basis", "degrees", "grading_group", "kind", "mult"}, {}, where);
        AbelianGroup g = AbelianGroup::parse(str_at(b, "grading_group", where));
        const Json& bj = b.at("basis");
        if (!bj.is_array() || bj.empty()) bad(where, "basis must be a nonempty array of labels");
        std::vector<std::string> labels;
        for (const Json& e : bj) {
            if (!e.is_string() || e.get<std::string>().empty())
                bad(where, "basis labels must be nonempty strings");
            labels.push_back(e.get<std::string>());
        }
        {
            std::set<std::string> seen(labels.begin(), labels.end());
            if (seen.size() != labels.size()) bad(where, "duplicate basis label");
        }
        long d = (long)labels.size();
        if (d > max_dim)
            bad(where, "dimension " + int_str(d) + " exceeds --max-dim " + int_str(max_dim));
        const Json& dj = b.at("degrees");
        if (!dj.is_array() || (long)dj.size() != d)
            bad(where, "degrees must list one element per basis vector");
        std::vector<long> degrees;
        for (const Json& e : dj) {
            if (!e.is_string()) bad(where, "degree entries must be element literals");
            degrees.push_back(g.parse_element(e.get<std::string>()));
        }
        const Json& mj = b.at("mult");
        if (!mj.is_array()) bad(where, "mult must be an array of [i, j, k, scalar] entries");
        std::vector<std::tuple<long, long, long, Cyclotomic>> entries;
        std::set<std::tuple<long, long, long>> seen;
        for (const Json& e : mj) {
            if (!e.is_array() || e.size() != 4)
                bad(where, "each mult entry must be [i, j, k, scalar]");
            long i = int_from_json(e.at(0), where + ".mult");
            long j = int_from_json(e.at(1), where + ".mult");
            long k = int_from_json(e.at(2), where + ".mult");
            if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
                bad(where, "mult entry index out of range");
            Cyclotomic v = scalar_from_json(e.at(3), where + ".mult");
            if (v == Cyclotomic()) bad(where, "mult entries must be nonzero");
            if (!seen.insert({i, j, k}).second)
                bad(where, "duplicate mult entry for the same (i, j, k)");
            entries.emplace_back(i, j, k, std::move(v));
        }
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& c) {
            return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<0>(c), std::get<1>(c), std::get<2>(c));
        });
        std::vector<std::vector<SVec>> mult((size_t)d, std::vector<SVec>((size_t)d));
        for (const auto& [i, j, k, v] : entries) mult[(size_t)i][(size_t)j].push_back({k, v});
        for (auto& row : mult)
            for (auto& sv : row) svec_normalize(sv);
        AlgPtr a = make_graded_algebra(g, labels, mult, degrees);
        Json canon = Json::object();
        Json basis_json = Json::array();
        for (const auto& l : labels) basis_json.push_back(l);
        canon["basis"] = basis_json;
        Json deg_json = Json::array();
        for (long dg : degrees) deg_json.push_back(g.element_str(dg));
        canon["degrees"] = deg_json;
        canon["grading_group"] = g.str();
        canon["kind"] = "raw";
        Json mult_json = Json::array();
        for (const auto& [i, j, k, v] : entries) {
            Json row = Json::array();
            row.push_back(int_str(i));
            row.push_back(int_str(j));
            row.push_back(int_str(k));
            row.push_back(scalar_to_json(v));
            mult_json.push_back(row);
        }
        canon["mult"] = mult_json;
        return {canon, a};
    }

    bad(where, "unknown algebra kind \"" + kind + "\"");
}

struct ParsedBimodule {
    Json canon;
    BimodPtr mod;
};

const AlgPtr& algebra_ref(const std::map<std::string, AlgPtr>& algs, const Json& j,
                          const std::string& where) {
    if (!j.is_string()) bad(where, "algebra reference must be a name string");
    auto it = algs.find(j.get<std::string>());
    if (it == algs.end()) bad(where, "unknown algebra \"" + j.get<std::string>() + "\"");
    return it->second;
}

ParsedBimodule bimodule_from_json(const Json& b, const std::map<std::string, AlgPtr>& algs,
                                  const std::string& where, long max_dim) {
    require_object(b, where);
    if (b.contains("kind")) {
        std::string kind = str_at(b, "kind", where);
        if (kind == "regular") {
            check_fields(b, {"algebra", "kind"}, {}, where);
            const AlgPtr& a = algebra_ref(algs, b.at("algebra"), where);
            Json canon = Json::object();
            canon["algebra"] = b.at("algebra");
            canon["kind"] = "regular";
            return {canon, regular_bimodule(a)};
        }
        if (kind == "twisted_regular") {
            check_fields(b, {"algebra", "character", "kind"}, {}, where);
            const AlgPtr& a = algebra_ref(algs, b.at("algebra"), where);
            long chi = int_from_json(b.at("character"), where + ".character");
            if (chi < 0) bad(where, "character index must be nonnegative");
            if (a->twisted() && chi >= a->twisted()->emb.sub().order())
                bad(where, "character index out of range");
            Json canon = Json::object();
            canon["algebra"] = b.at("algebra");
            canon["character"] = int_str(chi);
            canon["kind"] = "twisted_regular";
            return {canon, twisted_regular_bimodule(a, chi)};
        }
        bad(where, "unknown bimodule kind \"" + kind + "\"");
    }

    check_fields(b, {"degrees", "dim", "left", "left_act", "right", "right_act"}, {}, where);
    const AlgPtr& la = algebra_ref(algs, b.at("left"), where + ".left");
    const AlgPtr& ra = algebra_ref(algs, b.at("right"), where + ".right");
    long d = int_from_json(b.at("dim"), where + ".dim");
    if (d < 0) bad(where, "dim must be nonnegative");
    if (d > max_dim)
        bad(where, "dimension " + int_str(d) + " exceeds --max-dim " + int_str(max_dim));
    const AbelianGroup& g = la->group();
    const Json& dj = b.at("degrees");
    if (!dj.is_array() || (long)dj.size() != d)
        bad(where, "degrees must list one element per basis vector");
    std::vector<long> degrees;
    for (const Json& e : dj) {
        if (!e.is_string()) bad(where, "degree entries must be element literals");
        degrees.push_back(g.parse_element(e.get<std::string>()));
    }

    auto read_entries = [&](const Json& arr, long first_dim, long mid_dim, const std::string& who) {
        std::vector<std::tuple<long, long, long, Cyclotomic>> entries;
        std::set<std::tuple<long, long, long>> seen;
        if (!arr.is_array()) bad(where, who + " must be an array of [i, j, k, scalar] entries");
        for (const Json& e : arr) {
            if (!e.is_array() || e.size() != 4)
                bad(where, "each " + who + " entry must be [i, j, k, scalar]");
            long i = int_from_json(e.at(0), where + "." + who);
            long j = int_from_json(e.at(1), where + "." + who);
            long k = int_from_json(e.at(2), where + "." + who);
            if (i < 0 || i >= first_dim || j < 0 || j >= mid_dim || k < 0 || k >= d)
                bad(where, who + " entry index out of range");
            Cyclotomic v = scalar_from_json(e.at(3), where + "." + who);
            if (v == Cyclotomic()) bad(where, who + " entries must be nonzero");
            if (!seen.insert({i, j, k}).second)
                bad(where, "duplicate " + who + " entry for the same (i, j, k)");
            entries.emplace_back(i, j, k, std::move(v));
        }
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& c) {
            return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<0>(c), std::get<1>(c), std::get<2>(c));
        });
        return entries;
    };

    auto left_entries = read_entries(b.at("left_act"), la->dim(), d, "left_act");
    auto right_entries = read_entries(b.at("right_act"), d, ra->dim(), "right_act");

    std::vector<std::vector<SVec>> left_act((size_t)la->dim(), std::vector<SVec>((size_t)d));
    for (const auto& [i, j, k, v] : left_entries) left_act[(size_t)i][(size_t)j].push_back({k, v});
    std::vector<std::vector<SVec>> right_act((size_t)d, std::vector<SVec>((size_t)ra->dim()));
    for (const auto& [i, j, k, v] : right_entries) right_act[(size_t)i][(size_t)j].push_back({k, v});
    for (auto& row : left_act)
        for (auto& sv : row) svec_normalize(sv);
    for (auto& row : right_act)
        for (auto& sv : row) svec_normalize(sv);

    BimodPtr m = make_bimodule(la, ra, left_act, right_act, degrees);

    auto entries_json = [](const std::vector<std::tuple<long, long, long, Cyclotomic>>& entries) {
        Json arr = Json::array();
        for (const auto& [i, j, k, v] : entries) {
            Json row = Json::array();
            row.push_back(int_str(i));
            row.push_back(int_str(j));
            row.push_back(int_str(k));
            row.push_back(scalar_to_json(v));
            arr.push_back(row);
        }
        return arr;
    };

    Json canon = Json::object();
    Json deg_json = Json::array();
    for (long dg : degrees) deg_json.push_back(g.element_str(dg));
    canon["degrees"] = deg_json;
    canon["dim"] = int_str(d);
    canon["left"] = b.at("left");
    canon["left_act"] = entries_json(left_entries);
    canon["right"] = b.at("right");
    canon["right_act"] = entries_json(right_entries);
    return {canon, m};
}

Json canonical_rows(const Json& arr, long dim, const std::string& where) {
    if (!arr.is_array()) bad(where, "expected an array of coordinate rows");
    Json out = Json::array();
    for (const Json& row : arr) out.push_back(vec_to_json(vec_from_json(row, dim, where)));
    return out;
}

Json task_from_json(const Json& t, const std::map<std::string, AlgPtr>& algebras,
                    const std::map<std::string, BimodPtr>& bimodules) {
    const std::string where = "task";
    require_object(t, where);
    if (!t.contains("command")) bad(where, "missing field \"command\"");
    std::string cmd = str_at(t, "command", where);
    Json canon = Json::object();
    canon["command"] = cmd;

    if (cmd == "validate") {
        check_fields(t, {"command"}, {}, where);
        return canon;
    }
    if (cmd == "chartable") {
        check_fields(t, {"command", "group"}, {}, where);
        AbelianGroup g = AbelianGroup::parse(str_at(t, "group", where));
        canon["group"] = g.str();
        return canon;
    }
    if (cmd == "cocycle-check") {
        check_fields(t, {"cocycle", "command"}, {}, where);
        Cocycle c = cocycle_from_json(t.at("cocycle"), where + ".cocycle");
        canon["cocycle"] = cocycle_to_json(c);
        return canon;
    }
    if (cmd == "peirce" || cmd == "decompose-bimodule") {
        check_fields(t, {"bimodule", "command"}, {}, where);
        std::string name = str_at(t, "bimodule", where);
        if (!bimodules.count(name)) bad(where, "unknown bimodule \"" + name + "\"");
        canon["bimodule"] = name;
        return canon;
    }
    if (cmd == "grassmann-envelope") {
        check_fields(t, {"algebra", "command"}, {}, where);
        std::string name = str_at(t, "algebra", where);
        if (!algebras.count(name)) bad(where, "unknown algebra \"" + name + "\"");
        canon["algebra"] = name;
        return canon;
    }
    if (cmd == "radical-report" || cmd == "check-nilpotency") {
        check_fields(t, {"ambient", "blocks", "command", "embeddings", "radical"}, {}, where);
        std::string ambient_name = str_at(t, "ambient", where);
        auto it = algebras.find(ambient_name);
        if (it == algebras.end()) bad(where, "unknown algebra \"" + ambient_name + "\"");
        long adim = it->second->dim();
        const Json& blocks = t.at("blocks");
        if (!blocks.is_array() || blocks.empty())
            bad(where, "blocks must be a nonempty array of algebra names");
        Json blocks_canon = Json::array();
        std::vector<long> block_dims;
        for (const Json& e : blocks) {
            if (!e.is_string()) bad(where, "block references must be name strings");
            auto bit = algebras.find(e.get<std::string>());
            if (bit == algebras.end()) bad(where, "unknown algebra \"" + e.get<std::string>() + "\"");
            block_dims.push_back(bit->second->dim());
            blocks_canon.push_back(e);
        }
        const Json& embeds = t.at("embeddings");
        if (!embeds.is_array() || embeds.size() != blocks.size())
            bad(where, "embeddings must give one row set per block");
        Json embeds_canon = Json::array();
        for (size_t i = 0; i < embeds.size(); ++i) {
            Json rows = canonical_rows(embeds.at(i), adim, where + ".embeddings");
            if ((long)rows.size() != block_dims[i])
                bad(where, "embedding " + int_str((long)i) + " must have one row per block basis vector");
            embeds_canon.push_back(rows);
        }
        canon["ambient"] = ambient_name;
        canon["blocks"] = blocks_canon;
        canon["embeddings"] = embeds_canon;
        canon["radical"] = canonical_rows(t.at("radical"), adim, where + ".radical");
        return canon;
    }
    bad(where, "unknown command \"" + cmd + "\"");
}

} // namespace

SpecFile parse_spec(const std::string& text, long max_dim) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("json parse error: ") + e.what());
    }
    check_fields(doc, {"task", "version"}, {"algebras", "bimodules"}, "spec");

    SpecFile s;
    const Json& vj = doc.at("version");
    if (vj.is_string())
        s.version = vj.get<std::string>();
    else if (vj.is_number_integer())
        s.version = std::to_string(vj.get<long long>());
    else
        bad("spec", "version must be a string or integer");
    if (s.version != "1") bad("spec", "unsupported version \"" + s.version + "\"");

    if (doc.contains("algebras")) {
        require_object(doc.at("algebras"), "spec.algebras");
        for (const auto& item : doc.at("algebras").items()) {
            if (item.key().empty()) bad("spec.algebras", "empty algebra name");
            ParsedAlgebra pa =
                algebra_from_json(item.value(), "algebras." + item.key(), max_dim);
            s.algebra_blocks[item.key()] = pa.canon;
            s.algebras[item.key()] = pa.alg;
        }
    }
    if (doc.contains("bimodules")) {
        require_object(doc.at("bimodules"), "spec.bimodules");
        for (const auto& item : doc.at("bimodules").items()) {
            if (item.key().empty()) bad("spec.bimodules", "empty bimodule name");
            ParsedBimodule pm = bimodule_from_json(item.value(), s.algebras,
                                                   "bimodules." + item.key(), max_dim);
            s.bimodule_blocks[item.key()] = pm.canon;
            s.bimodules[item.key()] = pm.mod;
        }
    }
    s.task = task_from_json(doc.at("task"), s.algebras, s.bimodules);
    return s;
}

std::string emit_spec(const SpecFile& s) {
    Json doc = Json::object();
    if (!s.algebra_blocks.empty()) {
        Json a = Json::object();
        for (const auto& [name, block] : s.algebra_blocks) a[name] = block;
        doc["algebras"] = a;
    }
    if (!s.bimodule_blocks.empty()) {
        Json m = Json::object();
        for (const auto& [name, block] : s.bimodule_blocks) m[name] = block;
        doc["bimodules"] = m;
    }
    doc["task"] = s.task;
    doc["version"] = s.version;
    return doc.dump(2) + "\n";
}

} // namespace gbk

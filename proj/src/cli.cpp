#include "gbk/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gbk/character.hpp"
#include "gbk/decomp.hpp"
#include "gbk/errors.hpp"
#include "gbk/fixtures.hpp"
#include "gbk/grassmann.hpp"
#include "gbk/io.hpp"

namespace gbk {

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr uint64_t kDefaultSeed = 0x67626b636c69ULL;

struct Options {
    uint64_t seed = kDefaultSeed;
    long trials = 32;
    long generators = 4;
    long max_dim = 128;
    std::string format = "json";
    bool timings = false;
    std::string target;
};

// Command failure with a structured payload; code follows the exit contract.
struct CliError {
    int code;
    std::string kind;
    std::string reason;
    Json witness;
};

std::string json_primitive_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_primitive(const Json& v) {
    return !v.is_object() && !v.is_array();
}

bool is_primitive_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& e : v)
        if (!is_primitive(e)) return false;
    return true;
}

void render_text(const Json& v, const std::string& key, int indent, std::ostream& out) {
    std::string pad(2 * (size_t)indent, ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (const auto& item : v.items()) render_text(item.value(), item.key(), indent + 1, out);
        return;
    }
    if (is_primitive_array(v)) {
        out << pad << key << ": [";
        for (size_t i = 0; i < v.size(); ++i)
            out << (i ? ", " : "") << json_primitive_str(v.at(i));
        out << "]\n";
        return;
    }
    if (v.is_array()) {
        out << pad << key << ":\n";
        for (size_t i = 0; i < v.size(); ++i)
            render_text(v.at(i), key + "[" + std::to_string(i) + "]", indent + 1, out);
        return;
    }
    out << pad << key << ": " << json_primitive_str(v) << "\n";
}

void write_payload(const Json& j, const std::string& format, std::ostream& s) {
    if (format == "text") {
        for (const auto& item : j.items()) render_text(item.value(), item.key(), 0, s);
        return;
    }
    s << j.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string kind_str(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::raw: return "raw";
        case AlgebraKind::twisted_group: return "twisted_group";
        case AlgebraKind::matrix_twisted: return "matrix_twisted";
    }
    return "raw";
}

std::string verdict_str(Verdict3 v) {
    switch (v) {
        case Verdict3::yes: return "yes";
        case Verdict3::no: return "no";
        case Verdict3::probably_yes: return "probably-yes";
    }
    return "no";
}

Json rows_to_json(const std::vector<Vec>& rows) {
    Json a = Json::array();
    for (const Vec& r : rows) a.push_back(vec_to_json(r));
    return a;
}

std::string algebra_name_of(const SpecFile& sf, const AlgPtr& a) {
    for (const auto& [name, ptr] : sf.algebras)
        if (ptr == a) return name;
    return "";
}

void require_task(const SpecFile& sf, const std::string& command) {
    std::string file_cmd = sf.task.at("command").get<std::string>();
    if (file_cmd != command)
        throw InputError("file task is \"" + file_cmd + "\" but the command is \"" + command + "\"");
}

SplitInput split_from_task(const SpecFile& sf) {
    SplitInput sp;
    const Json& t = sf.task;
    sp.ambient = sf.algebras.at(t.at("ambient").get<std::string>());
    long adim = sp.ambient->dim();
    for (const Json& b : t.at("blocks"))
        sp.blocks.push_back(sf.algebras.at(b.get<std::string>()));
    for (const Json& rows : t.at("embeddings")) {
        Mat m;
        for (const Json& row : rows) m.push_back(vec_from_json(row, adim, "task.embeddings"));
        sp.block_embeddings.push_back(std::move(m));
    }
    for (const Json& row : t.at("radical"))
        sp.radical_basis.push_back(vec_from_json(row, adim, "task.radical"));
    return sp;
}

Json chi_element_json(const GradedBimodule& m, const ChiElement& gen) {
    Json e = Json::object();
    Json chi = Json::array();
    for (const Cyclotomic& v : gen.character.values) chi.push_back(scalar_to_json(v));
    e["character"] = chi;
    e["character_index"] = int_str(gen.character_index);
    e["degree"] = m.group().element_str(gen.degree);
    e["generator"] = vec_to_json(gen.vector);
    return e;
}

Json sub_block_json(const SubBimodule& sb) {
    Json e = Json::object();
    e["dim"] = int_str(sb.span.dim());
    e["rows"] = rows_to_json(sb.span.rows());
    return e;
}

void run_validate(const SpecFile& sf, const Options& opt, Json& report) {
    Json algs = Json::object();
    for (const auto& [name, a] : sf.algebras) {
        Json e = Json::object();
        e["dim"] = int_str(a->dim());
        e["graded_simple"] = verdict_str(is_graded_simple(a, opt.trials, opt.seed).verdict);
        e["grading_group"] = a->group().str();
        e["kind"] = kind_str(a->kind());
        algs[name] = e;
    }
    Json mods = Json::object();
    for (const auto& [name, m] : sf.bimodules) {
        Json e = Json::object();
        e["dim"] = int_str(m->dim());
        e["grading_group"] = m->group().str();
        e["left"] = algebra_name_of(sf, m->left_alg());
        e["right"] = algebra_name_of(sf, m->right_alg());
        mods[name] = e;
    }
    report["algebras"] = algs;
    report["bimodules"] = mods;
    report["file_task"] = sf.task.at("command");
    report["ok"] = true;
    report["trials"] = int_str(opt.trials);
}

void run_chartable(const AbelianGroup& g, Json& report) {
    CharacterTable t = character_table(g);
    OrthogonalityResult orth = verify_orthogonality(t);
    if (!orth.ok) {
        Json w = Json::object();
        w["i"] = int_str(orth.i);
        w["j"] = int_str(orth.j);
        throw CliError{2, "verification", "character orthogonality fails", w};
    }
    character_matrix_inverse(t);
    Json chars = Json::array();
    for (const Character& c : t.chars) {
        Json row = Json::array();
        for (const Cyclotomic& v : c.values) row.push_back(scalar_to_json(v));
        chars.push_back(row);
    }
    Json elems = Json::array();
    for (long e : t.elements) elems.push_back(g.element_str(e));
    report["characters"] = chars;
    report["elements"] = elems;
    report["group"] = g.str();
    report["matrix_inverse"] = "ok";
    report["order"] = int_str(g.order());
    report["orthogonality"] = "ok";
}

void run_cocycle_check(const SpecFile& sf, Json& report) {
    Cocycle c = cocycle_from_json(sf.task.at("cocycle"), "task.cocycle");
    const AbelianGroup& g = c.group();
    CocycleCheck chk = validate_cocycle(c);
    if (!chk.ok) {
        Json w = Json::object();
        w["x"] = g.element_str(chk.x);
        w["y"] = g.element_str(chk.y);
        w["z"] = g.element_str(chk.z);
        throw CliError{2, "verification", "cocycle identity fails", w};
    }
    const Cyclotomic& unit_val = c.value(g.identity(), g.identity());
    for (long x = 0; x < g.order(); ++x) {
        if (!(c.value(x, g.identity()) == unit_val) || !(c.value(g.identity(), x) == unit_val)) {
            Json w = Json::object();
            w["x"] = g.element_str(x);
            throw CliError{2, "verification", "identity normalization fails", w};
        }
        if (!(c.value(x, g.inverse(x)) == c.value(g.inverse(x), x))) {
            Json w = Json::object();
            w["x"] = g.element_str(x);
            throw CliError{2, "verification", "inverse symmetry fails", w};
        }
    }
    report["cocycle"] = cocycle_to_json(c);
    report["group"] = g.str();
    report["identity_normalization"] = "ok";
    report["inverse_symmetry"] = "ok";
    report["ok"] = true;
    report["symmetric"] = c.is_symmetric();
}

void run_peirce(const SpecFile& sf, Json& report) {
    std::string name = sf.task.at("bimodule").get<std::string>();
    const BimodPtr& m = sf.bimodules.at(name);
    PeirceBlocks pb = peirce4(m);
    Json blocks = Json::object();
    blocks["m00"] = sub_block_json(pb.m00);
    blocks["m01"] = sub_block_json(pb.m01);
    blocks["m10"] = sub_block_json(pb.m10);
    blocks["m11"] = sub_block_json(pb.m11);
    report["bimodule"] = name;
    report["blocks"] = blocks;
    report["dim"] = int_str(m->dim());
    report["left_unit"] = vec_to_json(pb.left_unit);
    report["reconstruction"] = "ok";
    report["right_unit"] = vec_to_json(pb.right_unit);
}

void run_decompose(const SpecFile& sf, Json& report) {
    std::string name = sf.task.at("bimodule").get<std::string>();
    const BimodPtr& m = sf.bimodules.at(name);
    FgDecomposition fg = decompose_fg(m);
    Json comps = Json::array();
    for (size_t i = 0; i < fg.generators.size(); ++i) {
        Json e = chi_element_json(*m, fg.generators[i]);
        e["dim"] = int_str(fg.summands[i].span.dim());
        comps.push_back(e);
    }
    report["bimodule"] = name;
    report["components"] = comps;
    report["dim"] = int_str(m->dim());
    report["summands"] = int_str((long)fg.generators.size());
}

void run_radical_report(const SpecFile& sf, Json& report) {
    SplitInput sp = split_from_task(sf);
    RadicalReport rr = radical_report(sp);

    Json peirce = Json::object();
    peirce["m00"] = sub_block_json(rr.peirce.blocks.m00);
    peirce["m01"] = sub_block_json(rr.peirce.blocks.m01);
    peirce["m10"] = sub_block_json(rr.peirce.blocks.m10);
    peirce["m11"] = sub_block_json(rr.peirce.blocks.m11);

    Json grid = Json::object();
    Json grid_dims = Json::array();
    for (const auto& row : rr.j11_grid.grid) {
        Json r = Json::array();
        for (const SubBimodule& cell : row) r.push_back(int_str(cell.span.dim()));
        grid_dims.push_back(r);
    }
    grid["diagonal_only"] = rr.j11_grid.diagonal_only;
    grid["dims"] = grid_dims;
    grid["units_centralize"] = rr.j11_grid.units_centralize;

    Json diagonal = Json::array();
    for (const DiagonalCellReport& cell : rr.diagonal) {
        Json e = Json::object();
        e["block"] = int_str(cell.block);
        Json gens = Json::array();
        for (size_t i = 0; i < cell.generators.size(); ++i) {
            Json ge = chi_element_json(*rr.j11, cell.generators[i]);
            Json gamma = Json::array();
            for (const Cyclotomic& v : cell.gamma[i]) gamma.push_back(scalar_to_json(v));
            ge["gamma"] = gamma;
            gens.push_back(ge);
        }
        e["generators"] = gens;
        diagonal.push_back(e);
    }

    report["ambient"] = sf.task.at("ambient");
    report["diagonal"] = diagonal;
    if (rr.factorization) {
        Json f = Json::object();
        Json dims = Json::array();
        for (long d : rr.factorization->factor_dims) dims.push_back(int_str(d));
        f["factor_dims"] = dims;
        f["j00_dim"] = int_str(rr.factorization->j00_dim);
        report["factorization"] = f;
    }
    report["grid"] = grid;
    report["nilpotency"] = int_str(rr.nilpotency);
    report["peirce"] = peirce;
    report["radical_dim"] = int_str(rr.radical.span.dim());
    report["radical_rows"] = rows_to_json(rr.radical.span.rows());
    report["subalgebra_dim"] = int_str(rr.subalgebra->dim());
}

void run_grassmann_envelope(const SpecFile& sf, const Options& opt, Json& report) {
    std::string name = sf.task.at("algebra").get<std::string>();
    const AlgPtr& a = sf.algebras.at(name);
    EnvelopeAlgebra env = envelope(a, opt.generators);
    if (env.algebra->dim() > opt.max_dim)
        throw InputError("envelope dimension " + int_str(env.algebra->dim()) +
                         " exceeds --max-dim " + int_str(opt.max_dim));
    Json basis = Json::array();
    for (long t = 0; t < env.algebra->dim(); ++t) basis.push_back(env.algebra->label(t));
    report["algebra"] = name;
    report["basis"] = basis;
    report["dim"] = int_str(env.algebra->dim());
    report["generators"] = int_str(env.k);
    report["grading_group"] = env.algebra->group().str();
    report["source_dim"] = int_str(env.source->dim());
}

void run_check_nilpotency(const SpecFile& sf, const Options& opt, Json& report) {
    SplitInput sp = split_from_task(sf);
    NilpotencyReport rep = check_radical_nilpotency(sp, opt.generators);
    report["ambient"] = sf.task.at("ambient");
    report["bound"] = int_str(2 * rep.nd_radical);
    report["generators"] = int_str(rep.k);
    report["holds"] = rep.bound_holds;
    report["nd_envelope"] = int_str(rep.nd_envelope);
    report["nd_radical"] = int_str(rep.nd_radical);
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"graded algebra and bimodule toolkit"};
    app.set_version_flag("--version", std::string("gbk ") + kToolVersion);
    app.require_subcommand(1);

    std::vector<std::string> file_commands = {
        "validate",          "cocycle-check",     "peirce",
        "decompose-bimodule", "radical-report",   "grassmann-envelope",
        "check-nilpotency"};

    auto add_common = [&](CLI::App* s) {
        s->add_option("--seed", opt.seed, "seed for randomized checks");
        s->add_option("--trials", opt.trials, "randomized trial count");
        s->add_option("--generators", opt.generators, "Grassmann truncation");
        s->add_option("--max-dim", opt.max_dim, "largest accepted dimension");
        s->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        s->add_flag("--timings", opt.timings, "include timing in the report");
    };

    for (const std::string& name : file_commands) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("file", opt.target, "spec file")->required();
        add_common(s);
    }
    {
        CLI::App* s = app.add_subcommand("chartable");
        s->add_option("target", opt.target, "group literal or spec file")->required();
        add_common(s);
    }
    {
        CLI::App* s = app.add_subcommand("gen-fixture");
        s->add_option("name", opt.target, "fixture name")->required();
        add_common(s);
    }

    std::vector<const char*> argv;
    argv.push_back("gbk");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        Json payload = Json::object();
        Json detail = Json::object();
        detail["kind"] = "input";
        detail["reason"] = e.what();
        payload["error"] = detail;
        write_payload(payload, opt.format, err);
        return 1;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();

    try {
        if (opt.trials < 1) throw InputError("--trials must be positive");
        if (opt.max_dim < 1) throw InputError("--max-dim must be positive");

        if (command == "gen-fixture") {
            out << fixture_json(opt.target);
            return 0;
        }

        Json report = Json::object();
        report["task"] = command;
        Json tool = Json::object();
        tool["name"] = "gbk";
        tool["version"] = kToolVersion;
        report["tool"] = tool;
        report["seed"] = std::to_string(opt.seed);

        if (command == "chartable") {
            std::ifstream probe(opt.target);
            if (probe.good()) {
                SpecFile sf = parse_spec(read_file(opt.target), opt.max_dim);
                require_task(sf, "chartable");
                run_chartable(AbelianGroup::parse(sf.task.at("group").get<std::string>()), report);
            } else {
                AbelianGroup g = AbelianGroup::trivial();
                try {
                    g = AbelianGroup::parse(opt.target);
                } catch (const InputError&) {
                    throw InputError("chartable target is neither a readable file nor a group literal: " +
                                     opt.target);
                }
                run_chartable(g, report);
            }
        } else {
            SpecFile sf = parse_spec(read_file(opt.target), opt.max_dim);
            if (command == "validate") {
                run_validate(sf, opt, report);
            } else {
                require_task(sf, command);
                if (command == "cocycle-check") run_cocycle_check(sf, report);
                else if (command == "peirce") run_peirce(sf, report);
                else if (command == "decompose-bimodule") run_decompose(sf, report);
                else if (command == "radical-report") run_radical_report(sf, report);
                else if (command == "grassmann-envelope") run_grassmann_envelope(sf, opt, report);
                else if (command == "check-nilpotency") run_check_nilpotency(sf, opt, report);
            }
        }

        if (opt.timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            Json t = Json::object();
            t["total_ms"] = std::to_string(ms);
            report["timings"] = t;
        }
        write_payload(report, opt.format, out);
        return 0;
    } catch (const CliError& ce) {
        Json payload = Json::object();
        Json detail = Json::object();
        detail["kind"] = ce.kind;
        detail["reason"] = ce.reason;
        if (!ce.witness.is_null()) detail["witness"] = ce.witness;
        payload["error"] = detail;
        write_payload(payload, opt.format, err);
        return ce.code;
    } catch (const InputError& e) {
        Json payload = Json::object();
        Json detail = Json::object();
        detail["kind"] = "input";
        detail["reason"] = e.what();
        payload["error"] = detail;
        write_payload(payload, opt.format, err);
        return 1;
    } catch (const VerificationError& e) {
        Json payload = Json::object();
        Json detail = Json::object();
        detail["kind"] = "verification";
        detail["reason"] = e.what();
        payload["error"] = detail;
        write_payload(payload, opt.format, err);
        return 2;
    }
}

} // namespace gbk

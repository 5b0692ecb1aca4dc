#include "stern/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "stern/automata.hpp"
#include "stern/render.hpp"
#include "stern/rules.hpp"
#include "stern/sigma.hpp"
#include "stern/tau.hpp"
#include "stern/tilings.hpp"
#include "stern/verify.hpp"

namespace stern {

namespace {

struct Options {
    std::uint32_t modulus = 3;
    std::string rule = "sigma";
    std::string family = "supertile";
    std::string seed;
    int steps = 0;
    std::string format = "json";
    std::string out;
    std::string in;
    std::string machine = "M";
    std::uint64_t position = 0;
    int word_length = -1;
    std::string convention;
    int sector = 0;
    std::string check = "all";
    std::uint64_t n = 0;
    int scale = 4;
    std::string fill = "points";
};

[[noreturn]] void bad_seed(const std::string& seed, const std::string& why) {
    throw Error(ErrorKind::parse_error, "seed \"" + seed + "\": " + why);
}

// "kind:v1,v2,..." with values reduced into the ring.
std::pair<std::string, std::vector<Value>> split_seed(const Ring& ring, const std::string& seed) {
    const auto colon = seed.find(':');
    if (colon == std::string::npos) bad_seed(seed, "expected kind:values");
    std::vector<Value> values;
    std::stringstream ss(seed.substr(colon + 1));
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            bad_seed(seed, "\"" + item + "\" is not an integer");
        }
        if (used != item.size()) bad_seed(seed, "\"" + item + "\" is not an integer");
        values.push_back(ring.reduce(v));
    }
    return {seed.substr(0, colon), values};
}

std::vector<Value> seed_values(const Ring& ring, const std::string& seed, const std::string& kind, std::size_t count) {
    auto [k, v] = split_seed(ring, seed);
    if (k != kind) bad_seed(seed, "expected a " + kind + ": seed");
    if (v.size() != count) bad_seed(seed, "expected " + std::to_string(count) + " values");
    return v;
}

TriTile tri_seed(const Ring& ring, const std::string& seed) {
    auto [k, v] = split_seed(ring, seed);
    if (k != "up" && k != "down") bad_seed(seed, "expected up: or down:");
    if (v.size() != 3) bad_seed(seed, "expected 3 values");
    return k == "up" ? up_tile(v[0], v[1], v[2]) : down_tile(v[0], v[1], v[2]);
}

SegTile seg_seed(const Ring& ring, const std::string& seed) {
    const auto v = seed_values(ring, seed, "seg", 2);
    return {v[0], v[1]};
}

nlohmann::json tile_json(const TriTile& t) {
    return {{"orientation", t.orientation == Orientation::up ? "up" : "down"},
            {"corners", {t.corners[0], t.corners[1], t.corners[2]}}};
}

void emit(const Options& o, const std::string& bytes, std::ostream& out) {
    if (o.out.empty() || o.out == "-") {
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot open \"" + o.out + "\" for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string encode_patch(const Options& o, const AnyPatch& patch) {
    if (o.format == "json") return to_json(patch) + "\n";
    if (o.format == "csv") {
        if (const auto* seg = std::get_if<SegPatch>(&patch)) return to_csv(*seg) + "\n";
        throw Error(ErrorKind::unsupported_format, "csv output needs a one-dimensional word");
    }
    RenderOptions ro;
    ro.format = parse_image_format(o.format);
    ro.fill = parse_fill(o.fill);
    ro.scale = o.scale;
    return render(patch, ro);
}

AnyPatch generate(const Options& o) {
    const Ring ring(o.modulus);
    if (o.seed.empty()) throw Error(ErrorKind::invalid_argument, "gen needs --seed");
    if (o.family == "s") return s_patch(ring, tri_seed(ring, o.seed), o.steps);
    if (o.family == "h") {
        const auto v = seed_values(ring, o.seed, "hex", 2);
        return h_patch(ring, v[0], v[1], o.steps);
    }
    if (o.family == "v") {
        const SegTile t = seg_seed(ring, o.seed);
        if (t.x != 0) bad_seed(o.seed, "the v family starts from seg:0,y");
        return v_word(ring, t.y, o.steps);
    }
    if (o.family == "w") return w_word(ring, seg_seed(ring, o.seed), o.steps);

    // supertile
    if (o.rule == "tau") return tau_word(ring, seg_seed(ring, o.seed), o.steps);
    const RuleId id = parse_rule(o.rule);
    if (id == RuleId::sigma) return supertile(ring, tri_seed(ring, o.seed), o.steps);
    const SubstRule& rule = variant_rule(id);
    switch (rule.geometry) {
        case Geometry::triangle: return supertile_with(rule, ring, tri_seed(ring, o.seed), o.steps);
        case Geometry::square: {
            const auto v = seed_values(ring, o.seed, "square", 4);
            return square_supertile(rule, ring, SquareTile{{v[0], v[1], v[2], v[3]}}, o.steps);
        }
        case Geometry::right_triangle: return right_triangle_supertile(rule, ring, tri_seed(ring, o.seed), o.steps);
    }
    throw Error(ErrorKind::invalid_argument, "unknown rule geometry");
}

int cmd_gen(const Options& o, std::ostream& out) {
    emit(o, encode_patch(o, generate(o)), out);
    return 0;
}

// Shortest word length that can address the position in base `radix`.
int default_length(std::uint64_t position, std::uint64_t radix) {
    int len = 0;
    for (std::uint64_t v = position; v > 0; v /= radix) ++len;
    return std::max(len, 1);
}

int cmd_query(const Options& o, std::ostream& out) {
    const Ring ring(o.modulus);
    const MachineId id = parse_machine(o.machine);
    nlohmann::json doc{{"machine", o.machine}, {"modulus", o.modulus}, {"position", o.position}};
    if (id == MachineId::O) {
        if (!o.convention.empty() && o.convention != "binary")
            throw Error(ErrorKind::invalid_argument, "machine O reads binary positions");
        const int len = o.word_length >= 0 ? o.word_length : default_length(o.position, 2);
        if (len > 63 || (len < 63 && (o.position >> len) != 0))
            throw Error(ErrorKind::out_of_bounds, "position does not fit in " + std::to_string(len) + " bits");
        const BinaryWord w = binary_word(o.position, len);
        const MachineO machine(ring);
        const SegTile anchor = o.seed.empty() ? SegTile{0, 1} : seg_seed(ring, o.seed);
        const SegTile t = machine.decode_w(machine.run(w), anchor);
        std::string bits;
        for (auto b : w) bits += static_cast<char>('0' + b);
        doc["word"] = bits;
        doc["tile"] = {t.x, t.y};
    } else {
        WordConvention conv = id == MachineId::M ? WordConvention::plane : WordConvention::sector;
        if (o.convention == "plane") conv = WordConvention::plane;
        else if (o.convention == "sector") conv = WordConvention::sector;
        else if (!o.convention.empty()) throw Error(ErrorKind::invalid_argument, "machine " + o.machine + " reads base-4 positions");
        const int len = o.word_length >= 0 ? o.word_length : default_length(o.position, 4);
        const PositionWord w = decode_word(o.position, len, conv);
        doc["word"] = to_string(w);
        if (id == MachineId::M) {
            const MachineM machine(ring);
            const TriTile anchor = o.seed.empty() ? up_tile(1, 1, 0) : tri_seed(ring, o.seed);
            doc["tile"] = tile_json(machine.decode(machine.run(w), anchor));
        } else {
            const MachineN machine(ring);
            const auto v = seed_values(ring, o.seed.empty() ? "hex:2,1" : o.seed, "hex", 2);
            doc["sector"] = o.sector;
            doc["tile"] = tile_json(machine.decode(machine.run(w), v[0], v[1], o.sector));
        }
    }
    emit(o, doc.dump() + "\n", out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const SuiteReport report = run_suite(o.check, Ring(o.modulus));
    emit(o, report.to_json() + "\n", out);
    return report.passed() ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
    std::string text;
    if (o.in.empty() || o.in == "-") {
        throw Error(ErrorKind::invalid_argument, "render needs --in FILE");
    }
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot open \"" + o.in + "\"");
    text.assign(std::istreambuf_iterator<char>(f), {});
    Options ro = o;
    if (ro.format == "json") ro.format = "ppm";
    emit(ro, encode_patch(ro, patch_from_json(text)), out);
    return 0;
}

int cmd_fusc(const Options& o, bool reduce, std::ostream& out) {
    const std::string v = reduce ? std::to_string(fusc(o.n, Ring(o.modulus))) : std::to_string(fusc(o.n));
    emit(o, v + "\n", out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Stern-diatomic substitution tilings"};
    app.name("sterntile");
    app.require_subcommand(1);

    auto modulus = [&](CLI::App* sub) {
        return sub->add_option("--modulus,-m", o.modulus, "Residue modulus")->check(CLI::Range(2u, 65535u));
    };
    auto output = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "Output file (default stdout)"); };
    auto image = [&](CLI::App* sub) {
        sub->add_option("--scale", o.scale, "Pixels per half lattice step")->check(CLI::Range(1, 64));
        sub->add_option("--fill", o.fill, "points or tiles");
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate a patch");
    modulus(gen);
    gen->add_option("--rule", o.rule, "sigma, sigma1..sigma7 or tau");
    gen->add_option("--family", o.family, "supertile, s, h, v or w")
        ->check(CLI::IsMember({"supertile", "s", "h", "v", "w"}));
    gen->add_option("--seed", o.seed, "up:x,y,z  down:x,y,z  seg:x,y  hex:b,c  square:w,x,y,z")->required();
    gen->add_option("--steps,-k", o.steps, "Substitution steps")->check(CLI::NonNegativeNumber);
    gen->add_option("--format", o.format, "json, ppm, svg or csv");
    output(gen);
    image(gen);

    CLI::App* query = app.add_subcommand("query", "Decode one tile with an automaton");
    modulus(query);
    query->add_option("--machine", o.machine, "M, N or O");
    query->add_option("--position", o.position, "Tile index")->required();
    query->add_option("--steps,-k", o.word_length, "Word length (default: shortest that fits)")
        ->check(CLI::NonNegativeNumber);
    query->add_option("--convention", o.convention, "plane, sector or binary")
        ->check(CLI::IsMember({"plane", "sector", "binary"}));
    query->add_option("--sector", o.sector, "Hex sector for machine N");
    query->add_option("--seed", o.seed, "Anchor: up:/down: for M, hex:b,c for N, seg:x,y for O");
    output(query);

    CLI::App* verify = app.add_subcommand("verify", "Run a check suite");
    modulus(verify);
    verify->add_option("--check", o.check, "Suite name");
    output(verify);

    CLI::App* rend = app.add_subcommand("render", "Render a JSON patch dump");
    rend->add_option("--in", o.in, "JSON patch file")->required();
    rend->add_option("--format", o.format, "ppm or svg");
    output(rend);
    image(rend);

    CLI::App* fus = app.add_subcommand("fusc", "Stern's diatomic sequence");
    CLI::Option* fus_mod = modulus(fus);
    fus->add_option("--n", o.n, "Index")->required();
    output(fus);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*query) return cmd_query(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*rend) return cmd_render(o, out);
        return cmd_fusc(o, fus_mod->count() > 0, out);
    } catch (const Error& e) {
        err << "sterntile: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace stern

#include "rcdkit/instance.hpp"

#include <json.hpp>

#include <set>
#include <utility>
#include <vector>

namespace rcdkit {

namespace {

using OJson = nlohmann::ordered_json;

Rat parse_value(const nlohmann::json& v, Mode mode) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        bool looks_decimal = s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
                             s.find('E') != std::string::npos;
        if (looks_decimal) {
            if (mode == Mode::rational)
                throw Error(Errc::malformed_document,
                            "decimal value '" + s + "' not accepted in rational mode");
            return parse_decimal(s);
        }
        return parse_rational(s);
    }
    throw Error(Errc::malformed_document,
                "numeric entries must be integers or strings; quote decimals, e.g. \"0.25\"");
}

}  // namespace

Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::malformed_document, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(Errc::malformed_document, "document must be a JSON object");

    static const std::set<std::string> known = {"n", "nu", "R", "partition", "mode", "epsilon"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw Error(Errc::malformed_document, "unknown key '" + it.key() + "'");

    Instance inst;

    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(Errc::malformed_document, "missing or non-integer 'n'");
    inst.n = doc["n"].get<int>();
    if (inst.n < 1) throw Error(Errc::malformed_document, "'n' must be at least 1");

    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) throw Error(Errc::malformed_document, "'mode' must be a string");
        const auto& m = doc["mode"].get_ref<const std::string&>();
        if (m == "rational")
            inst.mode = Mode::rational;
        else if (m == "float")
            inst.mode = Mode::floating;
        else
            throw Error(Errc::malformed_document, "mode must be 'rational' or 'float'");
    }

    if (doc.contains("epsilon")) {
        if (inst.mode != Mode::floating)
            throw Error(Errc::malformed_document, "'epsilon' is only meaningful in float mode");
        if (!doc["epsilon"].is_string())
            throw Error(Errc::malformed_document, "'epsilon' must be a decimal string");
        inst.epsilon_text = doc["epsilon"].get<std::string>();
        inst.epsilon = parse_decimal(*inst.epsilon_text);
        if (inst.epsilon->negative())
            throw Error(Errc::malformed_document, "'epsilon' must be nonnegative");
    } else if (inst.mode == Mode::floating) {
        inst.epsilon_text = kDefaultEpsilonText;
        inst.epsilon = parse_decimal(kDefaultEpsilonText);
    }

    NumericMode nm = inst.numeric_mode();

    if (!doc.contains("nu") || !doc["nu"].is_array())
        throw Error(Errc::malformed_document, "missing or non-array 'nu'");
    if (static_cast<int>(doc["nu"].size()) != inst.n)
        throw Error(Errc::dimension_mismatch, "'nu' must have exactly n entries");
    std::vector<Rat> weights;
    weights.reserve(static_cast<size_t>(inst.n));
    for (const auto& v : doc["nu"]) weights.push_back(parse_value(v, inst.mode));
    inst.nu = Measure(std::move(weights), nm);

    if (doc.contains("R")) {
        if (!doc["R"].is_array() || static_cast<int>(doc["R"].size()) != inst.n)
            throw Error(Errc::dimension_mismatch, "'R' must be an n x n array of arrays");
        std::vector<std::vector<Rat>> rows;
        rows.reserve(static_cast<size_t>(inst.n));
        for (const auto& row : doc["R"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != inst.n)
                throw Error(Errc::dimension_mismatch, "'R' must be an n x n array of arrays");
            std::vector<Rat> r;
            r.reserve(static_cast<size_t>(inst.n));
            for (const auto& v : row) r.push_back(parse_value(v, inst.mode));
            rows.push_back(std::move(r));
        }
        inst.kernel = Kernel(std::move(rows), nm);
    }

    if (doc.contains("partition")) {
        if (!doc["partition"].is_array())
            throw Error(Errc::malformed_document, "'partition' must be an array of blocks");
        std::vector<EventSet> blocks;
        for (const auto& blk : doc["partition"]) {
            if (!blk.is_array())
                throw Error(Errc::malformed_document, "each partition block must be an array");
            EventSet b(inst.n);
            for (const auto& v : blk) {
                if (!v.is_number_integer())
                    throw Error(Errc::malformed_document, "block members must be integers");
                long long x = v.get<long long>();
                if (x < 0 || x >= inst.n)
                    throw Error(Errc::index_out_of_range,
                                "block member " + std::to_string(x) + " out of range");
                b.add(static_cast<int>(x));
            }
            blocks.push_back(std::move(b));
        }
        inst.partition = Partition::from_blocks(inst.n, std::move(blocks));
    }

    return inst;
}

namespace {

OJson rat_array(const std::vector<Rat>& values) {
    OJson out = OJson::array();
    for (const Rat& v : values) out.push_back(v.str());
    return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    OJson doc;
    doc["n"] = inst.n;
    doc["nu"] = rat_array(inst.nu.weights());
    if (inst.kernel) {
        OJson rows = OJson::array();
        for (int x = 0; x < inst.kernel->size(); ++x) rows.push_back(rat_array(inst.kernel->row(x)));
        doc["R"] = rows;
    }
    if (inst.partition) {
        OJson blocks = OJson::array();
        for (const EventSet& b : inst.partition->blocks()) blocks.push_back(b.members());
        doc["partition"] = blocks;
    }
    doc["mode"] = inst.mode == Mode::rational ? "rational" : "float";
    if (inst.mode == Mode::floating)
        doc["epsilon"] = inst.epsilon_text ? *inst.epsilon_text : kDefaultEpsilonText;
    return doc.dump(2) + "\n";
}

}  // namespace rcdkit

#include "hmn/module_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hmn {

namespace {

constexpr const char* kFormat = "HMNMOD1";
constexpr const char* kGenKeys[4] = {"a", "b", "c", "d"};

nlohmann::ordered_json scalar_to_json(const Field& F, const Cyc& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    if (!v.attached()) {
        for (int t = 0; t < F.phi(); ++t) out.push_back(rat_to_string(Rat(0)));
        return out;
    }
    for (const Rat& r : v.coords()) out.push_back(rat_to_string(r));
    return out;
}

Cyc scalar_from_json(const Field& F, const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != F.phi())
        throw ModuleIOError(where + ": expected " + std::to_string(F.phi()) + " coordinates");
    std::vector<Rat> coords;
    coords.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string()) throw ModuleIOError(where + ": coordinate is not a string");
        try {
            coords.push_back(rat_from_string(e.get<std::string>()));
        } catch (const std::invalid_argument& ex) {
            throw ModuleIOError(where + ": " + ex.what());
        }
    }
    return F.from_coords(std::move(coords));
}

long get_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ModuleIOError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<long>();
}

nlohmann::json parse_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ModuleIOError("not valid JSON");
    if (!j.is_object()) throw ModuleIOError("top level is not an object");
    if (!j.contains("format") || j.at("format") != kFormat)
        throw ModuleIOError(std::string("format tag is not ") + kFormat);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModuleIOError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ModuleIOError("read error on " + path);
    return buf.str();
}

} // namespace

std::string module_to_json(const Module& M) {
    const Field& F = M.field();
    nlohmann::ordered_json j;
    j["format"] = kFormat;
    j["m"] = F.m();
    j["n"] = F.n();
    j["dim"] = M.dim;
    j["label"] = M.label;
    nlohmann::ordered_json action;
    for (int g = 0; g < 4; ++g) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r < M.dim; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < M.dim; ++c)
                row.push_back(scalar_to_json(F, M.act[static_cast<size_t>(g)].at(r, c)));
            rows.push_back(std::move(row));
        }
        action[kGenKeys[g]] = std::move(rows);
    }
    j["action"] = std::move(action);
    return j.dump(2) + "\n";
}

Module module_from_json(const Field& F, const std::string& text) {
    nlohmann::json j = parse_text(text);
    const long fm = get_int(j, "m"), fn = get_int(j, "n");
    if (fm != F.m() || fn != F.n())
        throw ModuleIOError("file is for (m,n) = (" + std::to_string(fm) + "," + std::to_string(fn) +
                            "), not (" + std::to_string(F.m()) + "," + std::to_string(F.n()) + ")");
    const long dim = get_int(j, "dim");
    if (dim < 0 || dim > 100000) throw ModuleIOError("unreasonable dimension " + std::to_string(dim));

    Module M;
    M.F = &F;
    M.dim = static_cast<int>(dim);
    if (j.contains("label") && j.at("label").is_string()) M.label = j.at("label").get<std::string>();

    if (!j.contains("action") || !j.at("action").is_object())
        throw ModuleIOError("missing action object");
    const nlohmann::json& action = j.at("action");
    for (int g = 0; g < 4; ++g) {
        const char* key = kGenKeys[g];
        if (!action.contains(key)) throw ModuleIOError(std::string("action lacks generator '") + key + "'");
        const nlohmann::json& rows = action.at(key);
        if (!rows.is_array() || static_cast<long>(rows.size()) != dim)
            throw ModuleIOError(std::string("generator '") + key + "': expected " + std::to_string(dim) +
                                " rows");
        Mat mat(F, M.dim, M.dim);
        for (int r = 0; r < M.dim; ++r) {
            const nlohmann::json& row = rows.at(static_cast<size_t>(r));
            if (!row.is_array() || static_cast<long>(row.size()) != dim)
                throw ModuleIOError(std::string("generator '") + key + "', row " + std::to_string(r) +
                                    ": expected " + std::to_string(dim) + " entries");
            for (int c = 0; c < M.dim; ++c) {
                std::string where = std::string("generator '") + key + "' entry (" + std::to_string(r) +
                                    "," + std::to_string(c) + ")";
                mat.at(r, c) = scalar_from_json(F, row.at(static_cast<size_t>(c)), where);
            }
        }
        M.act[static_cast<size_t>(g)] = std::move(mat);
    }
    return M;
}

std::pair<int, int> module_file_params(const std::string& path) {
    nlohmann::json j = parse_text(slurp(path));
    return {static_cast<int>(get_int(j, "m")), static_cast<int>(get_int(j, "n"))};
}

Module read_module(const Field& F, const std::string& path) {
    return module_from_json(F, slurp(path));
}

void write_module(const std::string& path, const Module& M) {
    const std::string text = module_to_json(M);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ModuleIOError("cannot open " + tmp + " for writing");
        out << text;
        out.flush();
        if (!out) throw ModuleIOError("write error on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ModuleIOError("cannot move " + tmp + " into place");
    }
}

} // namespace hmn

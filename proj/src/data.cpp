#include "spin7cells/data.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spin7cells/errors.hpp"

namespace spin7::data {

namespace {

struct EmbeddedFile {
    const char* name;
    const char* text;
};

// Generated at configure time from the files under data/.
#include "embedded_data.inc"

std::string g_data_dir; // empty: bundled copies

const char* embedded(const std::string& name) {
    for (const EmbeddedFile& f : kEmbeddedFiles)
        if (name == f.name) return f.text;
    throw ConfigError("no bundled data file named " + name);
}

} // namespace

void set_data_dir(const std::string& dir) { g_data_dir = dir; }

std::string data_dir() { return g_data_dir; }

std::string load(const std::string& name) {
    if (!g_data_dir.empty()) {
        const std::filesystem::path path = std::filesystem::path(g_data_dir) / name;
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read data file " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return embedded(name);
}

std::string mult_table_text() { return load("mult_table.txt"); }
std::string boundary_relations_text() { return load("boundary_relations.txt"); }
std::string filtration_text() { return load("filtration.txt"); }
std::string su4_filtration_text() { return load("su4_filtration.txt"); }
std::string ss_ledger_text() { return load("ss_ledger.txt"); }
std::string sq2_text() { return load("sq2.txt"); }

std::string ring_text(const std::string& tag) { return load("rings/" + tag + ".ring"); }

} // namespace spin7::data

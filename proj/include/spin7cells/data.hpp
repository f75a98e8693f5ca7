#pragma once

#include <string>

namespace spin7::data {

/// Points the loaders at a directory of override files ("" restores the
/// bundled copies). Takes effect for every load after the call; the octonion
/// table is cached on first use, so a CLI sets this before touching anything.
void set_data_dir(const std::string& dir);
std::string data_dir();

/// Resolves name ("mult_table.txt", "rings/spin7.ring", ...) against the data
/// dir, falling back to the embedded copy of the same file.
std::string load(const std::string& name);

std::string mult_table_text();
std::string boundary_relations_text();
std::string filtration_text();
std::string su4_filtration_text();
std::string ring_text(const std::string& tag); // "spin7", "su4", "spin8"
std::string ss_ledger_text();
std::string sq2_text();

} // namespace spin7::data

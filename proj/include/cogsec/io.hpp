#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cogsec/config.hpp"
#include "cogsec/montecarlo.hpp"

namespace cogsec {
namespace io {

// Flat key = value scenario format; '#' starts a comment. Power fields carry
// a _dbm suffix and are converted to linear milliwatts. Vector fields accept
// a single scalar, meaning "broadcast to all users/eavesdroppers"; matrix
// rows are separated by ';'.
SystemConfig load_config(const std::string& path);
SystemConfig parse_config(std::istream& in, const std::string& source_name);

// Built-in scenarios matching the reference figure parameter sets.
// Known names: fig2, fig3, fig4, fig5, fig6.
std::optional<SystemConfig> preset_config(const std::string& name);
std::vector<std::string> preset_names();
std::string preset_file_text(const std::string& name);

enum class OutputFormat { Csv, Json };

// Fixed column order: scheme, m_users, n_eves, lambda_me_db, metric, value,
// std_error, trials, master_seed, status. Unresolved rows carry an empty
// value field and status "unresolved".
void write_rows_csv(std::ostream& out, const std::vector<mc::SweepRow>& rows);
void write_rows_json(std::ostream& out, const std::vector<mc::SweepRow>& rows);
void write_rows(const std::string& path, OutputFormat format,
                const std::vector<mc::SweepRow>& rows);

std::string format_double(double value);  // full round-trip precision

}  // namespace io
}  // namespace cogsec

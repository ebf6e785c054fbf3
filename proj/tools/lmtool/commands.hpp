#ifndef LMTOOL_COMMANDS_HPP
#define LMTOOL_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace lmtool {

// Write `content` to `<out>/<name>` when an output directory is configured
// (printing the path), otherwise to stdout.
void emit_output(const RunConfig& cfg, const std::string& name, const std::string& content);

int cmd_admissible(const RunConfig& cfg, int n, int r, int s,
                   const std::optional<std::vector<int>>& index, bool with_svg);
int cmd_svg(const RunConfig& cfg, int n, int r, int s,
            const std::optional<std::vector<int>>& index);
int cmd_chart(const RunConfig& cfg, const std::string& kase, int n, int r, int s,
              const std::string& level);
int cmd_flatness(const RunConfig& cfg, const std::string& ideal_file, const std::string& var);
int cmd_verify(const RunConfig& cfg, const std::string& suite);

}  // namespace lmtool

#endif

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cpn::cli {

struct FigureParams {
  double sigma = 0.39269908169872414;  // π/8
  double radius = 0.7853981633974483;  // π/4
  int grid = 12;
  int samples = 24;
  int corner = 0;
};

const std::vector<std::string>& figure_names();
bool is_figure(std::string_view name);

/// Writes the CSV for `name`.  The first line is "# schema: <id>", the
/// second the column header.  Throws InvalidArgument for unknown names.
void emit_figure(std::string_view name, const FigureParams& params, std::ostream& out);

}  // namespace cpn::cli

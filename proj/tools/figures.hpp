#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frechet::cli {

enum class FigureId { Fig1, Fig2, Fig3, Fig4 };

std::optional<FigureId> parse_figure_id(std::string_view name);

struct FigureData {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Grid data behind one figure; `points` >= 2 grid nodes.
///
///   fig1  p in [0.01, 10] linear; L[Fr(l/4)] for l = 1..4
///   fig2  p in [0.01, 100] log-spaced; L[Fr(l/1)] for l = 1..3
///   fig3  x in [1e-12, 10] log-spaced; transform of Fr(1/2) at gamma = 1/3
///   fig4  x in (0, 3] linear; reduced g^a and Fr for gamma = 1 and gamma = 1/3
FigureData make_figure(FigureId id, int points);

/// Header row, comma separated, 17 significant digits, LF line endings.
void write_csv(std::ostream& out, const FigureData& data);

/// 17-significant-digit rendering shared by every CLI printout.
std::string format_real(double v);

}  // namespace frechet::cli

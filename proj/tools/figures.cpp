#include "figures.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "frechet/distributions.hpp"
#include "frechet/ftransform.hpp"
#include "frechet/laplace.hpp"
#include "frechet/optimize.hpp"

namespace frechet::cli {

namespace {

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

FigureData laplace_figure(const std::vector<double>& grid,
                          const std::vector<RationalShape>& shapes,
                          const std::vector<std::string>& names) {
  FigureData data;
  data.header.push_back("p");
  data.header.insert(data.header.end(), names.begin(), names.end());
  for (double p : grid) {
    std::vector<double> row{p};
    for (const auto& s : shapes) {
      row.push_back(laplace_frechet({s, p, LaplaceMethod::MeijerG}).value);
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
  if (name == "fig1") return FigureId::Fig1;
  if (name == "fig2") return FigureId::Fig2;
  if (name == "fig3") return FigureId::Fig3;
  if (name == "fig4") return FigureId::Fig4;
  return std::nullopt;
}

FigureData make_figure(FigureId id, int points) {
  if (points < 2) throw std::invalid_argument("figure needs at least 2 points");
  switch (id) {
    case FigureId::Fig1:
      return laplace_figure(linear_grid(0.01, 10.0, points),
                            {{1, 4}, {2, 4}, {3, 4}, {4, 4}},
                            {"L_l1_k4", "L_l2_k4", "L_l3_k4", "L_l4_k4"});
    case FigureId::Fig2:
      return laplace_figure(log_grid(0.01, 100.0, points), {{1, 1}, {2, 1}, {3, 1}},
                            {"L_l1_k1", "L_l2_k1", "L_l3_k1"});
    case FigureId::Fig3: {
      FigureData data{{"x", "frechet_half_transform_gamma_1_3"}, {}};
      const Shape gamma(1.0 / 3.0);
      for (double x : log_grid(1e-12, 10.0, points)) {
        data.rows.push_back({x, frechet_transform_frechet_half(gamma, x).value});
      }
      return data;
    }
    case FigureId::Fig4: {
      FigureData data{{"x", "reduced_levy_asym_alpha_1_2", "reduced_frechet_gamma_1",
                       "reduced_levy_asym_alpha_1_4", "reduced_frechet_gamma_1_3"},
                      {}};
      struct Pair {
        LevyIndex alpha;
        double t_scale;
        Shape gamma;
      };
      const Pair pairs[] = {{LevyIndex(0.5), 0.25, Shape(1.0)},
                            {LevyIndex(0.25), 27.0 / 256.0, Shape(1.0 / 3.0)}};
      struct Curves {
        double levy_max;
        double frechet_max;
      };
      std::vector<Curves> maxima;
      for (const auto& pr : pairs) {
        auto levy = [&pr](double x) { return levy_asymptotic(pr.alpha, pr.t_scale * x); };
        auto fr = [&pr](double x) { return frechet_pdf(pr.gamma, x); };
        maxima.push_back({levy(unimodal_argmax(levy, 1.0)), fr(unimodal_argmax(fr, 1.0))});
      }
      const double hi = 3.0;
      for (int i = 1; i <= points; ++i) {
        const double x = hi * i / points;
        std::vector<double> row{x};
        for (std::size_t j = 0; j < 2; ++j) {
          row.push_back(levy_asymptotic(pairs[j].alpha, pairs[j].t_scale * x) /
                        maxima[j].levy_max);
          row.push_back(frechet_pdf(pairs[j].gamma, x) / maxima[j].frechet_max);
        }
        data.rows.push_back(std::move(row));
      }
      return data;
    }
  }
  throw std::invalid_argument("unknown figure");
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const FigureData& data) {
  for (std::size_t i = 0; i < data.header.size(); ++i) {
    out << (i ? "," : "") << data.header[i];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_real(row[i]);
    }
    out << '\n';
  }
}

}  // namespace frechet::cli

#include "cslab/svg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cslab::svg {

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 20;

}  // namespace

std::string render_path(const LatticePath& path) {
  const auto h = path.heights();
  long lo = 0;
  long hi = 0;
  for (long y : h) {
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  const long width = static_cast<long>(h.size());
  const long vw = width * kUnit + 2 * kMargin;
  const long vh = (hi - lo) * kUnit + 2 * kMargin;
  auto px = [](long u) { return kMargin + u * kUnit; };
  auto py = [hi](long v) { return kMargin + (hi - v) * kUnit; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << vw << ' ' << vh << "\" width=\"" << vw
      << "\" height=\"" << vh << "\">\n";
  out << "  <title>" << path.k << "-path " << path.step_string() << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long level = lo; level <= hi; ++level) {
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(level) << "\" x2=\"" << px(width) << "\" y2=\"" << py(level)
        << "\" stroke=\"" << (level == 0 ? "black" : "gray") << "\" stroke-width=\"1\""
        << (level == 0 ? "" : " stroke-dasharray=\"2,4\"") << "/>\n";
  }
  out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"" << px(0) << ',' << py(0);
  for (std::size_t i = 0; i < h.size(); ++i) out << ' ' << px(static_cast<long>(i) + 1) << ',' << py(h[i]);
  out << "\"/>\n";
  out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"4\"/>\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    out << "  <circle cx=\"" << px(static_cast<long>(i) + 1) << "\" cy=\"" << py(h[i]) << "\" r=\"4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tree(const PlaneTree& tree) {
  std::vector<int> column(tree.size(), 0);
  std::vector<int> depth(tree.size(), 0);
  int next = 0;
  int max_depth = 0;
  std::function<void(int, int)> place = [&](int v, int d) {
    if (v < 0) return;
    const auto& node = tree.nodes[static_cast<std::size_t>(v)];
    place(node.left, d + 1);
    column[static_cast<std::size_t>(v)] = next++;
    depth[static_cast<std::size_t>(v)] = d;
    max_depth = std::max(max_depth, d);
    place(node.right, d + 1);
  };
  place(tree.root, 0);

  const int vw = std::max(next, 1) * kUnit + 2 * kMargin;
  const int vh = (max_depth + 1) * kUnit + 2 * kMargin;
  auto px = [](int c) { return kMargin + c * kUnit + kUnit / 2; };
  auto py = [](int d) { return kMargin + d * kUnit + kUnit / 2; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << vw << ' ' << vh << "\" width=\"" << vw
      << "\" height=\"" << vh << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t v = 0; v < tree.size(); ++v) {
    for (int child : {tree.nodes[v].left, tree.nodes[v].right}) {
      if (child < 0) continue;
      const auto c = static_cast<std::size_t>(child);
      out << "  <line x1=\"" << px(column[v]) << "\" y1=\"" << py(depth[v]) << "\" x2=\"" << px(column[c])
          << "\" y2=\"" << py(depth[c]) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
  }
  for (std::size_t v = 0; v < tree.size(); ++v) {
    out << "  <circle cx=\"" << px(column[v]) << "\" cy=\"" << py(depth[v])
        << "\" r=\"13\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << px(column[v]) << "\" y=\"" << py(depth[v]) + 5
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << tree.nodes[v].label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cslab::svg

#include "ppmesh/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ppmesh/errors.hpp"

namespace ppmesh {

namespace {

struct pt {
  double x = 0;
  double y = 0;
};

pt operator+(pt a, pt b) { return {a.x + b.x, a.y + b.y}; }
pt operator-(pt a, pt b) { return {a.x - b.x, a.y - b.y}; }
pt operator*(double s, pt p) { return {s * p.x, s * p.y}; }

double dot(pt a, pt b) { return a.x * b.x + a.y * b.y; }
double norm(pt p) { return std::sqrt(dot(p, p)); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class layout {
 public:
  layout(const mesh_graph& mesh, const svg_options& opt) : mesh_(mesh), opt_(opt) {
    int min_x = mesh.tbus()[0].a.x, max_x = min_x;
    int min_y = mesh.tbus()[0].a.y, max_y = min_y;
    for (const tbu& t : mesh.tbus())
      for (const vertex_ref v : {t.a, t.b}) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
      }
    origin_ = {static_cast<double>(min_x), static_cast<double>(min_y)};
    width_ = 2 * opt.margin + opt.scale * (max_x - min_x);
    height_ = 2 * opt.margin + opt.scale * (max_y - min_y);
  }

  double width() const { return width_; }
  double height() const { return height_; }

  pt at(vertex_ref v) const {
    return {opt_.margin + opt_.scale * (v.x - origin_.x),
            opt_.margin + opt_.scale * (v.y - origin_.y)};
  }

  pt cell_center(cell_ref c) const {
    const auto poly = mesh_.cell_polygon(c);
    pt sum;
    for (const vertex_ref v : poly) sum = sum + at(v);
    return (1.0 / static_cast<double>(poly.size())) * sum;
  }

  // Waveguide attachment point of one TBU port. Ports sit at 22% and 78%
  // along the edge, pushed a little toward the cell that side faces.
  pt port(int tbu_index, int end, int side) const {
    const tbu& t = mesh_.tbus()[static_cast<size_t>(tbu_index)];
    const pt a = at(t.a), b = at(t.b);
    pt perp{-(b - a).y, (b - a).x};
    perp = (1.0 / norm(perp)) * perp;
    const pt mid = 0.5 * (a + b);
    if (dot(cell_center(t.cells[static_cast<size_t>(side)]) - mid, perp) < 0)
      perp = -1.0 * perp;
    const double along = end == 0 ? 0.22 : 0.78;
    return a + along * (b - a) + (0.12 * opt_.scale) * perp;
  }

  // Port of node n on TBU t (the slot whose node id matches).
  pt port_of(int tbu_index, int node) const {
    const tbu& t = mesh_.tbus()[static_cast<size_t>(tbu_index)];
    for (int slot = 0; slot < 4; ++slot)
      if (t.node[static_cast<size_t>(slot)] == node)
        return port(tbu_index, slot / 2, slot % 2);
    fail(errc::unknown_tbu, "node " + std::to_string(node) + " is not a port of TBU " +
                                std::to_string(tbu_index));
  }

  pt node_at(int index) const {
    const node& n = mesh_.nodes()[static_cast<size_t>(index)];
    const pt v = at(n.vertex);
    pt toward = cell_center(n.wedge) - v;
    const double len = norm(toward);
    if (len > 0) toward = (0.18 * opt_.scale / len) * toward;
    return v + toward;
  }

 private:
  const mesh_graph& mesh_;
  svg_options opt_;
  pt origin_;
  double width_ = 0;
  double height_ = 0;
};

class canvas {
 public:
  void line(pt a, pt b) {
    body_ << "    <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
          << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }

  void polyline(const std::vector<pt>& points, const char* cls) {
    body_ << "  <polyline class=\"" << cls << "\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) body_ << ' ';
      body_ << num(points[i].x) << ',' << num(points[i].y);
    }
    body_ << "\"/>\n";
  }

  void circle(pt c, double r, const char* cls) {
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << num(c.x) << "\" cy=\""
          << num(c.y) << "\" r=\"" << num(r) << "\"/>\n";
  }

  void open_group(const std::string& attrs) { body_ << "  <g " << attrs << ">\n"; }
  void close_group() { body_ << "  </g>\n"; }

  std::string str() const { return body_.str(); }

 private:
  std::ostringstream body_;
};

std::vector<pt> route_points(const layout& lay, const std::vector<int>& nodes,
                             const std::vector<int>& tbu_seq, bool closed) {
  std::vector<pt> points;
  const size_t hops = tbu_seq.size();
  for (size_t i = 0; i < hops; ++i) {
    const int from = nodes[i];
    const int to = nodes[closed ? (i + 1) % nodes.size() : i + 1];
    points.push_back(lay.node_at(from));
    points.push_back(lay.port_of(tbu_seq[i], from));
    points.push_back(lay.port_of(tbu_seq[i], to));
  }
  points.push_back(closed ? points.front() : lay.node_at(nodes.back()));
  return points;
}

}  // namespace

std::string render_mesh_svg(const mesh_graph& mesh, const configuration& config,
                            const trace_result* highlight, const svg_options& opt) {
  const layout lay(mesh, opt);
  canvas c;

  for (int i = 0; i < mesh.tbu_count(); ++i) {
    const bool cross = config.state(i) == tbu_state::cross;
    c.open_group("class=\"tbu " + std::string(cross ? "cross" : "bar") + "\" id=\"tbu" +
                 std::to_string(i) + "\"");
    if (cross) {
      c.line(lay.port(i, 0, 0), lay.port(i, 1, 1));
      c.line(lay.port(i, 0, 1), lay.port(i, 1, 0));
    } else {
      c.line(lay.port(i, 0, 0), lay.port(i, 1, 0));
      c.line(lay.port(i, 0, 1), lay.port(i, 1, 1));
    }
    c.close_group();
  }

  if (highlight) {
    for (const closed_loop& l : highlight->loops)
      c.polyline(route_points(lay, l.nodes, l.tbu_seq, true), "loop");
    for (const traced_path& p : highlight->paths)
      c.polyline(route_points(lay, p.nodes, p.tbu_seq, false), "path");
  }

  if (opt.draw_nodes)
    for (const node& n : mesh.nodes())
      c.circle(lay.node_at(n.index), 3.0, n.floating ? "node floating" : "node internal");

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(lay.width()) << "\" height=\"" << num(lay.height()) << "\">\n"
      << "  <title>" << mesh.spec().to_string() << " config " << config.to_bits()
      << "</title>\n"
      << "  <style>\n"
      << "    .tbu line{stroke:#444;stroke-width:2;fill:none;stroke-linecap:round}\n"
      << "    .path{stroke:#d22;stroke-width:2.5;fill:none;stroke-linejoin:round}\n"
      << "    .loop{stroke:#36c;stroke-width:2;fill:none;stroke-dasharray:5 3}\n"
      << "    .node.floating{fill:#2a2}\n"
      << "    .node.internal{fill:#e80}\n"
      << "  </style>\n"
      << c.str() << "</svg>\n";
  return out.str();
}

}  // namespace ppmesh

#pragma once

#include <string>

#include "ppmesh/configuration.hpp"
#include "ppmesh/mesh.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

// Schematic mesh diagram, SVG 1.1. Each TBU is drawn as the two waveguide
// arms on its lattice edge: parallel segments in the bar state, crossed
// segments in the cross state. Floating nodes are green dots, internal nodes
// orange. Highlighted paths are red polylines threaded through the arms they
// traverse; leftover loops are dashed blue. Output depends only on the
// arguments, so identical inputs give identical bytes.

struct svg_options {
  double scale = 72.0;   // pixels per lattice unit
  double margin = 36.0;  // border around the lattice bounding box
  bool draw_nodes = true;
};

// highlight == nullptr draws the mesh alone.
std::string render_mesh_svg(const mesh_graph& mesh, const configuration& config,
                            const trace_result* highlight = nullptr,
                            const svg_options& opt = {});

}  // namespace ppmesh

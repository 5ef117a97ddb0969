#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace cuspfield {

/// One end of an arc, attached to a crossing at one of its four slots.
/// Slots are numbered counterclockwise with slot 0 the incoming under-strand
/// (planar-diagram convention), so slots 0/2 carry the under-strand and 1/3
/// the over-strand.
struct arc_end {
    int crossing = -1;
    int slot = -1;

    friend bool operator==(const arc_end& a, const arc_end& b) {
        return a.crossing == b.crossing && a.slot == b.slot;
    }
};

struct crossing_rec {
    int id = -1;
    std::array<int, 4> arcs{-1, -1, -1, -1}; // arc id per slot
    int over_in_slot = -1;                   // 1 or 3
    int sign = 0;                            // +1 / -1 from strand orientations
};

struct arc_rec {
    int id = -1;
    arc_end tail, head; // directed tail -> head along the link orientation
    int component = -1;
};

/// One step of a region boundary walk: an arc traversed in a definite
/// direction, followed by the corner crossing where the walk turns.
struct face_edge {
    int arc = -1;
    bool forward = true; // traversal agrees with the arc direction
    int corner = -1;     // crossing after this edge
};

struct region_rec {
    int id = -1;
    std::vector<face_edge> edges;
    int sides() const { return static_cast<int>(edges.size()); }
};

/// Combinatorial planar link diagram: 4-valent rotation system with
/// over/under data, oriented components, and the face list. For a connected
/// diagram with n crossings there are 2n arcs and n+2 regions.
struct link_diagram {
    std::vector<crossing_rec> crossings;
    std::vector<arc_rec> arcs;
    std::vector<region_rec> regions;
    int num_components = 0;

    // corner_region[c][k] = region at the corner of crossing c between
    // slots k and k+1 (mod 4)
    std::vector<std::array<int, 4>> corner_region;

    // Populated by from_two_bridge: crossing ids per twist group, leftmost
    // group first. Empty for other constructions.
    std::vector<std::vector<int>> twist_crossings;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
    int num_arcs() const { return static_cast<int>(arcs.size()); }
    int num_regions() const { return static_cast<int>(regions.size()); }

    /// True when the given arc end passes over its crossing.
    bool end_is_over(const arc_end& e) const { return e.slot == 1 || e.slot == 3; }
};

/// Two-bridge normal form: fraction alpha/beta (canonicalized to
/// beta <= alpha/2, which fixes the mirror) and its all-positive continued
/// fraction expansion.
struct two_bridge_form {
    long alpha = 0;
    long beta = 0;
    std::vector<long> twists;
};

/// All-positive continued fraction [m1,...,mk] with
/// alpha/beta = m1 + 1/(m2 + 1/(... + 1/mk)).
std::vector<long> continued_fraction(long alpha, long beta);

link_diagram parse_pd(const std::string& text);
link_diagram parse_dt(const std::string& text);
link_diagram from_braid(const std::string& word, int repeat);
std::pair<two_bridge_form, link_diagram> from_two_bridge(long alpha, long beta);

const std::vector<region_rec>& regions(const link_diagram& d);
bool is_alternating(const link_diagram& d);
bool is_reduced(const link_diagram& d);

/// PD text with arcs renumbered canonically along each component.
std::string to_pd_text(const link_diagram& d);

} // namespace cuspfield

#include "cuspfield/diagram.hpp"
#include "cuspfield/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace cuspfield {

namespace {

// ---------------------------------------------------------------------------
// shared finalization: faces, connectivity, Euler check, signs

void check_connected(link_diagram& d, const std::string& where) {
    int n = d.num_crossings();
    if (n == 0) throw error(errc::malformed_input, where, "empty diagram");
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int s = 0; s < 4; ++s) {
            const arc_rec& a = d.arcs[d.crossings[c].arcs[s]];
            for (const arc_end* e : {&a.tail, &a.head}) {
                if (e->crossing >= 0 && !seen[e->crossing]) {
                    seen[e->crossing] = 1;
                    ++count;
                    q.push(e->crossing);
                }
            }
        }
    }
    if (count != n)
        throw error(errc::disconnected_diagram, where, "diagram has a split component");
}

// Orbits of the rotation-system successor map. Walking an arc we arrive at a
// crossing through slot s and leave through slot (s+3)%4, which sweeps the
// corner between slots (s+3)%4 and s.
void build_faces(link_diagram& d, const std::string& where) {
    int n = d.num_crossings();
    int m = d.num_arcs();
    d.regions.clear();
    d.corner_region.assign(n, {-1, -1, -1, -1});
    // directed edge index: 2*arc + (forward ? 0 : 1)
    std::vector<char> visited(2 * m, 0);
    for (int start = 0; start < 2 * m; ++start) {
        if (visited[start]) continue;
        region_rec face;
        face.id = static_cast<int>(d.regions.size());
        int cur = start;
        do {
            visited[cur] = 1;
            int arc = cur / 2;
            bool forward = (cur % 2) == 0;
            const arc_end& e = forward ? d.arcs[arc].head : d.arcs[arc].tail;
            int c = e.crossing;
            int exit = (e.slot + 3) % 4;
            if (d.corner_region[c][exit] != -1)
                throw error(errc::inconsistent_diagram, where, "corner visited twice");
            d.corner_region[c][exit] = face.id;
            face.edges.push_back({arc, forward, c});
            int next_arc = d.crossings[c].arcs[exit];
            bool next_forward = (d.arcs[next_arc].tail == arc_end{c, exit});
            if (!next_forward && !(d.arcs[next_arc].head == arc_end{c, exit}))
                throw error(errc::inconsistent_diagram, where, "arc endpoints disagree with slots");
            cur = 2 * next_arc + (next_forward ? 0 : 1);
        } while (cur != start);
        d.regions.push_back(std::move(face));
    }
    if (d.num_regions() != n + 2)
        throw error(errc::inconsistent_diagram, where,
                    "rotation system is not planar: " + std::to_string(d.num_regions()) +
                        " faces for " + std::to_string(n) + " crossings");
}

// Validates mutual consistency of slots and arc endpoints, derives over_in
// slots and crossing signs, assigns component ids, computes faces.
void finalize(link_diagram& d, const std::string& where) {
    int n = d.num_crossings();
    int m = d.num_arcs();
    if (m != 2 * n)
        throw error(errc::inconsistent_diagram, where, "arc count is not twice the crossing count");

    // endpoints must tile the slots exactly
    std::vector<std::array<char, 4>> filled(n, {0, 0, 0, 0});
    for (const arc_rec& a : d.arcs) {
        for (const arc_end* e : {&a.tail, &a.head}) {
            if (e->crossing < 0 || e->crossing >= n || e->slot < 0 || e->slot > 3)
                throw error(errc::inconsistent_diagram, where, "dangling arc end");
            if (filled[e->crossing][e->slot]++)
                throw error(errc::inconsistent_diagram, where, "slot used twice");
            if (d.crossings[e->crossing].arcs[e->slot] != a.id)
                throw error(errc::inconsistent_diagram, where, "slot/arc mismatch");
        }
    }

    for (crossing_rec& c : d.crossings) {
        const arc_rec& under_in = d.arcs[c.arcs[0]];
        const arc_rec& under_out = d.arcs[c.arcs[2]];
        if (!(under_in.head == arc_end{c.id, 0}))
            throw error(errc::inconsistent_diagram, where,
                        "slot 0 of crossing " + std::to_string(c.id) + " is not an incoming strand");
        if (!(under_out.tail == arc_end{c.id, 2}))
            throw error(errc::inconsistent_diagram, where,
                        "slot 2 of crossing " + std::to_string(c.id) + " is not an outgoing strand");
        bool in1 = d.arcs[c.arcs[1]].head == arc_end{c.id, 1};
        bool in3 = d.arcs[c.arcs[3]].head == arc_end{c.id, 3};
        if (in1 == in3)
            throw error(errc::inconsistent_diagram, where,
                        "over strand of crossing " + std::to_string(c.id) + " has no consistent direction");
        c.over_in_slot = in1 ? 1 : 3;
        c.sign = (c.over_in_slot == 1) ? +1 : -1;
    }

    check_connected(d, where);

    // component ids via strand walks, in order of the smallest arc id
    for (arc_rec& a : d.arcs) a.component = -1;
    int comp = 0;
    for (int a0 = 0; a0 < m; ++a0) {
        if (d.arcs[a0].component >= 0) continue;
        int a = a0;
        while (d.arcs[a].component < 0) {
            d.arcs[a].component = comp;
            const arc_end& h = d.arcs[a].head;
            int exit = (h.slot + 2) % 4;
            a = d.crossings[h.crossing].arcs[exit];
        }
        ++comp;
    }
    d.num_components = comp;

    build_faces(d, where);
}

// ---------------------------------------------------------------------------
// proto diagrams: 4-valent projections whose rotation is known but whose
// slot 0 (and possibly over/under and orientations) is not yet fixed.

struct placement {
    int crossing = -1;
    int pos = -1; // position in the counterclockwise cycle, strand mates opposite
};

struct proto_diagram {
    // cyc[c][pos] = arc id; the strand passes occupy {0,2} and {1,3}
    std::vector<std::array<int, 4>> cyc;
    std::vector<std::vector<placement>> arc_ends; // up to 2 per arc

    int new_arc() {
        arc_ends.emplace_back();
        return static_cast<int>(arc_ends.size()) - 1;
    }
    void attach(int arc, int crossing, int pos) {
        cyc[crossing][pos] = arc;
        arc_ends[arc].push_back({crossing, pos});
    }
    int new_crossing() {
        cyc.push_back({-1, -1, -1, -1});
        return static_cast<int>(cyc.size()) - 1;
    }
};

// Orient all strands: deterministic direction choice per component, then
// 2-color the passes so that over/under alternates, then rotate each cycle so
// that the under-strand enters at slot 0.
link_diagram realize_alternating(proto_diagram& p, const std::string& where) {
    int n = static_cast<int>(p.cyc.size());
    int m = static_cast<int>(p.arc_ends.size());
    if (m != 2 * n) throw error(errc::inconsistent_diagram, where, "bad proto arc count");
    for (auto& ends : p.arc_ends)
        if (ends.size() != 2) throw error(errc::inconsistent_diagram, where, "dangling proto arc");

    // directions: tail_end_index[a] in {0,1}
    std::vector<int> tail_end(m, -1);
    for (int a0 = 0; a0 < m; ++a0) {
        if (tail_end[a0] >= 0) continue;
        tail_end[a0] = 0;
        int a = a0;
        int head_idx = 1;
        for (;;) {
            placement h = p.arc_ends[a][head_idx];
            int exit = (h.pos + 2) % 4;
            int b = p.cyc[h.crossing][exit];
            int b_tail = (p.arc_ends[b][0].crossing == h.crossing && p.arc_ends[b][0].pos == exit) ? 0 : 1;
            if (tail_end[b] >= 0) {
                if (tail_end[b] != b_tail)
                    throw error(errc::inconsistent_diagram, where, "orientation conflict");
                break;
            }
            tail_end[b] = b_tail;
            a = b;
            head_idx = 1 - b_tail;
        }
    }

    // alternation: color passes (crossing, pos%2); true = over
    std::vector<std::array<int, 2>> color(n, {-1, -1});
    for (int c0 = 0; c0 < n; ++c0) {
        for (int p0 = 0; p0 < 2; ++p0) {
            if (color[c0][p0] >= 0) continue;
            color[c0][p0] = 1;
            std::queue<std::pair<int, int>> q;
            q.push({c0, p0});
            while (!q.empty()) {
                auto [c, pp] = q.front();
                q.pop();
                auto propagate = [&](int c2, int p2, int col) {
                    if (color[c2][p2] < 0) {
                        color[c2][p2] = col;
                        q.push({c2, p2});
                    } else if (color[c2][p2] != col) {
                        throw error(errc::inconsistent_diagram, where,
                                    "projection admits no alternating assignment");
                    }
                };
                propagate(c, 1 - pp, 1 - color[c][pp]);
                // consecutive passes along each strand through this pass alternate
                for (int pos : {pp, pp + 2}) {
                    int a = p.cyc[c][pos];
                    const auto& ends = p.arc_ends[a];
                    placement other = (ends[0].crossing == c && ends[0].pos == pos) ? ends[1] : ends[0];
                    propagate(other.crossing, other.pos % 2, 1 - color[c][pp]);
                }
            }
        }
    }

    link_diagram d;
    d.crossings.resize(n);
    d.arcs.resize(m);
    std::vector<int> rot(n, 0);
    for (int c = 0; c < n; ++c) {
        int under_pass = color[c][0] ? 1 : 0;
        // the under pass's incoming end must land on slot 0
        int r = -1;
        for (int pos : {under_pass, under_pass + 2}) {
            int a = p.cyc[c][pos];
            int head_idx = 1 - tail_end[a];
            if (p.arc_ends[a][head_idx].crossing == c && p.arc_ends[a][head_idx].pos == pos) {
                r = pos;
                break;
            }
        }
        if (r < 0) throw error(errc::inconsistent_diagram, where, "under strand has no incoming end");
        rot[c] = r;
        d.crossings[c].id = c;
        for (int j = 0; j < 4; ++j) d.crossings[c].arcs[j] = p.cyc[c][(r + j) % 4];
    }
    for (int a = 0; a < m; ++a) {
        d.arcs[a].id = a;
        placement t = p.arc_ends[a][tail_end[a]];
        placement h = p.arc_ends[a][1 - tail_end[a]];
        d.arcs[a].tail = {t.crossing, (t.pos - rot[t.crossing] + 4) % 4};
        d.arcs[a].head = {h.crossing, (h.pos - rot[h.crossing] + 4) % 4};
    }
    finalize(d, where);
    return d;
}

} // namespace

// ---------------------------------------------------------------------------
// continued fractions

std::vector<long> continued_fraction(long alpha, long beta) {
    const std::string where = "twobridge.continued_fraction";
    if (alpha < 2 || beta < 1 || beta >= alpha)
        throw error(errc::invalid_fraction, where, "need 0 < beta < alpha with alpha >= 2");
    if (std::gcd(alpha, beta) != 1)
        throw error(errc::invalid_fraction, where, "alpha and beta are not coprime");
    std::vector<long> terms;
    long a = alpha, b = beta;
    while (b != 0) {
        terms.push_back(a / b);
        long r = a % b;
        a = b;
        b = r;
    }
    return terms;
}

// ---------------------------------------------------------------------------
// PD codes

namespace {

struct pd_token {
    std::array<long, 4> labels;
    size_t offset;
};

std::vector<pd_token> pd_tokenize(const std::string& text) {
    const std::string where = "diagram.parse_pd";
    std::vector<pd_token> out;
    size_t i = 0;
    auto fail = [&](size_t at, const std::string& msg) {
        throw error(errc::malformed_input, where, msg + " at offset " + std::to_string(at));
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        size_t start = i;
        if (text[i] != 'X' && text[i] != 'x') fail(i, "expected 'X'");
        ++i;
        if (i >= text.size() || text[i] != '[') fail(i, "expected '['");
        ++i;
        pd_token tok;
        tok.offset = start;
        for (int k = 0; k < 4; ++k) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            size_t numstart = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == numstart) fail(i, "expected arc label");
            tok.labels[k] = std::stol(text.substr(numstart, i - numstart));
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (k < 3) {
                if (i >= text.size() || text[i] != ',') fail(i, "expected ','");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ']') fail(i, "expected ']'");
        ++i;
        out.push_back(tok);
    }
    if (out.empty()) throw error(errc::malformed_input, where, "no crossings in input");
    return out;
}

} // namespace

link_diagram parse_pd(const std::string& text) {
    const std::string where = "diagram.parse_pd";
    std::vector<pd_token> toks = pd_tokenize(text);
    int n = static_cast<int>(toks.size());

    // map labels to dense arc ids in sorted label order
    std::map<long, int> label_count;
    for (const auto& t : toks)
        for (long l : t.labels) ++label_count[l];
    for (const auto& [l, cnt] : label_count)
        if (cnt != 2)
            throw error(errc::inconsistent_diagram, where,
                        "arc label " + std::to_string(l) + " appears " + std::to_string(cnt) +
                            " times (expected 2)");
    std::map<long, int> label_id;
    for (const auto& [l, cnt] : label_count) label_id.emplace(l, static_cast<int>(label_id.size()));

    link_diagram d;
    d.crossings.resize(n);
    d.arcs.resize(2 * n);
    std::vector<std::vector<arc_end>> ends(2 * n);
    for (int c = 0; c < n; ++c) {
        d.crossings[c].id = c;
        for (int s = 0; s < 4; ++s) {
            int a = label_id[toks[c].labels[s]];
            d.crossings[c].arcs[s] = a;
            ends[a].push_back({c, s});
        }
    }
    for (int a = 0; a < 2 * n; ++a) {
        d.arcs[a].id = a;
        if (ends[a].size() != 2)
            throw error(errc::inconsistent_diagram, where, "arc with both ends at one slot");
    }

    // orient components: slot 0 forces a head, slot 2 a tail, over slots are
    // fixed by walking the strand
    std::vector<int> head_end(2 * n, -1); // which of ends[a] is the head
    auto set_head = [&](int a, int which) {
        if (head_end[a] >= 0) {
            if (head_end[a] != which)
                throw error(errc::inconsistent_diagram, where,
                            "orientation conflict on arc " + std::to_string(a));
            return false;
        }
        head_end[a] = which;
        return true;
    };
    for (int a0 = 0; a0 < 2 * n; ++a0) {
        if (head_end[a0] >= 0) continue;
        int start_head;
        if (ends[a0][0].slot == 0)
            start_head = 0;
        else if (ends[a0][1].slot == 0)
            start_head = 1;
        else if (ends[a0][0].slot == 2)
            start_head = 1;
        else if (ends[a0][1].slot == 2)
            start_head = 0;
        else
            start_head = 1;
        set_head(a0, start_head);
        int a = a0;
        for (;;) {
            arc_end h = ends[a][head_end[a]];
            int exit = (h.slot + 2) % 4;
            if (exit == 0)
                throw error(errc::inconsistent_diagram, where,
                            "strand leaves through an incoming under slot");
            int b = d.crossings[h.crossing].arcs[exit];
            int b_tail = (ends[b][0] == arc_end{h.crossing, exit}) ? 0 : 1;
            if (!set_head(b, 1 - b_tail)) break;
            a = b;
        }
    }
    for (int a = 0; a < 2 * n; ++a) {
        d.arcs[a].tail = ends[a][1 - head_end[a]];
        d.arcs[a].head = ends[a][head_end[a]];
    }
    finalize(d, where);
    return d;
}

std::string to_pd_text(const link_diagram& d) {
    int m = d.num_arcs();
    std::vector<long> label(m, 0);
    long next = 1;
    std::vector<char> done(m, 0);
    for (int a0 = 0; a0 < m; ++a0) {
        if (done[a0]) continue;
        int a = a0;
        while (!done[a]) {
            done[a] = 1;
            label[a] = next++;
            const arc_end& h = d.arcs[a].head;
            a = d.crossings[h.crossing].arcs[(h.slot + 2) % 4];
        }
    }
    std::ostringstream out;
    for (int c = 0; c < d.num_crossings(); ++c) {
        if (c) out << ' ';
        out << "X[";
        for (int s = 0; s < 4; ++s) {
            if (s) out << ',';
            out << label[d.crossings[c].arcs[s]];
        }
        out << ']';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// DT codes

link_diagram parse_dt(const std::string& text) {
    const std::string where = "diagram.parse_dt";
    std::vector<long> code;
    {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            try {
                size_t used = 0;
                long v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                code.push_back(v);
            } catch (const std::exception&) {
                throw error(errc::malformed_input, where, "not an integer: '" + tok + "'");
            }
        }
    }
    if (code.empty()) throw error(errc::malformed_input, where, "empty code");
    int n = static_cast<int>(code.size());
    if (n > 20)
        throw error(errc::invalid_dt_realization, where,
                    "realization search supports at most 20 crossings");
    std::vector<char> seen(2 * n + 1, 0);
    for (long v : code) {
        long a = std::labs(v);
        if (v == 0 || a % 2 != 0)
            throw error(errc::malformed_input, where, "entries must be nonzero even integers");
        if (a > 2 * n || seen[a])
            throw error(errc::malformed_input, where, "even labels must cover 2..2n once each");
        seen[a] = 1;
    }

    // positions 1..2n walk the knot; position 2i-1 and |code[i-1]| meet at crossing i-1
    std::vector<int> crossing_at(2 * n + 1, -1);
    std::vector<char> pos_under(2 * n + 1, 0);
    for (int i = 0; i < n; ++i) {
        long even = std::labs(code[i]);
        crossing_at[2 * i + 1] = i;
        crossing_at[even] = i;
        // positive entry: the odd position passes under
        pos_under[2 * i + 1] = code[i] > 0;
        pos_under[even] = code[i] < 0;
    }

    // arc p runs from position p to position p+1 (cyclic); chirality of the
    // over strand at each crossing is a free bit, search for a planar pick
    auto pos_next = [&](int p) { return p == 2 * n ? 1 : p + 1; };
    auto pos_prev = [&](int p) { return p == 1 ? 2 * n : p - 1; };

    for (long mask = 0; mask < (1L << n); ++mask) {
        link_diagram d;
        d.crossings.resize(n);
        d.arcs.resize(2 * n);
        for (int i = 0; i < n; ++i) d.crossings[i].id = i;
        for (int p = 1; p <= 2 * n; ++p) d.arcs[p - 1].id = p - 1;
        for (int p = 1; p <= 2 * n; ++p) {
            int c = crossing_at[p];
            int slot_in, slot_out;
            if (pos_under[p]) {
                slot_in = 0;
                slot_out = 2;
            } else if ((mask >> c) & 1) {
                slot_in = 1;
                slot_out = 3;
            } else {
                slot_in = 3;
                slot_out = 1;
            }
            d.arcs[pos_prev(p) - 1].head = {c, slot_in};
            d.arcs[p - 1].tail = {c, slot_out};
            d.crossings[c].arcs[slot_in] = pos_prev(p) - 1;
            d.crossings[c].arcs[slot_out] = p - 1;
        }
        try {
            finalize(d, where);
            return d;
        } catch (const error&) {
            continue;
        }
    }
    throw error(errc::invalid_dt_realization, where, "code is not realizable as a planar diagram");
}

// ---------------------------------------------------------------------------
// braid closures

link_diagram from_braid(const std::string& word, int repeat) {
    const std::string where = "diagram.from_braid";
    if (word.empty()) throw error(errc::malformed_input, where, "empty braid word");
    if (repeat < 1) throw error(errc::malformed_input, where, "repeat must be positive");
    int strands = 0;
    for (char ch : word) {
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            throw error(errc::malformed_input, where, std::string("bad letter '") + ch + "'");
        int idx = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
        strands = std::max(strands, idx + 1);
    }

    link_diagram d;
    struct half_arc {
        arc_end tail, head;
    };
    std::vector<half_arc> arcs;
    auto new_arc = [&]() {
        arcs.push_back({});
        return static_cast<int>(arcs.size()) - 1;
    };
    std::vector<int> initial(strands + 1), current(strands + 1);
    for (int s = 1; s <= strands; ++s) initial[s] = current[s] = new_arc();

    for (int r = 0; r < repeat; ++r) {
        for (char ch : word) {
            bool lower = std::islower(static_cast<unsigned char>(ch));
            int i = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
            int c = static_cast<int>(d.crossings.size());
            d.crossings.push_back({});
            d.crossings[c].id = c;
            int A = current[i], B = current[i + 1];
            int L = new_arc(), R = new_arc();
            // strands run downward; the left strand passes over for a
            // lowercase letter and under for an uppercase one
            if (lower) {
                d.crossings[c].arcs = {B, A, L, R};
                arcs[B].head = {c, 0};
                arcs[A].head = {c, 1};
                arcs[L].tail = {c, 2};
                arcs[R].tail = {c, 3};
            } else {
                d.crossings[c].arcs = {A, L, R, B};
                arcs[A].head = {c, 0};
                arcs[L].tail = {c, 1};
                arcs[R].tail = {c, 2};
                arcs[B].head = {c, 3};
            }
            current[i] = L;
            current[i + 1] = R;
        }
    }

    // plat the braid closed: the dangling bottom arc continues into the
    // dangling top arc of the same strand position
    std::vector<int> remap(arcs.size());
    std::iota(remap.begin(), remap.end(), 0);
    for (int s = 1; s <= strands; ++s) {
        int bottom = current[s], top = initial[s];
        if (bottom == top)
            throw error(errc::disconnected_diagram, where,
                        "strand " + std::to_string(s) + " closes into a split unknot");
        arcs[top].tail = arcs[bottom].tail;
        remap[bottom] = top;
    }
    std::vector<int> dense(arcs.size(), -1);
    int next_id = 0;
    for (size_t a = 0; a < arcs.size(); ++a)
        if (remap[a] == static_cast<int>(a)) dense[a] = next_id++;
    d.arcs.resize(next_id);
    for (size_t a = 0; a < arcs.size(); ++a) {
        if (remap[a] != static_cast<int>(a)) continue;
        int id = dense[a];
        d.arcs[id].id = id;
        d.arcs[id].tail = arcs[a].tail;
        d.arcs[id].head = arcs[a].head;
    }
    for (crossing_rec& c : d.crossings)
        for (int s = 0; s < 4; ++s) c.arcs[s] = dense[remap[c.arcs[s]]];
    finalize(d, where);
    return d;
}

// ---------------------------------------------------------------------------
// two-bridge standard alternating diagrams

std::pair<two_bridge_form, link_diagram> from_two_bridge(long alpha, long beta) {
    const std::string where = "diagram.from_two_bridge";
    if (alpha < 2 || beta < 1 || beta >= alpha)
        throw error(errc::invalid_fraction, where, "need 0 < beta < alpha");
    if (std::gcd(alpha, beta) != 1)
        throw error(errc::invalid_fraction, where, "alpha and beta are not coprime");
    // mirror canonicalization: the trace field is unchanged under conjugation
    if (2 * beta > alpha) beta = alpha - beta;

    two_bridge_form form;
    form.alpha = alpha;
    form.beta = beta;
    form.twists = continued_fraction(alpha, beta);
    const auto& m = form.twists;
    int k = static_cast<int>(m.size());

    proto_diagram p;
    int top = p.new_arc(), bottom = p.new_arc();
    int nw = top, ne = top, sw = bottom, se = bottom;
    std::vector<std::vector<int>> groups(k);
    // innermost twist group first: a row of horizontal twists, then
    // alternately vertical (bottom) and horizontal (right) groups
    for (int idx = k - 1; idx >= 0; --idx) {
        bool right = ((k - 1 - idx) % 2) == 0;
        for (long t = 0; t < m[idx]; ++t) {
            int c = p.new_crossing();
            groups[idx].push_back(c);
            if (right) {
                p.attach(ne, c, 1);
                p.attach(se, c, 2);
                ne = p.new_arc();
                se = p.new_arc();
                p.attach(ne, c, 0);
                p.attach(se, c, 3);
            } else {
                p.attach(sw, c, 1);
                p.attach(se, c, 0);
                sw = p.new_arc();
                se = p.new_arc();
                p.attach(sw, c, 2);
                p.attach(se, c, 3);
            }
        }
    }
    // close the tangle: when the outermost group is a horizontal row (k odd)
    // the numerator closure joins top to top and bottom to bottom; when it is
    // a vertical stack (k even) the denominator closure joins the sides, so
    // that the closing arcs never cap a single crossing into a monogon
    std::array<std::pair<int, int>, 2> joins = (k % 2 == 1)
        ? std::array<std::pair<int, int>, 2>{std::pair{nw, ne}, std::pair{sw, se}}
        : std::array<std::pair<int, int>, 2>{std::pair{nw, sw}, std::pair{ne, se}};
    for (auto [x, y] : joins) {
        if (x == y)
            throw error(errc::inconsistent_diagram, where, "closure creates a crossingless circle");
        // merge arc y into arc x
        for (placement pl : p.arc_ends[y]) {
            p.cyc[pl.crossing][pl.pos] = x;
            p.arc_ends[x].push_back(pl);
        }
        p.arc_ends[y].clear();
    }
    // compact arc ids
    std::vector<int> dense(p.arc_ends.size(), -1);
    int next_id = 0;
    for (size_t a = 0; a < p.arc_ends.size(); ++a)
        if (!p.arc_ends[a].empty()) dense[a] = next_id++;
    proto_diagram q;
    q.cyc = p.cyc;
    q.arc_ends.resize(next_id);
    for (size_t a = 0; a < p.arc_ends.size(); ++a)
        if (dense[a] >= 0) q.arc_ends[dense[a]] = p.arc_ends[a];
    for (auto& cyc : q.cyc)
        for (int& a : cyc) a = dense[a];

    link_diagram d = realize_alternating(q, where);
    d.twist_crossings = groups;
    return {form, d};
}

// ---------------------------------------------------------------------------
// predicates

const std::vector<region_rec>& regions(const link_diagram& d) { return d.regions; }

bool is_alternating(const link_diagram& d) {
    for (const arc_rec& a : d.arcs)
        if (d.end_is_over(a.tail) == d.end_is_over(a.head)) return false;
    return true;
}

bool is_reduced(const link_diagram& d) {
    for (const crossing_rec& c : d.crossings) {
        const auto& corners = d.corner_region[c.id];
        if (corners[0] == corners[2] || corners[1] == corners[3]) return false;
    }
    return true;
}

} // namespace cuspfield

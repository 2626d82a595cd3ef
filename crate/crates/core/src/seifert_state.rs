//! Seifert's algorithm, done combinatorially.
//!
//! Smoothing every crossing along the orientation gives the Seifert circles.
//! The Seifert graph has a vertex per circle and a signed edge per crossing;
//! for each circle we also keep the order in which it meets its crossings,
//! which is the cyclic order of band attachments around the capping disk.
//! Blocks (biconnected components) of the graph are the Murasugi-sum
//! factors of the Seifert surface.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pd::{CrossingSign, PlanarDiagram, Slot};

/// One passage of a circle through a crossing: the circle arrives along
/// `arc`, which enters `crossing` through `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Visit {
    pub arc: u32,
    pub crossing: usize,
    pub slot: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertCircle {
    pub id: usize,
    pub visits: Vec<Visit>,
}

impl SeifertCircle {
    pub fn arcs(&self) -> impl Iterator<Item = u32> + '_ {
        self.visits.iter().map(|v| v.arc)
    }
}

/// Arc that continues `arc` after the oriented smoothing of its head crossing.
fn smoothed_successor(d: &PlanarDiagram, arc: u32) -> (usize, Slot, u32) {
    let (x, slot) = d.arc_ends(arc).head;
    let out = match (d.over_entry(x), slot) {
        // over-strand enters at 1 and leaves at 3
        (1, 0) => 3,
        (1, _) => 2,
        // over-strand enters at 3 and leaves at 1
        (_, 0) => 1,
        (_, _) => 2,
    };
    (x, slot, d.label_at(x, out))
}

/// Seifert circles, numbered in order of their smallest arc label.
pub fn seifert_smooth(d: &PlanarDiagram) -> Vec<SeifertCircle> {
    if d.crossing_count() == 0 {
        return vec![SeifertCircle {
            id: 0,
            visits: vec![],
        }];
    }
    let n = d.arc_count();
    let mut seen = vec![false; n + 1];
    let mut circles = vec![];
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut visits = vec![];
        let mut arc = start;
        while !seen[arc as usize] {
            seen[arc as usize] = true;
            let (crossing, slot, next) = smoothed_successor(d, arc);
            visits.push(Visit {
                arc,
                crossing,
                slot,
            });
            arc = next;
        }
        circles.push(SeifertCircle {
            id: circles.len(),
            visits,
        });
    }
    circles
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertEdge {
    pub crossing: usize,
    /// endpoint circles, lower id first
    pub ends: [usize; 2],
    pub sign: CrossingSign,
    /// the end circle that has the band on its left, looking along its
    /// orientation; the other end has the band on its right
    pub sees_left: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertGraph {
    pub vertex_count: usize,
    /// one edge per crossing, in crossing order
    pub edges: Vec<SeifertEdge>,
    /// per circle, the crossings it meets in order along its orientation
    pub rotation: Vec<Vec<usize>>,
}

impl SeifertGraph {
    pub fn edge(&self, crossing: usize) -> &SeifertEdge {
        &self.edges[crossing]
    }

    /// Position of `crossing` in the rotation at circle `v`.
    pub fn rotation_position(&self, v: usize, crossing: usize) -> usize {
        self.rotation[v]
            .iter()
            .position(|&x| x == crossing)
            .expect("edge is incident to the circle")
    }

    pub fn unsigned(&self) -> Vec<(usize, [usize; 2])> {
        self.edges.iter().map(|e| (e.crossing, e.ends)).collect()
    }
}

pub fn build_seifert_graph(d: &PlanarDiagram) -> SeifertGraph {
    let circles = seifert_smooth(d);
    let mut circle_of = vec![0usize; d.arc_count() + 1];
    for c in &circles {
        for a in c.arcs() {
            circle_of[a as usize] = c.id;
        }
    }
    let edges = d
        .crossings()
        .iter()
        .map(|x| {
            // u carries the incoming under-strand. Slots run counterclockwise,
            // so if the over-strand enters at slot 1 the two smoothed strands
            // are 0→3 and 1→2, and the second lies to the right of the first.
            let u = circle_of[x.arcs[0] as usize];
            let v = circle_of[x.arcs[d.over_entry(x.id) as usize] as usize];
            SeifertEdge {
                crossing: x.id,
                ends: [u.min(v), u.max(v)],
                sign: d.crossing_sign(x.id).unwrap(),
                sees_left: if d.over_entry(x.id) == 1 { v } else { u },
            }
        })
        .collect();
    let rotation = circles
        .iter()
        .map(|c| c.visits.iter().map(|v| v.crossing).collect())
        .collect();
    SeifertGraph {
        vertex_count: circles.len(),
        edges,
        rotation,
    }
}

/// First Betti number of the Seifert surface, `c - s + 1`.
pub fn betti_first(g: &SeifertGraph) -> usize {
    g.edges.len() + 1 - g.vertex_count
}

/// Genus of the Seifert-algorithm surface of a knot diagram.
pub fn genus_of_surface(d: &PlanarDiagram) -> Result<usize> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(
            "surface genus (use betti_first for links)",
            d.component_count(),
        ));
    }
    let b = betti_first(&build_seifert_graph(d));
    debug_assert!(
        b.is_multiple_of(2),
        "knot surfaces have even first Betti number"
    );
    Ok(b / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// crossing ids, ascending
    pub edges: Vec<usize>,
    /// circle ids, ascending
    pub vertices: Vec<usize>,
    pub uniform_sign: Option<CrossingSign>,
    pub is_special_alternating: bool,
}

impl Block {
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// ordered by smallest crossing id
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected components of the (multi)graph, via Tarjan's edge-stack DFS.
pub fn block_decompose(g: &SeifertGraph) -> BlockDecomposition {
    let n = g.vertex_count;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![vec![]; n];
    for e in &g.edges {
        adj[e.ends[0]].push((e.ends[1], e.crossing));
        adj[e.ends[1]].push((e.ends[0], e.crossing));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = vec![];
    let mut edge_sets: Vec<Vec<usize>> = vec![];
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // frames: (vertex, edge used to reach it, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&(v, via, idx)) = stack.last() {
            if idx < adj[v].len() {
                let (w, e) = adj[v][idx];
                stack.last_mut().unwrap().2 += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut set = vec![];
                        while let Some(e) = edge_stack.pop() {
                            set.push(e);
                            if e == via {
                                break;
                            }
                        }
                        edge_sets.push(set);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks: Vec<Block> = edge_sets
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&e| g.edges[e].ends).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let first = g.edges[edges[0]].sign;
            let uniform_sign = edges
                .iter()
                .all(|&e| g.edges[e].sign == first)
                .then_some(first);
            Block {
                edges,
                vertices,
                uniform_sign,
                is_special_alternating: uniform_sign.is_some(),
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub alternating: bool,
    pub homogeneous: bool,
    pub special: bool,
    pub blocks: Vec<BlockTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockTag {
    pub uniform_sign: Option<CrossingSign>,
    pub is_special_alternating: bool,
}

pub fn classify_diagram(d: &PlanarDiagram) -> Classification {
    let blocks = block_decompose(&build_seifert_graph(d)).blocks;
    Classification {
        alternating: d.is_alternating(),
        homogeneous: blocks.iter().all(|b| b.uniform_sign.is_some()),
        special: blocks.len() <= 1,
        blocks: blocks
            .iter()
            .map(|b| BlockTag {
                uniform_sign: b.uniform_sign,
                is_special_alternating: b.is_special_alternating,
            })
            .collect(),
    }
}

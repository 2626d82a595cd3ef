//! Seifert matrices of the Seifert-algorithm surface, one per block of the
//! Seifert graph.
//!
//! Within a block the surface is a set of disjoint disks joined by
//! half-twisted bands, and `H_1` has a basis of fundamental cycles of a
//! spanning tree. The Seifert matrix splits as `V = (S + J) / 2`:
//!
//! * `S = V + V^T` is local to the bands: a band of sign `ε` traversed by
//!   cycles `i` and `j` contributes `ε` when they run the same way and `-ε`
//!   otherwise.
//! * `J = V - V^T` is the algebraic intersection form of the basis curves.
//!   Curves are parallel inside bands and meet only inside disks, where each
//!   passage is a chord between two band attachments; chords cross exactly
//!   when their endpoints interleave around the circle.
//!
//! Since the global matrix is block triangular in a basis adapted to the
//! blocks, the off-diagonal blocks are never needed: determinants and
//! `det(V - tV^T)` are products over the blocks.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{signum, BigJson, IntMatrix};
use crate::pd::{CrossingSign, PlanarDiagram, UnionFind};
use crate::seifert_state::{block_decompose, build_seifert_graph, Block, SeifertGraph};

/// One traversal of a band: along the edge of `crossing`, from circle `from`
/// to circle `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub crossing: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    pub tree: Vec<usize>,
    /// closed walks; each starts with its non-tree edge
    pub cycles: Vec<Vec<Step>>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Fundamental cycles of the spanning tree grown greedily in crossing order.
/// Each cycle runs along its non-tree edge from the lower-numbered circle,
/// then back through the tree.
pub fn cycle_basis(g: &SeifertGraph, block: &Block) -> CycleBasis {
    let mut uf = UnionFind::new(g.vertex_count);
    let mut tree = vec![];
    let mut chords = vec![];
    for &e in &block.edges {
        let [u, v] = g.edge(e).ends;
        if uf.union(u, v) {
            tree.push(e);
        } else {
            chords.push(e);
        }
    }
    let mut tree_adj: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &e in &tree {
        let [u, v] = g.edge(e).ends;
        tree_adj.entry(u).or_default().push((v, e));
        tree_adj.entry(v).or_default().push((u, e));
    }
    let cycles = chords
        .iter()
        .map(|&e| {
            let [u, v] = g.edge(e).ends;
            let mut walk = vec![Step {
                crossing: e,
                from: u,
                to: v,
            }];
            walk.extend(tree_path(&tree_adj, v, u));
            walk
        })
        .collect();
    CycleBasis { tree, cycles }
}

fn tree_path(adj: &BTreeMap<usize, Vec<(usize, usize)>>, from: usize, to: usize) -> Vec<Step> {
    let mut parent: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, e) in adj.get(&x).into_iter().flatten() {
            if y != from && !parent.contains_key(&y) {
                parent.insert(y, (x, e));
                queue.push_back(y);
            }
        }
    }
    let mut steps = vec![];
    let mut x = to;
    while x != from {
        let (p, e) = parent[&x];
        steps.push(Step {
            crossing: e,
            from: p,
            to: x,
        });
        x = p;
    }
    steps.reverse();
    steps
}

/// `S = V + V^T`.
pub fn symmetric_form(g: &SeifertGraph, basis: &CycleBasis) -> IntMatrix {
    let n = basis.len();
    let mut s = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut acc = 0;
            for a in &basis.cycles[i] {
                if let Some(b) = basis.cycles[j].iter().find(|b| b.crossing == a.crossing) {
                    let same_way = if a.from == b.from { 1 } else { -1 };
                    acc += g.edge(a.crossing).sign.value() * same_way;
                }
            }
            s.set(i, j, acc);
            s.set(j, i, acc);
        }
    }
    s
}

/// A point on a circle: rotation position of the band, then the strand's
/// place inside the band.
type CirclePoint = (usize, i64);

fn attachment(g: &SeifertGraph, circle: usize, crossing: usize, cycle: usize) -> CirclePoint {
    // Strands in a band keep their order across it; read along the two
    // boundary circles that order appears reversed at one end.
    let k = cycle as i64;
    let sub = if g.edge(crossing).ends[0] == circle {
        k
    } else {
        -k
    };
    (g.rotation_position(circle, crossing), sub)
}

/// Strictly inside the arc running forward from `from` to `to`.
fn between(from: CirclePoint, x: CirclePoint, to: CirclePoint) -> bool {
    if from < to {
        from < x && x < to
    } else {
        x > from || x < to
    }
}

/// Passage of cycle `cycle` through the disk of a circle.
#[derive(Debug, Clone, Copy)]
struct Chord {
    cycle: usize,
    entry: CirclePoint,
    exit: CirclePoint,
    /// crossing of the band it arrives by
    via: usize,
}

/// Chords grouped by circle; cycles are indexed by position in `cycles`.
fn chords_by_circle<'a>(
    g: &SeifertGraph,
    cycles: impl IntoIterator<Item = &'a Vec<Step>>,
) -> BTreeMap<usize, Vec<Chord>> {
    let mut chords: BTreeMap<usize, Vec<Chord>> = BTreeMap::new();
    for (k, walk) in cycles.into_iter().enumerate() {
        for (idx, step) in walk.iter().enumerate() {
            let next = walk[(idx + 1) % walk.len()];
            let w = step.to;
            debug_assert_eq!(next.from, w);
            chords.entry(w).or_default().push(Chord {
                cycle: k,
                entry: attachment(g, w, step.crossing, k),
                exit: attachment(g, w, next.crossing, k),
                via: step.crossing,
            });
        }
    }
    chords
}

/// Signed crossing of two chords in a disk: `Some(+1)` if `b` enters
/// inside the forward arc of `a`, `Some(-1)` if it leaves there, `None`
/// if they do not interleave.
fn chord_crossing(a: &Chord, b: &Chord) -> Option<i64> {
    let in_inside = between(a.entry, b.entry, a.exit);
    if in_inside == between(a.entry, b.exit, a.exit) {
        None
    } else {
        Some(if in_inside { 1 } else { -1 })
    }
}

/// `J = V - V^T`, the intersection form of the basis cycles.
pub fn intersection_form(g: &SeifertGraph, basis: &CycleBasis) -> IntMatrix {
    let mut j = IntMatrix::zeros(basis.len());
    for list in chords_by_circle(g, &basis.cycles).values() {
        for (x, a) in list.iter().enumerate() {
            for b in &list[x + 1..] {
                if let Some(sign) = chord_crossing(a, b) {
                    j.set(a.cycle, b.cycle, j.get(a.cycle, b.cycle) + sign);
                    j.set(b.cycle, a.cycle, j.get(b.cycle, a.cycle) - sign);
                }
            }
        }
    }
    j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
    /// the form on the zero space
    Empty,
}

impl std::fmt::Display for Definiteness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::PositiveDefinite => "positive-definite",
            Self::NegativeDefinite => "negative-definite",
            Self::Indefinite => "indefinite",
            Self::Degenerate => "degenerate",
            Self::Empty => "empty",
        })
    }
}

/// Sylvester's criterion on exact leading principal minors.
pub fn definiteness(s: &IntMatrix) -> Definiteness {
    let n = s.size();
    if n == 0 {
        return Definiteness::Empty;
    }
    if s.det().is_zero() {
        return Definiteness::Degenerate;
    }
    let minors: Vec<i32> = (1..=n).map(|k| signum(&s.leading(k).det())).collect();
    if minors.iter().all(|&m| m > 0) {
        Definiteness::PositiveDefinite
    } else if minors
        .iter()
        .enumerate()
        .all(|(k, &m)| m == if k % 2 == 0 { -1 } else { 1 })
    {
        Definiteness::NegativeDefinite
    } else {
        Definiteness::Indefinite
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockMatrix {
    /// crossings of the block, ascending
    pub crossings: Vec<usize>,
    pub uniform_sign: Option<CrossingSign>,
    pub basis: CycleBasis,
    pub v: IntMatrix,
    pub s: IntMatrix,
    pub j: IntMatrix,
}

impl BlockMatrix {
    pub fn size(&self) -> usize {
        self.v.size()
    }

    pub fn det(&self) -> BigInt {
        self.v.det()
    }

    pub fn definiteness(&self) -> Definiteness {
        definiteness(&self.s)
    }
}

/// `V_b = (S_b + J_b) / 2` for one block.
pub fn seifert_matrix_block(g: &SeifertGraph, block: &Block) -> Result<BlockMatrix> {
    let basis = cycle_basis(g, block);
    let s = symmetric_form(g, &basis);
    let j = intersection_form(g, &basis);
    let n = basis.len();
    let mut v = IntMatrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let sum = s.get(a, b) + j.get(a, b);
            if sum % 2 != 0 {
                return Err(Error::Parity(a, b));
            }
            v.set(a, b, sum / 2);
        }
    }
    Ok(BlockMatrix {
        crossings: block.edges.clone(),
        uniform_sign: block.uniform_sign,
        basis,
        v,
        s,
        j,
    })
}

/// The Seifert matrix organised by blocks, ordered by the smallest crossing
/// in each block. Bridges appear as `0 × 0` blocks.
///
/// Cycles of different blocks can only meet inside the disk of a shared
/// (cut-vertex) circle, and then only if they approach it from opposite
/// sides. Stacking the disks so that each circle's left-hand neighbours sit
/// above it, such a meeting links the left cycle with the push-off of the
/// right one and not the other way round, so each crossing lands in exactly
/// one of the two off-diagonal entries. Those entries are collected in
/// `coupling`; they never change `det V` but they do enter `det(V - tV^T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSeifertMatrix {
    pub blocks: Vec<BlockMatrix>,
    /// cross-block entries `(row, column, value)` in the concatenated basis
    pub coupling: Vec<(usize, usize, i64)>,
}

impl BlockSeifertMatrix {
    pub fn size(&self) -> usize {
        self.blocks.iter().map(BlockMatrix::size).sum()
    }

    /// Block-diagonal matrix with the same diagonal blocks; same determinant
    /// as the full matrix.
    pub fn block_diagonal(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.size());
        let mut off = 0;
        for b in &self.blocks {
            for i in 0..b.size() {
                for j in 0..b.size() {
                    m.set(off + i, off + j, b.v.get(i, j));
                }
            }
            off += b.size();
        }
        m
    }

    /// The full Seifert matrix in the concatenated block bases.
    pub fn assembled(&self) -> IntMatrix {
        let mut m = self.block_diagonal();
        for &(i, j, x) in &self.coupling {
            m.set(i, j, m.get(i, j) + x);
        }
        m
    }
}

fn coupling_entries(g: &SeifertGraph, blocks: &[BlockMatrix]) -> Result<Vec<(usize, usize, i64)>> {
    let mut owner = vec![];
    let cycles: Vec<&Vec<Step>> = blocks
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| b.basis.cycles.iter().map(move |c| (bi, c)))
        .map(|(bi, c)| {
            owner.push(bi);
            c
        })
        .collect();
    let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&circle, list) in &chords_by_circle(g, cycles) {
        for (x, a) in list.iter().enumerate() {
            for b in &list[x + 1..] {
                if owner[a.cycle] == owner[b.cycle] {
                    continue;
                }
                let Some(sign) = chord_crossing(a, b) else {
                    continue;
                };
                let a_left = g.edge(a.via).sees_left == circle;
                let b_left = g.edge(b.via).sees_left == circle;
                if a_left == b_left {
                    return Err(Error::Unsupported(format!(
                        "cycles of two blocks cross from the same side of circle {circle}"
                    )));
                }
                // sign is the (a, b) intersection number
                let (row, col, v) = if a_left {
                    (a.cycle, b.cycle, sign)
                } else {
                    (b.cycle, a.cycle, -sign)
                };
                *acc.entry((row, col)).or_default() += v;
            }
        }
    }
    Ok(acc
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|((i, j), v)| (i, j, v))
        .collect())
}

pub fn seifert_matrices(d: &PlanarDiagram) -> Result<BlockSeifertMatrix> {
    let g = build_seifert_graph(d);
    let blocks: Vec<BlockMatrix> = block_decompose(&g)
        .blocks
        .iter()
        .map(|b| seifert_matrix_block(&g, b))
        .collect::<Result<_>>()?;
    let coupling = coupling_entries(&g, &blocks)?;
    Ok(BlockSeifertMatrix { blocks, coupling })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invertibility {
    pub invertible: bool,
    #[serde(serialize_with = "serialize_dets")]
    pub dets: Vec<BigInt>,
}

fn serialize_dets<S: serde::Serializer>(
    dets: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(dets.iter().map(BigJson))
}

/// The whole matrix is invertible iff every diagonal block is.
pub fn is_invertible(v: &BlockSeifertMatrix) -> Invertibility {
    let dets: Vec<BigInt> = v.blocks.iter().map(BlockMatrix::det).collect();
    Invertibility {
        invertible: dets.iter().all(|d| !d.is_zero()),
        dets,
    }
}

/// Invertibility of explicit matrices treated as the diagonal blocks of one
/// block-triangular matrix.
pub fn is_invertible_matrices(blocks: &[IntMatrix]) -> Invertibility {
    let dets: Vec<BigInt> = blocks.iter().map(IntMatrix::det).collect();
    Invertibility {
        invertible: dets.iter().all(|d| !d.is_zero()),
        dets,
    }
}

//! Per-diagram invariant reports and mechanical theorem checks.
//!
//! Every check returns a [`TheoremVerdict`]; a check whose hypothesis does
//! not hold for the input says so with [`Status::NotApplicable`] and names
//! the failed hypothesis instead of being skipped.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{alexander_from_blocks, alexander_of_matrix, LaurentPoly};
use crate::linalg::{random_unimodular, BigJson, IntMatrix};
use crate::pd::{CrossingSign, PlanarDiagram};
use crate::seifert_matrix::{seifert_matrices, BlockSeifertMatrix, Definiteness};
use crate::seifert_state::{betti_first, build_seifert_graph, classify_diagram};
use crate::wirtinger::alexander_via_fox;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// alternating knots: breadth of Δ equals twice the surface genus
    CrowellMurasugi,
    /// the same for homogeneous diagrams
    HomogeneousGenus,
    /// a uniform-sign block has a definite symmetrized form of that sign
    DefiniteSpecialBlock,
    /// breadth = β₁ exactly when every block matrix is invertible
    MurasugiBlockInvertibility,
    /// an invertible `V` has breadth equal to its size
    BreadthOfInvertible,
    /// a singular `V` has breadth below its size
    BreadthOfSingular,
    /// breadth ≤ 2·genus of any Seifert surface
    BreadthBound,
    /// breadth/2 is strictly below a published genus
    GenusGap,
    /// `det(V - tV^T)` is unchanged by unimodular congruence
    BasisInvariance,
    /// Seifert-matrix and Fox-calculus Alexander polynomials agree
    OracleEquivalence,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CrowellMurasugi => "crowell-murasugi",
            Self::HomogeneousGenus => "homogeneous-genus",
            Self::DefiniteSpecialBlock => "definite-special-block",
            Self::MurasugiBlockInvertibility => "murasugi-block-invertibility",
            Self::BreadthOfInvertible => "breadth-of-invertible",
            Self::BreadthOfSingular => "breadth-of-singular",
            Self::BreadthBound => "breadth-bound",
            Self::GenusGap => "genus-gap",
            Self::BasisInvariance => "basis-invariance",
            Self::OracleEquivalence => "oracle-equivalence",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub diagram: String,
    pub theorem: TheoremId,
    pub status: Status,
    pub details: String,
}

impl TheoremVerdict {
    fn new(diagram: &str, theorem: TheoremId, status: Status, details: impl Into<String>) -> Self {
        Self {
            diagram: diagram.to_string(),
            theorem,
            status,
            details: details.into(),
        }
    }

    fn decide(diagram: &str, theorem: TheoremId, ok: bool, details: impl Into<String>) -> Self {
        Self::new(
            diagram,
            theorem,
            if ok { Status::Pass } else { Status::Fail },
            details,
        )
    }

    fn not_applicable(diagram: &str, theorem: TheoremId, why: impl Into<String>) -> Self {
        Self::new(diagram, theorem, Status::NotApplicable, why)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn of<'a>(verdicts: impl IntoIterator<Item = &'a TheoremVerdict>) -> Self {
        let mut s = Self::default();
        for v in verdicts {
            match v.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub crossings: usize,
    pub size: usize,
    pub uniform_sign: Option<CrossingSign>,
    #[serde(serialize_with = "big")]
    pub det: BigInt,
    pub definiteness: Definiteness,
}

fn big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    BigJson(x).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub crossings: usize,
    pub circles: usize,
    pub betti: usize,
    pub genus_f: usize,
    pub alternating: bool,
    pub homogeneous: bool,
    pub special: bool,
    pub blocks: Vec<BlockReport>,
    pub alexander: LaurentPoly,
    pub breadth: u64,
    pub genus_lower_bound: u64,
    pub genus_upper_bound: usize,
    pub genus_determined: bool,
}

impl InvariantReport {
    pub fn all_blocks_invertible(&self) -> bool {
        self.blocks.iter().all(|b| !b.det.is_zero())
    }
}

/// Invariants of a knot diagram. The Alexander polynomial is computed from
/// the Seifert matrix and must agree with the Fox-calculus oracle; a
/// disagreement is an error, not a verdict.
pub fn analyze(d: &PlanarDiagram) -> Result<InvariantReport> {
    if !d.is_knot() {
        return Err(Error::NotAKnot("invariant report", d.component_count()));
    }
    let g = build_seifert_graph(d);
    let v = seifert_matrices(d)?;
    let alexander = alexander_from_blocks(&v)?;
    let fox = alexander_via_fox(d)?;
    if alexander != fox {
        return Err(Error::OracleMismatch {
            blocks: alexander.to_string(),
            fox: fox.to_string(),
        });
    }
    report_from_parts(d, betti_first(&g), g.vertex_count, &v, alexander)
}

fn report_from_parts(
    d: &PlanarDiagram,
    betti: usize,
    circles: usize,
    v: &BlockSeifertMatrix,
    alexander: LaurentPoly,
) -> Result<InvariantReport> {
    let class = classify_diagram(d);
    let breadth = alexander.breadth()?;
    let genus_f = betti / 2;
    Ok(InvariantReport {
        name: d.name().to_string(),
        crossings: d.crossing_count(),
        circles,
        betti,
        genus_f,
        alternating: class.alternating,
        homogeneous: class.homogeneous,
        special: class.special,
        blocks: v
            .blocks
            .iter()
            .map(|b| BlockReport {
                crossings: b.crossings.len(),
                size: b.size(),
                uniform_sign: b.uniform_sign,
                det: b.det(),
                definiteness: b.definiteness(),
            })
            .collect(),
        alexander,
        breadth,
        genus_lower_bound: breadth / 2,
        genus_upper_bound: genus_f,
        genus_determined: breadth == 2 * genus_f as u64,
    })
}

fn definite_with_sign(b: &BlockReport, sign: CrossingSign) -> bool {
    matches!(
        (b.definiteness, sign),
        (Definiteness::Empty, _)
            | (Definiteness::PositiveDefinite, CrossingSign::Positive)
            | (Definiteness::NegativeDefinite, CrossingSign::Negative)
    )
}

/// Uniform-sign blocks: definite form of the block's sign, invertible matrix.
pub fn check_definite_blocks(r: &InvariantReport) -> TheoremVerdict {
    let id = TheoremId::DefiniteSpecialBlock;
    let uniform: Vec<(usize, &BlockReport, CrossingSign)> = r
        .blocks
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.uniform_sign.map(|s| (i, b, s)))
        .collect();
    if uniform.is_empty() {
        return TheoremVerdict::not_applicable(&r.name, id, "no block has uniform crossing sign");
    }
    let bad: Vec<String> = uniform
        .iter()
        .filter(|(_, b, s)| !definite_with_sign(b, *s) || b.det.is_zero())
        .map(|(i, b, s)| {
            format!(
                "block {i}: sign {}, form {}, det {}",
                s.value(),
                b.definiteness,
                b.det
            )
        })
        .collect();
    if bad.is_empty() {
        TheoremVerdict::decide(
            &r.name,
            id,
            true,
            format!(
                "{} uniform-sign blocks definite and invertible",
                uniform.len()
            ),
        )
    } else {
        TheoremVerdict::decide(&r.name, id, false, bad.join("; "))
    }
}

/// Breadth equals twice the surface genus, for alternating diagrams and for
/// homogeneous ones. Both verdicts also require every block matrix to be
/// invertible and every uniform-sign block to be definite of its sign.
pub fn check_crowell_murasugi(r: &InvariantReport) -> Vec<TheoremVerdict> {
    let body = || {
        let mut problems = vec![];
        if !r.genus_determined {
            problems.push(format!(
                "breadth {} != 2·genus_F {}",
                r.breadth,
                2 * r.genus_f
            ));
        }
        if !r.all_blocks_invertible() {
            problems.push("a block matrix is singular".to_string());
        }
        if check_definite_blocks(r).status == Status::Fail {
            problems.push("a uniform-sign block is not definite of its sign".to_string());
        }
        if problems.is_empty() {
            (
                true,
                format!("breadth {} = 2·genus_F {}", r.breadth, 2 * r.genus_f),
            )
        } else {
            (false, problems.join("; "))
        }
    };
    let t1 = if r.alternating {
        let (ok, why) = body();
        TheoremVerdict::decide(&r.name, TheoremId::CrowellMurasugi, ok, why)
    } else {
        TheoremVerdict::not_applicable(
            &r.name,
            TheoremId::CrowellMurasugi,
            "diagram is not alternating",
        )
    };
    let t8 = if r.homogeneous {
        let (ok, why) = body();
        TheoremVerdict::decide(&r.name, TheoremId::HomogeneousGenus, ok, why)
    } else {
        TheoremVerdict::not_applicable(
            &r.name,
            TheoremId::HomogeneousGenus,
            "diagram is not homogeneous",
        )
    };
    vec![t1, t8]
}

/// `breadth <= 2·genus_F` for any diagram.
pub fn check_breadth_bound(r: &InvariantReport) -> TheoremVerdict {
    TheoremVerdict::decide(
        &r.name,
        TheoremId::BreadthBound,
        r.breadth <= 2 * r.genus_f as u64,
        format!("breadth {} vs 2·genus_F {}", r.breadth, 2 * r.genus_f),
    )
}

/// `breadth/2 < genus` for a knot whose genus is known from elsewhere.
pub fn check_genus_gap(r: &InvariantReport, published_genus: Option<u32>) -> TheoremVerdict {
    let id = TheoremId::GenusGap;
    match published_genus {
        None => TheoremVerdict::not_applicable(&r.name, id, "no published genus annotation"),
        Some(g) => TheoremVerdict::decide(
            &r.name,
            id,
            r.breadth < 2 * g as u64 && g as usize <= r.genus_f,
            format!("breadth {} < 2·{g}, genus_F {}", r.breadth, r.genus_f),
        ),
    }
}

/// `(breadth = β₁) ⇔ (every block matrix is invertible)`.
pub fn check_murasugi_block(r: &InvariantReport) -> TheoremVerdict {
    let full = r.breadth == r.betti as u64;
    let inv = r.all_blocks_invertible();
    TheoremVerdict::decide(
        &r.name,
        TheoremId::MurasugiBlockInvertibility,
        full == inv,
        format!("breadth = β₁: {full}; all blocks invertible: {inv}"),
    )
}

/// Report for explicit matrices taken as the diagonal blocks of one
/// block-triangular Seifert matrix with zero coupling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub name: String,
    pub size: usize,
    #[serde(serialize_with = "big")]
    pub det: BigInt,
    pub rank: usize,
    pub invertible: bool,
    pub alexander: LaurentPoly,
    /// `None` when `det(V - tV^T)` is identically zero
    pub breadth: Option<u64>,
    pub breadth_below_size: bool,
}

pub fn analyze_matrix(name: &str, v: &IntMatrix) -> Result<MatrixReport> {
    let det = v.det();
    let alexander = alexander_of_matrix(v)?;
    let breadth = alexander.breadth().ok();
    Ok(MatrixReport {
        name: name.to_string(),
        size: v.size(),
        invertible: !det.is_zero(),
        det,
        rank: v.rank(),
        alexander,
        breadth,
        breadth_below_size: breadth.is_none_or(|b| b < v.size() as u64),
    })
}

/// Breadth versus invertibility for one explicit matrix.
pub fn check_matrix(r: &MatrixReport) -> TheoremVerdict {
    let full = !r.breadth_below_size;
    if r.invertible {
        TheoremVerdict::decide(
            &r.name,
            TheoremId::BreadthOfInvertible,
            full,
            format!(
                "det {} != 0, breadth {:?}, size {}",
                r.det, r.breadth, r.size
            ),
        )
    } else {
        TheoremVerdict::decide(
            &r.name,
            TheoremId::BreadthOfSingular,
            !full,
            format!(
                "det 0, rank {}, breadth {:?}, size {}",
                r.rank, r.breadth, r.size
            ),
        )
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
        .collect();
    IntMatrix::from_rows(rows).expect("square by construction")
}

/// Random singular matrix: one row replaced by an integer combination of
/// the others.
fn random_singular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = random_matrix(rng, n);
    let r = rng.gen_range(0..n);
    let coeffs: Vec<i64> = (0..n)
        .map(|k| if k == r { 0 } else { rng.gen_range(-2..=2) })
        .collect();
    for j in 0..n {
        let x = (0..n).map(|k| coeffs[k] * m.get(k, j)).sum();
        m.set(r, j, x);
    }
    m
}

fn breadth_or_none(v: &IntMatrix) -> Result<Option<u64>> {
    Ok(alexander_of_matrix(v)?.breadth().ok())
}

/// Seeded random check that `breadth det(V - tV^T) = size` for invertible
/// `V` and `< size` for singular `V` (the zero polynomial counts as `< size`).
/// Draws `trials` samples of each kind, with even sizes 2 to 8 and entries
/// in `[-5, 5]`.
pub fn check_breadth_inv(trials: usize, seed: u64) -> Result<Vec<TheoremVerdict>> {
    if trials == 0 {
        return Err(Error::Usage("--trials must be at least 1".into()));
    }
    let name = format!("random(seed={seed})");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invertible_bad = None;
    for _ in 0..trials {
        let n = 2 * rng.gen_range(1..=4);
        let v = loop {
            let v = random_matrix(&mut rng, n);
            if !v.det().is_zero() {
                break v;
            }
        };
        let b = breadth_or_none(&v)?;
        if b != Some(n as u64) && invertible_bad.is_none() {
            invertible_bad = Some(format!("{v}: breadth {b:?}"));
        }
    }
    let mut singular_bad = None;
    for _ in 0..trials {
        let n = 2 * rng.gen_range(1..=4);
        let v = random_singular(&mut rng, n);
        debug_assert!(v.det().is_zero());
        let b = breadth_or_none(&v)?;
        if b.is_some_and(|b| b >= n as u64) && singular_bad.is_none() {
            singular_bad = Some(format!("{v}: breadth {b:?}"));
        }
    }
    let verdict = |id, bad: Option<String>, kind: &str| match bad {
        None => TheoremVerdict::decide(&name, id, true, format!("{trials} {kind} samples")),
        Some(w) => TheoremVerdict::decide(&name, id, false, format!("counterexample {w}")),
    };
    Ok(vec![
        verdict(TheoremId::BreadthOfInvertible, invertible_bad, "invertible"),
        verdict(TheoremId::BreadthOfSingular, singular_bad, "singular"),
    ])
}

/// `det(P^T V P - t(P^T V P)^T) = det(V - tV^T)` exactly, for `trials`
/// random unimodular `P` per block.
pub fn check_basis_invariance(
    name: &str,
    v: &BlockSeifertMatrix,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<TheoremVerdict> {
    let mut checked = 0;
    for (i, b) in v.blocks.iter().enumerate() {
        let want = alexander_of_matrix(&b.v)?;
        for _ in 0..trials {
            let p = random_unimodular(b.size(), 3 * b.size() + 2, rng);
            let w = b.v.congruent(&p);
            let got = alexander_of_matrix(&w)?;
            if got != want {
                return Ok(TheoremVerdict::decide(
                    name,
                    TheoremId::BasisInvariance,
                    false,
                    format!("block {i}, P = {p}: {got} != {want}"),
                ));
            }
            checked += 1;
        }
    }
    Ok(TheoremVerdict::decide(
        name,
        TheoremId::BasisInvariance,
        true,
        format!("{checked} congruences over {} blocks", v.blocks.len()),
    ))
}

/// Every per-diagram verdict, in a fixed order.
pub fn verify_report(r: &InvariantReport, published_genus: Option<u32>) -> Vec<TheoremVerdict> {
    let mut out = check_crowell_murasugi(r);
    out.push(check_definite_blocks(r));
    out.push(check_murasugi_block(r));
    out.push(check_breadth_bound(r));
    out.push(check_genus_gap(r, published_genus));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd_line;

    fn trefoil() -> PlanarDiagram {
        parse_pd_line("trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    fn m(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn trefoil_report() {
        let r = analyze(&trefoil()).unwrap();
        assert_eq!((r.genus_f, r.breadth, r.genus_determined), (1, 2, true));
        assert_eq!((r.crossings, r.circles, r.betti), (3, 2, 2));
        assert!(r.alternating && r.homogeneous && r.special);
        let v = check_crowell_murasugi(&r);
        assert_eq!(v[0].status, Status::Pass);
        assert_eq!(v[1].status, Status::Pass);
        assert_eq!(check_murasugi_block(&r).status, Status::Pass);
        assert_eq!(check_definite_blocks(&r).status, Status::Pass);
    }

    #[test]
    fn unknot_report() {
        let r = analyze(&parse_pd_line("unknot PD:").unwrap()).unwrap();
        assert_eq!((r.genus_f, r.breadth, r.genus_determined), (0, 0, true));
        assert_eq!(check_definite_blocks(&r).status, Status::NotApplicable);
    }

    #[test]
    fn torus_3_4_is_homogeneous_not_alternating() {
        let d = PlanarDiagram::from_braid("T(3,4)", &[1, 2, 1, 2, 1, 2, 1, 2], 3).unwrap();
        let r = analyze(&d).unwrap();
        assert_eq!((r.crossings, r.circles, r.genus_f, r.breadth), (8, 3, 3, 6));
        let v = check_crowell_murasugi(&r);
        assert_eq!(v[0].status, Status::NotApplicable);
        assert!(v[0].details.contains("not alternating"));
        assert_eq!(v[1].status, Status::Pass);
    }

    #[test]
    fn granny_blocks_invertible() {
        let t = trefoil();
        let r = analyze(&t.connected_sum(&t).unwrap()).unwrap();
        assert_eq!(r.breadth, 4);
        assert_eq!(check_murasugi_block(&r).status, Status::Pass);
    }

    #[test]
    fn links_are_rejected() {
        let hopf = PlanarDiagram::from_braid("hopf", &[1, 1], 2).unwrap();
        assert!(matches!(analyze(&hopf), Err(Error::NotAKnot(..))));
    }

    #[test]
    fn genus_gap_needs_annotation() {
        let r = analyze(&trefoil()).unwrap();
        assert_eq!(check_genus_gap(&r, None).status, Status::NotApplicable);
        assert_eq!(check_genus_gap(&r, Some(1)).status, Status::Fail);
        assert_eq!(check_genus_gap(&r, Some(2)).status, Status::Fail); // exceeds genus_F
    }

    #[test]
    fn explicit_matrices() {
        let inv = analyze_matrix("V", &m(vec![vec![1, -1], vec![0, 1]])).unwrap();
        assert_eq!(inv.breadth, Some(2));
        assert_eq!(check_matrix(&inv).status, Status::Pass);
        let sing = analyze_matrix("W", &m(vec![vec![1, 2], vec![2, 4]])).unwrap();
        assert!(!sing.invertible);
        assert!(sing.breadth_below_size);
        assert_eq!(check_matrix(&sing).theorem, TheoremId::BreadthOfSingular);
        assert_eq!(check_matrix(&sing).status, Status::Pass);
        let zero = analyze_matrix("0", &IntMatrix::zeros(2)).unwrap();
        assert_eq!(zero.breadth, None);
        assert_eq!(check_matrix(&zero).status, Status::Pass);
    }

    #[test]
    fn breadth_inv_small_run() {
        let v = check_breadth_inv(40, 1).unwrap();
        assert!(v.iter().all(|x| x.status == Status::Pass), "{v:?}");
        assert_eq!(v, check_breadth_inv(40, 1).unwrap());
        assert!(matches!(check_breadth_inv(0, 1), Err(Error::Usage(_))));
    }

    #[test]
    fn basis_invariance_on_trefoil() {
        let v = seifert_matrices(&trefoil()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let verdict = check_basis_invariance("trefoil", &v, 25, &mut rng).unwrap();
        assert_eq!(verdict.status, Status::Pass);
    }

    #[test]
    fn summary_counts() {
        let r = analyze(&trefoil()).unwrap();
        let s = Summary::of(&verify_report(&r, None));
        assert_eq!((s.pass, s.fail, s.not_applicable), (5, 0, 1));
    }
}

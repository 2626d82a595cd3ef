//! Alexander polynomial from the Wirtinger presentation via Fox calculus.
//!
//! Shares nothing with the Seifert-matrix pipeline except the Laurent
//! polynomial arithmetic, so sign or orientation slips on either side show
//! up as a mismatch.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{det_poly_matrix, LaurentPoly};
use crate::pd::{CrossingSign, PlanarDiagram, UnionFind};

/// One conjugation relation per crossing: for a positive crossing
/// `outgoing = over · incoming · over⁻¹`, for a negative one
/// `outgoing = over⁻¹ · incoming · over`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub over: usize,
    pub incoming: usize,
    pub outgoing: usize,
    pub sign: CrossingSign,
}

impl Relation {
    /// The relator as a word of `(generator, ±1)` letters, equal to 1 in the group.
    pub fn relator(&self) -> Vec<(usize, i32)> {
        let (o, i, out) = (self.over, self.incoming, self.outgoing);
        match self.sign {
            CrossingSign::Positive => vec![(o, 1), (i, 1), (o, -1), (out, -1)],
            CrossingSign::Negative => vec![(o, -1), (i, 1), (o, 1), (out, -1)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relations: Vec<Relation>,
}

/// Generators are the over-strands (arcs merged across over-passages),
/// numbered by their smallest arc label.
pub fn wirtinger_from_pd(d: &PlanarDiagram) -> Result<WirtingerPresentation> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(
            "the Fox-calculus oracle",
            d.component_count(),
        ));
    }
    if d.crossing_count() == 0 {
        return Err(Error::Unsupported(
            "zero-crossing diagram has no Wirtinger relations".into(),
        ));
    }
    let n = d.arc_count();
    let mut uf = UnionFind::new(n + 1);
    for x in d.crossings() {
        uf.union(x.arcs[1] as usize, x.arcs[3] as usize);
    }
    let mut strand_of = vec![usize::MAX; n + 1];
    let mut generators = 0;
    for label in 1..=n {
        let root = uf.find(label);
        if strand_of[root] == usize::MAX {
            strand_of[root] = generators;
            generators += 1;
        }
        strand_of[label] = strand_of[root];
    }
    let relations = d
        .crossings()
        .iter()
        .map(|x| Relation {
            over: strand_of[x.arcs[1] as usize],
            incoming: strand_of[x.arcs[0] as usize],
            outgoing: strand_of[x.arcs[2] as usize],
            sign: d.crossing_sign(x.id).unwrap(),
        })
        .collect();
    Ok(WirtingerPresentation {
        generators,
        relations,
    })
}

/// Fox derivative `∂w/∂x_g`, abelianised by sending every generator to `t`.
pub fn fox_derivative(word: &[(usize, i32)], g: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut prefix = 0i64;
    for &(x, e) in word {
        if x == g {
            acc = if e > 0 {
                &acc + &LaurentPoly::monomial(1, prefix)
            } else {
                &acc - &LaurentPoly::monomial(1, prefix - 1)
            };
        }
        prefix += e as i64;
    }
    acc
}

pub type AlexanderMatrix = Vec<Vec<LaurentPoly>>;

/// Rows are relations, columns generators.
pub fn fox_alexander_matrix(w: &WirtingerPresentation) -> Result<AlexanderMatrix> {
    for (k, r) in w.relations.iter().enumerate() {
        if [r.over, r.incoming, r.outgoing]
            .iter()
            .any(|&g| g >= w.generators)
        {
            return Err(Error::Unsupported(format!(
                "relation {k} names a missing generator"
            )));
        }
        if r.incoming == r.outgoing {
            return Err(Error::Unsupported(format!(
                "relation {k} identifies a generator with itself (degenerate crossing)"
            )));
        }
    }
    Ok(w.relations
        .iter()
        .map(|r| {
            let word = r.relator();
            (0..w.generators)
                .map(|g| fox_derivative(&word, g))
                .collect()
        })
        .collect())
}

/// Determinant of the matrix with row `row` and column `col` removed.
pub fn alexander_minor(m: &AlexanderMatrix, row: usize, col: usize) -> Result<LaurentPoly> {
    let minor: Vec<Vec<LaurentPoly>> = m
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    det_poly_matrix(&minor)
}

/// Normalized Alexander polynomial, deleting the last row and column.
pub fn alexander_via_fox(d: &PlanarDiagram) -> Result<LaurentPoly> {
    if d.is_knot() && d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let w = wirtinger_from_pd(d)?;
    let m = fox_alexander_matrix(&w)?;
    let det = alexander_minor(&m, m.len() - 1, w.generators - 1)?;
    if det.is_zero() {
        return Err(Error::OracleFailure);
    }
    det.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd_line;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c)
    }

    fn trefoil() -> PlanarDiagram {
        parse_pd_line("trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    fn figure_eight() -> PlanarDiagram {
        parse_pd_line("4_1 PD: X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap()
    }

    #[test]
    fn presentation_sizes() {
        let w = wirtinger_from_pd(&trefoil()).unwrap();
        assert_eq!((w.generators, w.relations.len()), (3, 3));
        let w = wirtinger_from_pd(&figure_eight()).unwrap();
        assert_eq!((w.generators, w.relations.len()), (4, 4));
        assert!(wirtinger_from_pd(&parse_pd_line("u PD:").unwrap()).is_err());
    }

    #[test]
    fn fox_derivative_by_hand() {
        // w = a b a^-1 c^-1
        let w = [(0, 1), (1, 1), (0, -1), (2, -1)];
        assert_eq!(
            fox_derivative(&w, 0),
            &LaurentPoly::one() - &LaurentPoly::t()
        );
        assert_eq!(fox_derivative(&w, 1), LaurentPoly::t());
        assert_eq!(fox_derivative(&w, 2), -LaurentPoly::one());
    }

    #[test]
    fn trefoil_rows() {
        let m = fox_alexander_matrix(&wirtinger_from_pd(&trefoil()).unwrap()).unwrap();
        assert_eq!(m.len(), 3);
        for row in &m {
            // every relator lies in the augmentation ideal
            let sum = row.iter().fold(LaurentPoly::zero(), |a, b| &a + b);
            assert!(sum.is_zero());
            let mut entries: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            entries.sort();
            assert_eq!(entries, vec!["-1", "1 - t", "t"]);
        }
    }

    #[test]
    fn degenerate_relation_is_rejected() {
        let w = WirtingerPresentation {
            generators: 2,
            relations: vec![Relation {
                over: 0,
                incoming: 1,
                outgoing: 1,
                sign: CrossingSign::Positive,
            }],
        };
        assert!(matches!(
            fox_alexander_matrix(&w),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn figure_eight_matrix_has_corank_one() {
        let m = fox_alexander_matrix(&wirtinger_from_pd(&figure_eight()).unwrap()).unwrap();
        assert!(det_poly_matrix(&m).unwrap().is_zero());
        assert!(!alexander_minor(&m, 0, 0).unwrap().is_zero());
    }

    #[test]
    fn oracle_values() {
        assert_eq!(alexander_via_fox(&trefoil()).unwrap(), p(&[1, -1, 1]));
        assert_eq!(
            alexander_via_fox(&parse_pd_line("u PD:").unwrap()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(alexander_via_fox(&figure_eight()).unwrap(), p(&[1, -3, 1]));
        let hopf = PlanarDiagram::from_braid("hopf", &[1, 1], 2).unwrap();
        assert!(matches!(alexander_via_fox(&hopf), Err(Error::NotAKnot(..))));
    }
}

//! Planar-diagram (PD) codes.
//!
//! A crossing `X(a,b,c,d)` lists its four arc labels counterclockwise,
//! starting from the incoming under-strand; the under-strand leaves through
//! the third entry. Each component is oriented by increasing arc label,
//! wrapping from the largest label of the component back to the smallest.
//!
//! Crossing signs use the convention under which
//! `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)` has writhe +3: a crossing is positive
//! when its over-strand enters through the second entry.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, Violation};

/// Position of a label inside a crossing tuple.
pub type Slot = u8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CrossingPD {
    pub id: usize,
    pub arcs: [u32; 4],
}

/// Sign of a crossing, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "i8")]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }
}

impl From<CrossingSign> for i8 {
    fn from(s: CrossingSign) -> i8 {
        s.value() as i8
    }
}

/// Where an arc ends (its head) and starts (its tail).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEnds {
    pub head: (usize, Slot),
    pub tail: (usize, Slot),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    name: String,
    crossings: Vec<CrossingPD>,
    /// per crossing: slot through which the over-strand enters (1 or 3)
    over_in: Vec<Slot>,
    /// indexed by label - 1
    ends: Vec<ArcEnds>,
    /// label ranges `lo..=hi` of the components, sorted
    components: Vec<(u32, u32)>,
}

impl PlanarDiagram {
    /// Validates a diagram given as raw crossing tuples.
    pub fn new(name: impl Into<String>, tuples: Vec<[i64; 4]>) -> Result<Self> {
        let name = name.into();
        let c = tuples.len();
        if c == 0 {
            return Ok(Self {
                name,
                crossings: vec![],
                over_in: vec![],
                ends: vec![],
                components: vec![],
            });
        }
        let n_arcs = 2 * c;
        // 0-based input is shifted to 1-based
        let offset = if tuples.iter().flatten().any(|&x| x == 0) {
            1
        } else {
            0
        };
        for (id, t) in tuples.iter().enumerate() {
            for a in 0..4 {
                for b in a + 1..4 {
                    if t[a] == t[b] {
                        return Err(Violation::RepeatedInCrossing {
                            crossing: id,
                            label: t[a],
                        }
                        .into());
                    }
                }
            }
        }
        let mut crossings = Vec::with_capacity(c);
        let mut occurrences: Vec<Vec<(usize, Slot)>> = vec![vec![]; n_arcs];
        for (id, t) in tuples.iter().enumerate() {
            let mut arcs = [0u32; 4];
            for (s, &raw) in t.iter().enumerate() {
                let label = raw + offset;
                if label < 1 || label > n_arcs as i64 {
                    return Err(Violation::LabelOutOfRange {
                        label: raw,
                        max: n_arcs,
                    }
                    .into());
                }
                arcs[s] = label as u32;
                occurrences[(label - 1) as usize].push((id, s as Slot));
            }
            crossings.push(CrossingPD { id, arcs });
        }
        for (i, occ) in occurrences.iter().enumerate() {
            if occ.len() != 2 {
                return Err(Violation::LabelCount {
                    label: i as i64 + 1 - offset,
                    count: occ.len(),
                }
                .into());
            }
        }

        // components: labels joined by the straight-through pairing
        let mut uf = UnionFind::new(n_arcs);
        for x in &crossings {
            uf.union(x.arcs[0] as usize - 1, x.arcs[2] as usize - 1);
            uf.union(x.arcs[1] as usize - 1, x.arcs[3] as usize - 1);
        }
        let mut ranges: Vec<(u32, u32, usize)> = vec![];
        for root in 0..n_arcs {
            if uf.find(root) != root {
                continue;
            }
            let labels: Vec<u32> = (0..n_arcs)
                .filter(|&l| uf.find(l) == root)
                .map(|l| l as u32 + 1)
                .collect();
            let (lo, hi) = (labels[0], *labels.last().unwrap());
            if (hi - lo + 1) as usize != labels.len() {
                return Err(Violation::NonConsecutiveComponent { lo, hi }.into());
            }
            ranges.push((lo, hi, root));
        }
        ranges.sort();
        let comp_of = |label: u32| {
            ranges
                .iter()
                .position(|&(lo, hi, _)| lo <= label && label <= hi)
                .unwrap()
        };
        let succ = |label: u32| {
            let (lo, hi, _) = ranges[comp_of(label)];
            if label == hi {
                lo
            } else {
                label + 1
            }
        };

        // head of each arc: the crossing where it is followed by its successor
        let mut head: Vec<Option<(usize, Slot)>> = vec![None; n_arcs];
        let mut over_in = vec![0 as Slot; c];
        for x in &crossings {
            let a = x.arcs;
            let two_arc = |l: u32| {
                let (lo, hi, _) = ranges[comp_of(l)];
                hi - lo == 1
            };
            if a[2] != succ(a[0]) {
                return Err(Violation::UnderStrandOrientation { crossing: x.id }.into());
            }
            if !two_arc(a[0]) {
                head[a[0] as usize - 1] = Some((x.id, 0));
            }
            if !two_arc(a[1]) {
                if a[3] == succ(a[1]) {
                    over_in[x.id] = 1;
                } else if a[1] == succ(a[3]) {
                    over_in[x.id] = 3;
                } else {
                    return Err(Violation::OverStrandOrientation { crossing: x.id }.into());
                }
                let s = over_in[x.id];
                head[a[s as usize] as usize - 1] = Some((x.id, s));
            }
        }
        // two-arc components {lo, hi}: both crossings pair lo with hi, so
        // the direction comes from an under-passage, else from the lower id
        for &(lo, hi, _) in ranges.iter().filter(|r| r.1 - r.0 == 1) {
            let occ = &occurrences[lo as usize - 1];
            let lo_head = if let Some(&(x, _)) = occ.iter().find(|&&(_, s)| s == 0) {
                x
            } else if let Some(&(x, _)) = occ.iter().find(|&&(_, s)| s == 2) {
                // lo leaves here as the under-strand, so it ends at the other one
                occ.iter().map(|o| o.0).find(|&y| y != x).unwrap()
            } else {
                occ[0].0.min(occ[1].0)
            };
            for &(x, s) in occ {
                if x == lo_head {
                    head[lo as usize - 1] = Some((x, s));
                }
            }
            for &(x, s) in &occurrences[hi as usize - 1] {
                if x != lo_head {
                    head[hi as usize - 1] = Some((x, s));
                }
            }
            for label in [lo, hi] {
                let (x, s) = head[label as usize - 1].unwrap();
                if s % 2 == 1 {
                    over_in[x] = s;
                }
            }
        }
        let mut ends = Vec::with_capacity(n_arcs);
        for (i, occ) in occurrences.iter().enumerate() {
            let h = head[i].expect("every arc has a head");
            let t = *occ.iter().find(|&&o| o != h).unwrap_or(&occ[1]);
            ends.push(ArcEnds { head: h, tail: t });
        }
        // each strand enters and leaves on opposite slots
        for x in &crossings {
            let s = over_in[x.id];
            if s == 0 {
                return Err(Violation::OverStrandOrientation { crossing: x.id }.into());
            }
            let at = |slot: Slot| &ends[x.arcs[slot as usize] as usize - 1];
            if at(0).head != (x.id, 0) || at(2).tail != (x.id, 2) {
                return Err(Violation::UnderStrandOrientation { crossing: x.id }.into());
            }
            if at(s).head != (x.id, s) || at((s + 2) % 4).tail != (x.id, (s + 2) % 4) {
                return Err(Violation::OverStrandOrientation { crossing: x.id }.into());
            }
        }

        // connectivity of the 4-valent graph
        let mut cuf = UnionFind::new(c);
        for e in &ends {
            cuf.union(e.head.0, e.tail.0);
        }
        if (0..c).any(|i| cuf.find(i) != cuf.find(0)) {
            return Err(Violation::Disconnected.into());
        }

        Ok(Self {
            name,
            crossings,
            over_in,
            ends,
            components: ranges.iter().map(|&(lo, hi, _)| (lo, hi)).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn crossings(&self) -> &[CrossingPD] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len().max(1)
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Label ranges of the components (empty for the zero-crossing unknot).
    pub fn components(&self) -> &[(u32, u32)] {
        &self.components
    }

    pub fn arc_ends(&self, label: u32) -> ArcEnds {
        self.ends[label as usize - 1]
    }

    /// Slot (1 or 3) through which the over-strand enters crossing `i`.
    pub fn over_entry(&self, i: usize) -> Slot {
        self.over_in[i]
    }

    pub fn label_at(&self, i: usize, slot: Slot) -> u32 {
        self.crossings[i].arcs[slot as usize]
    }

    pub fn crossing_sign(&self, i: usize) -> Result<CrossingSign> {
        match self.over_in.get(i) {
            Some(1) => Ok(CrossingSign::Positive),
            Some(_) => Ok(CrossingSign::Negative),
            None => Err(Violation::CrossingIndex(i).into()),
        }
    }

    pub fn signs(&self) -> Vec<CrossingSign> {
        (0..self.crossing_count())
            .map(|i| self.crossing_sign(i).unwrap())
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().map(|s| s.value()).sum()
    }

    /// True iff every component alternates between over- and under-passages.
    pub fn is_alternating(&self) -> bool {
        let under = |(_, s): (usize, Slot)| s == 0 || s == 2;
        self.ends.iter().all(|e| under(e.head) != under(e.tail))
    }

    /// The mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let tuples = self
            .crossings
            .iter()
            .map(|x| {
                let a = x.arcs.map(i64::from);
                match self.over_in[x.id] {
                    1 => [a[1], a[2], a[3], a[0]],
                    _ => [a[3], a[0], a[1], a[2]],
                }
            })
            .collect();
        Self::new(format!("{}*", self.name), tuples).expect("mirror of a valid diagram is valid")
    }

    /// Rotates labels along each component by `k` steps.
    pub fn relabel_cyclic(&self, k: u32) -> Self {
        let shift = |l: u32| {
            let &(lo, hi) = self
                .components
                .iter()
                .find(|&&(lo, hi)| lo <= l && l <= hi)
                .unwrap();
            let n = hi - lo + 1;
            lo + (l - lo + k) % n
        };
        let tuples = self
            .crossings
            .iter()
            .map(|x| x.arcs.map(|l| shift(l) as i64))
            .collect();
        Self::new(self.name.clone(), tuples).expect("relabelled diagram is valid")
    }

    /// Closure of a braid word on `strands` strands. Generator `i` (1-based)
    /// crosses strands `i` and `i+1`; positive generators give positive
    /// crossings.
    pub fn from_braid(name: impl Into<String>, word: &[i32], strands: usize) -> Result<Self> {
        for &g in word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Violation::BraidGenerator {
                    generator: g,
                    strands,
                }
                .into());
            }
        }
        // segments between crossings; the final segment at each position is
        // identified with the initial one
        let mut pos: Vec<usize> = (0..strands).collect();
        let mut next_seg = strands;
        let mut succ = vec![usize::MAX; strands + 2 * word.len()];
        let mut raw = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (pos[i], pos[i + 1]);
            let (na, nb) = (next_seg, next_seg + 1);
            next_seg += 2;
            succ[a] = nb;
            succ[b] = na;
            raw.push((g, a, b, na, nb));
            pos[i] = na;
            pos[i + 1] = nb;
        }
        let mut canon: Vec<usize> = (0..next_seg).collect();
        for (p, &s) in pos.iter().enumerate() {
            canon[s] = p;
        }
        let mut label = vec![0u32; next_seg];
        let mut count = 0;
        for start in 0..next_seg {
            let start = canon[start];
            if label[start] != 0 || succ[start] == usize::MAX {
                continue;
            }
            let mut s = start;
            while label[s] == 0 {
                count += 1;
                label[s] = count;
                s = canon[succ[s]];
            }
        }
        let l = |s: usize| label[canon[s]] as i64;
        let tuples = raw
            .iter()
            .map(|&(g, a, b, na, nb)| {
                // a: lower-left in, b: lower-right in, na: upper-left out, nb: upper-right out
                if g > 0 {
                    [l(a), l(b), l(nb), l(na)]
                } else {
                    [l(b), l(nb), l(na), l(a)]
                }
            })
            .collect();
        Self::new(name, tuples)
    }

    /// Connected sum of two knot diagrams, joining the last arc of `self`
    /// to the last arc of `other`.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        if !self.is_knot() || !other.is_knot() {
            return Err(Error::NotAKnot(
                "connected sum",
                self.component_count().max(other.component_count()),
            ));
        }
        let name = format!("{}#{}", self.name, other.name);
        if self.crossings.is_empty() {
            return Ok(other.clone().with_name(name));
        }
        if other.crossings.is_empty() {
            return Ok(self.clone().with_name(name));
        }
        let na = self.arc_count() as i64;
        let nb = other.arc_count() as i64;
        let last_a = self.ends[na as usize - 1].head;
        let last_b = other.ends[nb as usize - 1].head;
        let mut tuples: Vec<[i64; 4]> = self
            .crossings
            .iter()
            .map(|x| x.arcs.map(i64::from))
            .collect();
        tuples[last_a.0][last_a.1 as usize] = na + nb;
        let off = self.crossings.len();
        for x in &other.crossings {
            tuples.push(x.arcs.map(|l| l as i64 + na));
        }
        tuples[off + last_b.0][last_b.1 as usize] = na;
        Self::new(name, tuples)
    }

    /// `NAME PD: X(a,b,c,d) ...`
    pub fn to_pd_line(&self) -> String {
        let mut s = format!("{} PD:", self.name);
        for x in &self.crossings {
            let a = x.arcs;
            s.push_str(&format!(" X({},{},{},{})", a[0], a[1], a[2], a[3]));
        }
        s
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_line())
    }
}

impl std::str::FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd_line(s)
    }
}

/// Parses `NAME PD: X(a,b,c,d) X(...) ...`.
pub fn parse_pd_line(line: &str) -> Result<PlanarDiagram> {
    let (name, tuples) = parse_tuples(line)?;
    PlanarDiagram::new(name, tuples)
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column: column + 1,
        message: message.into(),
    }
}

fn parse_tuples(line: &str) -> Result<(String, Vec<[i64; 4]>)> {
    let marker = line
        .find("PD:")
        .ok_or_else(|| syntax(0, "missing `PD:` marker"))?;
    let name = line[..marker].trim();
    if name.is_empty() {
        return Err(syntax(0, "missing diagram name"));
    }
    if name.contains(char::is_whitespace) {
        return Err(syntax(0, "diagram name contains whitespace"));
    }
    let bytes = line.as_bytes();
    let mut i = marker + 3;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let mut tuples = vec![];
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        if bytes[i] != b'X' {
            return Err(syntax(
                i,
                format!("expected `X(`, found `{}`", bytes[i] as char),
            ));
        }
        i += 1;
        skip_ws(&mut i);
        if i >= bytes.len() || bytes[i] != b'(' {
            return Err(syntax(i, "expected `(` after `X`"));
        }
        i += 1;
        let mut t = [0i64; 4];
        for (k, slot) in t.iter_mut().enumerate() {
            skip_ws(&mut i);
            let start = i;
            if i < bytes.len() && bytes[i] == b'-' {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            *slot = line[start..i]
                .parse()
                .map_err(|_| syntax(start, "expected an integer arc label"))?;
            skip_ws(&mut i);
            let want = if k == 3 { b')' } else { b',' };
            if i >= bytes.len() || bytes[i] != want {
                return Err(syntax(i, format!("expected `{}`", want as char)));
            }
            i += 1;
        }
        tuples.push(t);
    }
    Ok((name.to_string(), tuples))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const MIRROR_TREFOIL: &str = "mirror PD: X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const FIGURE_EIGHT: &str = "4_1 PD: X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn parses_trefoil() {
        let d = parse_pd_line(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.name(), "trefoil");
        // successor of every arc is the next label, wrapping 6 -> 1
        for l in 1..=6u32 {
            let next = l % 6 + 1;
            let (x, _) = d.arc_ends(l).head;
            assert_eq!(d.arc_ends(next).tail.0, x);
        }
    }

    #[test]
    fn parses_unknot() {
        let d = parse_pd_line("unknot PD:").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn rejects_repeated_arc() {
        let err = parse_pd_line("bad PD: X(1,1,2,3)").unwrap_err();
        assert_eq!(
            err,
            Error::Invalid(Violation::RepeatedInCrossing {
                crossing: 0,
                label: 1
            })
        );
    }

    #[test]
    fn rejects_bad_range_and_counts() {
        assert!(matches!(
            parse_pd_line("t PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,9)"),
            Err(Error::Invalid(Violation::LabelOutOfRange { label: 9, .. }))
        ));
        assert!(matches!(
            parse_pd_line("t PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,4)"),
            Err(Error::Invalid(Violation::LabelCount { .. }))
        ));
    }

    #[test]
    fn rejects_disconnected() {
        // two split trefoils
        let line =
            "split PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)";
        assert_eq!(
            parse_pd_line(line).unwrap_err(),
            Error::Invalid(Violation::Disconnected)
        );
    }

    #[test]
    fn syntax_errors_report_column() {
        match parse_pd_line("t PD: X(1,4,2,5) Y(3,6,4,1)") {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 18),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_pd_line("X(1,2,3,4)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd_line("t PD: X(1,4,2,5"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd_line("t PD: X(1,a,2,5)"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn accepts_zero_based_labels() {
        let d = parse_pd_line("t PD: X(0,3,1,4) X(2,5,3,0) X(4,1,5,2)").unwrap();
        assert_eq!(d.to_pd_line(), "t PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    }

    #[test]
    fn sign_calibration() {
        let d = parse_pd_line(TREFOIL).unwrap();
        assert!(d.signs().iter().all(|&s| s == CrossingSign::Positive));
        assert_eq!(d.writhe(), 3);
        let m = parse_pd_line(MIRROR_TREFOIL).unwrap();
        assert!(m.signs().iter().all(|&s| s == CrossingSign::Negative));
        assert_eq!(m.writhe(), -3);
        assert!(d.crossing_sign(3).is_err());
    }

    #[test]
    fn alternation() {
        assert!(parse_pd_line(TREFOIL).unwrap().is_alternating());
        assert!(parse_pd_line(FIGURE_EIGHT).unwrap().is_alternating());
        let t34 = PlanarDiagram::from_braid("T(3,4)", &[1, 2, 1, 2, 1, 2, 1, 2], 3).unwrap();
        assert!(!t34.is_alternating());
        assert!(t34.signs().iter().all(|&s| s == CrossingSign::Positive));
    }

    #[test]
    fn braid_trefoil_is_calibration_code() {
        let d = PlanarDiagram::from_braid("trefoil", &[1, 1, 1], 2).unwrap();
        assert_eq!(
            d.to_pd_line(),
            "trefoil PD: X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)"
        );
        let fig8 = PlanarDiagram::from_braid("4_1", &[1, -2, 1, -2], 3).unwrap();
        assert_eq!(fig8.writhe(), 0);
        assert!(fig8.is_alternating());
        assert!(PlanarDiagram::from_braid("bad", &[3], 3).is_err());
    }

    #[test]
    fn mirror_negates_signs() {
        for line in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd_line(line).unwrap();
            let m = d.mirror();
            assert_eq!(m.writhe(), -d.writhe());
            assert_eq!(m.is_alternating(), d.is_alternating());
            for (a, b) in d.signs().iter().zip(m.signs()) {
                assert_eq!(a.flip(), b);
            }
        }
    }

    #[test]
    fn hopf_link_has_two_components() {
        let d = PlanarDiagram::from_braid("hopf", &[1, 1], 2).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 2);
        let parsed = parse_pd_line(&d.to_pd_line()).unwrap();
        assert_eq!(parsed, d);
    }

    #[test]
    fn granny_knot() {
        let t = parse_pd_line(TREFOIL).unwrap();
        let g = t.connected_sum(&t).unwrap();
        assert_eq!(g.crossing_count(), 6);
        assert!(g.is_knot());
        assert_eq!(g.writhe(), 6);
        assert!(g.is_alternating());
    }
}

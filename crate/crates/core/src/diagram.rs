//! Tangled diagrams, their subclasses, and the inflation/deflation maps.
//!
//! A tangled diagram lives on vertices `1..=n`. Arcs are stored normalized as
//! `(i, j)` with `i <= j`; `(j, j)` is a loop. Every vertex has degree at most
//! two (a loop counts twice). A vertex of degree two carrying two non-loop arc
//! ends is resolved by a single bit, the `crossed` flag, which selects between
//! the locally crossing and locally noncrossing arrangement of its two ends.
//!
//! Two degree-2 vertices may be joined by a double arc. Its two copies are
//! either crossing or nesting after inflation, and both endpoints carry the
//! same flag.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} has degree {degree}, at most 2 is allowed")]
    DegreeExceeded { vertex: Vertex, degree: usize },
    #[error("vertex {0} cannot carry a crossed flag")]
    BadFlag(Vertex),
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: Vertex, n: Vertex },
    #[error("diagram is not a partition")]
    NotAPartition,
    #[error("matching is not the inflation of a diagram: {0}")]
    NotDeflatable(String),
    #[error("cannot parse diagram literal: {0}")]
    Parse(String),
}

/// The diagram subclasses, ordered from most to least specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramClass {
    TwoRegularPartition,
    MatchingWithIsolated,
    Partition,
    BraidNoIsolated,
    General,
}

impl DiagramClass {
    pub fn name(self) -> &'static str {
        match self {
            DiagramClass::TwoRegularPartition => "two-regular",
            DiagramClass::MatchingWithIsolated => "matching",
            DiagramClass::Partition => "partition",
            DiagramClass::BraidNoIsolated => "braid",
            DiagramClass::General => "general",
        }
    }
}

impl FromStr for DiagramClass {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "two-regular" | "2-regular" => Ok(DiagramClass::TwoRegularPartition),
            "matching" => Ok(DiagramClass::MatchingWithIsolated),
            "partition" => Ok(DiagramClass::Partition),
            "braid" => Ok(DiagramClass::BraidNoIsolated),
            "general" | "tangled" => Ok(DiagramClass::General),
            other => Err(DiagramError::Parse(format!("unknown class `{other}`"))),
        }
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a vertex participates in the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    Isolated,
    /// One non-loop arc; `other` is the far endpoint.
    Single { other: Vertex },
    Loop,
    /// Two non-loop arc ends, far endpoints sorted ascending.
    Double { low: Vertex, high: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangledDiagram {
    n: Vertex,
    arcs: Vec<(Vertex, Vertex)>,
    crossed: BTreeSet<Vertex>,
}

impl TangledDiagram {
    /// Validates and builds a diagram. Arcs given as `(j, i)` with `j > i` are
    /// normalized; repeating a non-loop arc produces a double arc.
    pub fn new(
        n: Vertex,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
        crossed: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self, DiagramError> {
        if n == 0 {
            return Err(DiagramError::Empty);
        }
        let mut normalized: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in arcs {
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(DiagramError::OutOfRange { vertex: v, n });
                }
            }
            normalized.push((i, j));
        }
        normalized.sort_unstable();

        let mut degree = vec![0usize; n as usize + 1];
        for &(i, j) in &normalized {
            degree[i as usize] += 1;
            degree[j as usize] += 1;
        }
        if let Some(v) = (1..=n).find(|&v| degree[v as usize] > 2) {
            return Err(DiagramError::DegreeExceeded {
                vertex: v,
                degree: degree[v as usize],
            });
        }

        let crossed: BTreeSet<Vertex> = crossed.into_iter().collect();
        let d = TangledDiagram {
            n,
            arcs: normalized,
            crossed,
        };
        for &v in &d.crossed {
            if v == 0 || v > n {
                return Err(DiagramError::OutOfRange { vertex: v, n });
            }
            if !matches!(d.incidence(v), Incidence::Double { .. }) {
                return Err(DiagramError::BadFlag(v));
            }
        }
        // Both ends of a double arc must agree on the arrangement.
        for w in d.arcs.windows(2) {
            let (i, j) = w[0];
            if w[0] == w[1] && d.crossed.contains(&i) != d.crossed.contains(&j) {
                return Err(DiagramError::BadFlag(i));
            }
        }
        Ok(d)
    }

    /// A diagram with no arcs.
    pub fn empty(n: Vertex) -> Result<Self, DiagramError> {
        Self::new(n, [], [])
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn crossed(&self) -> &BTreeSet<Vertex> {
        &self.crossed
    }

    pub fn is_crossed(&self, v: Vertex) -> bool {
        self.crossed.contains(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.arcs
            .iter()
            .map(|&(i, j)| usize::from(i == v) + usize::from(j == v))
            .sum()
    }

    pub fn incidence(&self, v: Vertex) -> Incidence {
        let mut others = Vec::with_capacity(2);
        for &(i, j) in &self.arcs {
            if i == v && j == v {
                return Incidence::Loop;
            }
            if i == v {
                others.push(j);
            } else if j == v {
                others.push(i);
            }
        }
        match others[..] {
            [] => Incidence::Isolated,
            [other] => Incidence::Single { other },
            [a, b] => Incidence::Double {
                low: a.min(b),
                high: a.max(b),
            },
            _ => unreachable!("degree checked at construction"),
        }
    }

    /// Number of vertices of degree two.
    pub fn degree_two_count(&self) -> usize {
        (1..=self.n).filter(|&v| self.degree(v) == 2).count()
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(i, j)| i == j)
    }

    /// Every vertex has degree at most one.
    pub fn is_matching(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) <= 1)
    }

    /// No loops, and every degree-2 vertex has one arc from the left and one
    /// to the right, arranged noncrossing.
    pub fn is_partition(&self) -> bool {
        (1..=self.n).all(|v| match self.incidence(v) {
            Incidence::Isolated | Incidence::Single { .. } => true,
            Incidence::Loop => false,
            Incidence::Double { low, high } => low < v && v < high && !self.is_crossed(v),
        })
    }

    /// A partition with no arc `(i, i+1)`.
    pub fn is_two_regular_partition(&self) -> bool {
        self.is_partition() && self.arcs.iter().all(|&(i, j)| j != i + 1)
    }

    /// No isolated vertices; every degree-2 vertex is a loop or a crossed
    /// in/out pair.
    pub fn is_braid_without_isolated(&self) -> bool {
        (1..=self.n).all(|v| match self.incidence(v) {
            Incidence::Isolated => false,
            Incidence::Single { .. } | Incidence::Loop => true,
            Incidence::Double { low, high } => low < v && v < high && self.is_crossed(v),
        })
    }

    /// The most specific class the diagram belongs to.
    pub fn classify(&self) -> DiagramClass {
        if self.is_two_regular_partition() {
            DiagramClass::TwoRegularPartition
        } else if self.is_matching() {
            DiagramClass::MatchingWithIsolated
        } else if self.is_partition() {
            DiagramClass::Partition
        } else if self.is_braid_without_isolated() {
            DiagramClass::BraidNoIsolated
        } else {
            DiagramClass::General
        }
    }

    pub fn belongs_to(&self, class: DiagramClass) -> bool {
        match class {
            DiagramClass::TwoRegularPartition => self.is_two_regular_partition(),
            DiagramClass::MatchingWithIsolated => self.is_matching(),
            DiagramClass::Partition => self.is_partition(),
            DiagramClass::BraidNoIsolated => self.is_braid_without_isolated(),
            DiagramClass::General => true,
        }
    }

    /// Whether a partition avoids arcs `(i, i+1)`.
    pub fn is_two_regular(&self) -> Result<bool, DiagramError> {
        if !self.is_partition() {
            return Err(DiagramError::NotAPartition);
        }
        Ok(self.arcs.iter().all(|&(i, j)| j != i + 1))
    }

    /// Resolves every degree-2 vertex `j` into the pair `j < j'`.
    pub fn inflate(&self) -> InflatedMatching {
        let mut ground = Vec::new();
        for v in 1..=self.n {
            ground.push(Label::plain(v));
            if self.degree(v) == 2 {
                ground.push(Label::primed(v));
            }
        }

        // Label assigned to each arc end: ends[k] = (left label, right label).
        let mut ends: Vec<(Option<Label>, Option<Label>)> = vec![(None, None); self.arcs.len()];
        let mut k = 0;
        while k < self.arcs.len() {
            let (i, j) = self.arcs[k];
            if i == j {
                ends[k] = (Some(Label::plain(i)), Some(Label::primed(i)));
                k += 1;
            } else if self.arcs.get(k + 1) == Some(&(i, j)) {
                if self.is_crossed(i) {
                    ends[k] = (Some(Label::plain(i)), Some(Label::plain(j)));
                    ends[k + 1] = (Some(Label::primed(i)), Some(Label::primed(j)));
                } else {
                    ends[k] = (Some(Label::plain(i)), Some(Label::primed(j)));
                    ends[k + 1] = (Some(Label::primed(i)), Some(Label::plain(j)));
                }
                k += 2;
            } else {
                k += 1;
            }
        }

        for v in 1..=self.n {
            let Incidence::Double { low, high } = self.incidence(v) else {
                continue;
            };
            if low == high {
                // double arc, already assigned
                continue;
            }
            let crossed = self.is_crossed(v);
            let (plain_to, primed_to) = if low < v && v < high {
                // in-arc from `low`, out-arc to `high`
                if crossed {
                    (high, low)
                } else {
                    (low, high)
                }
            } else if crossed {
                (low, high)
            } else {
                (high, low)
            };
            for (label, other) in [(Label::plain(v), plain_to), (Label::primed(v), primed_to)] {
                let idx = self
                    .arcs
                    .iter()
                    .position(|&(a, b)| (a, b) == (v.min(other), v.max(other)))
                    .expect("incident arc");
                if v < other {
                    ends[idx].0 = Some(label);
                } else {
                    ends[idx].1 = Some(label);
                }
            }
        }

        let mut arcs: Vec<(Label, Label)> = self
            .arcs
            .iter()
            .zip(ends)
            .map(|(&(i, j), (l, r))| (l.unwrap_or(Label::plain(i)), r.unwrap_or(Label::plain(j))))
            .collect();
        arcs.sort_unstable();
        InflatedMatching { n: self.n, ground, arcs }
    }

    /// Appends an isolated vertex `n + 1`.
    pub fn with_isolated_vertex(&self) -> Self {
        TangledDiagram {
            n: self.n + 1,
            arcs: self.arcs.clone(),
            crossed: self.crossed.clone(),
        }
    }
}

impl fmt::Display for TangledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; arcs=", self.n)?;
        for (i, j) in &self.arcs {
            write!(f, "({i},{j})")?;
        }
        write!(f, "; crossed=")?;
        let flags: Vec<String> = self.crossed.iter().map(|v| v.to_string()).collect();
        f.write_str(&flags.join(","))
    }
}

impl FromStr for TangledDiagram {
    type Err = DiagramError;

    /// Parses `n=5; arcs=(1,3)(3,5); crossed=3`. Whitespace is ignored; the
    /// `arcs` and `crossed` fields may be omitted or left empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut n = None;
        let mut arcs = Vec::new();
        let mut crossed = Vec::new();
        for field in compact.split(';').filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| DiagramError::Parse(format!("field `{field}` lacks `=`")))?;
            match key {
                "n" => n = Some(parse_vertex(value)?),
                "arcs" => arcs = parse_arcs(value)?,
                "crossed" => {
                    crossed = value
                        .split(',')
                        .filter(|v| !v.is_empty())
                        .map(parse_vertex)
                        .collect::<Result<_, _>>()?
                }
                other => return Err(DiagramError::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| DiagramError::Parse("missing `n=`".into()))?;
        TangledDiagram::new(n, arcs, crossed)
    }
}

fn parse_vertex(s: &str) -> Result<Vertex, DiagramError> {
    s.parse()
        .map_err(|_| DiagramError::Parse(format!("`{s}` is not a vertex")))
}

fn parse_arcs(s: &str) -> Result<Vec<(Vertex, Vertex)>, DiagramError> {
    let mut arcs = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| DiagramError::Parse(format!("expected `(` in `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| DiagramError::Parse("unclosed arc".into()))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| DiagramError::Parse(format!("arc `{}` needs two ends", &body[..close])))?;
        arcs.push((parse_vertex(a)?, parse_vertex(b)?));
        rest = &body[close + 1..];
    }
    Ok(arcs)
}

/// A position in the inflated order `1 < 1' < 2 < 2' < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub vertex: Vertex,
    pub primed: bool,
}

impl Label {
    pub fn plain(vertex: Vertex) -> Self {
        Label {
            vertex,
            primed: false,
        }
    }

    pub fn primed(vertex: Vertex) -> Self {
        Label {
            vertex,
            primed: true,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.vertex)
        } else {
            write!(f, "{}", self.vertex)
        }
    }
}

/// A partial matching on an inflated ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InflatedMatching {
    n: Vertex,
    ground: Vec<Label>,
    arcs: Vec<(Label, Label)>,
}

impl InflatedMatching {
    /// Builds a matching over `1..=n` where the vertices in `primed` also
    /// carry a primed label. Arc ends are reordered so that `a < b`.
    pub fn new(
        n: Vertex,
        primed: impl IntoIterator<Item = Vertex>,
        arcs: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<Self, DiagramError> {
        let primed: BTreeSet<Vertex> = primed.into_iter().collect();
        let mut ground = Vec::new();
        for v in 1..=n {
            ground.push(Label::plain(v));
            if primed.contains(&v) {
                ground.push(Label::primed(v));
            }
        }
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::new();
        for (a, b) in arcs {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            if a == b {
                return Err(DiagramError::NotDeflatable(format!("arc ({a},{b}) is degenerate")));
            }
            for l in [a, b] {
                if ground.binary_search(&l).is_err() {
                    return Err(DiagramError::NotDeflatable(format!("label {l} not in ground set")));
                }
                if !seen.insert(l) {
                    return Err(DiagramError::NotDeflatable(format!("label {l} matched twice")));
                }
            }
            sorted.push((a, b));
        }
        sorted.sort_unstable();
        Ok(InflatedMatching {
            n,
            ground,
            arcs: sorted,
        })
    }

    /// A matching on `points` unprimed labels `1..=points`.
    pub fn on_points(points: Vertex, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, DiagramError> {
        Self::new(
            points,
            [],
            arcs.into_iter().map(|(a, b)| (Label::plain(a), Label::plain(b))),
        )
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn arcs(&self) -> &[(Label, Label)] {
        &self.arcs
    }

    fn partner(&self, l: Label) -> Option<Label> {
        self.arcs.iter().find_map(|&(a, b)| {
            if a == l {
                Some(b)
            } else if b == l {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Collapses each `j'` back onto `j`, recovering the crossed flags from
    /// the local arrangement of the two ends.
    pub fn deflate(&self) -> Result<TangledDiagram, DiagramError> {
        let mut crossed = Vec::new();
        for v in 1..=self.n {
            if self.ground.binary_search(&Label::primed(v)).is_err() {
                continue;
            }
            let (Some(p), Some(q)) = (self.partner(Label::plain(v)), self.partner(Label::primed(v))) else {
                return Err(DiagramError::NotDeflatable(format!(
                    "vertex {v} is split but not fully matched"
                )));
            };
            if p == Label::primed(v) {
                continue; // loop
            }
            let plain_is_in = p.vertex < v;
            let primed_is_in = q.vertex < v;
            let is_crossed = match (plain_is_in, primed_is_in) {
                (true, false) => false,
                (false, true) => true,
                // Two ends on the same side: crossed iff the partners keep
                // the order of the two labels.
                _ => p < q,
            };
            if is_crossed {
                crossed.push(v);
            }
        }
        let arcs = self.arcs.iter().map(|&(a, b)| (a.vertex, b.vertex));
        TangledDiagram::new(self.n, arcs, crossed)
            .map_err(|e| DiagramError::NotDeflatable(e.to_string()))
    }
}

impl fmt::Display for InflatedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.arcs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: Vertex, arcs: &[(Vertex, Vertex)], crossed: &[Vertex]) -> TangledDiagram {
        TangledDiagram::new(n, arcs.iter().copied(), crossed.iter().copied()).unwrap()
    }

    fn l(v: Vertex) -> Label {
        Label::plain(v)
    }

    fn lp(v: Vertex) -> Label {
        Label::primed(v)
    }

    #[test]
    fn construction() {
        assert!(TangledDiagram::new(3, [(1, 3)], []).is_ok());
        let braid = d(3, &[(1, 2), (2, 3)], &[2]);
        assert!(braid.is_crossed(2));
        assert_eq!(
            TangledDiagram::new(1, [(1, 1)], [1]),
            Err(DiagramError::BadFlag(1))
        );
        assert_eq!(
            TangledDiagram::new(3, [(1, 4)], []),
            Err(DiagramError::OutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            TangledDiagram::new(3, [(1, 2), (1, 3), (1, 1)], []),
            Err(DiagramError::DegreeExceeded { vertex: 1, degree: 4 })
        );
        assert_eq!(
            TangledDiagram::new(2, [(1, 1), (1, 1)], []),
            Err(DiagramError::DegreeExceeded { vertex: 1, degree: 4 })
        );
        assert_eq!(TangledDiagram::new(0, [], []), Err(DiagramError::Empty));
        // single-arc vertex cannot be flagged
        assert_eq!(
            TangledDiagram::new(3, [(1, 3)], [1]),
            Err(DiagramError::BadFlag(1))
        );
    }

    #[test]
    fn double_arcs() {
        let nesting = d(2, &[(1, 2), (1, 2)], &[]);
        assert_eq!(nesting.degree(1), 2);
        let crossing = d(2, &[(1, 2), (1, 2)], &[1, 2]);
        assert_ne!(nesting, crossing);
        assert_eq!(
            TangledDiagram::new(2, [(1, 2), (1, 2)], [1]),
            Err(DiagramError::BadFlag(1))
        );
        assert_eq!(
            TangledDiagram::new(2, [(1, 2), (1, 2), (1, 2)], []),
            Err(DiagramError::DegreeExceeded { vertex: 1, degree: 3 })
        );
        assert_eq!(nesting.inflate().arcs(), &[(l(1), lp(2)), (lp(1), l(2))]);
        assert_eq!(crossing.inflate().arcs(), &[(l(1), l(2)), (lp(1), lp(2))]);
    }

    #[test]
    fn classes() {
        assert_eq!(d(3, &[(1, 2), (2, 3)], &[]).classify(), DiagramClass::Partition);
        assert_eq!(
            d(2, &[(1, 1), (2, 2)], &[]).classify(),
            DiagramClass::BraidNoIsolated
        );
        let m = d(4, &[(1, 3), (2, 4)], &[]);
        assert!(m.is_matching());
        assert!(m.is_partition());
        assert_eq!(m.classify(), DiagramClass::TwoRegularPartition);
        assert_eq!(d(3, &[(1, 2)], &[]).classify(), DiagramClass::MatchingWithIsolated);
        assert_eq!(d(3, &[(1, 2), (2, 3)], &[2]).classify(), DiagramClass::BraidNoIsolated);
        assert_eq!(d(2, &[(1, 2), (1, 2)], &[]).classify(), DiagramClass::General);
        assert_eq!(d(3, &[(1, 3), (2, 2)], &[]).classify(), DiagramClass::BraidNoIsolated);
        assert_eq!(d(3, &[(1, 3), (2, 3)], &[]).classify(), DiagramClass::General);
        assert_eq!(d(1, &[(1, 1)], &[]).classify(), DiagramClass::BraidNoIsolated);
    }

    #[test]
    fn two_regular() {
        assert_eq!(d(2, &[(1, 2)], &[]).is_two_regular(), Ok(false));
        assert_eq!(d(3, &[(1, 3)], &[]).is_two_regular(), Ok(true));
        assert_eq!(TangledDiagram::empty(4).unwrap().is_two_regular(), Ok(true));
        assert_eq!(
            d(1, &[(1, 1)], &[]).is_two_regular(),
            Err(DiagramError::NotAPartition)
        );
    }

    #[test]
    fn inflation_motifs() {
        let partition = d(3, &[(1, 2), (2, 3)], &[]);
        let m = partition.inflate();
        assert_eq!(m.arcs(), &[(l(1), l(2)), (lp(2), l(3))]);
        assert_eq!(m.ground(), &[l(1), l(2), lp(2), l(3)]);
        assert_eq!(m.deflate().unwrap(), partition);

        let braid = d(3, &[(1, 2), (2, 3)], &[2]);
        let m = braid.inflate();
        assert_eq!(m.arcs(), &[(l(1), lp(2)), (l(2), l(3))]);
        assert_eq!(m.deflate().unwrap(), braid);

        let lp1 = d(1, &[(1, 1)], &[]);
        assert_eq!(lp1.inflate().arcs(), &[(l(1), lp(1))]);
        assert_eq!(lp1.inflate().deflate().unwrap(), lp1);
    }

    #[test]
    fn same_side_motifs() {
        // two in-arcs at 3 from 1 and 2
        let ins = d(3, &[(1, 3), (2, 3)], &[]);
        assert_eq!(ins.inflate().arcs(), &[(l(1), lp(3)), (l(2), l(3))]);
        let ins_x = d(3, &[(1, 3), (2, 3)], &[3]);
        assert_eq!(ins_x.inflate().arcs(), &[(l(1), l(3)), (l(2), lp(3))]);
        // two out-arcs at 1 to 2 and 3
        let outs = d(3, &[(1, 2), (1, 3)], &[]);
        assert_eq!(outs.inflate().arcs(), &[(l(1), l(3)), (lp(1), l(2))]);
        let outs_x = d(3, &[(1, 2), (1, 3)], &[1]);
        assert_eq!(outs_x.inflate().arcs(), &[(l(1), l(2)), (lp(1), l(3))]);
        for x in [ins, ins_x, outs, outs_x] {
            assert_eq!(x.inflate().deflate().unwrap(), x);
        }
    }

    #[test]
    fn deflation_errors() {
        // 1' present but unmatched
        let m = InflatedMatching::new(2, [1], [(l(1), l(2))]).unwrap();
        assert!(matches!(m.deflate(), Err(DiagramError::NotDeflatable(_))));
        assert!(matches!(
            InflatedMatching::new(2, [], [(l(1), l(2)), (l(1), l(2))]),
            Err(DiagramError::NotDeflatable(_))
        ));
        assert!(matches!(
            InflatedMatching::new(2, [], [(l(1), lp(2))]),
            Err(DiagramError::NotDeflatable(_))
        ));
    }

    #[test]
    fn literal_round_trip() {
        let x: TangledDiagram = "n=5; arcs=(1,3)(3,5); crossed=3".parse().unwrap();
        assert_eq!(x, d(5, &[(1, 3), (3, 5)], &[3]));
        assert_eq!(x.to_string().parse::<TangledDiagram>().unwrap(), x);
        let spaced: TangledDiagram = " n = 4 ; arcs = ( 1 , 3 ) ( 2 , 4 ) ".parse().unwrap();
        assert_eq!(spaced, d(4, &[(1, 3), (2, 4)], &[]));
        let bare: TangledDiagram = "n=3".parse().unwrap();
        assert_eq!(bare.arcs(), &[]);
        assert!("arcs=(1,2)".parse::<TangledDiagram>().is_err());
        assert!("n=3; arcs=(1,2".parse::<TangledDiagram>().is_err());
        assert!("n=3; arcs=(1,x)".parse::<TangledDiagram>().is_err());
    }

    #[test]
    fn isolated_extension_keeps_class() {
        let x = d(4, &[(1, 3), (2, 4)], &[]);
        assert_eq!(x.with_isolated_vertex().classify(), x.classify());
        let braid = d(2, &[(1, 1), (2, 2)], &[]);
        assert_eq!(braid.with_isolated_vertex().classify(), DiagramClass::General);
    }
}
